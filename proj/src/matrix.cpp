#include "qseries/matrix.hpp"

#include <stdexcept>
#include <string>

#include "qseries/errors.hpp"
#include "qseries/huffing.hpp"

namespace qseries {

EtaQuotientSpec zeta_spec() {
  using S = EtaQuotientSpec;
  return S::eta(1) * S::eta(2) * S::q_power(-1) * S::eta(9, -1) * S::eta(18, -1);
}

EtaQuotientSpec t_spec() {
  using S = EtaQuotientSpec;
  return S::eta(3, 4) * S::eta(6, 4) * S::q_power(-3) * S::eta(9, -4) * S::eta(18, -4);
}

std::size_t asserted_zero_prefix(std::size_t i) noexcept {
  switch (i % 4) {
    case 1:
      return (i + 3) / 4 - 1;
    case 3:
      return (i + 1) / 4 - 1;
    case 0:
      return i / 4;
    default:
      return 0;
  }
}

MatrixRowStream::MatrixRowStream() = default;

std::span<const Integer> MatrixRowStream::next() {
  const std::size_t i = ++index_;
  std::vector<Integer>& row = window_[i % 4];
  if (i == 1) {
    row = {Integer(3)};
  } else if (i == 2) {
    row = {Integer(2), Integer(27)};
  } else if (i == 3) {
    row = {Integer(1), Integer(27), Integer(243)};
  } else {
    const auto& r1 = window_[(i - 1) % 4];
    const auto& r2 = window_[(i - 2) % 4];
    const auto& r3 = window_[(i - 3) % 4];
    row.resize(i);
    row[0] = 0;
    for (std::size_t j = 2; j <= i; ++j) {
      mpz_ptr v = row[j - 1].get_mpz_t();
      const std::size_t c = j - 2;  // storage column of m_{., j-1}
      mpz_mul_ui(v, r1[c].get_mpz_t(), 9);
      if (c < r2.size()) mpz_addmul_ui(v, r2[c].get_mpz_t(), 3);
      if (c < r3.size()) mpz_add(v, v, r3[c].get_mpz_t());
    }
  }
  const std::size_t prefix = asserted_zero_prefix(i);
  for (std::size_t j = 1; j <= prefix; ++j) {
    if (sgn(row[j - 1]) != 0) {
      throw ZeroPatternViolation("m_{" + std::to_string(i) + "," + std::to_string(j) +
                                 "} = " + row[j - 1].get_str() + " but must vanish");
    }
  }
  return row;
}

const Integer& MatrixTable::entry(std::size_t i, std::size_t j) const {
  static const Integer zero(0);
  if (i < 1 || j < 1) throw std::out_of_range("matrix indices are 1-based");
  if (i > rows_.size()) {
    throw InsufficientRows("row " + std::to_string(i) + " requested from a table of depth " +
                           std::to_string(rows_.size()));
  }
  return j > i ? zero : rows_[i - 1][j - 1];
}

std::span<const Integer> MatrixTable::row(std::size_t i) const {
  if (i < 1) throw std::out_of_range("matrix indices are 1-based");
  if (i > rows_.size()) {
    throw InsufficientRows("row " + std::to_string(i) + " requested from a table of depth " +
                           std::to_string(rows_.size()));
  }
  return rows_[i - 1];
}

MatrixTable build_matrix(std::size_t rows) {
  if (rows < 1) throw std::invalid_argument("matrix depth must be at least 1");
  MatrixTable table;
  table.rows_.reserve(rows);
  MatrixRowStream stream;
  for (std::size_t i = 1; i <= rows; ++i) {
    auto r = stream.next();
    table.rows_.emplace_back(r.begin(), r.end());
  }
  return table;
}

char kind_letter(SubmatrixKind kind) {
  switch (kind) {
    case SubmatrixKind::A:
      return 'A';
    case SubmatrixKind::B:
      return 'B';
    case SubmatrixKind::C:
      return 'C';
  }
  return '?';
}

std::size_t SubmatrixIndex::source_row(SubmatrixKind kind, std::size_t i) noexcept {
  switch (kind) {
    case SubmatrixKind::A:
      return 4 * i - 3;
    case SubmatrixKind::B:
      return 4 * i - 1;
    case SubmatrixKind::C:
      return 4 * i;
  }
  return 0;
}

std::size_t SubmatrixIndex::source_column(SubmatrixKind kind, std::size_t i,
                                          std::size_t j) noexcept {
  return kind == SubmatrixKind::C ? i + j : i + j - 1;
}

std::size_t SubmatrixIndex::width(SubmatrixKind kind, std::size_t i) noexcept {
  return kind == SubmatrixKind::A ? 3 * i - 2 : 3 * i;
}

std::size_t SubmatrixView::rows() const noexcept {
  const std::size_t d = table_->depth();
  switch (kind_) {
    case SubmatrixKind::A:
      return (d + 3) / 4;
    case SubmatrixKind::B:
      return (d + 1) / 4;
    case SubmatrixKind::C:
      return d / 4;
  }
  return 0;
}

const Integer& SubmatrixView::entry(std::size_t i, std::size_t j) const {
  return table_->entry(SubmatrixIndex::source_row(kind_, i),
                       SubmatrixIndex::source_column(kind_, i, j));
}

std::vector<Integer> SubmatrixView::row(std::size_t i) const {
  std::vector<Integer> r;
  r.reserve(width(i));
  for (std::size_t j = 1; j <= width(i); ++j) r.push_back(entry(i, j));
  return r;
}

SubmatrixView submatrix(const MatrixTable& table, SubmatrixKind kind, std::size_t rows) {
  SubmatrixView view(table, kind);
  if (view.rows() < rows) {
    throw InsufficientRows(std::string("submatrix ") + kind_letter(kind) + " needs " +
                           std::to_string(SubmatrixIndex::source_row(kind, rows)) +
                           " rows of M, table has " + std::to_string(table.depth()));
  }
  return view;
}

bool verify_huff_expansion(const MatrixTable& table, std::size_t i, Exponent N) {
  if (i < 1) throw std::invalid_argument("row index is 1-based");
  const auto row = table.row(i);
  EtaCache cache;
  const Series zeta = expand_spec(zeta_spec(), N, &cache);
  const Series t = expand_spec(t_spec(), N, &cache);

  const Series lhs = huff(pow(zeta, -static_cast<Exponent>(i)));

  const Series t_inverse = invert(t);
  Series t_power = t_inverse;
  Series rhs;
  for (std::size_t j = 1; j <= i; ++j) {
    if (j > 1) t_power = mul(t_power, t_inverse);
    if (sgn(row[j - 1]) != 0) rhs = add(rhs, scale(t_power, row[j - 1]));
  }
  return equal_up_to(lhs, rhs, N);
}

bool verify_rearranged_identity(const MatrixTable& table, SubmatrixKind kind, std::size_t i,
                                Exponent N, EtaCache* cache) {
  using S = EtaQuotientSpec;
  if (i < 1) throw std::invalid_argument("row index is 1-based");
  const SubmatrixView view = submatrix(table, kind, i);
  EtaCache local;
  EtaCache* table_cache = cache ? cache : &local;

  const S u = S::eta(3) * S::eta(6) * S::eta(1, -1) * S::eta(2, -1);
  const S w = S::eta(9) * S::eta(18) * S::eta(3, -1) * S::eta(6, -1);
  const auto n = static_cast<Exponent>(i);

  S lhs_spec;
  switch (kind) {
    case SubmatrixKind::A:
      lhs_spec = S::q_power(n - 3) * u.power(4 * n - 3);
      break;
    case SubmatrixKind::B:
      lhs_spec = S::q_power(n - 1) * u.power(4 * n - 1);
      break;
    case SubmatrixKind::C:
      lhs_spec = S::q_power(n) * u.power(4 * n);
      break;
  }
  const Series lhs = huff(expand_spec(lhs_spec, N, table_cache));

  Series rhs;
  for (std::size_t j = 1; j <= view.width(i); ++j) {
    const Integer& coeff = view.entry(i, j);
    if (sgn(coeff) == 0) continue;
    const auto k = static_cast<Exponent>(j);
    S term;
    switch (kind) {
      case SubmatrixKind::A:
        term = S::q_power(3 * k - 3) * w.power(4 * k - 1);
        break;
      case SubmatrixKind::B:
        term = S::q_power(3 * k - 3) * w.power(4 * k - 3);
        break;
      case SubmatrixKind::C:
        term = S::q_power(3 * k) * w.power(4 * k);
        break;
    }
    if (term.qshift > N) continue;  // contributes nothing through q^N
    rhs = add(rhs, scale(expand_spec(term, N, table_cache), coeff));
  }
  return equal_up_to(lhs, rhs.truncated(N), N);
}

}  // namespace qseries
