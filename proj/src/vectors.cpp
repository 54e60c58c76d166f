#include "qseries/vectors.hpp"

#include <stdexcept>
#include <string>

#include "qseries/errors.hpp"

namespace qseries {

std::string_view vector_family_name(VectorFamily family) {
  return family == VectorFamily::X ? "X" : "Y";
}

VectorFamily parse_vector_family(std::string_view name) {
  if (name == "X" || name == "x") return VectorFamily::X;
  if (name == "Y" || name == "y") return VectorFamily::Y;
  throw std::invalid_argument("unknown vector family '" + std::string(name) + "'");
}

CoeffVector CoeffVector::initial(VectorFamily family) {
  CoeffVector v;
  v.family = family;
  v.alpha = 0;
  v.entries = {Integer(family == VectorFamily::X ? 1 : 3)};
  return v;
}

SubmatrixKind CoeffVector::transition() const noexcept {
  if (family == VectorFamily::Y) return SubmatrixKind::C;
  return alpha % 2 == 0 ? SubmatrixKind::A : SubmatrixKind::B;
}

std::size_t CoeffVector::required_depth() const noexcept {
  if (entries.empty()) return 0;
  return SubmatrixIndex::source_row(transition(), entries.size());
}

Exponent CoeffVector::u_exponent(std::size_t i) const noexcept {
  const auto n = static_cast<Exponent>(i);
  if (family == VectorFamily::Y) return 4 * n;
  return alpha % 2 == 0 ? 4 * n - 3 : 4 * n - 1;
}

namespace {

Exponent checked_quarter(const Integer& numerator) {
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4)) {
    throw NonIntegralOffset("offset " + numerator.get_str() + "/4 is not an integer");
  }
  Integer q = numerator / 4;
  return q.get_si();
}

void trim(std::vector<Integer>& entries) {
  while (!entries.empty() && sgn(entries.back()) == 0) entries.pop_back();
}

// Accumulates out_j += v_i * (row i of the transition submatrix) for one row
// of M, if that row feeds the submatrix.
class Accumulator {
 public:
  explicit Accumulator(const CoeffVector& v) : v_(v), kind_(v.transition()) {
    std::size_t width = 0;
    for (std::size_t i = 1; i <= v.entries.size(); ++i) {
      width = std::max(width, SubmatrixIndex::width(kind_, i));
    }
    out_.resize(width);
  }

  void consume(std::size_t m_row, std::span<const Integer> row) {
    const std::size_t i = source_index(m_row);
    if (i == 0 || i > v_.entries.size()) return;
    const Integer& weight = v_.entries[i - 1];
    if (sgn(weight) == 0) return;
    for (std::size_t j = 1; j <= SubmatrixIndex::width(kind_, i); ++j) {
      const Integer& m = row[SubmatrixIndex::source_column(kind_, i, j) - 1];
      if (sgn(m) == 0) continue;
      mpz_addmul(out_[j - 1].get_mpz_t(), weight.get_mpz_t(), m.get_mpz_t());
    }
  }

  CoeffVector finish() && {
    CoeffVector next{v_.family, v_.alpha + 1, std::move(out_)};
    trim(next.entries);
    return next;
  }

 private:
  // Submatrix row fed by row m_row of M, or 0.
  std::size_t source_index(std::size_t m_row) const noexcept {
    switch (kind_) {
      case SubmatrixKind::A:
        return m_row % 4 == 1 ? (m_row + 3) / 4 : 0;
      case SubmatrixKind::B:
        return m_row % 4 == 3 ? (m_row + 1) / 4 : 0;
      case SubmatrixKind::C:
        return m_row % 4 == 0 ? m_row / 4 : 0;
    }
    return 0;
  }

  const CoeffVector& v_;
  SubmatrixKind kind_;
  std::vector<Integer> out_;
};

}  // namespace

Progression encoded_progression(const CoeffVector& v) {
  if (v.alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  const auto a = static_cast<unsigned long>(v.alpha);
  if (v.family == VectorFamily::Y) {
    const Integer stride = ipow(3, a + 1);
    return {PartitionFamily::a9, stride.get_si(), Integer(stride - 1).get_si()};
  }
  const Integer stride = ipow(3, a);
  const Integer top = v.alpha % 2 == 0 ? stride : ipow(3, a + 1);
  return {PartitionFamily::a3, stride.get_si(), checked_quarter(top - 1)};
}

CoeffVector step(const CoeffVector& v, const MatrixTable& table) {
  const std::size_t need = v.required_depth();
  if (table.depth() < need) {
    throw InsufficientRows("step from alpha=" + std::to_string(v.alpha) + " needs " +
                           std::to_string(need) + " rows of M, table has " +
                           std::to_string(table.depth()));
  }
  Accumulator acc(v);
  for (std::size_t r = 1; r <= need; ++r) acc.consume(r, table.row(r));
  return std::move(acc).finish();
}

CoeffVector advance(const CoeffVector& v) {
  Accumulator acc(v);
  MatrixRowStream stream;
  const std::size_t need = v.required_depth();
  for (std::size_t r = 1; r <= need; ++r) acc.consume(r, stream.next());
  return std::move(acc).finish();
}

std::vector<CoeffVector> vector_chain(VectorFamily family, Exponent alpha_max) {
  std::vector<CoeffVector> chain{CoeffVector::initial(family)};
  for (Exponent a = 0; a < alpha_max; ++a) chain.push_back(advance(chain.back()));
  return chain;
}

Series reconstruct(const CoeffVector& v, Exponent N, EtaCache* cache) {
  if (N < 0) throw std::invalid_argument("reconstruction order must be non-negative");
  using S = EtaQuotientSpec;
  const S u_spec = S::eta(3) * S::eta(6) * S::eta(1, -1) * S::eta(2, -1);
  const Series u = expand_spec(u_spec, N, cache);
  const Series u4 = pow(u, 4);

  Series sum = Series::zero_through(N);
  Series u_power;
  for (std::size_t i = 1; i <= v.entries.size(); ++i) {
    if (static_cast<Exponent>(i) - 1 > N) break;
    u_power = i == 1 ? pow(u, v.u_exponent(1)) : mul(u_power, u4);
    const Integer& weight = v.entries[i - 1];
    if (sgn(weight) == 0) continue;
    sum = add(sum, shift(scale(u_power, weight), static_cast<Exponent>(i) - 1));
  }
  return sum;
}

Exponent valuation_bound(VectorFamily family, Exponent alpha, std::size_t j) noexcept {
  const auto jj = static_cast<Exponent>(j);
  if (family == VectorFamily::Y) return alpha + 1 + 3 * (jj - 1);
  const Exponent half = alpha / 2;
  return alpha % 2 == 0 ? half + 3 * jj - 4 : half + 1 + 3 * (jj - 1);
}

ValuationReport check_valuations(const CoeffVector& v) {
  ValuationReport report;
  report.family = v.family;
  report.alpha = v.alpha;
  for (std::size_t j = 1; j <= v.entries.size(); ++j) {
    ValuationRow row;
    row.j = j;
    row.nu = valuation(v.entries[j - 1]);
    row.bound = valuation_bound(v.family, v.alpha, j);
    row.pass = row.nu.at_least(row.bound);
    row.tight = !row.nu.infinite && row.nu.value == row.bound;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace qseries
