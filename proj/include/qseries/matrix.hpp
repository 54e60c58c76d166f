#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qseries/eta.hpp"
#include "qseries/integer.hpp"

namespace qseries {

/// zeta = f1 f2 / (q f9 f18)
EtaQuotientSpec zeta_spec();
/// T = f3^4 f6^4 / (q^3 f9^4 f18^4)
EtaQuotientSpec t_spec();

/// Generates the rows of M = (m_{i,j}) one at a time from the three base rows
/// and m_{i,j} = 9 m_{i-1,j-1} + 3 m_{i-2,j-1} + m_{i-3,j-1} (m_{i,1} = 0 for
/// i >= 4), keeping only the last three rows alive. Every row is checked
/// against the zero patterns
///   m_{4i-3,j} = 0 (j <= i-1),  m_{4i-1,j} = 0 (j <= i-1),  m_{4i,j} = 0 (j <= i),
/// and ZeroPatternViolation is thrown on the first failure.
class MatrixRowStream {
 public:
  MatrixRowStream();

  /// Advance to the next row (row 1 on the first call) and return it; entry
  /// j-1 holds m_{i,j} for 1 <= j <= i.
  std::span<const Integer> next();
  /// 1-based index of the row last returned by next(); 0 before the first.
  std::size_t index() const noexcept { return index_; }

 private:
  std::vector<Integer> window_[4];
  std::size_t index_ = 0;
};

/// Number of leading entries of row i that are required to vanish.
std::size_t asserted_zero_prefix(std::size_t i) noexcept;

/// Rows 1..depth of M, 1-based.
class MatrixTable {
 public:
  std::size_t depth() const noexcept { return rows_.size(); }
  /// m_{i,j}; zero for j > i. Throws InsufficientRows when i > depth().
  const Integer& entry(std::size_t i, std::size_t j) const;
  std::span<const Integer> row(std::size_t i) const;

 private:
  friend MatrixTable build_matrix(std::size_t rows);
  std::vector<std::vector<Integer>> rows_;
};

MatrixTable build_matrix(std::size_t rows);

enum class SubmatrixKind { A, B, C };

char kind_letter(SubmatrixKind kind);

/// Row i of A, B or C in terms of M:
///   a_{i,j} = m_{4i-3, i+j-1}  (1 <= j <= 3i-2)
///   b_{i,j} = m_{4i-1, i+j-1}  (1 <= j <= 3i)
///   c_{i,j} = m_{4i,   i+j}    (1 <= j <= 3i)
struct SubmatrixIndex {
  static std::size_t source_row(SubmatrixKind kind, std::size_t i) noexcept;
  static std::size_t source_column(SubmatrixKind kind, std::size_t i, std::size_t j) noexcept;
  static std::size_t width(SubmatrixKind kind, std::size_t i) noexcept;
};

class SubmatrixView {
 public:
  SubmatrixView(const MatrixTable& table, SubmatrixKind kind) : table_(&table), kind_(kind) {}

  SubmatrixKind kind() const noexcept { return kind_; }
  /// Number of complete rows available from the source table.
  std::size_t rows() const noexcept;
  std::size_t width(std::size_t i) const noexcept { return SubmatrixIndex::width(kind_, i); }
  const Integer& entry(std::size_t i, std::size_t j) const;
  std::vector<Integer> row(std::size_t i) const;

 private:
  const MatrixTable* table_;
  SubmatrixKind kind_;
};

/// Throws InsufficientRows if the table cannot supply row `rows` of the view.
SubmatrixView submatrix(const MatrixTable& table, SubmatrixKind kind, std::size_t rows = 1);

/// H(zeta^{-i}) == sum_j m_{i,j} T^{-j} through q^N.
bool verify_huff_expansion(const MatrixTable& table, std::size_t i, Exponent N);

/// The three eta-quotient forms of the expansion, e.g. for A:
///   H(q^{i-3} u^{4i-3}) == sum_j a_{i,j} q^{3j-3} w^{4j-1},
/// with u = f3 f6/(f1 f2) and w = f9 f18/(f3 f6); B uses q^{i-1} u^{4i-1} and
/// w^{4j-3}; C uses q^i u^{4i} and q^{3j} w^{4j}.
bool verify_rearranged_identity(const MatrixTable& table, SubmatrixKind kind, std::size_t i,
                                Exponent N, EtaCache* cache = nullptr);

}  // namespace qseries
