#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qseries/eta.hpp"
#include "qseries/matrix.hpp"
#include "qseries/series.hpp"
#include "qseries/valuation.hpp"

namespace qseries {

enum class VectorFamily { X, Y };

std::string_view vector_family_name(VectorFamily family);
VectorFamily parse_vector_family(std::string_view name);

/// Coefficient vector x_alpha (progressions of a3) or Y_alpha (progressions
/// of a9). Entry i-1 holds the weight of q^{i-1} u^{e(i)}, u = f3 f6/(f1 f2),
/// with e(i) = 4i-3 for X at even alpha, 4i-1 for X at odd alpha, 4i for Y.
/// Trailing zeros are trimmed.
struct CoeffVector {
  VectorFamily family = VectorFamily::X;
  Exponent alpha = 0;
  std::vector<Integer> entries;

  /// x_0 = (1), Y_0 = (3).
  static CoeffVector initial(VectorFamily family);

  /// The submatrix that maps this vector to the next one.
  SubmatrixKind transition() const noexcept;
  /// Depth of M needed to apply the transition.
  std::size_t required_depth() const noexcept;
  /// Exponent of u attached to entry i (1-based).
  Exponent u_exponent(std::size_t i) const noexcept;

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

/// The arithmetic progression stride*n + offset of a3 (X) or a9 (Y) whose
/// generating function the vector encodes.
struct Progression {
  PartitionFamily family;
  Exponent stride;
  Exponent offset;
};

Progression encoded_progression(const CoeffVector& v);

/// v times A, B or C taken from a stored table. Throws InsufficientRows when
/// the table is shallower than v.required_depth().
CoeffVector step(const CoeffVector& v, const MatrixTable& table);

/// Same product, streaming the rows of M instead of storing them; used for
/// deep chains whose matrix would not fit in memory.
CoeffVector advance(const CoeffVector& v);

/// initial(family), advance(...), ... up to alpha_max inclusive.
std::vector<CoeffVector> vector_chain(VectorFamily family, Exponent alpha_max);

/// sum_i entries[i-1] q^{i-1} u^{e(i)} valid through q^N.
Series reconstruct(const CoeffVector& v, Exponent N, EtaCache* cache = nullptr);

struct ValuationRow {
  std::size_t j = 0;
  Valuation nu;
  Exponent bound = 0;
  bool pass = false;
  /// nu equals the bound exactly.
  bool tight = false;
};

struct ValuationReport {
  VectorFamily family = VectorFamily::X;
  Exponent alpha = 0;
  std::vector<ValuationRow> rows;
  bool pass = true;
};

/// Lower bound on the 3-adic valuation of entry j:
///   x_{2b,j}: b + 3j - 4;  x_{2b+1,j}: b + 1 + 3(j-1);  y_{a,j}: a + 1 + 3(j-1).
Exponent valuation_bound(VectorFamily family, Exponent alpha, std::size_t j) noexcept;

ValuationReport check_valuations(const CoeffVector& v);

}  // namespace qseries
