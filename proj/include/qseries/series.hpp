#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseries/integer.hpp"

namespace qseries {

/// Truncated Laurent series in q with arbitrary-precision coefficients.
///
/// A series is known through `valid_to()`: the coefficient of q^n is
/// trustworthy for every n <= valid_to() and unknown above it. Stored
/// coefficients run from `lead()` (always nonzero) to the last nonzero
/// coefficient; everything between the last stored coefficient and the
/// validity bound is an implicit zero. A series with no nonzero coefficient
/// inside its validity bound is a zero series; the exact zero has
/// valid_to() == kUnbounded. Values are immutable after construction.
class Series {
 public:
  /// The exact zero series.
  Series() = default;

  static Series zero_through(Exponent valid_to);
  static Series constant(Integer value, Exponent valid_to = kUnbounded);
  static Series monomial(Integer value, Exponent exponent,
                         Exponent valid_to = kUnbounded);
  /// Coefficients for exponents lead, lead+1, ...; entries above valid_to are
  /// discarded and the result is canonicalized.
  static Series from_coefficients(Exponent lead, std::vector<Integer> coeffs,
                                  Exponent valid_to = kUnbounded);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_exact() const noexcept { return valid_to_ >= kUnbounded; }

  /// Smallest exponent with a nonzero coefficient; valid_to()+1 for a zero
  /// series.
  Exponent lead() const noexcept;
  Exponent valid_to() const noexcept { return valid_to_; }
  /// Largest exponent with a stored (nonzero) coefficient.
  Exponent last_stored() const noexcept;
  /// valid_to() - lead(): how many terms past the leading one are known.
  Exponent relative_precision() const noexcept;

  const Integer& lead_coefficient() const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  std::size_t nonzero_count() const noexcept;

  /// Coefficient of q^n. Throws BeyondValidity when n > valid_to().
  Integer coefficient(Exponent n) const;

  /// Copy with the validity bound lowered to min(valid_to(), n).
  Series truncated(Exponent n) const;

  /// Structural identity: same coefficients and same validity bound.
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  void canonicalize();

  Exponent lead_ = 0;
  std::vector<Integer> coeffs_;
  Exponent valid_to_ = kUnbounded;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Integer& factor);

/// Cauchy product. The sparser operand drives the outer loop, so products
/// with pentagonal-type factors cost O(nonzeros * length).
Series mul(const Series& a, const Series& b);

/// Exact quotient a / b where b's lowest coefficient is +1 or -1. When both
/// operands are exact and b is not a monomial the quotient is an infinite
/// series and `valid_to` must bound it.
Series divide(const Series& a, const Series& b,
              std::optional<Exponent> valid_to = std::nullopt);
Series invert(const Series& a, std::optional<Exponent> valid_to = std::nullopt);
Series pow(const Series& a, Exponent k,
           std::optional<Exponent> valid_to = std::nullopt);

/// Multiply by q^s.
Series shift(const Series& a, Exponent s);
/// Substitute q -> q^k for k >= 1.
Series dilate(const Series& a, Exponent k);

Integer coefficient(const Series& a, Exponent n);

/// True iff every coefficient at exponent <= n agrees. Throws BeyondValidity
/// when n exceeds either validity bound.
bool equal_up_to(const Series& a, const Series& b, Exponent n);

/// Human-readable rendering such as "1 - q + 3*q^2 + O(q^6)".
std::string to_string(const Series& a, std::size_t max_terms = 12);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Integer& c, const Series& a) { return scale(a, c); }

}  // namespace qseries
