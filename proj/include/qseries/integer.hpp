#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

namespace qseries {

using Integer = mpz_class;

/// Exponents of q are machine integers; coefficients are unbounded.
using Exponent = std::int64_t;

/// Validity bound of a series that is known exactly (no truncation).
inline constexpr Exponent kUnbounded = std::numeric_limits<Exponent>::max() / 4;

namespace detail {

// Saturating arithmetic on validity bounds: anything at or above kUnbounded
// stays unbounded.
constexpr Exponent sat_add(Exponent a, Exponent b) noexcept {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  Exponent s = a + b;
  return s >= kUnbounded ? kUnbounded : s;
}

constexpr Exponent sat_sub(Exponent a, Exponent b) noexcept {
  if (a >= kUnbounded) return kUnbounded;
  return a - b;
}

constexpr Exponent floor_div(Exponent a, Exponent b) noexcept {
  Exponent q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Exponent ceil_div(Exponent a, Exponent b) noexcept {
  return -floor_div(-a, b);
}

constexpr Exponent floor_mod(Exponent a, Exponent b) noexcept {
  return a - floor_div(a, b) * b;
}

}  // namespace detail

inline std::string to_string(const Integer& value) { return value.get_str(10); }

/// base^exponent for small non-negative exponents.
inline Integer ipow(unsigned long base, unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

}  // namespace qseries
