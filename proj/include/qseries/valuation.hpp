#pragma once

#include <compare>
#include <string>

#include "qseries/integer.hpp"

namespace qseries {

/// p-adic valuation; the valuation of zero is +infinity.
struct Valuation {
  bool infinite = true;
  Exponent value = 0;

  static Valuation finite(Exponent v) { return {false, v}; }
  static Valuation infinity() { return {}; }

  bool at_least(Exponent bound) const noexcept { return infinite || value >= bound; }
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
    return a.value <=> b.value;
  }
};

/// Largest e with p^e | value (p prime, defaults to 3).
Valuation valuation(const Integer& value, unsigned long p = 3);

}  // namespace qseries
