#include "qseries/huffing.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

using detail::ceil_div;
using detail::floor_div;
using detail::floor_mod;

namespace {

void check_stride(Exponent m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
}

Exponent scaled_validity(Exponent valid_to, Exponent m, Exponent r) {
  return valid_to >= kUnbounded ? kUnbounded : floor_div(valid_to - r, m);
}

}  // namespace

Series huff(const Series& a, HuffSpec h) {
  check_stride(h.modulus);
  if (h.residue < 0 || h.residue >= h.modulus) {
    throw std::invalid_argument("residue must lie in [0, modulus)");
  }
  if (a.is_zero()) return a;
  std::vector<Integer> c(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (floor_mod(a.lead() + static_cast<Exponent>(i), h.modulus) != h.residue) c[i] = 0;
  }
  return Series::from_coefficients(a.lead(), std::move(c), a.valid_to());
}

Series deflate(const Series& a, Exponent m) {
  check_stride(m);
  const Exponent valid = scaled_validity(a.valid_to(), m, 0);
  if (a.is_zero()) return Series::zero_through(valid);
  const auto src = a.coefficients();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Exponent e = a.lead() + static_cast<Exponent>(i);
    if (sgn(src[i]) != 0 && floor_mod(e, m) != 0) {
      throw OffStride("nonzero coefficient at q^" + std::to_string(e) +
                      " is off the stride " + std::to_string(m));
    }
  }
  const Exponent lead = floor_div(a.lead(), m);
  std::vector<Integer> c;
  c.reserve(src.size() / static_cast<std::size_t>(m) + 1);
  for (std::size_t i = 0; i < src.size(); i += static_cast<std::size_t>(m)) c.push_back(src[i]);
  return Series::from_coefficients(lead, std::move(c), valid);
}

Series extract_progression(const Series& a, Exponent m, Exponent r) {
  check_stride(m);
  if (r < 0 || r >= m) throw std::invalid_argument("residue must lie in [0, modulus)");
  const Exponent valid = scaled_validity(a.valid_to(), m, r);
  if (a.is_zero()) return Series::zero_through(valid);
  const Exponent first = ceil_div(a.lead() - r, m);
  const Exponent last = std::min(valid, floor_div(a.last_stored() - r, m));
  if (last < first) return Series::zero_through(valid);
  const auto src = a.coefficients();
  std::vector<Integer> c;
  c.reserve(static_cast<std::size_t>(last - first + 1));
  for (Exponent n = first; n <= last; ++n) {
    c.push_back(src[static_cast<std::size_t>(m * n + r - a.lead())]);
  }
  return Series::from_coefficients(first, std::move(c), valid);
}

}  // namespace qseries
