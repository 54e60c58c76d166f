#include "qseries/valuation.hpp"

#include <stdexcept>

namespace qseries {

Valuation valuation(const Integer& value, unsigned long p) {
  if (p < 2) throw std::invalid_argument("valuation base must be at least 2");
  if (sgn(value) == 0) return Valuation::infinity();
  Integer rest;
  Integer base(p);
  const auto e = mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), base.get_mpz_t());
  return Valuation::finite(static_cast<Exponent>(e));
}

}  // namespace qseries
