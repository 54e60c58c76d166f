#pragma once

#include "qseries/series.hpp"

namespace qseries {

/// Selects the exponents congruent to `residue` modulo `modulus`. The
/// classical huffing operator H keeps q^{3n}: HuffSpec{3, 0}.
struct HuffSpec {
  Exponent modulus = 3;
  Exponent residue = 0;
};

/// Zero every coefficient whose exponent is not congruent to h.residue modulo
/// h.modulus. Exponents and validity are preserved.
Series huff(const Series& a, HuffSpec h = {});

/// q^{m n} -> q^n. Throws OffStride if any nonzero coefficient sits off the
/// stride; validity becomes floor(valid_to / m).
Series deflate(const Series& a, Exponent m);

/// sum_n coefficient(a, m n + r) q^n, with validity floor((valid_to - r) / m).
Series extract_progression(const Series& a, Exponent m, Exponent r);

}  // namespace qseries
