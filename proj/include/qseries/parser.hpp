#pragma once

#include <string>
#include <string_view>

#include "qseries/eta.hpp"

namespace qseries {

/// Parse an eta-quotient expression:
///
///   expr := term (('*' | '/') term)*
///   term := integer | 'q' pow? | 'f' integer pow? | '(' expr ')' pow?
///   pow  := '^' '-'? integer
///
/// Whitespace between tokens is ignored. Throws SyntaxError (with the 0-based
/// offending position and the set of expected tokens) or OverflowError.
EtaQuotientSpec parse(std::string_view text);

/// Inverse of parse() for specs with a non-negative constant.
std::string render(const EtaQuotientSpec& spec);

}  // namespace qseries
