#pragma once

#include <json.hpp>

#include <iosfwd>
#include <vector>

#include "qseries/matrix.hpp"
#include "qseries/vectors.hpp"
#include "qseries/verifier.hpp"

namespace qseries {

/// Report serialization. Big integers are written as decimal strings;
/// elapsed_ms is included only when `timing` is set so that reports are
/// byte-identical across runs by default.
///
/// Claim schema:
///   { "claim": {"id", "family", "stride", "offset", "modulus"},
///     "range": {"n_max"}, "result": "pass"|"fail", "failures": [n...],
///     "min_valuation": int|"inf", "elapsed_ms"? }
nlohmann::ordered_json claim_json(const ClaimReport& report, bool timing = false);
nlohmann::ordered_json item_json(const ItemReport& item, bool timing = false);
nlohmann::ordered_json suite_json(const SuiteReport& suite, bool timing = false);
nlohmann::ordered_json valuation_json(const Valuation& v);

/// Rows 1..depth padded with zeros to `depth` columns.
nlohmann::ordered_json matrix_json(const MatrixTable& table);
void write_matrix_csv(std::ostream& out, const MatrixTable& table);

/// A vector with its per-entry valuations and bounds.
nlohmann::ordered_json vector_json(const CoeffVector& v);
void write_vectors_csv(std::ostream& out, const std::vector<CoeffVector>& chain);

/// One "PASS|FAIL id  description  detail" line per item.
void write_suite_text(std::ostream& out, const SuiteReport& suite);
void write_suite_csv(std::ostream& out, const SuiteReport& suite, bool header = true);

}  // namespace qseries
