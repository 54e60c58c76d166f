#include "qseries/report.hpp"

#include <ostream>

namespace qseries {

using nlohmann::ordered_json;

ordered_json valuation_json(const Valuation& v) {
  if (v.infinite) return "inf";
  return v.value;
}

ordered_json claim_json(const ClaimReport& r, bool timing) {
  ordered_json j;
  j["claim"] = {{"id", r.claim.id},
                {"family", std::string(family_name(r.claim.family))},
                {"stride", r.claim.stride},
                {"offset", r.claim.offset},
                {"modulus", r.claim.modulus().get_str()}};
  j["range"] = {{"n_max", r.n_max}};
  j["result"] = r.pass ? "pass" : "fail";
  j["failures"] = r.failures;
  j["min_valuation"] = valuation_json(r.min_valuation);
  if (timing) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
  return j;
}

ordered_json item_json(const ItemReport& item, bool timing) {
  if (item.claim) return claim_json(*item.claim, timing);
  return {{"id", item.id},
          {"description", item.description},
          {"result", item.pass ? "pass" : "fail"},
          {"detail", item.detail}};
}

ordered_json suite_json(const SuiteReport& suite, bool timing) {
  ordered_json items = ordered_json::array();
  for (const auto& item : suite.items) items.push_back(item_json(item, timing));
  return {{"suite", suite.suite}, {"result", suite.pass() ? "pass" : "fail"}, {"items", items}};
}

ordered_json matrix_json(const MatrixTable& table) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 1; i <= table.depth(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 1; j <= table.depth(); ++j) row.push_back(table.entry(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return {{"depth", table.depth()}, {"rows", rows}};
}

void write_matrix_csv(std::ostream& out, const MatrixTable& table) {
  out << "i";
  for (std::size_t j = 1; j <= table.depth(); ++j) out << ",m" << j;
  out << "\n";
  for (std::size_t i = 1; i <= table.depth(); ++i) {
    out << i;
    for (std::size_t j = 1; j <= table.depth(); ++j) out << "," << table.entry(i, j).get_str();
    out << "\n";
  }
}

ordered_json vector_json(const CoeffVector& v) {
  const ValuationReport val = check_valuations(v);
  ordered_json entries = ordered_json::array();
  for (const auto& e : v.entries) entries.push_back(e.get_str());
  ordered_json nu = ordered_json::array();
  ordered_json bound = ordered_json::array();
  ordered_json tight = ordered_json::array();
  for (const auto& row : val.rows) {
    nu.push_back(valuation_json(row.nu));
    bound.push_back(row.bound);
    if (row.tight) tight.push_back(row.j);
  }
  return {{"family", std::string(vector_family_name(v.family))},
          {"alpha", v.alpha},
          {"entries", entries},
          {"nu", nu},
          {"bound", bound},
          {"tight", tight},
          {"valuations", val.pass ? "pass" : "fail"}};
}

void write_vectors_csv(std::ostream& out, const std::vector<CoeffVector>& chain) {
  out << "family,alpha,j,entry,nu,bound\n";
  for (const auto& v : chain) {
    const ValuationReport val = check_valuations(v);
    for (const auto& row : val.rows) {
      out << vector_family_name(v.family) << "," << v.alpha << "," << row.j << ","
          << v.entries[row.j - 1].get_str() << "," << row.nu.to_string() << "," << row.bound
          << "\n";
    }
  }
}

void write_suite_text(std::ostream& out, const SuiteReport& suite) {
  for (const auto& item : suite.items) {
    out << (item.pass ? "PASS " : "FAIL ") << item.id << "  " << item.description;
    if (!item.detail.empty()) out << "  [" << item.detail << "]";
    out << "\n";
  }
}

void write_suite_csv(std::ostream& out, const SuiteReport& suite, bool header) {
  if (header) out << "suite,id,result,min_valuation,failures\n";
  for (const auto& item : suite.items) {
    out << suite.suite << "," << item.id << "," << (item.pass ? "pass" : "fail") << ",";
    if (item.claim) {
      out << item.claim->min_valuation.to_string() << "," << item.claim->failures.size();
    } else {
      out << ",";
    }
    out << "\n";
  }
}

}  // namespace qseries
