#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "qseries/eta.hpp"
#include "qseries/matrix.hpp"
#include "qseries/parser.hpp"
#include "qseries/report.hpp"
#include "qseries/vectors.hpp"
#include "qseries/verifier.hpp"

namespace qseries::cli {

namespace {

struct RunConfig {
  std::optional<Exponent> order;
  Exponent budget = 200000;
  Exponent alpha_t1 = 2;
  Exponent alpha_t2 = 3;
  std::optional<Exponent> n_max;
  std::string format = "text";
  std::string out_path;
  Exponent oracle_cap = kDefaultOracleCap;
  std::uint64_t seed = 1;
  std::size_t rows = 40;
  std::optional<Exponent> depth;
  std::string family = "both";
  bool timing = false;
  std::vector<std::string> claims;

  std::string expression;
  std::string suite;
  std::string what;
};

constexpr Exponent kDefaultExpandOrder = 20;
constexpr Exponent kDefaultVectorDepth = 7;
constexpr Exponent kDefaultDumpVectorDepth = 4;
constexpr std::size_t kDefaultDumpMatrixDepth = 9;
constexpr Exponent kDefaultClaimNMax = 200;

// ---------------------------------------------------------------------------
// expand

void write_expansion(std::ostream& out, const RunConfig& cfg, const EtaQuotientSpec& spec,
                     const Series& s) {
  const Exponent N = s.valid_to();
  const Exponent first = std::min<Exponent>(0, s.is_zero() ? 0 : s.lead());
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["expression"] = cfg.expression;
    j["normalized"] = render(spec);
    j["first"] = first;
    j["valid_to"] = N;
    auto coeffs = nlohmann::ordered_json::array();
    for (Exponent n = first; n <= N; ++n) coeffs.push_back(s.coefficient(n).get_str());
    j["coefficients"] = std::move(coeffs);
    out << j.dump(2) << "\n";
    return;
  }
  if (cfg.format == "csv") out << "n,coefficient\n";
  const char* sep = cfg.format == "csv" ? "," : " ";
  for (Exponent n = first; n <= N; ++n) out << n << sep << s.coefficient(n).get_str() << "\n";
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const EtaQuotientSpec spec = parse(cfg.expression);
  const Exponent N = cfg.order.value_or(kDefaultExpandOrder);
  if (N < 0) throw std::invalid_argument("--order must be non-negative");
  write_expansion(out, cfg, spec, expand_spec(spec, N));
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

Exponent parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("bad " + what + " '" + text + "'");
  return static_cast<Exponent>(v);
}

// "family,stride,offset,modulus" with modulus written as b or b^e.
CongruenceClaim parse_claim(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
  if (fields.size() != 4) {
    throw std::invalid_argument("claim '" + text + "' must be family,stride,offset,modulus");
  }
  CongruenceClaim c;
  c.family = parse_family(fields[0]);
  c.stride = parse_int(fields[1], "stride");
  c.offset = parse_int(fields[2], "offset");
  const auto caret = fields[3].find('^');
  const Exponent base = parse_int(fields[3].substr(0, caret), "modulus");
  const Exponent e = caret == std::string::npos ? 1 : parse_int(fields[3].substr(caret + 1), "modulus exponent");
  if (base < 2 || e < 0 || e > 64) throw std::invalid_argument("bad modulus '" + fields[3] + "'");
  c.modulus_base = static_cast<unsigned long>(base);
  c.modulus_exponent = static_cast<unsigned>(e);
  c.id = fields[0] + "/" + fields[1] + "n+" + fields[2];
  c.validate();
  return c;
}

struct SuiteRun {
  SuiteReport report;
  std::optional<MatrixTable> rows;
};

SuiteRun run_suite(const std::string& name, const RunConfig& cfg) {
  SuiteRun run;
  if (name == "identities") {
    IdentityOptions o;
    if (cfg.order) {
      if (*cfg.order < 30) throw std::invalid_argument("identity order must be at least 30");
      o.order = *cfg.order;
    }
    run.report = identity_suite(o);
    run.report.items.push_back(ring_law_check(cfg.seed));
    run.report.items.push_back(oracle_equivalence(std::min<Exponent>(40, cfg.oracle_cap), cfg.oracle_cap));
  } else if (name == "theorems") {
    TheoremOptions o;
    o.alpha_t1 = cfg.alpha_t1;
    o.alpha_t2 = cfg.alpha_t2;
    o.n_max = cfg.n_max;
    o.n_budget = cfg.budget;
    run.report = theorem_suite(o);
  } else if (name == "matrix") {
    MatrixOptions o;
    o.rows = cfg.rows;
    run.report = matrix_suite(o);
    run.rows = build_matrix(cfg.rows);
  } else if (name == "vectors") {
    VectorOptions o;
    o.alpha_max = cfg.depth.value_or(kDefaultVectorDepth);
    run.report = vector_suite(o);
  } else if (name == "claim") {
    if (cfg.claims.empty()) throw std::invalid_argument("verify claim needs at least one --claim");
    run.report.suite = "claims";
    EtaCache cache;
    for (const auto& text : cfg.claims) {
      const CongruenceClaim c = parse_claim(text);
      const Exponent n_max = cfg.n_max.value_or(kDefaultClaimNMax);
      run.report.items.push_back(claim_item(verify_claim(c, n_max, cfg.budget, &cache)));
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return run;
}

void write_rows_text(std::ostream& out, const MatrixTable& m) {
  for (std::size_t i = 1; i <= m.depth(); ++i) {
    out << "row " << i << ":";
    for (const auto& e : m.row(i)) out << " " << e.get_str();
    out << "\n";
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = {"identities", "theorems", "matrix", "vectors"};
  } else {
    names = {cfg.suite};
  }
  std::vector<SuiteRun> runs;
  for (const auto& n : names) runs.push_back(run_suite(n, cfg));
  bool pass = true;
  for (const auto& r : runs) pass = pass && r.report.pass();

  if (cfg.format == "json") {
    auto suite_doc = [&](const SuiteRun& r) {
      auto j = suite_json(r.report, cfg.timing);
      if (r.rows) j["matrix"] = matrix_json(*r.rows);
      return j;
    };
    if (runs.size() == 1) {
      out << suite_doc(runs.front()).dump(2) << "\n";
    } else {
      nlohmann::ordered_json j;
      j["result"] = pass ? "pass" : "fail";
      j["suites"] = nlohmann::ordered_json::array();
      for (const auto& r : runs) j["suites"].push_back(suite_doc(r));
      out << j.dump(2) << "\n";
    }
  } else if (cfg.format == "csv") {
    bool header = true;
    for (const auto& r : runs) {
      write_suite_csv(out, r.report, header);
      header = false;
    }
  } else {
    for (const auto& r : runs) {
      out << "== " << r.report.suite << " ==\n";
      if (r.rows) write_rows_text(out, *r.rows);
      write_suite_text(out, r.report);
    }
    out << "RESULT " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// dump

void write_vector_text(std::ostream& out, const CoeffVector& v) {
  const ValuationReport r = check_valuations(v);
  out << vector_family_name(v.family) << "_" << v.alpha << " = (";
  for (std::size_t k = 0; k < v.entries.size(); ++k) out << (k ? ", " : "") << v.entries[k].get_str();
  out << ")\n  nu = (";
  for (std::size_t k = 0; k < r.rows.size(); ++k) out << (k ? ", " : "") << r.rows[k].nu.to_string();
  out << ")\n  bound = (";
  for (std::size_t k = 0; k < r.rows.size(); ++k) out << (k ? ", " : "") << r.rows[k].bound;
  out << ")\n";
}

int cmd_dump(const RunConfig& cfg, std::ostream& out) {
  if (cfg.what == "matrix") {
    const Exponent depth = cfg.depth.value_or(static_cast<Exponent>(kDefaultDumpMatrixDepth));
    if (depth < 1) throw std::invalid_argument("matrix depth must be at least 1");
    const MatrixTable m = build_matrix(static_cast<std::size_t>(depth));
    if (cfg.format == "csv") {
      write_matrix_csv(out, m);
    } else if (cfg.format == "json") {
      out << matrix_json(m).dump(2) << "\n";
    } else {
      write_rows_text(out, m);
    }
    return kExitPass;
  }
  const Exponent depth = cfg.depth.value_or(kDefaultDumpVectorDepth);
  if (depth < 0) throw std::invalid_argument("vector depth must be non-negative");
  std::vector<CoeffVector> all;
  for (const char* f : {"X", "Y"}) {
    if (cfg.family != "both" && cfg.family != f) continue;
    auto chain = vector_chain(parse_vector_family(f), depth);
    all.insert(all.end(), chain.begin(), chain.end());
  }
  if (cfg.format == "csv") {
    write_vectors_csv(out, all);
  } else if (cfg.format == "json") {
    auto j = nlohmann::ordered_json::array();
    for (const auto& v : all) j.push_back(vector_json(v));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& v : all) write_vector_text(out, v);
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact q-series expansion and congruence verification for regular cubic partitions"};
  app.name(args.empty() ? "qseries" : args.front());
  app.set_config("--config", "", "flat key=value configuration file (flags take precedence)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("-N,--order", cfg.order, "working order (expand; identity suite, default 500)");
  app.add_option("--budget", cfg.budget, "largest coefficient index the theorem suite may expand")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--alpha-t1", cfg.alpha_t1, "depth of the a3 congruence families")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--alpha-t2", cfg.alpha_t2, "depth of the a9 congruence family")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--n-max", cfg.n_max, "check each claim for 0 <= n <= n-max (default: fill the budget)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  app.add_option("--oracle-cap", cfg.oracle_cap, "largest n the brute-force oracle accepts")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "seed for the randomized ring-law checks")->capture_default_str();
  app.add_option("--rows", cfg.rows, "matrix rows checked by the matrix suite")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.depth, "matrix rows or vector depth for dump and the vector suite");
  app.add_option("--family", cfg.family, "vector family for dump vectors")
      ->capture_default_str()
      ->check(CLI::IsMember({"X", "Y", "both"}));
  app.add_option("--claim", cfg.claims,
                 "congruence for verify claim: family,stride,offset,modulus (modulus b or b^e)");
  app.add_flag("--timing", cfg.timing, "include elapsed_ms in JSON reports");

  auto* expand = app.add_subcommand("expand", "print the coefficients of an eta-quotient expression");
  expand->add_option("expression", cfg.expression, "e.g. f3*f6/(f1*f2)")->required();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", cfg.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"identities", "theorems", "matrix", "vectors", "all", "claim"}));
  auto* dump = app.add_subcommand("dump", "write the matrix table or the vector chains");
  dump->add_option("what", cfg.what, "table to write")->required()->check(CLI::IsMember({"matrix", "vectors"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int code = kExitPass;
    if (expand->parsed()) code = cmd_expand(cfg, buffer);
    if (verify->parsed()) code = cmd_verify(cfg, buffer);
    if (dump->parsed()) code = cmd_dump(cfg, buffer);
    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      file.open(cfg.out_path);
      if (!file) {
        err << "error: cannot open '" << cfg.out_path << "' for writing\n";
        return kExitUsage;
      }
      file << buffer.str();
      file.close();
      if (!file) {
        err << "error: failed writing '" << cfg.out_path << "'\n";
        return kExitUsage;
      }
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qseries::cli
