#include "qseries/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "qseries/errors.hpp"
#include "qseries/huffing.hpp"
#include "qseries/matrix.hpp"
#include "qseries/vectors.hpp"

namespace qseries {

namespace {

// ---------------------------------------------------------------------------
// Combinatorial oracle

using PartPredicate = bool (*)(Exponent);

bool any_part(Exponent) { return true; }
bool even_part(Exponent k) { return k % 2 == 0; }
bool not_div3(Exponent k) { return k % 3 != 0; }
bool even_not_div3(Exponent k) { return k % 2 == 0 && k % 3 != 0; }
bool not_div9(Exponent k) { return k % 9 != 0; }
bool even_not_div18(Exponent k) { return k % 2 == 0 && k % 18 != 0; }

std::vector<PartPredicate> components(PartitionFamily family) {
  switch (family) {
    case PartitionFamily::p:
      return {any_part};
    case PartitionFamily::a:
      return {any_part, even_part};
    case PartitionFamily::b:
      return {any_part, any_part, even_part, even_part};
    case PartitionFamily::a3:
      return {not_div3, even_not_div3};
    case PartitionFamily::a9:
      return {not_div9, even_not_div18};
  }
  return {};
}

// Number of partitions of n whose parts are <= largest and allowed.
class RestrictedPartitions {
 public:
  explicit RestrictedPartitions(PartPredicate allowed) : allowed_(allowed) {}

  const Integer& count(Exponent n, Exponent largest) {
    static const Integer one(1);
    static const Integer zero(0);
    if (n == 0) return one;
    if (largest == 0) return zero;
    largest = std::min(largest, n);
    auto key = std::pair{n, largest};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // Either no part equals `largest`, or remove one copy of it.
    Integer total = count(n, largest - 1);
    if (allowed_(largest)) total += count(n - largest, largest);
    return memo_.emplace(key, std::move(total)).first->second;
  }

 private:
  PartPredicate allowed_;
  std::map<std::pair<Exponent, Exponent>, Integer> memo_;
};

// Sum over splits n = n_1 + ... + n_c of the product of component counts.
Integer count_tuples(const std::vector<std::vector<Integer>>& per_component, std::size_t c,
                     Exponent remaining) {
  if (c + 1 == per_component.size()) return per_component[c][static_cast<std::size_t>(remaining)];
  Integer total = 0;
  for (Exponent t = 0; t <= remaining; ++t) {
    const Integer& here = per_component[c][static_cast<std::size_t>(t)];
    if (sgn(here) == 0) continue;
    total += here * count_tuples(per_component, c + 1, remaining - t);
  }
  return total;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Exponent to_exponent(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("index exceeds machine range");
  return value.get_si();
}

Exponent quarter(const Integer& numerator) {
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4)) {
    throw NonIntegralOffset("offset (" + numerator.get_str() + ")/4 is not an integer");
  }
  return to_exponent(Integer(numerator / 4));
}

std::string alpha_tag(Exponent alpha) { return "alpha=" + std::to_string(alpha); }

ItemReport series_item(std::string id, std::string description,
                       const std::function<bool()>& check, std::string detail = {}) {
  ItemReport item;
  item.id = std::move(id);
  item.description = std::move(description);
  try {
    item.pass = check();
    item.detail = std::move(detail);
  } catch (const Error& e) {
    item.pass = false;
    item.detail = e.what();
  }
  return item;
}

// First exponent <= n at which a and b differ modulo `modulus`, if any.
std::optional<Exponent> first_mismatch_mod(const Series& a, const Series& b, Exponent n,
                                           const Integer& modulus) {
  const Exponent lo = std::min(a.lead(), b.lead());
  for (Exponent e = lo; e <= n; ++e) {
    Integer diff = a.coefficient(e) - b.coefficient(e);
    if (!mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t())) return e;
  }
  return std::nullopt;
}

}  // namespace

ItemReport claim_item(ClaimReport report) {
  ItemReport item;
  item.id = report.claim.id;
  std::ostringstream d;
  d << family_name(report.claim.family) << "(" << report.claim.stride << "n+"
    << report.claim.offset << ") == 0 mod " << report.claim.modulus().get_str();
  item.description = d.str();
  item.pass = report.pass;
  std::ostringstream detail;
  detail << "n<=" << report.n_max << ", min valuation " << report.min_valuation.to_string()
         << ", failures " << report.failures.size();
  item.detail = detail.str();
  item.claim = std::move(report);
  return item;
}

Integer oracle_count(PartitionFamily family, Exponent n, Exponent cap) {
  if (n < 0) throw std::invalid_argument("oracle index must be non-negative");
  if (n > cap) {
    throw BudgetExceeded("oracle asked for n=" + std::to_string(n) + " above its cap " +
                         std::to_string(cap));
  }
  std::vector<std::vector<Integer>> per_component;
  for (PartPredicate allowed : components(family)) {
    RestrictedPartitions counter(allowed);
    std::vector<Integer> counts;
    for (Exponent t = 0; t <= n; ++t) counts.push_back(counter.count(t, t));
    per_component.push_back(std::move(counts));
  }
  return count_tuples(per_component, 0, n);
}

void CongruenceClaim::validate() const {
  if (stride < 1) throw std::invalid_argument("claim stride must be positive");
  if (offset < 0 || offset >= stride) {
    throw std::invalid_argument("claim offset must lie in [0, stride)");
  }
  if (modulus_base < 2) throw std::invalid_argument("claim modulus base must be at least 2");
}

ClaimReport verify_claim(const CongruenceClaim& claim, Exponent n_max, const Series& series) {
  claim.validate();
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const Exponent top = claim.stride * n_max + claim.offset;
  if (top > series.valid_to()) {
    throw BeyondValidity("claim " + claim.id + " needs index " + std::to_string(top) +
                         " but the series is valid only through " +
                         std::to_string(series.valid_to()));
  }
  ClaimReport report;
  report.claim = claim;
  report.n_max = n_max;
  const Integer modulus = claim.modulus();
  for (Exponent n = 0; n <= n_max; ++n) {
    const Integer c = series.coefficient(claim.stride * n + claim.offset);
    if (!mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t())) report.failures.push_back(n);
    report.min_valuation = std::min(report.min_valuation, valuation(c, claim.modulus_base));
  }
  report.pass = report.failures.empty();
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

ClaimReport verify_claim(const CongruenceClaim& claim, Exponent n_max, Exponent n_budget,
                         EtaCache* cache) {
  claim.validate();
  const Exponent top = claim.stride * n_max + claim.offset;
  if (top > n_budget) {
    throw BeyondValidity("claim " + claim.id + " needs index " + std::to_string(top) +
                         " which exceeds the budget " + std::to_string(n_budget));
  }
  const auto start = std::chrono::steady_clock::now();
  const Series series = expand_spec(family_spec(claim.family), top, cache);
  ClaimReport report = verify_claim(claim, n_max, series);
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

std::vector<CongruenceClaim> theorem_claims(Exponent alpha_t1, Exponent alpha_t2) {
  if (alpha_t1 < 0 || alpha_t2 < 0) throw std::invalid_argument("depths must be non-negative");
  std::vector<CongruenceClaim> claims;
  for (Exponent alpha = 0; alpha <= alpha_t1; ++alpha) {
    const auto a = static_cast<unsigned long>(alpha);
    const auto e = static_cast<unsigned>(alpha);
    const Integer p2a = ipow(3, 2 * a);
    const Integer p2a1 = ipow(3, 2 * a + 1);
    const Integer p2a2 = ipow(3, 2 * a + 2);
    const std::string tag = alpha_tag(alpha);
    claims.push_back({"a3/1/" + tag, PartitionFamily::a3, to_exponent(p2a), quarter(p2a - 1), 3, e});
    claims.push_back(
        {"a3/2/" + tag, PartitionFamily::a3, to_exponent(p2a1), quarter(p2a2 - 1), 3, e + 1});
    claims.push_back({"a3/3/" + tag, PartitionFamily::a3, to_exponent(p2a2),
                      quarter(7 * p2a1 - 1), 3, e + 2});
    claims.push_back({"a3/4/" + tag, PartitionFamily::a3, to_exponent(p2a2),
                      quarter(11 * p2a1 - 1), 3, e + 2});
  }
  for (Exponent alpha = 0; alpha <= alpha_t2; ++alpha) {
    const Integer stride = ipow(3, static_cast<unsigned long>(alpha) + 1);
    claims.push_back({"a9/" + alpha_tag(alpha), PartitionFamily::a9, to_exponent(stride),
                      to_exponent(Integer(stride - 1)), 3, static_cast<unsigned>(alpha) + 1});
  }
  for (const auto& c : claims) c.validate();
  return claims;
}

bool SuiteReport::pass() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const ItemReport& i) { return i.pass; });
}

SuiteReport theorem_suite(const TheoremOptions& options) {
  const std::vector<CongruenceClaim> claims = theorem_claims(options.alpha_t1, options.alpha_t2);

  std::vector<Exponent> n_max(claims.size());
  Exponent top_a3 = 0;
  Exponent top_a9 = 0;
  for (std::size_t k = 0; k < claims.size(); ++k) {
    const auto& c = claims[k];
    if (options.n_max) {
      n_max[k] = *options.n_max;
    } else {
      n_max[k] = options.n_budget < c.offset ? -1 : (options.n_budget - c.offset) / c.stride;
    }
    const Exponent top = c.stride * n_max[k] + c.offset;
    if (n_max[k] < 0 || top > options.n_budget) {
      throw BeyondValidity("claim " + c.id + " needs index " +
                           std::to_string(std::max(top, c.offset)) +
                           " which exceeds the budget " + std::to_string(options.n_budget));
    }
    Exponent& family_top = c.family == PartitionFamily::a3 ? top_a3 : top_a9;
    family_top = std::max(family_top, top);
  }

  Series a3;
  Series a9;
  detail::parallel_for(2, [&](std::size_t which) {
    if (which == 0) {
      a3 = expand_spec(family_spec(PartitionFamily::a3), top_a3);
    } else {
      a9 = expand_spec(family_spec(PartitionFamily::a9), top_a9);
    }
  });

  SuiteReport report;
  report.suite = "theorems";
  std::vector<ClaimReport> results(claims.size());
  detail::parallel_for(claims.size(), [&](std::size_t k) {
    const Series& s = claims[k].family == PartitionFamily::a3 ? a3 : a9;
    results[k] = verify_claim(claims[k], n_max[k], s);
  });
  for (auto& r : results) report.items.push_back(claim_item(std::move(r)));
  return report;
}

SuiteReport identity_suite(const IdentityOptions& o) {
  using S = EtaQuotientSpec;
  SuiteReport report;
  report.suite = "identities";
  EtaCache cache;

  const S u = S::eta(3) * S::eta(6) * S::eta(1, -1) * S::eta(2, -1);
  const Exponent order = o.order;

  report.items.push_back(series_item(
      "a3-progression", "sum a3(3n+2) q^n == 3 f3^3 f6^3/(f1^3 f2^3)", [&] {
        const Series a3 = expand_spec(family_spec(PartitionFamily::a3), 3 * order + 2, &cache);
        const Series rhs = expand_spec(S::integer(3) * u.power(3), order, &cache);
        return equal_up_to(extract_progression(a3, 3, 2), rhs, order);
      }, "through q^" + std::to_string(order)));

  report.items.push_back(series_item(
      "a9-progression", "sum a9(3n+2) q^n == 3 f3^4 f6^4/(f1^4 f2^4)", [&] {
        const Series a9 = expand_spec(family_spec(PartitionFamily::a9), 3 * order + 2, &cache);
        const Series rhs = expand_spec(S::integer(3) * u.power(4), order, &cache);
        return equal_up_to(extract_progression(a9, 3, 2), rhs, order);
      }, "through q^" + std::to_string(order)));

  const Exponent z = o.zeta_order;
  // zeta has lead -1, so zeta^k loses k-1 terms of validity.
  const Series zeta = expand_spec(zeta_spec(), z + 2, &cache);
  const Series t = expand_spec(t_spec(), z, &cache);

  report.items.push_back(series_item("zeta-cubic", "zeta^3 + 3 zeta^2 + 9 zeta == T", [&] {
    const Series lhs = pow(zeta, 3) + scale(pow(zeta, 2), 3) + scale(zeta, 9);
    return equal_up_to(lhs - t, Series::zero_through(z), z);
  }, "through q^" + std::to_string(z)));

  report.items.push_back(series_item("huff-zeta", "H(zeta) == -1", [&] {
    return equal_up_to(huff(zeta), Series::constant(-1), z);
  }, "through q^" + std::to_string(z)));
  report.items.push_back(series_item("huff-zeta-squared", "H(zeta^2) == -3", [&] {
    return equal_up_to(huff(pow(zeta, 2)), Series::constant(-3), z);
  }, "through q^" + std::to_string(z)));
  report.items.push_back(series_item("huff-one", "H(1) == 1", [&] {
    return equal_up_to(huff(Series::constant(1, z)), Series::constant(1), z);
  }, "through q^" + std::to_string(z)));

  report.items.push_back(series_item("f1-cubed-mod-3", "f1^3 == f3 (mod 3)", [&] {
    const Series f1 = expand_eta(1, order);
    return !first_mismatch_mod(pow(f1, 3), expand_eta(3, order), order, Integer(3));
  }, "through q^" + std::to_string(order)));

  {
    const Exponent n = o.congruence_order;
    Exponent top = 0;
    for (Exponent a = 0; a <= o.congruence_alpha_max; ++a) {
      const auto ua = static_cast<unsigned long>(a);
      top = std::max(top, to_exponent(Integer(ipow(3, 2 * ua + 1) * n + quarter(ipow(3, 2 * ua + 2) - 1))));
    }
    const Series a3 = expand_spec(family_spec(PartitionFamily::a3), top, &cache);
    const Series w = expand_spec(S::eta(9) * S::eta(18) * S::eta(3, -1) * S::eta(6, -1), n, &cache);
    for (Exponent a = 0; a <= o.congruence_alpha_max; ++a) {
      const auto ua = static_cast<unsigned long>(a);
      const Exponent stride = to_exponent(ipow(3, 2 * ua + 1));
      const Exponent offset = quarter(ipow(3, 2 * ua + 2) - 1);
      const Integer modulus = ipow(3, ua + 2);
      std::ostringstream desc;
      desc << "sum a3(" << stride << "n+" << offset << ") q^n == 3^" << a + 1
           << " f9 f18/(f3 f6) (mod 3^" << a + 2 << ")";
      ItemReport item;
      item.id = "a3-odd-progression-mod/" + alpha_tag(a);
      item.description = desc.str();
      const Series lhs = extract_progression(a3, stride, offset);
      const auto bad = first_mismatch_mod(lhs, scale(w, ipow(3, ua + 1)), n, modulus);
      item.pass = !bad;
      item.detail = bad ? "first mismatch at q^" + std::to_string(*bad)
                        : "through q^" + std::to_string(n);
      report.items.push_back(std::move(item));
    }
  }

  const Exponent r = o.regression_order;
  report.items.push_back(series_item("p-5n+4", "sum p(5n+4) q^n == 5 f5^5/f1^6", [&] {
    const Series p = expand_spec(family_spec(PartitionFamily::p), 5 * r + 4, &cache);
    const Series rhs = expand_spec(S::integer(5) * S::eta(5, 5) * S::eta(1, -6), r, &cache);
    return equal_up_to(extract_progression(p, 5, 4), rhs, r);
  }, "through q^" + std::to_string(r)));

  report.items.push_back(series_item(
      "p-7n+5", "sum p(7n+5) q^n == 7 f7^3/f1^4 + 49 q f7^7/f1^8", [&] {
        const Series p = expand_spec(family_spec(PartitionFamily::p), 7 * r + 5, &cache);
        const Series rhs =
            expand_spec(S::integer(7) * S::eta(7, 3) * S::eta(1, -4), r, &cache) +
            expand_spec(S::integer(49) * S::q_power(1) * S::eta(7, 7) * S::eta(1, -8), r, &cache);
        return equal_up_to(extract_progression(p, 7, 5), rhs, r);
      }, "through q^" + std::to_string(r)));

  report.items.push_back(series_item(
      "a-3n+2", "sum a(3n+2) q^n == 3 f3^3 f6^3/(f1^4 f2^4)", [&] {
        const Series a = expand_spec(family_spec(PartitionFamily::a), 3 * r + 2, &cache);
        const Series rhs = expand_spec(
            S::integer(3) * S::eta(3, 3) * S::eta(6, 3) * S::eta(1, -4) * S::eta(2, -4), r, &cache);
        return equal_up_to(extract_progression(a, 3, 2), rhs, r);
      }, "through q^" + std::to_string(r)));

  {
    const CongruenceClaim cubic{"a/3n+2", PartitionFamily::a, 3, 2, 3, 1};
    report.items.push_back(claim_item(verify_claim(cubic, o.cubic_n_max, 3 * o.cubic_n_max + 2, &cache)));

    std::vector<CongruenceClaim> pairs = {
        {"b/5n+4", PartitionFamily::b, 5, 4, 5, 1},     {"b/7n+2", PartitionFamily::b, 7, 2, 7, 1},
        {"b/7n+3", PartitionFamily::b, 7, 3, 7, 1},     {"b/7n+4", PartitionFamily::b, 7, 4, 7, 1},
        {"b/7n+6", PartitionFamily::b, 7, 6, 7, 1},     {"b/9n+7", PartitionFamily::b, 9, 7, 3, 2},
        {"b/27n+16", PartitionFamily::b, 27, 16, 3, 3}, {"b/27n+25", PartitionFamily::b, 27, 25, 3, 3},
        {"b/81n+61", PartitionFamily::b, 81, 61, 3, 3}, {"b/81n+61/mod81", PartitionFamily::b, 81, 61, 3, 4},
    };
    Exponent top = 0;
    for (const auto& c : pairs) top = std::max(top, c.stride * o.pair_n_max + c.offset);
    const Series b = expand_spec(family_spec(PartitionFamily::b), top, &cache);
    for (const auto& c : pairs) report.items.push_back(claim_item(verify_claim(c, o.pair_n_max, b)));
  }
  return report;
}

ItemReport ring_law_check(std::uint64_t seed, int trials, Exponent order) {
  std::mt19937_64 rng(seed);
  auto random_series = [&](bool unit_lead) {
    std::uniform_int_distribution<Exponent> lead_dist(-3, 3);
    std::uniform_int_distribution<Exponent> len_dist(1, order);
    std::uniform_int_distribution<long> small(-1000000, 1000000);
    const Exponent lead = lead_dist(rng);
    const Exponent len = len_dist(rng);
    std::vector<Integer> c(static_cast<std::size_t>(len));
    for (auto& x : c) {
      x = small(rng);
      if (rng() % 8 == 0) x *= Integer(small(rng)) * Integer(small(rng)) * Integer(small(rng));
    }
    c.front() = unit_lead ? (rng() % 2 ? 1 : -1) : (small(rng) | 1);
    return Series::from_coefficients(lead, std::move(c), lead + len - 1);
  };
  auto same = [](const Series& x, const Series& y) {
    const Exponent n = std::min(x.valid_to(), y.valid_to());
    return equal_up_to(x, y, n);
  };

  ItemReport item;
  item.id = "ring-laws";
  item.description = "commutativity, associativity, distributivity, inverses";
  std::ostringstream detail;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const Series a = random_series(false);
    const Series b = random_series(false);
    const Series c = random_series(true);
    const bool ok = same(a + b, b + a) && same(a * b, b * a) && same((a + b) + c, a + (b + c)) &&
                    same((a * b) * c, a * (b * c)) && same(a * (b + c), a * b + a * c) &&
                    same(c * invert(c), Series::constant(1));
    if (!ok && failures++ == 0) detail << "first failure at trial " << t << "; ";
  }
  item.pass = failures == 0;
  detail << trials << " trials, seed " << seed << ", order " << order;
  item.detail = detail.str();
  return item;
}

ItemReport oracle_equivalence(Exponent n_max, Exponent cap) {
  ItemReport item;
  item.id = "oracle-equivalence";
  item.description = "series coefficients == brute-force counts for p, a, b, a3, a9";
  std::ostringstream detail;
  item.pass = true;
  try {
    for (PartitionFamily f : {PartitionFamily::p, PartitionFamily::a, PartitionFamily::b,
                              PartitionFamily::a3, PartitionFamily::a9}) {
      const Series s = expand_spec(family_spec(f), n_max);
      for (Exponent n = 0; n <= n_max; ++n) {
        if (s.coefficient(n) != oracle_count(f, n, cap)) {
          item.pass = false;
          detail << family_name(f) << "(" << n << ") mismatch; ";
        }
      }
    }
  } catch (const Error& e) {
    item.pass = false;
    detail << e.what() << "; ";
  }
  detail << "0<=n<=" << n_max;
  item.detail = detail.str();
  return item;
}

SuiteReport matrix_suite(const MatrixOptions& o) {
  if (o.rows < 1) throw std::invalid_argument("matrix suite needs at least one row");
  SuiteReport report;
  report.suite = "matrix";
  const std::size_t depth = std::max({4 * o.rows, o.huff_rows, 4 * o.rearranged_rows});

  std::optional<MatrixTable> built;
  report.items.push_back(series_item("zero-pattern", "m(4i-3,j) = m(4i-1,j) = 0 for j < i, m(4i,j) = 0 for j <= i", [&] {
    built = build_matrix(depth);
    return true;
  }, "rows 1.." + std::to_string(depth)));
  if (!built) return report;
  const MatrixTable& m = *built;

  {
    ItemReport item;
    item.id = "valuation/M";
    item.description = "nu(m(i,j)) >= 3j - i - 1";
    item.pass = true;
    for (std::size_t i = 1; i <= depth && item.pass; ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        const auto bound = 3 * static_cast<Exponent>(j) - static_cast<Exponent>(i) - 1;
        if (!valuation(m.entry(i, j)).at_least(bound)) {
          item.pass = false;
          item.detail = "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    }
    if (item.pass) item.detail = "i <= " + std::to_string(depth);
    report.items.push_back(std::move(item));
  }

  struct Bound {
    SubmatrixKind kind;
    Exponent slack;
  };
  for (auto [kind, slack] : {Bound{SubmatrixKind::A, 1}, Bound{SubmatrixKind::B, 3}, Bound{SubmatrixKind::C, 1}}) {
    ItemReport item;
    item.id = std::string("valuation/") + kind_letter(kind);
    item.description = std::string("nu(") + static_cast<char>(std::tolower(kind_letter(kind))) +
                       "(i,j)) >= 3j - i - " + std::to_string(slack);
    item.pass = true;
    const SubmatrixView v(m, kind);
    const std::size_t rows = std::min(v.rows(), o.rows);
    for (std::size_t i = 1; i <= rows && item.pass; ++i) {
      for (std::size_t j = 1; j <= v.width(i); ++j) {
        const auto bound = 3 * static_cast<Exponent>(j) - static_cast<Exponent>(i) - slack;
        if (!valuation(v.entry(i, j)).at_least(bound)) {
          item.pass = false;
          item.detail = "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    }
    if (item.pass) item.detail = "i <= " + std::to_string(rows);
    report.items.push_back(std::move(item));
  }

  std::vector<ItemReport> huffs(o.huff_rows);
  detail::parallel_for(o.huff_rows, [&](std::size_t k) {
    const std::size_t i = k + 1;
    huffs[k] = series_item("huff-expansion/i=" + std::to_string(i),
                           "H(zeta^-" + std::to_string(i) + ") == sum_j m(" + std::to_string(i) + ",j) T^-j",
                           [&] { return verify_huff_expansion(m, i, o.huff_order); },
                           "through q^" + std::to_string(o.huff_order));
  });
  for (auto& item : huffs) report.items.push_back(std::move(item));

  EtaCache cache;
  for (auto kind : {SubmatrixKind::A, SubmatrixKind::B, SubmatrixKind::C}) {
    for (std::size_t i = 1; i <= o.rearranged_rows; ++i) {
      report.items.push_back(series_item(
          std::string("rearranged/") + kind_letter(kind) + "/i=" + std::to_string(i),
          std::string("eta-quotient form of row ") + std::to_string(i) + " of " + kind_letter(kind),
          [&] { return verify_rearranged_identity(m, kind, i, o.rearranged_order, &cache); },
          "through q^" + std::to_string(o.rearranged_order)));
    }
  }
  return report;
}

SuiteReport vector_suite(const VectorOptions& o) {
  if (o.alpha_max < 0) throw std::invalid_argument("vector depth must be non-negative");
  SuiteReport report;
  report.suite = "vectors";
  const Exponent chain_depth = std::max(o.alpha_max, o.reconstruct_alpha_max);
  std::vector<CoeffVector> chains[2];
  detail::parallel_for(2, [&](std::size_t f) {
    chains[f] = vector_chain(f == 0 ? VectorFamily::X : VectorFamily::Y, chain_depth);
  });

  for (const auto& chain : chains) {
    for (Exponent a = 0; a <= o.alpha_max; ++a) {
      const CoeffVector& v = chain[static_cast<std::size_t>(a)];
      const ValuationReport r = check_valuations(v);
      ItemReport item;
      const std::string name(vector_family_name(v.family));
      item.id = "valuations/" + name + "/" + alpha_tag(a);
      item.description = "nu of " + name + "_" + std::to_string(a) + " entries meets the bound";
      item.pass = r.pass;
      std::ostringstream d;
      d << v.entries.size() << " entries";
      std::vector<std::size_t> tight;
      std::vector<std::size_t> failed;
      for (const auto& row : r.rows) {
        if (row.tight) tight.push_back(row.j);
        if (!row.pass) failed.push_back(row.j);
      }
      auto list = [&d](const char* label, const std::vector<std::size_t>& js) {
        if (js.empty()) return;
        d << ", " << label << " j=";
        for (std::size_t k = 0; k < std::min<std::size_t>(js.size(), 8); ++k) d << (k ? "," : "") << js[k];
        if (js.size() > 8) d << ",... (" << js.size() << ")";
      };
      list("fails at", failed);
      list("tight at", tight);
      item.detail = d.str();
      report.items.push_back(std::move(item));
    }
  }

  EtaCache cache;
  for (const auto& chain : chains) {
    const VectorFamily family = chain.front().family;
    const std::string name(vector_family_name(family));
    const PartitionFamily pf = family == VectorFamily::X ? PartitionFamily::a3 : PartitionFamily::a9;
    const Exponent top_alpha = std::min<Exponent>(o.reconstruct_alpha_max, static_cast<Exponent>(chain.size()) - 1);
    if (top_alpha < 0) continue;
    const Progression last = encoded_progression(chain[static_cast<std::size_t>(top_alpha)]);
    const Exponent N = o.reconstruct_order;
    const Series base = expand_spec(family_spec(pf), last.stride * N + last.offset, &cache);
    for (Exponent a = 0; a <= top_alpha; ++a) {
      const CoeffVector& v = chain[static_cast<std::size_t>(a)];
      const Progression p = encoded_progression(v);
      std::ostringstream desc;
      desc << "reconstructed " << name << "_" << a << " == sum " << family_name(pf) << "(" << p.stride
           << "n+" << p.offset << ") q^n";
      report.items.push_back(series_item("reconstruct/" + name + "/" + alpha_tag(a), desc.str(), [&] {
        return equal_up_to(reconstruct(v, N, &cache), extract_progression(base, p.stride, p.offset), N);
      }, "through q^" + std::to_string(N)));
    }
  }
  return report;
}

}  // namespace qseries
