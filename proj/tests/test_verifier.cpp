#include "qseries/verifier.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/errors.hpp"
#include "qseries/valuation.hpp"

namespace qseries {
namespace {

using PF = PartitionFamily;

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(54), Valuation::finite(3));
  EXPECT_TRUE(valuation(0).infinite);
  EXPECT_EQ(valuation(2187), Valuation::finite(7));
  EXPECT_EQ(valuation(-81), Valuation::finite(4));
  EXPECT_EQ(valuation(Integer(250), 5), Valuation::finite(3));
  EXPECT_LT(Valuation::finite(100), Valuation::infinity());
  EXPECT_EQ(Valuation::infinity().to_string(), "inf");
}

TEST(Valuation, DivisibilityDefinition) {
  for (long v = 1; v < 5000; v += 7) {
    const Valuation nu = valuation(v);
    ASSERT_FALSE(nu.infinite);
    const Integer p = ipow(3, nu.value);
    ASSERT_EQ(v % p, 0);
    ASSERT_NE(v % (3 * p), 0);
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_count(PF::a3, 0), 1);
  EXPECT_EQ(oracle_count(PF::a3, 4), 8);
  EXPECT_EQ(oracle_count(PF::a9, 2), 3);
  EXPECT_EQ(oracle_count(PF::p, 10), 42);
  EXPECT_THROW(oracle_count(PF::p, 61), BudgetExceeded);
  EXPECT_NO_THROW(oracle_count(PF::p, 70, 80));
}

// Two independent counting routes: the library oracle and a test-side
// explicit enumeration of every partition.
TEST(Oracle, AgreesWithExplicitEnumeration) {
  auto any = [](long) { return true; };
  auto even = [](long p) { return p % 2 == 0; };
  auto not3 = [](long p) { return p % 3 != 0; };
  auto even_not3 = [](long p) { return p % 2 == 0 && p % 3 != 0; };
  auto not9 = [](long p) { return p % 9 != 0; };
  auto even_not18 = [](long p) { return p % 2 == 0 && p % 18 != 0; };
  for (long n = 0; n <= 22; ++n) {
    EXPECT_EQ(oracle_count(PF::p, n), testing::count_by_enumeration(n, any));
    EXPECT_EQ(oracle_count(PF::a, n), testing::count_pairs(n, any, even));
    EXPECT_EQ(oracle_count(PF::a3, n), testing::count_pairs(n, not3, even_not3));
    EXPECT_EQ(oracle_count(PF::a9, n), testing::count_pairs(n, not9, even_not18));
    long b = 0;
    for (long t = 0; t <= n; ++t) b += testing::count_pairs(t, any, any) * testing::count_pairs(n - t, even, even);
    EXPECT_EQ(oracle_count(PF::b, n), b);
  }
}

TEST(Oracle, EquivalenceWithSeries) {
  const ItemReport r = oracle_equivalence(40);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Claims, Validation) {
  EXPECT_THROW((CongruenceClaim{"x", PF::a3, 3, 3, 3, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((CongruenceClaim{"x", PF::a3, 0, 0, 3, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((CongruenceClaim{"x", PF::a3, 3, 1, 1, 1}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((CongruenceClaim{"x", PF::a3, 1, 0, 3, 0}.validate()));
  EXPECT_EQ((CongruenceClaim{"x", PF::b, 81, 61, 3, 4}.modulus()), 81);
}

TEST(Claims, Examples) {
  const ClaimReport a3 = verify_claim({"a3", PF::a3, 3, 2, 3, 1}, 50, 200);
  EXPECT_TRUE(a3.pass);
  EXPECT_TRUE(a3.failures.empty());
  EXPECT_EQ(a3.min_valuation, Valuation::finite(1));
  EXPECT_TRUE(verify_claim({"a9", PF::a9, 9, 8, 3, 2}, 50, 500).pass);
  EXPECT_TRUE(verify_claim({"p", PF::p, 5, 4, 5, 1}, 50, 300).pass);
  const ClaimReport vac = verify_claim({"vac", PF::a3, 1, 0, 3, 0}, 30, 30);
  EXPECT_TRUE(vac.pass);
  EXPECT_EQ(vac.min_valuation, Valuation::finite(0));
}

TEST(Claims, FalseClaimReportsFailures) {
  const ClaimReport r = verify_claim({"bogus", PF::p, 5, 3, 5, 1}, 20, 200);
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front(), 0);  // p(3) = 3
}

TEST(Claims, BudgetAndValidity) {
  EXPECT_THROW(verify_claim({"a3", PF::a3, 3, 2, 3, 1}, 50, 100), BeyondValidity);
  const Series short_series = expand_spec(family_spec(PF::a3), 20);
  EXPECT_THROW(verify_claim({"a3", PF::a3, 3, 2, 3, 1}, 10, short_series), BeyondValidity);
}

TEST(Claims, TheoremInstances) {
  const auto claims = theorem_claims(2, 3);
  ASSERT_EQ(claims.size(), 12u + 4u);
  auto find = [&](const std::string& id) {
    for (const auto& c : claims) {
      if (c.id == id) return c;
    }
    ADD_FAILURE() << id;
    return CongruenceClaim{};
  };
  const auto c10 = find("a3/1/alpha=0");
  EXPECT_EQ(c10.stride, 1);
  EXPECT_EQ(c10.offset, 0);
  EXPECT_EQ(c10.modulus(), 1);
  const auto c30 = find("a3/3/alpha=0");
  EXPECT_EQ(c30.stride, 9);
  EXPECT_EQ(c30.offset, 5);
  EXPECT_EQ(c30.modulus(), 9);
  const auto c12 = find("a3/1/alpha=2");
  EXPECT_EQ(c12.stride, 81);
  EXPECT_EQ(c12.offset, 20);
  EXPECT_EQ(c12.modulus(), 9);
  const auto c22 = find("a3/2/alpha=2");
  EXPECT_EQ(c22.stride, 243);
  EXPECT_EQ(c22.offset, 182);
  EXPECT_EQ(c22.modulus(), 27);
  const auto c32 = find("a3/3/alpha=2");
  EXPECT_EQ(c32.stride, 729);
  EXPECT_EQ(c32.offset, 425);
  EXPECT_EQ(c32.modulus(), 81);
  const auto c42 = find("a3/4/alpha=2");
  EXPECT_EQ(c42.offset, 668);
  const auto n0 = find("a9/alpha=0");
  EXPECT_EQ(n0.stride, 3);
  EXPECT_EQ(n0.offset, 2);
  const auto n3 = find("a9/alpha=3");
  EXPECT_EQ(n3.stride, 81);
  EXPECT_EQ(n3.offset, 80);
  EXPECT_EQ(n3.modulus(), 81);
}

TEST(Claims, OffsetsAreIntegralFarOut) {
  EXPECT_NO_THROW(theorem_claims(12, 20));
}

TEST(Suites, SmallTheoremSuite) {
  TheoremOptions o;
  o.alpha_t1 = 1;
  o.alpha_t2 = 2;
  o.n_budget = 3000;
  const SuiteReport r = theorem_suite(o);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.items.size(), 8u + 3u);
  for (const auto& item : r.items) {
    ASSERT_TRUE(item.claim.has_value());
    const auto& c = *item.claim;
    EXPECT_LE(c.claim.stride * c.n_max + c.claim.offset, 3000);
    EXPECT_GT(c.claim.stride * (c.n_max + 1) + c.claim.offset, 3000);
    EXPECT_TRUE(c.min_valuation.at_least(c.claim.modulus_exponent)) << item.id;
  }
  // a9 spot value behind the first instance.
  EXPECT_EQ(r.items[8].id, "a9/alpha=0");
}

TEST(Suites, TheoremSuiteRejectsTinyBudget) {
  TheoremOptions o;
  o.n_budget = 100;
  EXPECT_THROW(theorem_suite(o), BeyondValidity);
}

TEST(Suites, TheoremSuiteIsDeterministic) {
  TheoremOptions o;
  o.alpha_t1 = 1;
  o.alpha_t2 = 1;
  o.n_budget = 1000;
  const SuiteReport a = theorem_suite(o);
  const SuiteReport b = theorem_suite(o);
  ASSERT_EQ(a.items.size(), b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    EXPECT_EQ(a.items[i].id, b.items[i].id);
    EXPECT_EQ(a.items[i].claim->min_valuation, b.items[i].claim->min_valuation);
  }
}

TEST(Suites, IdentitySuiteSmall) {
  IdentityOptions o;
  o.order = 120;
  o.zeta_order = 40;
  o.congruence_order = 40;
  o.regression_order = 60;
  o.cubic_n_max = 100;
  o.pair_n_max = 30;
  const SuiteReport r = identity_suite(o);
  for (const auto& item : r.items) EXPECT_TRUE(item.pass) << item.id << " " << item.detail;
  EXPECT_GE(r.items.size(), 20u);
}

TEST(Suites, RingLaws) {
  const ItemReport r = ring_law_check(12345, 20, 30);
  EXPECT_TRUE(r.pass) << r.detail;
}

}  // namespace
}  // namespace qseries
