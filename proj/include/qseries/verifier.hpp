#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/eta.hpp"
#include "qseries/series.hpp"
#include "qseries/valuation.hpp"

namespace qseries {

inline constexpr Exponent kDefaultOracleCap = 60;

/// Counts the partition tuples behind a family by recursion over the allowed
/// parts of each component, with no use of the series engine:
///   p:  one unrestricted partition
///   a:  (unrestricted, even parts)
///   b:  (unrestricted, unrestricted, even parts, even parts)
///   a3: (parts not divisible by 3, even parts not divisible by 3)
///   a9: (parts not divisible by 9, even parts not divisible by 18)
/// Throws BudgetExceeded when n > cap.
Integer oracle_count(PartitionFamily family, Exponent n, Exponent cap = kDefaultOracleCap);

/// "family(stride*n + offset) == 0 (mod base^exponent)" for all n >= 0.
struct CongruenceClaim {
  std::string id;
  PartitionFamily family = PartitionFamily::a3;
  Exponent stride = 1;
  Exponent offset = 0;
  unsigned long modulus_base = 3;
  unsigned modulus_exponent = 1;

  Integer modulus() const { return ipow(modulus_base, modulus_exponent); }
  /// Throws std::invalid_argument unless 0 <= offset < stride and base is
  /// prime-sized (>= 2). A zero exponent (modulus 1) is allowed and vacuous.
  void validate() const;
};

struct ClaimReport {
  CongruenceClaim claim;
  Exponent n_max = 0;
  bool pass = true;
  std::vector<Exponent> failures;
  /// Smallest modulus_base-adic valuation over the checked coefficients.
  Valuation min_valuation;
  double elapsed_ms = 0;
};

/// Checks the claim for 0 <= n <= n_max against an already expanded series of
/// the claim's family. Throws BeyondValidity when the series is too short.
ClaimReport verify_claim(const CongruenceClaim& claim, Exponent n_max, const Series& series);

/// Expands the family through stride*n_max + offset and checks the claim.
/// Throws BeyondValidity when that index exceeds n_budget.
ClaimReport verify_claim(const CongruenceClaim& claim, Exponent n_max, Exponent n_budget,
                         EtaCache* cache = nullptr);

/// The congruence families for a3 at depths 0..alpha_t1 and for a9 at depths
/// 0..alpha_t2:
///   a3(3^{2a} n + (3^{2a}-1)/4)           == 0 mod 3^a
///   a3(3^{2a+1} n + (3^{2a+2}-1)/4)       == 0 mod 3^{a+1}
///   a3(3^{2a+2} n + (7*3^{2a+1}-1)/4)     == 0 mod 3^{a+2}
///   a3(3^{2a+2} n + (11*3^{2a+1}-1)/4)    == 0 mod 3^{a+2}
///   a9(3^{a+1} n + 3^{a+1} - 1)           == 0 mod 3^{a+1}
/// Offsets are computed exactly; an inexact division throws NonIntegralOffset.
std::vector<CongruenceClaim> theorem_claims(Exponent alpha_t1, Exponent alpha_t2);

/// One line of a suite: either a congruence claim or a named identity check.
struct ItemReport {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
  std::optional<ClaimReport> claim;
};

/// Suite line for a claim report, with a readable description and summary.
ItemReport claim_item(ClaimReport report);

struct SuiteReport {
  std::string suite;
  std::vector<ItemReport> items;

  bool pass() const noexcept;
};

struct TheoremOptions {
  Exponent alpha_t1 = 2;
  Exponent alpha_t2 = 3;
  /// When unset each claim uses the largest n with stride*n + offset <= n_budget.
  std::optional<Exponent> n_max;
  Exponent n_budget = 200000;
};

/// Runs every theorem_claims() instance. The a3 and a9 series are expanded
/// once and shared; items come back in claim order regardless of scheduling.
SuiteReport theorem_suite(const TheoremOptions& options);

struct IdentityOptions {
  /// Order of the two progression identities and of f1^3 == f3 (mod 3).
  Exponent order = 500;
  /// Order of the zeta/T relations and of the small huffing values.
  Exponent zeta_order = 60;
  /// Order and depth of the odd-progression congruence modulo 3^{a+2}.
  Exponent congruence_order = 200;
  Exponent congruence_alpha_max = 2;
  /// Order of the exact partition-function regression identities.
  Exponent regression_order = 300;
  Exponent cubic_n_max = 1000;
  Exponent pair_n_max = 200;
};

SuiteReport identity_suite(const IdentityOptions& options);

struct MatrixOptions {
  /// Rows generated and checked against the valuation bound 3j - i - 1.
  std::size_t rows = 40;
  /// H(zeta^{-i}) expansions for i <= huff_rows through q^huff_order.
  std::size_t huff_rows = 12;
  Exponent huff_order = 60;
  /// Eta-quotient forms for A, B, C rows i <= rearranged_rows.
  std::size_t rearranged_rows = 3;
  Exponent rearranged_order = 50;
};

/// Zero patterns, valuation bounds on M, A, B, C and the huffing expansions.
SuiteReport matrix_suite(const MatrixOptions& options);

struct VectorOptions {
  /// check_valuations on x_alpha and Y_alpha for alpha <= alpha_max.
  Exponent alpha_max = 7;
  /// reconstruct() against the progression extractions for alpha <= this.
  Exponent reconstruct_alpha_max = 4;
  Exponent reconstruct_order = 100;
};

/// Vector chains: valuation bounds (tight entries listed in the detail) and
/// agreement of the reconstructed series with the encoded progressions.
SuiteReport vector_suite(const VectorOptions& options);

/// add/mul commutativity and associativity, distributivity and
/// mul(a, invert(a)) == 1 on random truncated series with coefficients up to
/// ~2^80, compared through the smaller validity bound of the two sides.
ItemReport ring_law_check(std::uint64_t seed, int trials = 40, Exponent order = 50);

/// Series coefficients against oracle_count for every family at 0..n_max.
ItemReport oracle_equivalence(Exponent n_max = 40, Exponent cap = kDefaultOracleCap);

}  // namespace qseries
