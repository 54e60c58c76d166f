#pragma once

// Test-only reference computations. Nothing here touches the series engine:
// everything is plain loops over coefficient vectors or explicit enumeration.

#include <functional>
#include <vector>

#include "qseries/integer.hpp"
#include "qseries/series.hpp"

namespace qseries::testing {

/// prod_{m=1}^{N/k} (1 - q^{km}) truncated at q^N, by direct multiplication.
inline std::vector<Integer> truncated_eta_product(long k, long N) {
  std::vector<Integer> c(static_cast<std::size_t>(N + 1));
  c[0] = 1;
  for (long m = 1; k * m <= N; ++m) {
    const long step = k * m;
    for (long e = N; e >= step; --e) c[static_cast<std::size_t>(e)] -= c[static_cast<std::size_t>(e - step)];
  }
  return c;
}

/// Number of partitions of 0..N into parts allowed by the predicate (coin change).
inline std::vector<Integer> restricted_partition_counts(long N, const std::function<bool(long)>& allowed) {
  std::vector<Integer> c(static_cast<std::size_t>(N + 1));
  c[0] = 1;
  for (long part = 1; part <= N; ++part) {
    if (!allowed(part)) continue;
    for (long e = part; e <= N; ++e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - part)];
  }
  return c;
}

/// Every partition of n (as a non-increasing list) with parts allowed and <= largest.
inline void enumerate_partitions(long n, long largest, const std::function<bool(long)>& allowed,
                                 std::vector<long>& prefix,
                                 const std::function<void(const std::vector<long>&)>& visit) {
  if (n == 0) {
    visit(prefix);
    return;
  }
  for (long part = std::min(n, largest); part >= 1; --part) {
    if (!allowed(part)) continue;
    prefix.push_back(part);
    enumerate_partitions(n - part, part, allowed, prefix, visit);
    prefix.pop_back();
  }
}

inline long count_by_enumeration(long n, const std::function<bool(long)>& allowed) {
  long count = 0;
  std::vector<long> prefix;
  enumerate_partitions(n, n, allowed, prefix, [&](const std::vector<long>&) { ++count; });
  return count;
}

/// Explicit enumeration of pairs (lambda, mu) with |lambda| + |mu| = n.
inline long count_pairs(long n, const std::function<bool(long)>& first,
                        const std::function<bool(long)>& second) {
  long total = 0;
  for (long t = 0; t <= n; ++t) total += count_by_enumeration(t, first) * count_by_enumeration(n - t, second);
  return total;
}

/// Partitions of n where each part carries one of `colors` colors: multisets
/// of (part, color) pairs, enumerated with pairs in non-increasing order.
inline long colored_partitions(long n, long colors) {
  std::function<long(long, long)> go = [&](long rest, long max_code) -> long {
    // A (part, color) pair is coded as part * colors + color.
    if (rest == 0) return 1;
    long total = 0;
    for (long code = max_code; code >= colors; --code) {
      const long part = code / colors;
      if (part > rest) continue;
      total += go(rest - part, code);
    }
    return total;
  };
  return go(n, n * colors + colors - 1);
}

inline Series make_series(long lead, std::vector<long> coeffs, long valid_to = kUnbounded) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return Series::from_coefficients(lead, std::move(c), valid_to);
}

inline Series series_of(const std::vector<Integer>& coeffs, long valid_to) {
  return Series::from_coefficients(0, coeffs, valid_to);
}

}  // namespace qseries::testing
