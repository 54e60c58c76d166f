#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>

#include "qseries/integer.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// constant * q^qshift * prod_k f_k^{e_k}, with f_k = prod_{m>=1} (1 - q^{km}).
///
/// Held in normal form: no zero exponents, scales are the (ordered, hence
/// distinct) map keys. Two specs are equal iff all three parts are equal.
struct EtaQuotientSpec {
  Integer constant{1};
  Exponent qshift = 0;
  std::map<Exponent, Exponent> factors;

  static EtaQuotientSpec eta(Exponent scale, Exponent exponent = 1);
  static EtaQuotientSpec q_power(Exponent s);
  static EtaQuotientSpec integer(Integer value);

  EtaQuotientSpec& operator*=(const EtaQuotientSpec& other);
  /// Raise to an integer power. Negative powers require constant = +-1.
  EtaQuotientSpec power(Exponent k) const;
  /// Drop zero exponents.
  void normalize();

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;
};

inline EtaQuotientSpec operator*(EtaQuotientSpec a, const EtaQuotientSpec& b) {
  a *= b;
  return a;
}

/// Multiply by the inverse of b. Throws std::domain_error when the constant
/// quotient is not an integer.
EtaQuotientSpec operator/(const EtaQuotientSpec& a, const EtaQuotientSpec& b);

/// The named partition functions whose generating functions are eta
/// quotients.
enum class PartitionFamily { p, a, b, a3, a9 };

struct PartitionFamilyInfo {
  PartitionFamily family;
  std::string_view name;
};

std::string_view family_name(PartitionFamily family);
PartitionFamily parse_family(std::string_view name);
/// p: 1/f1; a: 1/(f1 f2); b: 1/(f1^2 f2^2); a3: f3 f6/(f1 f2); a9: f9 f18/(f1 f2).
EtaQuotientSpec family_spec(PartitionFamily family);

/// f_k through q^N, from Euler's pentagonal-number series followed by dilation.
Series expand_eta(Exponent k, Exponent N);

/// Write-once table of f_k expansions, safe to share between threads.
class EtaCache {
 public:
  std::shared_ptr<const Series> get(Exponent k, Exponent N);

 private:
  std::mutex mutex_;
  std::map<std::pair<Exponent, Exponent>, std::shared_ptr<const Series>> table_;
};

/// Expand a spec into a series valid through q^N (requires N >= qshift).
Series expand_spec(const EtaQuotientSpec& spec, Exponent N, EtaCache* cache = nullptr);

}  // namespace qseries
