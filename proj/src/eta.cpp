#include "qseries/eta.hpp"

#include <stdexcept>
#include <vector>

namespace qseries {

EtaQuotientSpec EtaQuotientSpec::eta(Exponent scale, Exponent exponent) {
  if (scale < 1) throw std::invalid_argument("eta scale must be positive");
  EtaQuotientSpec s;
  if (exponent != 0) s.factors[scale] = exponent;
  return s;
}

EtaQuotientSpec EtaQuotientSpec::q_power(Exponent shift) {
  EtaQuotientSpec s;
  s.qshift = shift;
  return s;
}

EtaQuotientSpec EtaQuotientSpec::integer(Integer value) {
  EtaQuotientSpec s;
  s.constant = std::move(value);
  return s;
}

EtaQuotientSpec& EtaQuotientSpec::operator*=(const EtaQuotientSpec& other) {
  constant *= other.constant;
  qshift += other.qshift;
  for (const auto& [k, e] : other.factors) factors[k] += e;
  normalize();
  return *this;
}

EtaQuotientSpec EtaQuotientSpec::power(Exponent k) const {
  EtaQuotientSpec r;
  if (k < 0 && abs(constant) != 1) {
    throw std::domain_error("negative power of a non-unit constant");
  }
  const Exponent magnitude = k < 0 ? -k : k;
  mpz_pow_ui(r.constant.get_mpz_t(), constant.get_mpz_t(),
             static_cast<unsigned long>(magnitude));
  r.qshift = qshift * k;
  for (const auto& [scale, e] : factors) r.factors[scale] = e * k;
  r.normalize();
  return r;
}

void EtaQuotientSpec::normalize() {
  std::erase_if(factors, [](const auto& kv) { return kv.second == 0; });
}

EtaQuotientSpec operator/(const EtaQuotientSpec& a, const EtaQuotientSpec& b) {
  if (sgn(b.constant) == 0 || !mpz_divisible_p(a.constant.get_mpz_t(), b.constant.get_mpz_t())) {
    throw std::domain_error("quotient constant is not an integer");
  }
  EtaQuotientSpec r = a;
  mpz_divexact(r.constant.get_mpz_t(), a.constant.get_mpz_t(), b.constant.get_mpz_t());
  r.qshift -= b.qshift;
  for (const auto& [k, e] : b.factors) r.factors[k] -= e;
  r.normalize();
  return r;
}

namespace {

constexpr PartitionFamilyInfo kFamilies[] = {
    {PartitionFamily::p, "p"},   {PartitionFamily::a, "a"},   {PartitionFamily::b, "b"},
    {PartitionFamily::a3, "a3"}, {PartitionFamily::a9, "a9"},
};

}  // namespace

std::string_view family_name(PartitionFamily family) {
  for (const auto& info : kFamilies) {
    if (info.family == family) return info.name;
  }
  throw std::invalid_argument("unknown partition family");
}

PartitionFamily parse_family(std::string_view name) {
  for (const auto& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  throw std::invalid_argument("unknown partition family '" + std::string(name) + "'");
}

EtaQuotientSpec family_spec(PartitionFamily family) {
  using S = EtaQuotientSpec;
  switch (family) {
    case PartitionFamily::p:
      return S::eta(1, -1);
    case PartitionFamily::a:
      return S::eta(1, -1) * S::eta(2, -1);
    case PartitionFamily::b:
      return S::eta(1, -2) * S::eta(2, -2);
    case PartitionFamily::a3:
      return S::eta(3) * S::eta(6) * S::eta(1, -1) * S::eta(2, -1);
    case PartitionFamily::a9:
      return S::eta(9) * S::eta(18) * S::eta(1, -1) * S::eta(2, -1);
  }
  throw std::invalid_argument("unknown partition family");
}

Series expand_eta(Exponent k, Exponent N) {
  if (k < 1) throw std::invalid_argument("eta scale must be positive");
  if (N < 0) throw std::invalid_argument("expansion order must be non-negative");
  // f_1 = sum_{m in Z} (-1)^m q^{m(3m-1)/2}
  const Exponent base_order = N / k;
  std::vector<Integer> c(static_cast<std::size_t>(base_order + 1));
  for (Exponent m = 0;; ++m) {
    const Exponent e1 = m * (3 * m - 1) / 2;
    if (e1 > base_order) break;
    const int sign = (m % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(e1)] = sign;
    if (m > 0) {
      const Exponent e2 = m * (3 * m + 1) / 2;
      if (e2 <= base_order) c[static_cast<std::size_t>(e2)] = sign;
    }
  }
  Series f1 = Series::from_coefficients(0, std::move(c), base_order);
  return dilate(f1, k).truncated(N);
}

std::shared_ptr<const Series> EtaCache::get(Exponent k, Exponent N) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find({k, N}); it != table_.end()) return it->second;
  }
  auto fresh = std::make_shared<const Series>(expand_eta(k, N));
  std::lock_guard lock(mutex_);
  // First writer wins; later writers discard their identical copy.
  auto [it, inserted] = table_.emplace(std::pair{k, N}, std::move(fresh));
  return it->second;
}

Series expand_spec(const EtaQuotientSpec& spec, Exponent N, EtaCache* cache) {
  if (N < spec.qshift) {
    throw std::invalid_argument("expansion order " + std::to_string(N) +
                                " is below the q-shift " + std::to_string(spec.qshift));
  }
  const Exponent order = N - spec.qshift;
  EtaCache local;
  EtaCache& table = cache ? *cache : local;

  Series acc = sgn(spec.constant) == 0 ? Series::zero_through(order)
                                       : Series::constant(spec.constant, order);
  // Multiply first and divide afterwards: the sparse factor drives both loops
  // and intermediate coefficients stay small.
  for (const auto& [k, e] : spec.factors) {
    if (e <= 0) continue;
    auto fk = table.get(k, order);
    for (Exponent i = 0; i < e; ++i) acc = mul(acc, *fk);
  }
  for (const auto& [k, e] : spec.factors) {
    if (e >= 0) continue;
    auto fk = table.get(k, order);
    for (Exponent i = 0; i < -e; ++i) acc = divide(acc, *fk);
  }
  return shift(acc, spec.qshift);
}

}  // namespace qseries
