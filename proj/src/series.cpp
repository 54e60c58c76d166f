#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

using detail::sat_add;

// Nonzero coefficient of an operand, tagged so that the very common +1/-1
// coefficients of eta products become plain additions.
struct Term {
  std::size_t index;
  const Integer* value;
  int unit;  // +1, -1, or 0 for a general coefficient
};

std::vector<Term> nonzero_terms(std::span<const Integer> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Integer& c = coeffs[i];
    const int sign = sgn(c);
    if (sign == 0) continue;
    int unit = 0;
    if (mpz_cmpabs_ui(c.get_mpz_t(), 1) == 0) unit = sign;
    terms.push_back({i, &c, unit});
  }
  return terms;
}

// target += term * value
inline void accumulate(Integer& target, const Term& term, const Integer& value) {
  switch (term.unit) {
    case 1:
      mpz_add(target.get_mpz_t(), target.get_mpz_t(), value.get_mpz_t());
      break;
    case -1:
      mpz_sub(target.get_mpz_t(), target.get_mpz_t(), value.get_mpz_t());
      break;
    default:
      mpz_addmul(target.get_mpz_t(), term.value->get_mpz_t(), value.get_mpz_t());
  }
}

// target -= term * value
inline void deduct(Integer& target, const Term& term, const Integer& value) {
  switch (term.unit) {
    case 1:
      mpz_sub(target.get_mpz_t(), target.get_mpz_t(), value.get_mpz_t());
      break;
    case -1:
      mpz_add(target.get_mpz_t(), target.get_mpz_t(), value.get_mpz_t());
      break;
    default:
      mpz_submul(target.get_mpz_t(), term.value->get_mpz_t(), value.get_mpz_t());
  }
}

}  // namespace

Series Series::zero_through(Exponent valid_to) {
  Series s;
  s.valid_to_ = std::min(valid_to, kUnbounded);
  return s;
}

Series Series::constant(Integer value, Exponent valid_to) {
  return monomial(std::move(value), 0, valid_to);
}

Series Series::monomial(Integer value, Exponent exponent, Exponent valid_to) {
  std::vector<Integer> c;
  c.push_back(std::move(value));
  return from_coefficients(exponent, std::move(c), valid_to);
}

Series Series::from_coefficients(Exponent lead, std::vector<Integer> coeffs,
                                 Exponent valid_to) {
  Series s;
  s.lead_ = lead;
  s.coeffs_ = std::move(coeffs);
  s.valid_to_ = std::min(valid_to, kUnbounded);
  s.canonicalize();
  return s;
}

void Series::canonicalize() {
  if (!is_exact()) {
    if (valid_to_ < lead_) {
      coeffs_.clear();
    } else {
      const auto keep = static_cast<std::size_t>(valid_to_ - lead_ + 1);
      if (coeffs_.size() > keep) coeffs_.resize(keep);
    }
  }
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t skip = 0;
  while (skip < coeffs_.size() && sgn(coeffs_[skip]) == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<Exponent>(skip);
  }
  if (coeffs_.empty()) lead_ = 0;
}

Exponent Series::lead() const noexcept {
  return is_zero() ? sat_add(valid_to_, 1) : lead_;
}

Exponent Series::last_stored() const noexcept {
  return is_zero() ? valid_to_ : lead_ + static_cast<Exponent>(coeffs_.size()) - 1;
}

Exponent Series::relative_precision() const noexcept {
  if (is_exact()) return kUnbounded;
  return valid_to_ - lead();
}

const Integer& Series::lead_coefficient() const {
  if (is_zero()) throw std::logic_error("lead_coefficient of a zero series");
  return coeffs_.front();
}

std::size_t Series::nonzero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

Integer Series::coefficient(Exponent n) const {
  if (n > valid_to_) {
    throw BeyondValidity("coefficient of q^" + std::to_string(n) +
                         " requested but the series is only valid through q^" +
                         std::to_string(valid_to_));
  }
  if (is_zero() || n < lead_ || n > last_stored()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(n - lead_)];
}

Series Series::truncated(Exponent n) const {
  if (n >= valid_to_) return *this;
  Series s = *this;
  s.valid_to_ = n;
  s.canonicalize();
  return s;
}

Series add(const Series& a, const Series& b) {
  const Exponent valid = std::min(a.valid_to(), b.valid_to());
  if (a.is_zero()) return b.truncated(valid);
  if (b.is_zero()) return a.truncated(valid);
  const Exponent lo = std::min(a.lead(), b.lead());
  const Exponent hi = std::min(valid, std::max(a.last_stored(), b.last_stored()));
  if (hi < lo) return Series::zero_through(valid);
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
  auto put = [&](const Series& s) {
    auto coeffs = s.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const Exponent e = s.lead() + static_cast<Exponent>(i);
      if (e > hi) break;
      c[static_cast<std::size_t>(e - lo)] += coeffs[i];
    }
  };
  put(a);
  put(b);
  return Series::from_coefficients(lo, std::move(c), valid);
}

Series negate(const Series& a) {
  std::vector<Integer> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return Series::from_coefficients(a.lead(), std::move(c), a.valid_to());
}

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series scale(const Series& a, const Integer& factor) {
  if (sgn(factor) == 0) return Series::zero_through(a.valid_to());
  std::vector<Integer> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= factor;
  return Series::from_coefficients(a.lead(), std::move(c), a.valid_to());
}

Series mul(const Series& a, const Series& b) {
  const Exponent valid =
      std::min(sat_add(a.valid_to(), b.lead()), sat_add(b.valid_to(), a.lead()));
  if (a.is_zero() || b.is_zero()) return Series::zero_through(valid);

  const Exponent lead = a.lead() + b.lead();
  const Exponent top = std::min(valid, a.last_stored() + b.last_stored());
  if (top < lead) return Series::zero_through(valid);
  const auto length = static_cast<std::size_t>(top - lead + 1);

  const bool a_sparser = a.nonzero_count() <= b.nonzero_count();
  const Series& sparse = a_sparser ? a : b;
  const Series& dense = a_sparser ? b : a;
  const auto dense_coeffs = dense.coefficients();

  std::vector<Integer> c(length);
  for (const Term& t : nonzero_terms(sparse.coefficients())) {
    if (t.index >= length) break;
    const std::size_t limit = std::min(dense_coeffs.size(), length - t.index);
    for (std::size_t j = 0; j < limit; ++j) {
      if (sgn(dense_coeffs[j]) == 0) continue;
      accumulate(c[t.index + j], t, dense_coeffs[j]);
    }
  }
  return Series::from_coefficients(lead, std::move(c), valid);
}

Series divide(const Series& a, const Series& b, std::optional<Exponent> valid_to) {
  if (b.is_zero() || mpz_cmpabs_ui(b.lead_coefficient().get_mpz_t(), 1) != 0) {
    throw NonUnitLead("divisor's lowest coefficient must be +1 or -1");
  }
  const Exponent cap = valid_to.value_or(kUnbounded);
  const int sign = sgn(b.lead_coefficient());
  if (a.is_zero()) {
    return Series::zero_through(std::min(detail::sat_sub(a.valid_to(), b.lead()), cap));
  }

  const Exponent lead = a.lead() - b.lead();
  if (b.coefficients().size() == 1) {
    // Monomial divisor: the quotient is a signed shift and loses no precision
    // beyond that of b.
    Series q = shift(sign > 0 ? a : negate(a), -b.lead());
    const Exponent valid = std::min(
        q.valid_to(), sat_add(lead, b.relative_precision()));
    return q.truncated(std::min(valid, cap));
  }

  const Exponent precision = std::min(a.relative_precision(), b.relative_precision());
  Exponent valid = sat_add(lead, precision);
  valid = std::min(valid, cap);
  if (valid >= kUnbounded) {
    throw std::invalid_argument(
        "quotient of exact series is infinite; a validity bound is required");
  }
  if (valid < lead) return Series::zero_through(valid);

  const auto length = static_cast<std::size_t>(valid - lead + 1);
  const auto num = a.coefficients();
  std::vector<Term> den = nonzero_terms(b.coefficients());
  den.erase(den.begin());  // the unit lead is applied separately

  std::vector<Integer> q(length);
  for (std::size_t n = 0; n < length; ++n) {
    Integer acc = n < num.size() ? num[n] : Integer(0);
    for (const Term& t : den) {
      if (t.index > n) break;
      if (sgn(q[n - t.index]) == 0) continue;
      deduct(acc, t, q[n - t.index]);
    }
    if (sign < 0) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
    q[n] = std::move(acc);
  }
  return Series::from_coefficients(lead, std::move(q), valid);
}

Series invert(const Series& a, std::optional<Exponent> valid_to) {
  return divide(Series::constant(1), a, valid_to);
}

Series pow(const Series& a, Exponent k, std::optional<Exponent> valid_to) {
  if (k < 0) return invert(pow(a, -k), valid_to);
  Series result = Series::constant(1);
  Series base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return valid_to ? result.truncated(*valid_to) : result;
}

Series shift(const Series& a, Exponent s) {
  if (a.is_zero()) return Series::zero_through(sat_add(a.valid_to(), s));
  std::vector<Integer> c(a.coefficients().begin(), a.coefficients().end());
  return Series::from_coefficients(a.lead() + s, std::move(c), sat_add(a.valid_to(), s));
}

Series dilate(const Series& a, Exponent k) {
  if (k < 1) throw std::invalid_argument("dilate requires a positive factor");
  const Exponent valid =
      a.is_exact() ? kUnbounded : a.valid_to() * k + (k - 1);
  if (a.is_zero()) return Series::zero_through(valid);
  const auto src = a.coefficients();
  std::vector<Integer> c((src.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < src.size(); ++i) c[i * static_cast<std::size_t>(k)] = src[i];
  return Series::from_coefficients(a.lead() * k, std::move(c), valid);
}

Integer coefficient(const Series& a, Exponent n) { return a.coefficient(n); }

bool equal_up_to(const Series& a, const Series& b, Exponent n) {
  if (n > a.valid_to() || n > b.valid_to()) {
    throw BeyondValidity("comparison through q^" + std::to_string(n) +
                         " exceeds validity (" + std::to_string(a.valid_to()) + ", " +
                         std::to_string(b.valid_to()) + ")");
  }
  const Exponent lo = std::min(a.lead(), b.lead());
  for (Exponent e = lo; e <= n; ++e) {
    if (a.coefficient(e) != b.coefficient(e)) return false;
  }
  return true;
}

std::string to_string(const Series& a, std::size_t max_terms) {
  std::ostringstream out;
  std::size_t shown = 0;
  const auto coeffs = a.coefficients();
  for (std::size_t i = 0; i < coeffs.size() && shown < max_terms; ++i) {
    const Integer& c = coeffs[i];
    if (sgn(c) == 0) continue;
    const Exponent e = a.lead() + static_cast<Exponent>(i);
    Integer mag = abs(c);
    if (shown == 0) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool unit = mag == 1;
    if (e == 0) {
      out << mag.get_str();
    } else {
      if (!unit) out << mag.get_str() << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    ++shown;
  }
  if (shown < a.nonzero_count()) out << (shown == 0 ? "" : " + ") << "...";
  if (shown == 0 && a.nonzero_count() == 0) out << "0";
  if (!a.is_exact()) out << " + O(q^" << (a.valid_to() + 1) << ")";
  return out.str();
}

}  // namespace qseries
