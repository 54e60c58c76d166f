#include "qseries/parser.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

constexpr Exponent kMaxExponent = std::numeric_limits<std::int32_t>::max();
// Powers of a non-unit constant above this are rejected before GMP tries to
// materialize them.
constexpr Exponent kMaxConstantPower = 1 << 16;

const std::vector<std::string> kTermStart = {"integer", "'q'", "'f'", "'('"};

std::string describe(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "end of input";
  return "'" + std::string(1, text[pos]) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  EtaQuotientSpec parse_all() {
    EtaQuotientSpec value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'*'", "'/'", "end of input"});
    return value;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::ostringstream msg;
    msg << "syntax error at position " << pos_ << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      msg << (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") << expected[i];
    }
    msg << " but found " << describe(text_, pos_);
    throw SyntaxError(pos_, std::move(expected), msg.str());
  }

  [[noreturn]] void fail_semantic(std::size_t at, const std::string& what) {
    throw SyntaxError(at, {}, "invalid expression at position " + std::to_string(at) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Exponent bounded(std::vector<std::string> expected) {
    if (!at_digit()) fail(std::move(expected));
    const std::size_t start = pos_;
    const std::string_view d = digits();
    Exponent value = 0;
    for (char c : d) {
      value = value * 10 + (c - '0');
      if (value > kMaxExponent) {
        throw OverflowError("integer literal at position " + std::to_string(start) +
                            " exceeds " + std::to_string(kMaxExponent));
      }
    }
    return value;
  }

  static Exponent checked(Exponent v, std::size_t at) {
    if (v > kMaxExponent || v < -kMaxExponent) {
      throw OverflowError("exponent arithmetic overflows near position " + std::to_string(at));
    }
    return v;
  }

  // pow := '^' '-'? integer ; returns 1 when absent.
  Exponent power() {
    if (peek() != '^') return 1;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const Exponent v = bounded(negative ? std::vector<std::string>{"integer"}
                                        : std::vector<std::string>{"'-'", "integer"});
    return negative ? -v : v;
  }

  EtaQuotientSpec raise(const EtaQuotientSpec& base, Exponent k, std::size_t at) {
    if (k == 1) return base;
    if (abs(base.constant) > 1 && (k < 0 ? -k : k) > kMaxConstantPower) {
      throw OverflowError("constant power too large near position " + std::to_string(at));
    }
    for (const auto& [scale, e] : base.factors) checked(e * k, at);
    checked(base.qshift * k, at);
    try {
      return base.power(k);
    } catch (const std::domain_error& e) {
      fail_semantic(at, e.what());
    }
  }

  EtaQuotientSpec term() {
    const char c = peek();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return EtaQuotientSpec::integer(Integer(std::string(digits())));
    }
    if (c == 'q') {
      ++pos_;
      return EtaQuotientSpec::q_power(power());
    }
    if (c == 'f') {
      ++pos_;
      const std::size_t scale_at = (skip_ws(), pos_);
      const Exponent scale = bounded({"integer"});
      if (scale < 1) {
        pos_ = scale_at;
        fail({"positive integer"});
      }
      return EtaQuotientSpec::eta(scale, power());
    }
    if (c == '(') {
      ++pos_;
      EtaQuotientSpec inner = expr();
      if (peek() != ')') fail({"'*'", "'/'", "')'"});
      ++pos_;
      return raise(inner, power(), start);
    }
    fail(kTermStart);
  }

  EtaQuotientSpec expr() {
    EtaQuotientSpec acc = term();
    for (;;) {
      const char op = peek();
      if (op != '*' && op != '/') return acc;
      ++pos_;
      const std::size_t at = (skip_ws(), pos_);
      EtaQuotientSpec rhs = term();
      if (op == '*') {
        acc *= rhs;
      } else {
        try {
          acc = acc / rhs;
        } catch (const std::domain_error& e) {
          fail_semantic(at, e.what());
        }
      }
      for (const auto& [scale, e] : acc.factors) checked(e, at);
      checked(acc.qshift, at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string factor_text(Exponent scale, Exponent e) {
  std::string s = "f" + std::to_string(scale);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

EtaQuotientSpec parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const EtaQuotientSpec& spec) {
  if (sgn(spec.constant) < 0) {
    throw std::domain_error("negative constants have no textual form");
  }
  std::vector<std::string> num;
  std::vector<std::string> den;
  if (spec.constant != 1) num.push_back(spec.constant.get_str());
  if (spec.qshift > 0) num.push_back(spec.qshift == 1 ? "q" : "q^" + std::to_string(spec.qshift));
  if (spec.qshift < 0) den.push_back(spec.qshift == -1 ? "q" : "q^" + std::to_string(-spec.qshift));
  for (const auto& [scale, e] : spec.factors) {
    (e > 0 ? num : den).push_back(factor_text(scale, e > 0 ? e : -e));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
    return s;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (den.size() == 1) out += "/" + den.front();
  if (den.size() > 1) out += "/(" + join(den) + ")";
  return out;
}

}  // namespace qseries
