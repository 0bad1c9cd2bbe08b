#include "itlog/text.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "itlog/errors.hpp"

namespace itlog {

namespace {

struct SignedTerm {
  bool negative;
  std::string body;
};

std::string join_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += "-";
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

std::string level_atom(Level i) { return "l(" + std::to_string(i) + ")"; }

// A monomial with optional y power; |coefficient| is printed only when it is
// not 1 or nothing else would be printed.
SignedTerm format_monomial(const Monomial& m, unsigned y_power) {
  std::vector<std::string> factors;
  const Scalar magnitude = m.coefficient.sign() < 0 ? -m.coefficient : m.coefficient;
  const bool bare = y_power == 0 && m.exponents.empty();
  if (!magnitude.is_one() || bare) factors.push_back(magnitude.to_string());
  if (y_power == 1) factors.push_back("y");
  if (y_power > 1) factors.push_back("y^" + std::to_string(y_power));
  for (const auto& [level, r] : m.exponents.entries()) {
    factors.push_back(r.is_one() ? level_atom(level) : level_atom(level) + "^" + r.to_string());
  }
  return {m.coefficient.sign() < 0, join_factors(factors)};
}

std::vector<SignedTerm> rpoly_terms(const RPoly& p) {
  std::vector<SignedTerm> terms;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const Scalar magnitude = c[k].sign() < 0 ? -c[k] : c[k];
    std::vector<std::string> factors;
    if (!magnitude.is_one() || k == 0) factors.push_back(magnitude.to_string());
    if (k == 1) factors.push_back("r");
    if (k > 1) factors.push_back("r^" + std::to_string(k));
    terms.push_back({c[k].sign() < 0, join_factors(factors)});
  }
  return terms;
}

std::string format_exponent(const RPoly& p) {
  if (p.is_constant()) return p.constant_term().to_string();
  const auto terms = rpoly_terms(p);
  if (terms.size() == 1 && !terms[0].negative && terms[0].body == "r") return "r";
  return "(" + join_terms(terms) + ")";
}

SignedTerm format_rmonomial(const RMonomial& m) {
  std::vector<std::string> factors;
  bool negative = false;
  const auto q_terms = rpoly_terms(m.coefficient);
  if (q_terms.size() == 1) {
    negative = q_terms[0].negative;
    if (q_terms[0].body != "1" || m.exponents.empty()) factors.push_back(q_terms[0].body);
  } else {
    factors.push_back("(" + join_terms(q_terms) + ")");
  }
  for (const auto& [level, p] : m.exponents.entries()) {
    if (p.is_constant() && p.constant_term().is_one()) {
      factors.push_back(level_atom(level));
    } else {
      factors.push_back(level_atom(level) + "^" + format_exponent(p));
    }
  }
  return {negative, join_factors(factors)};
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_r) : text_(text), allow_r_(allow_r) {}

  RForm parse_all() {
    RForm result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ < text_.size()) return text_[pos_];
    return std::nullopt;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar rational() {
    const mpz_class num(digits(), 10);
    if (!accept('/')) return Scalar::from_parts(num, 1);
    skip_space();
    const std::size_t den_at = pos_;
    const mpz_class den(digits(), 10);
    if (den == 0) fail_at("zero denominator", den_at);
    return Scalar::from_parts(num, den);
  }

  unsigned small_power() {
    skip_space();
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 4) fail_at("power too large", at);
    return static_cast<unsigned>(std::stoul(d));
  }

  RPoly r_power() {
    if (!allow_r_) fail("'r' is only allowed in formal polynomial forms");
    ++pos_;
    unsigned k = 1;
    if (accept('^')) k = small_power();
    std::vector<Scalar> coeffs(k + 1, Scalar(0));
    coeffs[k] = Scalar(1);
    return RPoly(std::move(coeffs));
  }

  RForm expr() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    RForm result = term();
    if (negative) result = RForm() - result;
    for (;;) {
      if (accept('+')) {
        result = result + term();
      } else if (accept('-')) {
        result = result - term();
      } else {
        return result;
      }
    }
  }

  RForm term() {
    RForm result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  RForm factor() {
    const auto c = peek();
    if (!c) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      return RForm::from_element(Element::constant(rational()));
    }
    if (*c == 'r') return RForm({RMonomial{r_power(), RExponents()}});
    if (*c == 'l') {
      ++pos_;
      expect('(');
      const bool negative = accept('-');
      skip_space();
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 9) fail_at("level index too large", at);
      const Level level = (negative ? -1 : 1) * static_cast<Level>(std::stol(d));
      expect(')');
      RPoly exponent(Scalar(1));
      if (accept('^')) exponent = exponent_value();
      return RForm({RMonomial{RPoly(Scalar(1)), RExponents({{level, exponent}})}});
    }
    if (*c == '(') {
      ++pos_;
      RForm inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  RPoly exponent_value() {
    const bool negative = accept('-');
    const auto c = peek();
    if (!c) fail("expected an exponent");
    RPoly value;
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      value = RPoly(rational());
    } else if (*c == 'r') {
      value = r_power();
    } else if (*c == '(') {
      const std::size_t at = pos_;
      ++pos_;
      const RForm inner = expr();
      expect(')');
      for (const auto& t : inner.terms()) {
        if (!t.exponents.empty()) fail_at("exponent must not contain l(...) factors", at);
        value += t.coefficient;
      }
    } else {
      fail("expected an exponent");
    }
    return negative ? -value : value;
  }

  std::string_view text_;
  bool allow_r_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_element(const Element& e) {
  std::vector<SignedTerm> terms;
  for (const auto& m : e.terms()) terms.push_back(format_monomial(m, 0));
  return join_terms(terms);
}

std::string format_series(const YSeries& s) {
  std::vector<SignedTerm> terms;
  for (unsigned k = 0; k <= s.order(); ++k)
    for (const auto& m : s.coefficient(k).terms()) terms.push_back(format_monomial(m, k));
  return join_terms(terms);
}

std::string format_rpoly(const RPoly& p) { return join_terms(rpoly_terms(p)); }

std::string format_rform(const RForm& f) {
  std::vector<SignedTerm> terms;
  for (const auto& m : f.terms()) terms.push_back(format_rmonomial(m));
  return join_terms(terms);
}

Element parse_element(std::string_view text) {
  const RForm form = Parser(text, false).parse_all();
  TermAccumulator acc;
  for (const auto& t : form.terms())
    acc.add(t.exponents.evaluate(Scalar(0)), t.coefficient.constant_term());
  return std::move(acc).finish();
}

RForm parse_rform(std::string_view text) { return Parser(text, true).parse_all(); }

}  // namespace itlog
