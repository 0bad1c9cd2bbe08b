#include "itlog/rform.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "itlog/errors.hpp"
#include "itlog/series.hpp"

namespace itlog {

RPoly::RPoly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

RPoly::RPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RPoly RPoly::variable() { return RPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar RPoly::evaluate(const Scalar& r) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

RPoly RPoly::operator-() const {
  RPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

RPoly& RPoly::operator+=(const RPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& o) { return *this += -o; }

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.is_zero() || b.is_zero()) return RPoly();
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RPoly(std::move(out));
}

RExponents::RExponents(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      if (!entries_.empty() && entries_.back().second.is_zero()) entries_.pop_back();
      entries_.push_back(std::move(e));
    }
  }
  if (!entries_.empty() && entries_.back().second.is_zero()) entries_.pop_back();
}

RExponents RExponents::from_constant(const ExponentVector& v) {
  std::vector<Entry> entries;
  entries.reserve(v.entries().size());
  for (const auto& [level, r] : v.entries()) entries.emplace_back(level, RPoly(r));
  return RExponents(std::move(entries));
}

ExponentVector RExponents::evaluate(const Scalar& r) const {
  std::vector<ExponentVector::Entry> out;
  out.reserve(entries_.size());
  for (const auto& [level, p] : entries_) out.emplace_back(level, p.evaluate(r));
  return ExponentVector(std::move(out));
}

RExponents operator+(const RExponents& a, const RExponents& b) {
  std::vector<RExponents::Entry> all = a.entries_;
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return RExponents(std::move(all));
}

RForm::RForm(std::vector<RMonomial> terms) {
  terms_.reserve(terms.size());
  for (auto& t : terms)
    if (!t.coefficient.is_zero()) terms_.push_back(std::move(t));
}

RForm RForm::from_element(const Element& e) {
  std::vector<RMonomial> terms;
  terms.reserve(e.size());
  for (const auto& t : e.terms())
    terms.push_back({RPoly(t.coefficient), RExponents::from_constant(t.exponents)});
  return RForm(std::move(terms));
}

bool RForm::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const RMonomial& t) {
    if (!t.coefficient.is_constant()) return false;
    return std::all_of(t.exponents.entries().begin(), t.exponents.entries().end(),
                       [](const auto& e) { return e.second.is_constant(); });
  });
}

RForm operator+(const RForm& a, const RForm& b) {
  std::vector<RMonomial> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return RForm(std::move(terms));
}

RForm operator-(const RForm& a, const RForm& b) {
  std::vector<RMonomial> terms = a.terms_;
  for (const auto& t : b.terms_) terms.push_back({-t.coefficient, t.exponents});
  return RForm(std::move(terms));
}

RForm operator*(const RForm& a, const RForm& b) {
  std::vector<RMonomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      terms.push_back({s.coefficient * t.coefficient, s.exponents + t.exponents});
  return RForm(std::move(terms));
}

Element rform_eval(const RForm& f, long r) {
  if (r < 1) throw OutOfDomain("r must be a positive integer, got " + std::to_string(r));
  const Scalar at(r);
  TermAccumulator acc;
  for (const auto& t : f.terms()) acc.add(t.exponents.evaluate(at), t.coefficient.evaluate(at));
  return std::move(acc).finish();
}

RForm rform_derive(const RForm& f) {
  std::vector<RMonomial> terms;
  for (const auto& t : f.terms()) {
    for (const auto& [level, p] : t.exponents.entries()) {
      // q * l_j^p  ->  q*p * l_j^{p-1} * d/dx l_j
      RExponents shifted = t.exponents + RExponents::from_constant(
                                             ExponentVector::single(level, Scalar(-1)) +
                                             derivative_factor(level));
      terms.push_back({t.coefficient * p, std::move(shifted)});
    }
  }
  return rform_reduce(RForm(std::move(terms)));
}

RForm rform_reduce(const RForm& f) {
  std::map<RExponents, RPoly> groups;
  for (const auto& t : f.terms()) groups[t.exponents] += t.coefficient;
  std::vector<RMonomial> terms;
  terms.reserve(groups.size());
  for (auto& [exponents, q] : groups)
    if (!q.is_zero()) terms.push_back({std::move(q), exponents});
  RForm out(std::move(terms));
  out.reduced_ = true;
  return out;
}

Element rform_limit(const RForm& f) {
  const RForm reduced = f.is_reduced() ? f : rform_reduce(f);
  const Scalar zero(0);
  TermAccumulator acc;
  for (const auto& t : reduced.terms())
    acc.add(t.exponents.evaluate(zero), t.coefficient.evaluate(zero));
  return std::move(acc).finish();
}

RForm derive_power_over_r(Level n, unsigned m) {
  if (m == 0)
    throw NotAPolynomialForm("l_n^r / r is not a formal polynomial form; need m >= 1");
  const RForm power_minus_one({RMonomial{
      RPoly(Scalar(1)),
      RExponents({{n, RPoly::variable() - RPoly(Scalar(1))}}),
  }});
  RForm form = rform_reduce(power_minus_one * RForm::from_element(derive(Element::level(n))));
  for (unsigned k = 1; k < m; ++k) form = rform_derive(form);
  return form;
}

Report verify_lim_derive_commute(const RForm& f) {
  Report report;
  report.identity = "lim_derive_commute";
  report.parameters = {{"summands", static_cast<std::int64_t>(f.terms().size())}};
  const Element diff = rform_limit(rform_derive(f)) - derive(rform_limit(f));
  if (!diff.is_zero()) {
    report.pass = false;
    report.failing_index = 0;
    report.difference = diff;
  }
  return report;
}

Report verify_itloglim(Level n, unsigned m) {
  Report report;
  report.identity = "itloglim";
  report.parameters = {{"n", n}, {"m", m}};
  const Element diff = rform_limit(derive_power_over_r(n, m)) - derive_n(Element::level(n + 1), m);
  if (!diff.is_zero()) {
    report.pass = false;
    report.failing_index = m;
    report.difference = diff;
  }
  return report;
}

Report verify_translated_limit(Level n, unsigned order) {
  Report report;
  report.identity = "translated_limit";
  report.parameters = {{"n", n}, {"N", order}};
  const YSeries target = translate(Element::level(n + 1), order);
  if (order == 0) return report;
  RForm form = derive_power_over_r(n, 1);
  for (unsigned k = 1; k <= order; ++k) {
    if (k > 1) form = rform_derive(form);
    const Element diff = rform_limit(form) / factorial(k) - target.coefficient(k);
    if (!diff.is_zero()) {
      report.pass = false;
      report.failing_index = k;
      report.difference = diff;
      break;
    }
  }
  return report;
}

}  // namespace itlog
