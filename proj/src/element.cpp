#include "itlog/element.hpp"

#include <algorithm>

#include "itlog/errors.hpp"

namespace itlog {

namespace {

bool by_exponents(const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; }

// Sorts and merges in place; drops zero coefficients.
std::vector<Monomial> canonicalize(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), by_exponents);
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return out;
}

}  // namespace

ExponentVector derivative_factor(Level j) {
  std::vector<ExponentVector::Entry> entries;
  if (j > 0) {
    for (Level k = 0; k < j; ++k) entries.emplace_back(k, Scalar(-1));
  } else if (j < 0) {
    for (Level k = j; k <= -1; ++k) entries.emplace_back(k, Scalar(1));
  }
  return ExponentVector(std::move(entries));
}

ExponentVector::ExponentVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
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

ExponentVector ExponentVector::single(Level level, Scalar exponent) {
  ExponentVector v;
  if (!exponent.is_zero()) v.entries_.emplace_back(level, std::move(exponent));
  return v;
}

Scalar ExponentVector::exponent(Level level) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), level,
                             [](const Entry& e, Level l) { return e.first < l; });
  if (it != entries_.end() && it->first == level) return it->second;
  return Scalar(0);
}

ExponentVector ExponentVector::shifted(Level level, const Scalar& delta) const {
  return *this + single(level, delta);
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector v = *this;
  for (auto& e : v.entries_) e.second = -e.second;
  return v;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      Scalar sum = i->second + j->second;
      if (!sum.is_zero()) out.entries_.emplace_back(i->first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

Element Element::constant(const Scalar& c) { return monomial(c, ExponentVector()); }

Element Element::level(Level i, const Scalar& exponent) {
  return monomial(Scalar(1), ExponentVector::single(i, exponent));
}

Element Element::monomial(const Scalar& c, ExponentVector exponents) {
  Element e;
  if (!c.is_zero()) e.terms_.push_back({c, std::move(exponents)});
  return e;
}

Element Element::from_terms(std::vector<Monomial> terms) {
  Element e;
  e.terms_ = canonicalize(std::move(terms));
  return e;
}

Scalar Element::constant_term() const {
  if (!terms_.empty() && terms_.front().exponents.empty()) return terms_.front().coefficient;
  return Scalar(0);
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& t : e.terms_) t.coefficient = -t.coefficient;
  return e;
}

Element& Element::operator+=(const Element& o) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->exponents < j->exponents)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exponents < i->exponents) {
      merged.push_back(*j++);
    } else {
      Scalar sum = i->coefficient + j->coefficient;
      if (!sum.is_zero()) merged.push_back({std::move(sum), std::move(i->exponents)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element operator*(const Element& a, const Element& b) {
  std::vector<Monomial> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      products.push_back({s.coefficient * t.coefficient, s.exponents + t.exponents});
  return Element::from_terms(std::move(products));
}

Element& Element::operator*=(const Element& o) { return *this = *this * o; }

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Element& Element::operator/=(const Scalar& c) {
  if (c.is_zero()) throw std::domain_error("division by zero");
  for (auto& t : terms_) t.coefficient /= c;
  return *this;
}

void TermAccumulator::add(const ExponentVector& exponents, const Scalar& coefficient) {
  if (!coefficient.is_zero()) pending_.push_back({coefficient, exponents});
}

void TermAccumulator::add(const Element& e, const Scalar& factor) {
  for (const auto& t : e.terms()) add(t.exponents, t.coefficient * factor);
}

Element TermAccumulator::finish() && { return Element::from_terms(std::move(pending_)); }

Element invert_unit(const Element& m) {
  if (!m.is_monomial()) throw NotAUnit("element is not a single nonzero monomial");
  const auto& t = m.terms().front();
  return Element::monomial(Scalar(1) / t.coefficient, -t.exponents);
}

Element derive_power(Level i, const Scalar& r) {
  if (r.is_zero()) return Element();
  return Element::monomial(r, ExponentVector::single(i, r - Scalar(1)) + derivative_factor(i));
}

Element derive(const Element& e) {
  TermAccumulator acc;
  for (const auto& t : e.terms()) {
    for (const auto& [level, r] : t.exponents.entries()) {
      acc.add(t.exponents + ExponentVector::single(level, Scalar(-1)) + derivative_factor(level),
              t.coefficient * r);
    }
  }
  return std::move(acc).finish();
}

Element derive_n(const Element& e, unsigned m) {
  Element out = e;
  for (unsigned k = 0; k < m && !out.is_zero(); ++k) out = derive(out);
  return out;
}

}  // namespace itlog
