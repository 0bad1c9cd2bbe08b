#include "itlog/series.hpp"

#include <string>

#include "itlog/errors.hpp"

namespace itlog {

namespace {

void require_same_order(const YSeries& a, const YSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

void require_no_constant_term(const YSeries& x, const char* what) {
  if (!x.coefficient(0).is_zero())
    throw NotWellDefined(std::string(what) + " needs a series with zero constant term");
}

Report compare_series(std::string identity, Level n, unsigned order, const YSeries& lhs,
                      const YSeries& rhs) {
  Report report;
  report.identity = std::move(identity);
  report.parameters = {{"n", n}, {"N", order}};
  const YSeries diff = lhs - rhs;
  if (auto k = diff.first_nonzero()) {
    report.pass = false;
    report.failing_index = *k;
    report.difference = diff.coefficient(*k);
  }
  return report;
}

}  // namespace

YSeries YSeries::constant(const Element& c, unsigned order) {
  YSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

YSeries YSeries::from_coefficients(std::vector<Element> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series needs at least one coefficient");
  YSeries s;
  s.coeffs_ = std::move(coeffs);
  return s;
}

bool YSeries::is_zero() const { return !first_nonzero().has_value(); }

std::optional<unsigned> YSeries::first_nonzero() const {
  for (unsigned k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  return std::nullopt;
}

YSeries YSeries::operator-() const {
  YSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

YSeries& YSeries::operator+=(const YSeries& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

YSeries& YSeries::operator-=(const YSeries& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

YSeries operator*(const YSeries& a, const YSeries& b) {
  require_same_order(a, b);
  YSeries out(a.order());
  for (unsigned k = 0; k <= a.order(); ++k) {
    TermAccumulator acc;
    for (unsigned i = 0; i <= k; ++i) {
      const Element& ai = a.coeffs_[i];
      const Element& bj = b.coeffs_[k - i];
      if (ai.is_zero() || bj.is_zero()) continue;
      acc.add(ai * bj);
    }
    out.coeffs_[k] = std::move(acc).finish();
  }
  return out;
}

YSeries YSeries::scaled(const Element& factor) const {
  YSeries s = *this;
  for (auto& c : s.coeffs_) c = c * factor;
  return s;
}

YSeries YSeries::scaled(const Scalar& factor) const {
  YSeries s = *this;
  for (auto& c : s.coeffs_) c *= factor;
  return s;
}

YSeries translate(const Element& e, unsigned order) {
  std::vector<Element> coeffs;
  coeffs.reserve(order + 1);
  Element term = e;
  coeffs.push_back(term);
  // term_k = (d/dx)^k e / k!, built incrementally.
  for (unsigned k = 1; k <= order; ++k) {
    term = derive(term) / Scalar(static_cast<long>(k));
    coeffs.push_back(term);
  }
  return YSeries::from_coefficients(std::move(coeffs));
}

YSeries series_log1p(const YSeries& x) {
  require_no_constant_term(x, "log(1+X)");
  YSeries sum(x.order());
  YSeries power = x;
  for (unsigned i = 1; i <= x.order(); ++i) {
    if (i > 1) power = power * x;
    const long sign = (i % 2 == 1) ? 1 : -1;
    sum += power.scaled(Scalar(sign, static_cast<long>(i)));
  }
  return sum;
}

YSeries series_exp(const YSeries& x) {
  require_no_constant_term(x, "e^X");
  YSeries sum = YSeries::constant(Element::one(), x.order());
  YSeries term = YSeries::constant(Element::one(), x.order());
  // term_i = X^i / i!
  for (unsigned i = 1; i <= x.order(); ++i) {
    term = (term * x).scaled(Scalar(1, static_cast<long>(i)));
    sum += term;
  }
  return sum;
}

Report verify_log_recursion(Level n, unsigned order) {
  const Element upper = Element::level(n + 1);
  const Element lower = Element::level(n);
  const YSeries lhs = translate(upper, order);
  const YSeries ratio =
      (translate(lower, order) - YSeries::constant(lower, order)).scaled(invert_unit(lower));
  const YSeries rhs = YSeries::constant(upper, order) + series_log1p(ratio);
  return compare_series("log_recursion", n, order, lhs, rhs);
}

Report verify_exp_recursion(Level n, unsigned order) {
  const Element upper = Element::level(n + 1);
  const Element lower = Element::level(n);
  const YSeries lhs = translate(lower, order);
  const YSeries increment = translate(upper, order) - YSeries::constant(upper, order);
  const YSeries rhs = series_exp(increment).scaled(lower);
  return compare_series("exp_recursion", n, order, lhs, rhs);
}

}  // namespace itlog
