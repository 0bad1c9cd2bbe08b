#include "itlog/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "itlog/errors.hpp"

namespace itlog {

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericDomainError(std::string(what) + " is not finite");
  return v;
}

double power(double base, const Scalar& exponent) {
  if (exponent.is_integer()) {
    if (base == 0.0 && exponent.sign() < 0)
      throw NumericDomainError("zero raised to a negative power");
    return std::pow(base, exponent.to_double());
  }
  if (base <= 0.0)
    throw NumericDomainError("non-integer power of non-positive base " + std::to_string(base));
  return std::pow(base, exponent.to_double());
}

}  // namespace

SamplePoint default_sample_point(Level n, double y0, double tolerance) {
  SamplePoint p;
  p.level_min = std::min(n, 0);
  p.level_max = std::max(n + 1, 0);
  p.x0 = n >= 0 ? 20.0 : (n == -1 ? 3.0 : 1.0);
  p.y0 = y0;
  p.tolerance = tolerance;
  return p;
}

double eval_level(Level n, double x0) {
  double v = x0;
  if (n > 0) {
    for (Level k = 0; k < n; ++k) {
      if (!(v > 0.0))
        throw NumericDomainError("l_" + std::to_string(n) + " undefined at " + std::to_string(x0));
      v = std::log(v);
    }
  } else {
    for (Level k = 0; k < -n; ++k) {
      v = std::exp(v);
      if (!std::isfinite(v))
        throw NumericDomainError("l_" + std::to_string(n) + " overflows at " + std::to_string(x0));
    }
  }
  return checked(v, "level value");
}

double eval_element(const Element& e, double x0) {
  double sum = 0.0;
  for (const auto& t : e.terms()) {
    double product = t.coefficient.to_double();
    for (const auto& [level, r] : t.exponents.entries()) product *= power(eval_level(level, x0), r);
    sum += product;
  }
  return checked(sum, "element value");
}

double eval_series(const YSeries& s, double x0, double y0) {
  double sum = 0.0;
  double y_power = 1.0;
  for (const auto& c : s.coefficients()) {
    if (!c.is_zero()) sum += eval_element(c, x0) * y_power;
    y_power *= y0;
  }
  return checked(sum, "series value");
}

bool within_relative(double a, double b, double reference, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max(1.0, std::abs(reference));
}

Report crosscheck_translate(Level n, unsigned order, const SamplePoint& p) {
  Report report;
  report.identity = "crosscheck_translate";
  report.parameters = {{"n", n}, {"N", order}};
  const double series = eval_series(translate(Element::level(n), order), p.x0, p.y0);
  const double direct = eval_level(n, p.x0 + p.y0);
  const double error = std::abs(series - direct) / std::max(1.0, std::abs(direct));
  report.measurements = {{"x0", p.x0},         {"y0", p.y0},         {"series", series},
                         {"direct", direct},   {"rel_error", error}, {"tolerance", p.tolerance}};
  report.pass = within_relative(series, direct, direct, p.tolerance);
  return report;
}

Report crosscheck_recursion(Level n, unsigned order, const SamplePoint& p) {
  Report report;
  report.identity = "crosscheck_recursion";
  report.parameters = {{"n", n}, {"N", order}};

  const Element upper = Element::level(n + 1);
  const Element lower = Element::level(n);
  const YSeries upper_shift = translate(upper, order);
  const YSeries lower_shift = translate(lower, order);
  const YSeries ratio =
      (lower_shift - YSeries::constant(lower, order)).scaled(invert_unit(lower));
  const YSeries log_rhs = YSeries::constant(upper, order) + series_log1p(ratio);
  const YSeries exp_rhs =
      series_exp(upper_shift - YSeries::constant(upper, order)).scaled(lower);

  const double log_lhs_v = eval_series(upper_shift, p.x0, p.y0);
  const double log_rhs_v = eval_series(log_rhs, p.x0, p.y0);
  const double exp_lhs_v = eval_series(lower_shift, p.x0, p.y0);
  const double exp_rhs_v = eval_series(exp_rhs, p.x0, p.y0);
  const double upper_direct = eval_level(n + 1, p.x0 + p.y0);
  const double lower_direct = eval_level(n, p.x0 + p.y0);

  report.measurements = {{"x0", p.x0},           {"y0", p.y0},
                         {"log_lhs", log_lhs_v}, {"log_rhs", log_rhs_v},
                         {"exp_lhs", exp_lhs_v}, {"exp_rhs", exp_rhs_v},
                         {"upper_direct", upper_direct}, {"lower_direct", lower_direct}};
  report.pass = within_relative(log_lhs_v, log_rhs_v, upper_direct, p.tolerance) &&
                within_relative(log_rhs_v, upper_direct, upper_direct, p.tolerance) &&
                within_relative(exp_lhs_v, exp_rhs_v, lower_direct, p.tolerance) &&
                within_relative(exp_rhs_v, lower_direct, lower_direct, p.tolerance);
  return report;
}

Report crosscheck_derivative(const Element& e, double x0, double h, double tolerance) {
  Report report;
  report.identity = "crosscheck_derivative";
  const double numeric = (eval_element(e, x0 + h) - eval_element(e, x0 - h)) / (2.0 * h);
  const double exact = eval_element(derive(e), x0);
  report.measurements = {{"x0", x0}, {"h", h}, {"central_difference", numeric}, {"derive", exact}};
  report.pass = within_relative(numeric, exact, exact, tolerance);
  return report;
}

}  // namespace itlog
