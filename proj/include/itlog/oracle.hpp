#pragma once

// Floating-point realization of the formal algebra: l_n becomes the genuine
// n-fold iterated natural log (n > 0) or (-n)-fold iterated exponential
// (n < 0). Used only as an independent numeric witness for the exact
// symbolic machinery.

#include "itlog/element.hpp"
#include "itlog/report.hpp"
#include "itlog/series.hpp"

namespace itlog {

struct SamplePoint {
  Level level_min = 0;
  Level level_max = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double tolerance = 1e-12;  // relative, with an absolute floor of 1
};

/// The sample point used for level n: x0 = 20 for n >= 0, 3 for n = -1,
/// 1 for n <= -2.
SamplePoint default_sample_point(Level n, double y0, double tolerance);

/// Throws NumericDomainError if a log argument is not positive or an
/// exponential overflows.
double eval_level(Level n, double x0);

/// Throws NumericDomainError on invalid levels, non-integer powers of
/// non-positive bases, or non-finite results.
double eval_element(const Element& e, double x0);

/// sum_k c_k(x0) y0^k.
double eval_series(const YSeries& s, double x0, double y0);

/// |a - b| <= tolerance * max(1, |reference|).
bool within_relative(double a, double b, double reference, double tolerance);

/// Compares translate(l_n, N) evaluated at (x0, y0) against l_n(x0 + y0).
Report crosscheck_translate(Level n, unsigned order, const SamplePoint& p);

/// Evaluates both sides of the log and exp recursion identities, as
/// truncated series, at the sample point and compares them with each other
/// and with the direct values at x0 + y0.
Report crosscheck_recursion(Level n, unsigned order, const SamplePoint& p);

/// Central difference of e at x0 with step h against eval_element(derive(e)).
Report crosscheck_derivative(const Element& e, double x0, double h, double tolerance);

}  // namespace itlog
