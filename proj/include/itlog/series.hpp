#pragma once

// Truncated power series in y with Element coefficients, the formal
// translation e^{y d/dx}, and the formal log(1+X) / e^X compositions.

#include <vector>

#include "itlog/element.hpp"
#include "itlog/report.hpp"

namespace itlog {

/// c_0 + c_1 y + ... + c_N y^N, exact modulo y^{N+1}.
class YSeries {
 public:
  explicit YSeries(unsigned order = 0) : coeffs_(order + 1) {}
  static YSeries constant(const Element& c, unsigned order);
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  static YSeries from_coefficients(std::vector<Element> coeffs);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Element& coefficient(unsigned k) const { return coeffs_.at(k); }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  /// Index of the lowest nonzero coefficient, if any.
  std::optional<unsigned> first_nonzero() const;

  YSeries operator-() const;
  // Binary operations throw OrderMismatch unless both orders agree.
  YSeries& operator+=(const YSeries& o);
  YSeries& operator-=(const YSeries& o);
  friend YSeries operator+(YSeries a, const YSeries& b) { return a += b; }
  friend YSeries operator-(YSeries a, const YSeries& b) { return a -= b; }
  friend YSeries operator*(const YSeries& a, const YSeries& b);

  YSeries scaled(const Element& factor) const;
  YSeries scaled(const Scalar& factor) const;

  friend bool operator==(const YSeries&, const YSeries&) = default;

 private:
  std::vector<Element> coeffs_;
};

/// e^{y d/dx} e truncated at order N: coefficient k is (d/dx)^k e / k!.
YSeries translate(const Element& e, unsigned order);

/// sum_{i>=1} (-1)^{i-1} X^i / i. Throws NotWellDefined if X has a nonzero
/// constant term.
YSeries series_log1p(const YSeries& x);

/// sum_{i>=0} X^i / i!. Throws NotWellDefined if X has a nonzero constant
/// term.
YSeries series_exp(const YSeries& x);

/// l_{n+1}(x+y) == l_{n+1}(x) + log(1 + (l_n(x+y) - l_n(x)) / l_n(x)).
Report verify_log_recursion(Level n, unsigned order);

/// l_n(x+y) == l_n(x) * e^{l_{n+1}(x+y) - l_{n+1}(x)}.
Report verify_exp_recursion(Level n, unsigned order);

}  // namespace itlog
