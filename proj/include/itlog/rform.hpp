#pragma once

// Formal polynomial forms in a positive-integer parameter r:
//
//   f(r) = sum_j q_j(r) * prod_i l_i(x)^{p_{i,j}(r)}
//
// with q_j, p_{i,j} polynomials in r. Only these forms are representable;
// arbitrary functions of r are not.

#include <compare>
#include <utility>
#include <vector>

#include "itlog/element.hpp"
#include "itlog/report.hpp"

namespace itlog {

/// Dense univariate polynomial in r with rational coefficients; no trailing
/// zeros, so the zero polynomial has no coefficients.
class RPoly {
 public:
  RPoly() = default;
  RPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  /// coeffs[k] multiplies r^k. Trailing zeros are trimmed.
  explicit RPoly(std::vector<Scalar> coeffs);
  /// The polynomial r.
  static RPoly variable();

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar constant_term() const { return coeffs_.empty() ? Scalar(0) : coeffs_.front(); }
  Scalar evaluate(const Scalar& r) const;

  RPoly operator-() const;
  RPoly& operator+=(const RPoly& o);
  RPoly& operator-=(const RPoly& o);
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b);

  friend bool operator==(const RPoly&, const RPoly&) = default;
  friend std::strong_ordering operator<=>(const RPoly& a, const RPoly& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Exponent polynomials per level; sorted by level, no zero polynomial stored.
class RExponents {
 public:
  using Entry = std::pair<Level, RPoly>;

  RExponents() = default;
  explicit RExponents(std::vector<Entry> entries);
  static RExponents from_constant(const ExponentVector& v);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  ExponentVector evaluate(const Scalar& r) const;
  friend RExponents operator+(const RExponents& a, const RExponents& b);

  friend bool operator==(const RExponents&, const RExponents&) = default;
  friend std::strong_ordering operator<=>(const RExponents& a, const RExponents& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

struct RMonomial {
  RPoly coefficient;
  RExponents exponents;

  friend bool operator==(const RMonomial&, const RMonomial&) = default;
};

/// A formal polynomial form. Summands are kept in the order produced; a
/// reduced form has pairwise distinct exponent tuples, sorted.
class RForm {
 public:
  RForm() = default;
  /// Drops summands with zero coefficient polynomial.
  explicit RForm(std::vector<RMonomial> terms);
  static RForm from_element(const Element& e);

  const std::vector<RMonomial>& terms() const { return terms_; }
  bool is_reduced() const { return reduced_; }
  /// True when no r appears anywhere.
  bool is_constant() const;

  /// Summands concatenate; no grouping.
  friend RForm operator+(const RForm& a, const RForm& b);
  friend RForm operator-(const RForm& a, const RForm& b);
  /// Pairwise products of summands; no grouping.
  friend RForm operator*(const RForm& a, const RForm& b);

  friend bool operator==(const RForm& a, const RForm& b) { return a.terms_ == b.terms_; }

 private:
  friend RForm rform_reduce(const RForm& f);
  std::vector<RMonomial> terms_;
  bool reduced_ = false;
};

/// Substitutes a positive integer r. Throws OutOfDomain for r < 1.
Element rform_eval(const RForm& f, long r);

/// The lifted derivation: rform_eval(rform_derive(f), r) ==
/// derive(rform_eval(f, r)) for every r >= 1. Output is reduced.
RForm rform_derive(const RForm& f);

/// Groups summands with identical exponent-polynomial tuples and sums their
/// coefficient polynomials. The result is the unique reduced form.
RForm rform_reduce(const RForm& f);

/// lim_{r->0}: reduce, then substitute r = 0.
Element rform_limit(const RForm& f);

/// (d/dx)^m (l_n^r / r) for m >= 1, seeded by l_n^{r-1} * d/dx l_n. The
/// undifferentiated quotient is not a polynomial form, so m = 0 throws
/// NotAPolynomialForm.
RForm derive_power_over_r(Level n, unsigned m);

/// lim (d/dx) f == (d/dx) lim f.
Report verify_lim_derive_commute(const RForm& f);

/// lim_{r->0} (d/dx)^m (l_n^r / r) == (d/dx)^m l_{n+1}.
Report verify_itloglim(Level n, unsigned m);

/// For 1 <= k <= N, the limit above divided by k! equals the y^k coefficient
/// of translate(l_{n+1}, N).
Report verify_translated_limit(Level n, unsigned order);

}  // namespace itlog
