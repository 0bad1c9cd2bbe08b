#pragma once

// Exact arithmetic in the algebra spanned by monomials
//   prod_i l_i(x)^{r_i},   finitely many r_i != 0,
// with rational coefficients and exponents, together with its derivation d/dx.
//
// l_n is the formal n-th iterated logarithm for n > 0, the (-n)-th iterated
// exponential for n < 0, and x itself for n = 0.

#include <compare>
#include <utility>
#include <vector>

#include "itlog/scalar.hpp"

namespace itlog {

using Level = int;

/// Sparse exponent tuple (level -> exponent). Entries are sorted by level and
/// never hold a zero exponent.
class ExponentVector {
 public:
  using Entry = std::pair<Level, Scalar>;

  ExponentVector() = default;
  /// Sorts, merges repeated levels and drops zero exponents.
  explicit ExponentVector(std::vector<Entry> entries);
  static ExponentVector single(Level level, Scalar exponent);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Scalar exponent(Level level) const;

  /// Adds `delta` to the exponent at `level`.
  ExponentVector shifted(Level level, const Scalar& delta) const;

  ExponentVector operator-() const;
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  // Lexicographic over (level, exponent) pairs in increasing level order.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

struct Monomial {
  Scalar coefficient;
  ExponentVector exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical finite linear combination of monomials: sorted by exponent
/// vector, no duplicates, no zero coefficients. Structural equality is
/// algebraic equality. The empty list is zero.
class Element {
 public:
  Element() = default;

  static Element one() { return constant(Scalar(1)); }
  static Element constant(const Scalar& c);
  static Element level(Level i, const Scalar& exponent = Scalar(1));
  static Element monomial(const Scalar& c, ExponentVector exponents);
  /// Canonicalizes an arbitrary term list.
  static Element from_terms(std::vector<Monomial> terms);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the empty-support monomial.
  Scalar constant_term() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator*=(const Scalar& c);
  Element& operator/=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator/(Element a, const Scalar& c) { return a /= c; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Monomial> terms_;
};

/// Collects terms keyed by exponent vector, summing coefficients.
class TermAccumulator {
 public:
  void add(const ExponentVector& exponents, const Scalar& coefficient);
  void add(const Element& e, const Scalar& factor = Scalar(1));
  Element finish() &&;

 private:
  std::vector<Monomial> pending_;
};

/// Reciprocal of a single nonzero monomial. Throws NotAUnit otherwise.
Element invert_unit(const Element& m);

/// Exponents of d/dx l_j(x): l_0^{-1}...l_{j-1}^{-1} for j > 0,
/// l_j...l_{-1} for j < 0, empty for j = 0.
ExponentVector derivative_factor(Level j);

/// d/dx l_i(x)^r.
Element derive_power(Level i, const Scalar& r);

/// d/dx, extended linearly and by the product rule over each monomial's
/// support.
Element derive(const Element& e);

/// (d/dx)^m e; m = 0 is the identity.
Element derive_n(const Element& e, unsigned m);

}  // namespace itlog
