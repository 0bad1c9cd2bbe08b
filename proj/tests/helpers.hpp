#pragma once

#include <algorithm>
#include <vector>

#include "itlog/element.hpp"
#include "itlog/random.hpp"
#include "itlog/rform.hpp"

namespace itlog::testing {

inline Scalar q(long num, long den = 1) { return Scalar(num, den); }

inline Element L(Level i, const Scalar& r = Scalar(1)) { return Element::level(i, r); }

inline Element c(long num, long den = 1) { return Element::constant(Scalar(num, den)); }

/// Sorted strictly by exponent vector, no zero coefficients, no zero exponents.
inline bool is_canonical(const Element& e) {
  const auto& t = e.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].coefficient.is_zero()) return false;
    for (const auto& entry : t[i].exponents.entries())
      if (entry.second.is_zero()) return false;
    if (i > 0 && !(t[i - 1].exponents < t[i].exponents)) return false;
  }
  return true;
}

inline int max_degree(const RForm& f) {
  int d = 0;
  for (const auto& t : f.terms()) {
    d = std::max(d, t.coefficient.degree());
    for (const auto& e : t.exponents.entries()) d = std::max(d, e.second.degree());
  }
  return d;
}

/// A different formal polynomial form of the same function: summands are
/// split, shuffled, and padded with a cancelling pair.
inline RForm rearranged(const RForm& f, Rng& rng) {
  const RPoly r = RPoly::variable();
  std::vector<RMonomial> terms;
  for (const auto& t : f.terms()) {
    const RPoly part = RPoly(std::vector<Scalar>{Scalar(2), Scalar(-1)});
    terms.push_back({t.coefficient - part, t.exponents});
    terms.push_back({part, t.exponents});
  }
  const RExponents extra({{2, r * r}});
  terms.push_back({r, extra});
  terms.push_back({-r, extra});
  std::shuffle(terms.begin(), terms.end(), rng);
  return RForm(std::move(terms));
}

}  // namespace itlog::testing
