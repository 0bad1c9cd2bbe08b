#include "itlog/random.hpp"

#include <vector>

namespace itlog {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar random_exponent(Rng& rng, const ElementShape& shape) {
  const long whole = uniform(rng, -shape.exponent_range, shape.exponent_range);
  if (shape.fractional_exponents && uniform(rng, 0, 3) == 0) {
    const long den = uniform(rng, 2, 3);
    return Scalar(whole * den + uniform(rng, 1, static_cast<int>(den) - 1), den);
  }
  return Scalar(whole);
}

Scalar random_coefficient(Rng& rng, int range, bool nonzero) {
  long num = 0;
  do {
    num = uniform(rng, -range, range);
  } while (nonzero && num == 0);
  return Scalar(num, uniform(rng, 1, 3));
}

RPoly random_rpoly(Rng& rng, const RFormShape& shape) {
  std::vector<Scalar> coeffs(uniform(rng, 1, shape.max_degree + 1));
  for (auto& c : coeffs) c = Scalar(uniform(rng, -shape.coefficient_range, shape.coefficient_range));
  return RPoly(std::move(coeffs));
}

}  // namespace

Element random_element(Rng& rng, const ElementShape& shape) {
  std::vector<Monomial> terms;
  const int count = uniform(rng, 1, shape.max_terms);
  for (int t = 0; t < count; ++t) {
    std::vector<ExponentVector::Entry> entries;
    const int support = uniform(rng, 0, shape.max_support);
    for (int s = 0; s < support; ++s)
      entries.emplace_back(uniform(rng, shape.level_min, shape.level_max),
                           random_exponent(rng, shape));
    terms.push_back({random_coefficient(rng, shape.coefficient_range, true),
                     ExponentVector(std::move(entries))});
  }
  return Element::from_terms(std::move(terms));
}

RForm random_rform(Rng& rng, const RFormShape& shape) {
  std::vector<RMonomial> terms;
  const int count = uniform(rng, 1, shape.max_terms);
  for (int t = 0; t < count; ++t) {
    RPoly q = random_rpoly(rng, shape);
    if (q.is_zero()) q = RPoly(Scalar(1));
    // Reuse an earlier exponent tuple now and then so that grouping occurs.
    if (!terms.empty() && uniform(rng, 0, 2) == 0) {
      RExponents repeated = terms[uniform(rng, 0, static_cast<int>(terms.size()) - 1)].exponents;
      terms.push_back({std::move(q), std::move(repeated)});
      continue;
    }
    std::vector<RExponents::Entry> entries;
    const int support = uniform(rng, 0, shape.max_support);
    for (int s = 0; s < support; ++s)
      entries.emplace_back(uniform(rng, shape.level_min, shape.level_max), random_rpoly(rng, shape));
    terms.push_back({std::move(q), RExponents(std::move(entries))});
  }
  return RForm(std::move(terms));
}

YSeries random_admissible_series(Rng& rng, unsigned order, const ElementShape& shape) {
  std::vector<Element> coeffs(order + 1);
  for (unsigned k = 1; k <= order; ++k)
    if (uniform(rng, 0, 3) != 0) coeffs[k] = random_element(rng, shape);
  return YSeries::from_coefficients(std::move(coeffs));
}

}  // namespace itlog
