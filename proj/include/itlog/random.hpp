#pragma once

// Seeded generators of small random values for property checks.

#include <random>

#include "itlog/element.hpp"
#include "itlog/rform.hpp"
#include "itlog/series.hpp"

namespace itlog {

using Rng = std::mt19937_64;

struct ElementShape {
  int max_terms = 3;
  Level level_min = -2;
  Level level_max = 2;
  int max_support = 2;
  int exponent_range = 3;      // integer part of exponents in [-range, range]
  bool fractional_exponents = true;
  int coefficient_range = 9;   // numerators in [-range, range]
};

Element random_element(Rng& rng, const ElementShape& shape = {});

struct RFormShape {
  int max_terms = 4;
  Level level_min = -3;
  Level level_max = 3;
  int max_support = 2;
  int max_degree = 3;
  int coefficient_range = 9;
};

RForm random_rform(Rng& rng, const RFormShape& shape = {});

/// Series of the given order with zero constant term.
YSeries random_admissible_series(Rng& rng, unsigned order, const ElementShape& shape = {});

}  // namespace itlog
