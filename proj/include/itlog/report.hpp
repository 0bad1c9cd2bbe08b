#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itlog/element.hpp"

namespace itlog {

/// Outcome of one identity check. A failing report carries the first
/// offending index (power of y, derivative order, ...) and the nonzero
/// difference found there.
struct Report {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  bool pass = true;
  std::optional<unsigned> failing_index;
  Element difference;
  /// Floating-point measurements, filled by numeric crosschecks only.
  std::vector<std::pair<std::string, double>> measurements;
};

/// One-line human summary, e.g. "PASS log_recursion n=0 N=2".
std::string summarize(const Report& report);

}  // namespace itlog
