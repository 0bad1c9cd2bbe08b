#pragma once

// JSON payloads. A monomial is
//   {"coefficient": {"num": "<int>", "den": "<posint>"},
//    "exponents": [[level, num, den], ...]}
// with coefficient parts as decimal strings (unbounded) and exponent triples
// as integers, or decimal strings when they exceed 64 bits. An element is an
// array of monomials; a series is {"order": N, "coefficients": [element...]}.

#include <json.hpp>

#include "itlog/element.hpp"
#include "itlog/report.hpp"
#include "itlog/rform.hpp"
#include "itlog/series.hpp"

namespace itlog {

nlohmann::json to_json(const Element& e);
nlohmann::json to_json(const YSeries& s);
nlohmann::json to_json(const RForm& f);
nlohmann::json to_json(const Report& r);

/// Throw std::invalid_argument on malformed payloads.
Element element_from_json(const nlohmann::json& j);
YSeries series_from_json(const nlohmann::json& j);

}  // namespace itlog
