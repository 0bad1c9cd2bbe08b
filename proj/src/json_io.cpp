#include "itlog/json_io.hpp"

#include <stdexcept>
#include <string>

#include "itlog/text.hpp"

namespace itlog {

using nlohmann::json;

namespace {

json integer_value(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class read_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Scalar read_rational(const json& num, const json& den) {
  const mpz_class d = read_integer(den);
  if (d <= 0) throw std::invalid_argument("denominator must be positive");
  return Scalar::from_parts(read_integer(num), d);
}

json rational_strings(const std::vector<Scalar>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

json to_json(const Element& e) {
  json out = json::array();
  for (const auto& t : e.terms()) {
    json exponents = json::array();
    for (const auto& [level, r] : t.exponents.entries())
      exponents.push_back({level, integer_value(r.numerator()), integer_value(r.denominator())});
    out.push_back({{"coefficient",
                    {{"num", t.coefficient.numerator().get_str()},
                     {"den", t.coefficient.denominator().get_str()}}},
                   {"exponents", std::move(exponents)}});
  }
  return out;
}

json to_json(const YSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

json to_json(const RForm& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json exponents = json::array();
    for (const auto& [level, p] : t.exponents.entries())
      exponents.push_back({level, rational_strings(p.coefficients())});
    terms.push_back({{"coefficient_poly", rational_strings(t.coefficient.coefficients())},
                     {"exponent_polys", std::move(exponents)}});
  }
  return {{"text", format_rform(f)}, {"reduced", f.is_reduced()}, {"terms", std::move(terms)}};
}

json to_json(const Report& r) {
  json params = json::object();
  for (const auto& [name, value] : r.parameters) params[name] = value;
  json out = {{"identity", r.identity},
              {"parameters", std::move(params)},
              {"verdict", r.pass ? "pass" : "fail"}};
  if (r.failing_index) out["first_failing"] = *r.failing_index;
  if (!r.pass && !r.difference.is_zero()) {
    out["difference"] = to_json(r.difference);
    out["difference_text"] = format_element(r.difference);
  }
  if (!r.measurements.empty()) {
    json m = json::object();
    for (const auto& [name, value] : r.measurements) m[name] = value;
    out["measurements"] = std::move(m);
  }
  return out;
}

Element element_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("element payload must be an array");
  std::vector<Monomial> terms;
  for (const auto& m : j) {
    if (!m.is_object() || !m.contains("coefficient") || !m.contains("exponents"))
      throw std::invalid_argument("monomial needs 'coefficient' and 'exponents'");
    const auto& c = m.at("coefficient");
    const Scalar coefficient = read_rational(c.at("num"), c.at("den"));
    std::vector<ExponentVector::Entry> entries;
    for (const auto& triple : m.at("exponents")) {
      if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer())
        throw std::invalid_argument("exponent entry must be [level, num, den]");
      entries.emplace_back(triple[0].get<Level>(), read_rational(triple[1], triple[2]));
    }
    terms.push_back({coefficient, ExponentVector(std::move(entries))});
  }
  return Element::from_terms(std::move(terms));
}

YSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coefficients"))
    throw std::invalid_argument("series payload needs 'order' and 'coefficients'");
  const auto order = j.at("order").get<unsigned>();
  const auto& coeffs = j.at("coefficients");
  if (!coeffs.is_array() || coeffs.size() != order + 1)
    throw std::invalid_argument("series payload must carry order+1 coefficients");
  std::vector<Element> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(element_from_json(c));
  return YSeries::from_coefficients(std::move(out));
}

}  // namespace itlog
