#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itlog/errors.hpp"
#include "itlog/json_io.hpp"
#include "itlog/random.hpp"
#include "itlog/text.hpp"

using namespace itlog;
using itlog::testing::c;
using itlog::testing::L;
using itlog::testing::q;

namespace {

std::size_t error_offset(std::string_view text, bool rform = false) {
  try {
    if (rform) {
      parse_rform(text);
    } else {
      parse_element(text);
    }
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for '" << text << "'");
  return 0;
}

}  // namespace

TEST_CASE("parse_element") {
  CHECK(parse_element("l(0)") == L(0));
  CHECK(parse_element("3/2 * l(1)^2 * l(0)^-1") == c(3, 2) * L(1, q(2)) * L(0, q(-1)));
  CHECK(parse_element("l(-2)^-3/2") == L(-2, q(-3, 2)));
  CHECK(parse_element("-l(0) + 2*(l(1) - 1)") == -L(0) + c(2) * L(1) - c(2));
  CHECK(parse_element("4/6") == c(2, 3));
  CHECK(parse_element("l(0)^(1/2 + 1/2)") == L(0));
  CHECK(parse_element("l(1) - l(1)").is_zero());
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(error_offset("l(1) +") == 6);
  CHECK(error_offset("3/0") == 2);
  CHECK(error_offset("l(1") == 3);
  CHECK(error_offset("l(1) l(2)") == 5);
  CHECK(error_offset("r*l(0)") == 0);
  CHECK(error_offset("l(0)^x") == 5);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("l(0)^(l(1))", true) == 5);
  CHECK_THROWS_AS(parse_element("l(0)^r"), ParseError);
}

TEST_CASE("format_element") {
  CHECK(format_element(Element()) == "0");
  CHECK(format_element(Element::one()) == "1");
  CHECK(format_element(c(-3, 2)) == "-3/2");
  CHECK(format_element(c(3, 2) * L(1, q(2)) * L(0, q(-1))) == "3/2*l(0)^-1*l(1)^2");
  CHECK(format_element(-L(0) + L(1)) == "-l(0) + l(1)");
  CHECK(format_element(L(-1, q(1, 3))) == "l(-1)^1/3");
}

TEST_CASE("format_series") {
  CHECK(format_series(translate(L(1), 2)) == "l(1) + y*l(0)^-1 - 1/2*y^2*l(0)^-2");
  CHECK(format_series(translate(L(0), 0)) == "l(0)");
  CHECK(format_series(translate(L(0), 3)) == "l(0) + y");
  CHECK(format_series(YSeries(2)) == "0");
}

TEST_CASE("rform text") {
  const RForm f = parse_rform("r*l(0)^r + (1 - r)*l(1)^(r - 1) + 2*r^2 + l(2)^-1");
  CHECK(format_rform(f) == "r*l(0)^r + l(1)^(r - 1) - r*l(1)^(r - 1) + 2*r^2 + l(2)^-1");
  CHECK(parse_rform(format_rform(f)) == f);
  CHECK(format_rform(rform_reduce(f)) == "2*r^2 + r*l(0)^r + (-r + 1)*l(1)^(r - 1) + l(2)^-1");
  CHECK(format_rform(rform_reduce(parse_rform("r*l(0)^r + r*l(0)^r"))) == "2*r*l(0)^r");
  CHECK(format_rform(RForm()) == "0");
  CHECK(format_rpoly(RPoly(std::vector<Scalar>{q(1), q(-3, 2), q(1)})) == "r^2 - 3/2*r + 1");
  CHECK(rform_limit(parse_rform("l(3)^(r-1)*l(0)^-1*l(1)^-1*l(2)^-1")) ==
        L(0, q(-1)) * L(1, q(-1)) * L(2, q(-1)) * L(3, q(-1)));
}

TEST_CASE("print then parse reproduces random elements") {
  Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const Element e = random_element(rng);
    CAPTURE(format_element(e));
    CHECK(parse_element(format_element(e)) == e);
  }
}

TEST_CASE("print then parse reproduces random forms up to reduction") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const RForm f = rform_reduce(random_rform(rng));
    CAPTURE(format_rform(f));
    CHECK(rform_reduce(parse_rform(format_rform(f))) == f);
  }
}

TEST_CASE("json payloads round-trip") {
  Rng rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const YSeries s = random_admissible_series(rng, 4);
    const auto reparsed = series_from_json(nlohmann::json::parse(to_json(s).dump()));
    CHECK(reparsed == s);
  }
  const YSeries t = translate(L(-2), 5);
  CHECK(series_from_json(to_json(t)) == t);
}

TEST_CASE("json element layout") {
  const auto j = to_json(c(-3, 2) * L(1, q(2)) * L(0, q(-1, 3)));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["coefficient"]["num"] == "-3");
  CHECK(j[0]["coefficient"]["den"] == "2");
  CHECK(j[0]["exponents"] == nlohmann::json::parse("[[0,-1,3],[1,2,1]]"));

  const Element huge = Element::level(4, Scalar::parse("123456789012345678901234567890/7"));
  CHECK(element_from_json(to_json(huge)) == huge);
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"([{"coefficient":{"num":"1","den":"0"},"exponents":[]}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"order":2,"coefficients":[[]]})")),
                  std::invalid_argument);
}
