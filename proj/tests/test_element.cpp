#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itlog/errors.hpp"
#include "itlog/random.hpp"

using namespace itlog;
using itlog::testing::c;
using itlog::testing::is_canonical;
using itlog::testing::L;
using itlog::testing::q;

TEST_CASE("scalar is kept in lowest terms") {
  const Scalar a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a.to_string() == "-3/2");
  CHECK(Scalar(4, 2).to_string() == "2");
  CHECK(Scalar::parse("-10/4") == q(-5, 2));
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK(factorial(5) == q(120));
  CHECK(factorial(0) == q(1));
}

TEST_CASE("exponent vectors drop zero exponents") {
  const ExponentVector v({{1, q(2)}, {0, q(3)}, {1, q(-2)}});
  REQUIRE(v.entries().size() == 1);
  CHECK(v.entries()[0].first == 0);
  CHECK(v.exponent(0) == q(3));
  CHECK(v.exponent(5) == q(0));
  CHECK((v + (-v)).empty());
}

TEST_CASE("element arithmetic") {
  SUBCASE("exponents add under multiplication") {
    CHECK(L(1, q(2)) * (L(1, q(-1, 2)) * L(0, q(3))) == L(1, q(3, 2)) * L(0, q(3)));
    const Element product = L(1, q(2)) * (L(1, q(-1, 2)) * L(0, q(3)));
    REQUIRE(product.is_monomial());
    CHECK(product.terms()[0].exponents == ExponentVector({{0, q(3)}, {1, q(3, 2)}}));
  }
  SUBCASE("unit is the multiplicative identity") {
    const Element e = c(3) * L(2) + L(-1, q(1, 3));
    CHECK(e * Element::one() == e);
    CHECK(Element::one() * e == e);
  }
  SUBCASE("cancellation gives the empty element") {
    const Element z = c(2) * L(0) + (-(c(2) * L(0)));
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK((c(2) * L(0) - c(2) * L(0)) == Element());
  }
  SUBCASE("scaling by zero") { CHECK((L(3) * q(0)).is_zero()); }
}

TEST_CASE("invert_unit") {
  CHECK(invert_unit(L(1)) == L(1, q(-1)));
  const Element m = c(3) * L(0, q(2)) * L(2, q(-1));
  CHECK(invert_unit(m) == c(1, 3) * L(0, q(-2)) * L(2));
  CHECK_THROWS_AS(invert_unit(L(0) + L(1)), NotAUnit);
  CHECK_THROWS_AS(invert_unit(Element()), NotAUnit);
}

TEST_CASE("derive_power follows the three level rules") {
  CHECK(derive_power(0, q(5)) == c(5) * L(0, q(4)));
  CHECK(derive_power(1, q(1)) == L(0, q(-1)));
  CHECK(derive_power(-2, q(1)) == L(-1) * L(-2));
  CHECK(derive_power(3, q(0)).is_zero());
  CHECK(derive_power(3, q(1)) == L(0, q(-1)) * L(1, q(-1)) * L(2, q(-1)));
  CHECK(derive_power(-1, q(1, 2)) == c(1, 2) * L(-1, q(1, 2)));
}

TEST_CASE("derive") {
  CHECK(derive(L(2)) == L(0, q(-1)) * L(1, q(-1)));
  CHECK(derive(L(0) * L(1)) == Element::one() + L(1));
  CHECK(derive(Element::one()).is_zero());
  CHECK(derive(Element()).is_zero());
}

TEST_CASE("derive_n") {
  CHECK(derive_n(L(1), 2) == -L(0, q(-2)));
  const Element e = c(2) * L(3) + L(-2, q(1, 2));
  CHECK(derive_n(e, 0) == e);
  for (unsigned k = 0; k <= 6; ++k) CHECK(derive_n(L(-1), k) == L(-1));
  CHECK(derive_n(L(0, q(3)), 3) == c(6));
  CHECK(derive_n(L(0, q(3)), 4).is_zero());
}

TEST_CASE("derivation properties on random elements") {
  Rng rng(7);
  ElementShape shape;
  for (int trial = 0; trial < 200; ++trial) {
    const Element a = random_element(rng, shape);
    const Element b = random_element(rng, shape);
    CAPTURE(trial);
    CHECK(derive(a * b) == derive(a) * b + a * derive(b));

    const Scalar alpha(trial % 7 - 3, 2);
    const Scalar beta(5 - trial % 4, 3);
    CHECK(derive(a * alpha + b * beta) == derive(a) * alpha + derive(b) * beta);
  }
}

TEST_CASE("derive_power is r * l_j^{r-1} * derive_power(j, 1)") {
  for (Level j = -4; j <= 4; ++j) {
    for (long num = -5; num <= 5; ++num) {
      const Scalar r(num, 3);
      CHECK(derive_power(j, r) == r * (L(j, r - q(1)) * derive_power(j, q(1))));
    }
  }
}

TEST_CASE("ring laws and canonical form on random elements") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Element a = random_element(rng);
    const Element b = random_element(rng);
    const Element d = random_element(rng);
    CAPTURE(trial);
    CHECK(is_canonical(a + b));
    CHECK(is_canonical(a * b));
    CHECK(is_canonical(a - a));
    CHECK(a + b == b + a);
    CHECK((a + b) + d == a + (b + d));
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
  }
}

TEST_CASE("invert_unit is a two-sided inverse") {
  Rng rng(13);
  ElementShape shape;
  shape.max_terms = 1;
  for (int trial = 0; trial < 50; ++trial) {
    const Element m = random_element(rng, shape);
    REQUIRE(m.is_monomial());
    CHECK(m * invert_unit(m) == Element::one());
    CHECK(invert_unit(m) * m == Element::one());
  }
}
