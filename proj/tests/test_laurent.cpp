#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sympblob/laurent.hpp"

using namespace sympblob;

namespace {

Laurent P(Param p, int k = 1) { return Laurent::param(p, k); }

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), expo(-2, 2);
  Laurent p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e;
    for (int i = 0; i < kParamCount; ++i) e[i] = expo(rng);
    p += Laurent::monomial(coeff(rng), e);
  }
  return p;
}

RationalPoint random_point(std::mt19937& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  RationalPoint pt;
  for (int i = 0; i < kParamCount; ++i) {
    int n = num(rng);
    if (nonzero && n == 0) n = 1;
    pt[i] = Rational(n, den(rng));
    pt[i].canonicalize();
  }
  return pt;
}

}  // namespace

TEST_CASE("monomial products") {
  CHECK(P(Param::dL) * P(Param::dR) == Laurent::parse("dL*dR"));
  Laurent k1 = Laurent::parse("dL*dR - kLR");
  CHECK(k1 * Laurent::one() == k1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 300; ++trial) {
    Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == Laurent::zero());
    CHECK(a * Laurent::one() == a);
  }
}

TEST_CASE("print/parse round trip") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent p = random_poly(rng);
    CHECK(Laurent::parse(p.to_string()) == p);
  }
  CHECK(Laurent::parse("0") == Laurent::zero());
  CHECK(Laurent::parse("-3*d^-2*kLR + 1") ==
        Laurent::monomial(-3, Exponents{-2, 0, 0, 0, 0, 1}) + Laurent::one());
  CHECK(Laurent::parse("2 * 3 * d") == Laurent::monomial(6, Exponents{1, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(Laurent::parse("bogus"), ParseError);
}

TEST_CASE("parameter aliases resolve") {
  CHECK(param_from_string("de") == Param::dL);
  CHECK(param_from_string("gamma") == Param::kL);
  CHECK(param_from_string("kappa") == Param::kL);
  CHECK(param_from_string("kprime") == Param::kLR);
  CHECK(param_from_string("nope") == std::nullopt);
  CHECK(Laurent::parse("de") == P(Param::dL));
}

TEST_CASE("evaluate") {
  RationalPoint pt{2, 1, 1, 1, 1, 1};
  CHECK(P(Param::d).evaluate(pt) == 2);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Laurent a = random_poly(rng), b = random_poly(rng);
    RationalPoint p = random_point(rng, true);
    CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
    CHECK((a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p));
  }

  RationalPoint zero_d{0, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(P(Param::d, -1).evaluate(zero_d), ZeroDenominator);
  // positive powers of a zero value are fine
  CHECK(P(Param::d, 3).evaluate(zero_d) == 0);
}

TEST_CASE("exact division") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  // a non-divisible case
  auto q = divide_exact(Laurent::parse("dL + dR"), Laurent::parse("dL + 1"));
  CHECK(!q.has_value());
}

TEST_CASE("swap operators act on exponents") {
  Laurent p = Laurent::parse("dL^2*kR - kL*dR^3");
  Laurent fp = p.swap_params(Param::dL, Param::kL);
  CHECK(fp == Laurent::parse("kL^2*kR - dL*dR^3"));
}
