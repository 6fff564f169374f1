#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "prf/errors.hpp"
#include "prf/text.hpp"

using namespace prf;

TEST_CASE("polynomial and rational function printing") {
  auto F7 = Field::of_order(7);
  CHECK(to_string(RatFunc::polynomial(F7, {0, 3, 0, 0, 1})) == "x^4+3*x");
  CHECK(to_string(RatFunc(F7, {1}, {0, 1})) == "(1)/(x)");
  CHECK(to_string(RatFunc::constant(F7, 0)) == "0");
  auto F4 = Field::of_order(4);
  Elt w = F4->generator();
  CHECK(to_string(*F4, w) == "w");
  CHECK(to_string(RatFunc::polynomial(F4, {0, w, 0, 0, 1})) == "x^4+w*x");
  CHECK(to_string(*F7, ProjPoint::inf()) == "inf");
}

TEST_CASE("parsing accepts the usual notation") {
  auto F7 = Field::of_order(7);
  RatFunc f = parse_ratfunc(F7, "x^4 + 3*x");
  CHECK(f == RatFunc::polynomial(F7, {0, 3, 0, 0, 1}));
  CHECK(parse_ratfunc(F7, "X^4+3*X") == f);
  CHECK(parse_ratfunc(F7, "(x^2-1)/(x-1)") == RatFunc::polynomial(F7, {1, 1}));
  CHECK(parse_ratfunc(F7, "x^(-2)") == RatFunc(F7, {1}, {0, 0, 1}));
  CHECK(parse_ratfunc(F7, "10*x") == RatFunc::polynomial(F7, {0, 3}));
  CHECK(parse_ratfunc(F7, "-x") == RatFunc::polynomial(F7, {0, 6}));
  CHECK(parse_poly(F7, "x/2") == Poly{0, 4});
  auto F9 = Field::of_order(9);
  CHECK(parse_element(*F9, "w^2") == F9->mul(F9->generator(), F9->generator()));
}

TEST_CASE("parse errors") {
  auto F5 = Field::of_order(5);
  CHECK_THROWS_AS(parse_ratfunc(F5, ""), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(F5, "x^"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(F5, "x+y"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(F5, "3x"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(F5, "1/(x-x)"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(F5, "(x+1"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc(F5, "w*x"), ParseError);
  CHECK_THROWS_AS(parse_poly(F5, "1/x"), ParseError);
  CHECK_THROWS_AS(parse_element(*F5, "x"), ParseError);
  CHECK_THROWS_AS(parse_field("GF(4) mod w^2+1"), ParseError);
  CHECK_THROWS_AS(parse_field("F(5)"), ParseError);
}

TEST_CASE("round trip on random rational functions") {
  std::mt19937_64 rng(9);
  for (std::string spec : {"GF(2)", "GF(5)", "GF(2^2) mod w^2+w+1", "GF(3^2) mod w^2+1", "GF(2^3) mod w^3+w+1"}) {
    auto F = parse_field(spec);
    std::uniform_int_distribution<Elt> c(0, F->size() - 1);
    for (int it = 0; it < 100; ++it) {
      Poly a(5), b(4);
      for (auto& x : a) x = c(rng);
      for (auto& x : b) x = c(rng);
      poly::trim(a);
      poly::trim(b);
      if (b.empty()) continue;
      RatFunc f = normalize(F, a, b);
      REQUIRE(parse_ratfunc(F, to_string(f)) == f);
    }
  }
  auto T = Field::of_order(4)->extension(2);
  std::uniform_int_distribution<Elt> c(0, T->size() - 1);
  for (int it = 0; it < 50; ++it) {
    RatFunc f = normalize(T, {c(rng), c(rng), 1}, {c(rng), 1});
    CHECK(parse_ratfunc(T, to_string(f)) == f);
  }
}

TEST_CASE("Moebius printing") {
  auto F3 = Field::of_order(3);
  CHECK(to_string(Moebius::identity(F3)) == "x");
  CHECK(to_string(Moebius::from_matrix(F3, 0, 1, 1, 0)) == "(1)/(x)");
}
