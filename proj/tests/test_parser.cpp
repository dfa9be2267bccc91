#include <doctest.h>

#include <random>

#include "diracops/algebra.hpp"
#include "diracops/parser.hpp"

using namespace diracops;

TEST_CASE("basic normal forms") {
  CHECK(format_element(evaluate(parse("x*y + y*x"))) == "2*h");
  CHECK(format_element(evaluate(parse("[Q,y]"))) == "-2*x");
  CHECK(format_element(evaluate(parse("[x,y]"))) == "2*h");
  CHECK(format_element(evaluate(parse("y*x"))) == "-x*y + 2*h");
  CHECK(format_element(evaluate(parse("D - y^2"))) == "0");
  CHECK(format_element(evaluate(parse("3/4*h - (1/4 + 1/2)*h"))) == "0");
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse("x^-1"), SyntaxError);
  CHECK_THROWS_AS(parse("x +"), SyntaxError);
  CHECK_THROWS_AS(parse("[x,y"), SyntaxError);
  CHECK_THROWS_AS(parse("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse("z"), SyntaxError);
  try {
    parse("x + $");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("format round trip on random elements") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  for (int t = 0; t < 50; ++t) {
    AlgebraElement a;
    for (int k = 0; k < 4; ++k) a.add_term({d(rng), d(rng), d(rng)}, rat(num(rng), den(rng)));
    CHECK(evaluate(parse(format_element(a))) == a);
  }
}

TEST_CASE("bracket respects parity rules") {
  CHECK(format_element(evaluate(parse("[x,Q]"))) == "0");
  CHECK(format_element(evaluate(parse("[h,Q]"))) == "2*x^2");
  CHECK_THROWS_AS(evaluate(parse("[x + h, y]")), MixedParityError);
}
