#include <doctest.h>

#include "diracops/symscalar.hpp"

using namespace diracops;

TEST_CASE("fractions reduce to canonical form") {
  SymScalar n = SymScalar::n(), w = SymScalar::w();
  SymScalar half_n = n / SymScalar(2);
  // (w^2 - n^2/4) / (w + n/2) = w - n/2
  SymScalar q = (w * w - half_n * half_n) / (w + half_n);
  CHECK(q == w - half_n);
  CHECK(to_string(q) == "w - 1/2*n");
  CHECK((q - w + half_n).is_zero());
}

TEST_CASE("field axioms on mixed expressions") {
  SymScalar n = SymScalar::n(), w = SymScalar::w();
  SymScalar a = (w + SymScalar(1)) / (n - SymScalar(3));
  SymScalar b = (n * w - SymScalar(2)) / (w + n);
  CHECK(a * b == b * a);
  CHECK((a + b) - b == a);
  CHECK(a / a == SymScalar(1));
  CHECK((a * b) / b == a);
  CHECK(a * (b + SymScalar(1)) == a * b + a);
}

TEST_CASE("rational detection") {
  SymScalar n = SymScalar::n();
  SymScalar c = (n + SymScalar(2)) / (SymScalar(2) * n + SymScalar(4));
  CHECK(c.is_rational());
  CHECK(c.as_rational() == rat(1, 2));
  CHECK(!(n / SymScalar(2)).is_rational());
  CHECK_THROWS_AS((n / SymScalar(2)).as_rational(), std::domain_error);
}

TEST_CASE("linear w root extraction") {
  SymScalar n = SymScalar::n(), w = SymScalar::w();
  SymScalar c = SymScalar(4) * (w + n / SymScalar(2) - SymScalar(3));
  CHECK(w_root(c) == SymScalar(3) - n / SymScalar(2));
  CHECK_THROWS_AS(w_root(w * w), std::domain_error);
  CHECK_THROWS_AS(w_root(n), std::domain_error);
}

TEST_CASE("exact polynomial division guards") {
  Poly2 a = Poly2::var_w() * Poly2::var_w() - Poly2::var_n() * Poly2::var_n();
  Poly2 b = Poly2::var_w() - Poly2::var_n();
  CHECK(a.divide_exact(b) == Poly2::var_w() + Poly2::var_n());
  CHECK_THROWS_AS(a.divide_exact(Poly2::var_w() + Poly2(Scalar(1))), std::domain_error);
}
