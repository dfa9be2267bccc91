#include <doctest.h>

#include <random>

#include "diracops/algebra.hpp"
#include "diracops/parser.hpp"

using namespace diracops;

namespace {

AlgebraElement gx() { return AlgebraElement::gen(Gen::X); }
AlgebraElement gy() { return AlgebraElement::gen(Gen::Y); }
AlgebraElement gh() { return AlgebraElement::gen(Gen::H); }

AlgebraElement random_element(std::mt19937_64& rng, int terms, int maxdeg) {
  AlgebraElement e;
  std::uniform_int_distribution<int> d(0, maxdeg);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < terms; ++t) e.add_term({d(rng), d(rng), d(rng)}, Scalar(c(rng)));
  return e;
}

}  // namespace

TEST_CASE("defining relations") {
  CHECK(gy() * gx() == gh() * Scalar(2) - gx() * gy());
  CHECK(gh() * gx() == gx() * gh() + gx());
  CHECK(gh() * gy() == gy() * gh() - gy());
  CHECK(super_commutator(gx(), gy()) == gh() * Scalar(2));
  CHECK(super_commutator(gx(), gh()) == -gx());
  CHECK(super_commutator(gy(), gh()) == gy());
}

TEST_CASE("product is associative") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    AlgebraElement a = random_element(rng, 3, 3);
    AlgebraElement b = random_element(rng, 3, 3);
    AlgebraElement c = random_element(rng, 3, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("closed-form moves agree with word rewriting") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(1, 7);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int t = 0; t < 60; ++t) {
    Word w((size_t)len(rng));
    AlgebraElement prod = AlgebraElement::one();
    for (auto& g : w) {
      g = static_cast<Gen>(gen(rng));
      prod = prod * AlgebraElement::gen(g);
    }
    CHECK(rewrite_word(w, RewriteStrategy::Leftmost) == prod);
    CHECK(rewrite_word(w, RewriteStrategy::Rightmost) == prod);
  }
}

TEST_CASE("interchange is a product-reversing involution") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    AlgebraElement a = random_element(rng, 3, 3);
    AlgebraElement b = random_element(rng, 3, 3);
    CHECK(interchange(interchange(a)) == a);
    CHECK(interchange(a * b) == interchange(b) * interchange(a));
  }
  CHECK(interchange(gx()) == -gy());
  CHECK(interchange(gh()) == gh());
}

TEST_CASE("mixed parity bracket is rejected") {
  CHECK_THROWS_AS(super_commutator(gx() + gh(), gy()), MixedParityError);
}

TEST_CASE("odd cube expansion mod x^2") {
  AlgebraElement w = element_pow(gy(), 3) * element_pow(gx(), 3);
  CHECK(format_element(w) == "-x^3*y^3 + 2*x^2*y^2*h - 4*x*y*h + 8*h^2 + 8*h");
  AlgebraElement low = reduce_mod_x_power(w, 2);
  AlgebraElement expect =
      Scalar(4) * gx() * gy() * gh() * Scalar(-1) + Scalar(8) * gh() * gh() + Scalar(8) * gh();
  CHECK(low == expect);
}

TEST_CASE("polynomial shifts through powers") {
  std::vector<Scalar> q{Scalar(3), Scalar(-1), Scalar(2)};  // 3 - t + 2t^2
  for (int p = 1; p <= 5; ++p) {
    AlgebraElement xp = element_pow(gx(), p);
    AlgebraElement yp = element_pow(gy(), p);
    AlgebraElement shift_up = eval_poly(q, gh() + AlgebraElement::one() * Scalar(p));
    AlgebraElement shift_dn = eval_poly(q, gh() - AlgebraElement::one() * Scalar(p));
    CHECK(eval_poly(q, gh()) * xp == xp * shift_up);
    CHECK(eval_poly(q, gh()) * yp == yp * shift_dn);
  }
}
