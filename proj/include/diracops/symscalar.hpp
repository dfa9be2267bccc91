#pragma once

// Rational functions in the two indeterminates n (dimension) and w
// (conformal weight) over the exact rationals.  Fractions are kept reduced
// (bivariate gcd cancelled, denominator with unit leading coefficient), so
// equality is syntactic.

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "diracops/rational.hpp"

namespace diracops {

struct ExceptionalWeight : std::domain_error {
  ExceptionalWeight() : std::domain_error("eigenvalue vanishes identically at this weight") {}
};

// Sparse bivariate polynomial; key is [wdeg, ndeg].
class Poly2 {
 public:
  using Terms = std::map<std::array<int, 2>, Scalar>;

  Poly2() = default;
  Poly2(const Scalar& c) { add_term(0, 0, c); }
  static Poly2 var_n() { return term(0, 1); }
  static Poly2 var_w() { return term(1, 0); }
  static Poly2 term(int wdeg, int ndeg, const Scalar& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int wdeg() const;
  int ndeg() const;
  Scalar leading_coeff() const;  // lex order, w major

  Poly2& add_term(int wdeg, int ndeg, const Scalar& c);
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Scalar& c) const;
  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

  // Exact division; throws std::domain_error if not divisible.
  Poly2 divide_exact(const Poly2& d) const;

 private:
  Terms terms_;
};

Poly2 gcd(const Poly2& a, const Poly2& b);
std::string to_string(const Poly2& p);

class SymScalar {
 public:
  SymScalar() : num_(), den_(Scalar(1)) {}
  SymScalar(long v) : num_(Scalar(v)), den_(Scalar(1)) {}
  SymScalar(const Scalar& v) : num_(v), den_(Scalar(1)) {}
  SymScalar(Poly2 num, Poly2 den);
  static SymScalar n() { return SymScalar(Poly2::var_n(), Poly2(Scalar(1))); }
  static SymScalar w() { return SymScalar(Poly2::var_w(), Poly2(Scalar(1))); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const;  // plain rational, no n or w
  Scalar as_rational() const;

  SymScalar operator+(const SymScalar& o) const;
  SymScalar operator-(const SymScalar& o) const;
  SymScalar operator-() const;
  SymScalar operator*(const SymScalar& o) const;
  SymScalar operator/(const SymScalar& o) const;
  bool operator==(const SymScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  // Total order usable as a map key (lexicographic on reduced terms).
  bool operator<(const SymScalar& o) const;

 private:
  void reduce();
  Poly2 num_, den_;
};

// The w-root of a polynomial scalar that is linear in w: for A(n) w + B(n)
// returns -B/A.  Throws std::domain_error otherwise.
SymScalar w_root(const SymScalar& c);

std::string to_string(const SymScalar& s);

}  // namespace diracops
