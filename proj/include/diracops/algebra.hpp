#pragma once

// Confluent rewriting engine for the enveloping algebra of the graded Lie
// algebra generated by x (odd), y (odd) and h (even).  Defining rewrite
// rules, applied until normal order x^a y^b h^c:
//
//   y x -> 2h - x y
//   h x -> x h + x
//   h y -> y h - y
//
// These encode [x,y] = 2h, [x,h] = -x, [y,h] = y.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "diracops/rational.hpp"

namespace diracops {

enum class Gen : uint8_t { X = 0, Y = 1, H = 2 };

struct MixedParityError : std::domain_error {
  MixedParityError() : std::domain_error("super-commutator argument has mixed parity") {}
};

struct Monomial {
  int xdeg = 0;
  int ydeg = 0;
  int hdeg = 0;

  auto operator<=>(const Monomial&) const = default;
  int parity() const { return (xdeg + ydeg) & 1; }
  int degree() const { return xdeg + ydeg + hdeg; }
};

// Noncommutative polynomial in normal form: finite Monomial -> Scalar map,
// zero coefficients never stored.  Two elements are equal iff maps are equal.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement zero() { return {}; }
  static AlgebraElement one() { return monomial({0, 0, 0}); }
  static AlgebraElement gen(Gen g);
  static AlgebraElement monomial(Monomial m, Scalar c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  // -1 for zero or mixed parity query via parity(): use pure_parity().
  // Returns 0 (even), 1 (odd) or -1 (mixed / zero treated as pure anything).
  int pure_parity() const;

  AlgebraElement& add_term(Monomial m, const Scalar& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const Scalar& c) const;
  AlgebraElement operator*(const AlgebraElement& o) const { return multiply(*this, o); }
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  friend AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

 private:
  std::map<Monomial, Scalar> terms_;
};

inline AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) { return a * c; }

// Normal form of the concatenation ab.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// ab - (-1)^{pq} ba for pure-parity a, b.  Throws MixedParityError otherwise.
AlgebraElement super_commutator(const AlgebraElement& a, const AlgebraElement& b);

// Drops every monomial with xdeg >= k.
AlgebraElement reduce_mod_x_power(const AlgebraElement& a, int k);

// Product-reversing anti-automorphism x -> -y, y -> -x, h -> h.  Fixing h
// (rather than negating it) is what makes the map well defined on E(g);
// the sign swap on x and y absorbs the opposite-algebra bracket signs.
AlgebraElement interchange(const AlgebraElement& a);

AlgebraElement element_pow(const AlgebraElement& a, int k);

// q evaluated at an algebra element; q given by coefficients, q[i] * t^i.
AlgebraElement eval_poly(const std::vector<Scalar>& q, const AlgebraElement& t);

// Rising factorial [t]^p = t(t+1)...(t+p-1) evaluated at an element.
AlgebraElement rising_factorial(const AlgebraElement& t, int p);

// --- raw word rewriting -----------------------------------------------------
//
// Independent of the closed-form product above; used for confluence checks.

enum class RewriteStrategy { Leftmost, Rightmost };

using Word = std::vector<Gen>;

// Exhaustively applies the three rewrite rules to a word, picking the
// leftmost or rightmost reducible pair at each step.
AlgebraElement rewrite_word(const Word& word, RewriteStrategy strategy);

}  // namespace diracops
