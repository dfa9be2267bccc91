#pragma once

// Expression front end for the rewriting engine.  Grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := 'x' | 'y' | 'h' | 'Q' | 'D' | rational | '(' expr ')'
//           | '[' expr ',' expr ']'
//
// Q and D desugar to x^2 and y^2; '[a,b]' is the super-commutator.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracops/algebra.hpp"

namespace diracops {

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct Expr {
  enum class Kind { Sym, Num, Add, Sub, Neg, Mul, Pow, Bracket };
  Kind kind = Kind::Num;
  char sym = 0;              // Sym
  Scalar num = 0;            // Num
  int exponent = 0;          // Pow
  std::vector<Expr> kids;
};

Expr parse(const std::string& text);

// Evaluates to a normal form.  May throw MixedParityError from brackets.
AlgebraElement evaluate(const Expr& e);

// Deterministic rendering: graded lexicographic term order, descending.
// parse(format_element(a)) renormalizes to a.
std::string format_element(const AlgebraElement& a);

}  // namespace diracops
