#pragma once

// Filtered weighted spinor module: truncated series sum_k x^k v_k with the
// x, y, h actions over the symbolic scalar field Q(n, w).  The slot contents
// are free linear combinations of formal atoms y^m sigma; no relations among
// atoms are imposed, so every identity certified here is universal.
//
// y is pushed through powers of x with the engine-certified normal forms
//   y x^{2k}   = x^{2k} y   + 2k x^{2k-1}
//   y x^{2k+1} = -x^{2k+1} y + 2 x^{2k} (h + k)
// with h replaced by the exact eigenvalue of the slot content.

#include <map>
#include <set>
#include <string>

#include "diracops/report.hpp"
#include "diracops/symscalar.hpp"

namespace diracops {

struct NotDivisibleError : std::domain_error {
  NotDivisibleError() : std::domain_error("slot 0 nonempty: element is not divisible by x") {}
};

// Formal spinor symbol y^m sigma.
struct Atom {
  std::string sym;
  int m = 0;
  auto operator<=>(const Atom&) const = default;
};

// Finite linear combination of atoms; zero coefficients never stored.
using AtomVector = std::map<Atom, SymScalar>;

void vec_add(AtomVector& dst, const AtomVector& src, const SymScalar& scale);
AtomVector vec_scale(const AtomVector& v, const SymScalar& c);
AtomVector vec_apply_y(const AtomVector& v);  // increments every m
std::string to_string(const AtomVector& v);

// Element of s(lo, hi)[W]: slot k holds v_k of weight W - k, representing
// sum_k x^k v_k modulo O(x^hi).
class FilteredSpinor {
 public:
  FilteredSpinor() = default;
  FilteredSpinor(SymScalar weight, int lo, int hi) : W_(std::move(weight)), lo_(lo), hi_(hi) {}

  const SymScalar& weight() const { return W_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool is_zero() const { return slots_.empty(); }

  const std::map<int, AtomVector>& slots() const { return slots_; }
  AtomVector slot(int k) const;
  void add_to_slot(int k, const AtomVector& v, const SymScalar& scale = SymScalar(1));

  // h-eigenvalue of the slot-k content: (W - k) + (n + 2)/2.
  SymScalar slot_eigenvalue(int k) const;

  bool operator==(const FilteredSpinor& o) const;
  FilteredSpinor operator+(const FilteredSpinor& o) const;  // window intersection
  FilteredSpinor operator*(const SymScalar& c) const;

 private:
  SymScalar W_;
  int lo_ = 0, hi_ = 0;
  std::map<int, AtomVector> slots_;
};

// s(p,q)[w] -> s(p+1,q+1)[w+1], slot shift.
FilteredSpinor act_x(const FilteredSpinor& psi);
// s(p,q)[w] -> s(max(p-1,0), q-1)[w-1].
FilteredSpinor act_y(const FilteredSpinor& psi);
// Diagonal: multiplies by W + (n+2)/2.
FilteredSpinor act_h(const FilteredSpinor& psi);
// s(p,q)[w] -> s(p-1,q-1)[w-1] for elements of x.(module); throws
// NotDivisibleError when slot 0 is nonempty.
FilteredSpinor x_inverse_shift(const FilteredSpinor& psi);

// x^{-1} on a single-slot element of s(p,p+1)[w], p >= 1, computed from
// act_y.  Throws ExceptionalWeight when the required eigenvalue vanishes
// identically (odd p at the excluded weight).
FilteredSpinor y_as_x_inverse(const FilteredSpinor& psi);

struct ExceptionalWeightSet {
  std::set<SymScalar> roots;     // w-roots of all back-substitution denominators
  bool roundtrip_ok = false;     // generic inverse reconstructed the input
};

// Generic inverse of act_y on s(p,q)[w] by back-substitution, 0 < p < q.
ExceptionalWeightSet exceptional_weights(int p, int q);

std::string to_string(const FilteredSpinor& psi);

// y-isomorphism suite: exceptional sets vs the floor-formula display,
// both x^{-1} formulas, and inverse round trips.
Report yiso_suite(int pmax, int width_max, long seed);

}  // namespace diracops
