#pragma once

// Order-by-order formal extension over the filtered module: the even solver
// drives y^2 psi to zero, the odd solver drives y psi to zero.  At the
// special weights the recursion halts and the residue defines the invariant
// operators L_k; the direct operators R_k apply a power of y to an explicit
// representative.  Both are computed over free atoms, so every certified
// equality is a universal identity.

#include <map>
#include <optional>
#include <vector>

#include "diracops/weighted.hpp"

namespace diracops {

struct NotProportional : std::domain_error {
  NotProportional() : std::domain_error("operator values are not parallel") {}
};

enum class Parity { Even, Odd };

// Extra slot contents mixed into the initial element before solving; used to
// certify that admissible representative changes do not move the output.
using Gauge = std::map<int, AtomVector>;

struct Obstruction {
  int slot = 0;      // defect slot at which the recursion halts
  AtomVector value;  // residue content at that slot
};

struct ExtensionResult {
  FilteredSpinor representative;
  int solvable_to = 0;  // highest order reached with the defect cleared
  std::optional<Obstruction> obstruction;
  std::vector<SymScalar> denominators;  // monic-in-w solvability factors
};

enum class OperatorKind { L_even, R_even, L_odd, R_odd };

struct InvariantOperator {
  OperatorKind kind;
  int p = 0;
  FilteredSpinor value;  // element of s(1,2)
};

// Special weights at which the recursions obstruct.
SymScalar even_weight(int p);  // p - n/2
SymScalar odd_weight(int p);   // p - n/2 + 1

// Builds psi = x sym + sum_{k>=2} x^k phi_k with y^2 psi = 0 order by order.
// Corrections are solved at every order k >= 2, both parities.  The
// obstruction, when the step coefficient vanishes identically against a
// nonzero defect, is returned as data.
ExtensionResult even_extend(const std::string& sym, const SymScalar& w, int max_order,
                            const Gauge& gauge = {});

// Builds psi = sym + sum_{k>=1} x^k phi_k with y psi = 0 order by order;
// the module weight of psi is w - 1.
ExtensionResult odd_extend(const std::string& sym, const SymScalar& w, int max_order,
                           const Gauge& gauge = {});

// x (sym + x phi_1) in s(1,3)[w], phi_1 the unique first-order solution of
// y psi = 0.  Throws ExceptionalWeight when the first-order step coefficient
// vanishes identically.
FilteredSpinor preferred_representative(const std::string& sym, const SymScalar& w);

// Direct operators.  Even: x y^{2p} (x sym) mod O(x^2) at w = p - n/2.
// Odd: y^{2p+1} applied to the preferred representative, mod O(x^2), at
// w = p - n/2 + 1.  The gauge perturbs the representative by admissible
// higher-order terms (slots >= 2 even, >= 3 odd).
InvariantOperator op_R(Parity parity, int p, const std::string& sym, const Gauge& gauge = {});

// Obstruction operators, read off the halted extensions and shifted to
// s(1,2): even L_{2p} = x^{-2p+3} y^2 psi, odd L_{2p+1} = x^{-2p+1} y psi.
// The gauge perturbs the initial element handed to the solver.
InvariantOperator op_L(Parity parity, int p, const std::string& sym, const Gauge& gauge = {});

// Certifies value(R) = c * value(L) with c a nonzero plain rational free of
// n, and returns c.  Throws NotProportional if the atom vectors are not
// parallel.
Scalar proportionality_constant(Parity parity, int p);

// Randomized certification that all four operators are unchanged under
// admissible representative perturbations.
Report representative_independence(Parity parity, int p, int trials, long seed);

std::string to_string(OperatorKind k);

}  // namespace diracops
