#include <doctest.h>

#include "diracops/solvers.hpp"

using namespace diracops;

namespace {

SymScalar half() { return SymScalar(Scalar(1)) / SymScalar(2); }

AtomVector atom(const std::string& sym, int m, const SymScalar& c) {
  return AtomVector{{Atom{sym, m}, c}};
}

}  // namespace

TEST_CASE("even extension at generic weight") {
  SymScalar w = SymScalar::w(), n = SymScalar::n();
  ExtensionResult res = even_extend("s", w, 4);
  CHECK(res.solvable_to == 4);
  CHECK(!res.obstruction);
  SymScalar c2 = SymScalar(2) * (w + n / SymScalar(2) - SymScalar(1));
  CHECK(res.representative.slot(2) == atom("s", 1, -SymScalar(1) / c2));
  // every denominator is monic linear in w
  for (const auto& d : res.denominators) {
    CHECK(d.num().wdeg() == 1);
    CHECK(d.den() == Poly2(Scalar(1)));
  }
  // the defect really vanishes through the solved window
  FilteredSpinor defect = act_y(act_y(res.representative));
  for (int k = 0; k <= res.solvable_to - 2; ++k) CHECK(defect.slot(k).empty());
}

TEST_CASE("even obstruction at the special weights") {
  // p=1: no correction is possible, the defect sits at slot 0 immediately
  ExtensionResult r1 = even_extend("s", even_weight(1), 2);
  REQUIRE(r1.obstruction);
  CHECK(r1.obstruction->slot == 0);
  CHECK(r1.obstruction->value == atom("s", 1, SymScalar(2)));

  // p=2: unique corrections -1/2 y s and -1/4 y^2 s, then the residue
  ExtensionResult r2 = even_extend("s", even_weight(2), 4);
  REQUIRE(r2.obstruction);
  CHECK(r2.obstruction->slot == 2);
  CHECK(r2.representative.slot(2) == atom("s", 1, -half()));
  CHECK(r2.representative.slot(3) == atom("s", 2, -half() * half()));
  CHECK(r2.obstruction->value == atom("s", 3, -SymScalar(1)));

  for (int p = 1; p <= 5; ++p) {
    ExtensionResult r = even_extend("s", even_weight(p), 2 * p);
    REQUIRE(r.obstruction);
    CHECK(r.obstruction->slot == 2 * p - 2);
    CHECK(r.solvable_to == 2 * p - 1);
  }
}

TEST_CASE("odd extension and preferred representative") {
  ExtensionResult res = odd_extend("s", odd_weight(1), 3);
  CHECK(res.representative.slot(0) == atom("s", 0, SymScalar(1)));
  CHECK(res.representative.slot(1) == atom("s", 1, -half()));
  CHECK(res.representative.slot(2) == atom("s", 2, -half() * half()));
  REQUIRE(res.obstruction);
  CHECK(res.obstruction->slot == 2);
  CHECK(res.obstruction->value == atom("s", 3, -half() * half()));

  FilteredSpinor pref = preferred_representative("s", odd_weight(1));
  CHECK(pref.lo() == 1);
  CHECK(pref.hi() == 3);
  CHECK(pref.slot(1) == atom("s", 0, SymScalar(1)));
  CHECK(pref.slot(2) == atom("s", 1, -half()));

  for (int p = 1; p <= 5; ++p) {
    ExtensionResult r = odd_extend("s", odd_weight(p), 2 * p + 1);
    REQUIRE(r.obstruction);
    CHECK(r.obstruction->slot == 2 * p);
    CHECK(r.solvable_to == 2 * p);
  }
  CHECK_THROWS_AS(preferred_representative("s", odd_weight(0)), ExceptionalWeight);
}

TEST_CASE("direct and obstruction operators") {
  SymScalar n = SymScalar::n();
  InvariantOperator R2 = op_R(Parity::Even, 1, "s");
  CHECK(R2.value.slot(1) == atom("s", 1, SymScalar(2)));
  InvariantOperator R4 = op_R(Parity::Even, 2, "s");
  CHECK(R4.value.slot(1) == atom("s", 3, SymScalar(4)));
  InvariantOperator R3 = op_R(Parity::Odd, 1, "s");
  CHECK(R3.value.slot(1) == atom("s", 3, -SymScalar(2)));

  InvariantOperator L2 = op_L(Parity::Even, 1, "s");
  CHECK(L2.value.slot(1) == atom("s", 1, SymScalar(2)));
  InvariantOperator L4 = op_L(Parity::Even, 2, "s");
  CHECK(L4.value.slot(1) == atom("s", 3, -SymScalar(1)));
  InvariantOperator L3 = op_L(Parity::Odd, 1, "s");
  CHECK(L3.value.slot(1) == atom("s", 3, -half() * half()));

  // output weights
  for (int p = 1; p <= 3; ++p) {
    SymScalar even_w = -SymScalar(p) - n / SymScalar(2) + SymScalar(1);
    SymScalar odd_w = -SymScalar(p) - n / SymScalar(2);
    CHECK(op_L(Parity::Even, p, "s").value.weight() == even_w);
    CHECK(op_R(Parity::Even, p, "s").value.weight() == even_w);
    CHECK(op_L(Parity::Odd, p, "s").value.weight() == odd_w);
    CHECK(op_R(Parity::Odd, p, "s").value.weight() == odd_w);
  }
}

TEST_CASE("proportionality constants") {
  CHECK(proportionality_constant(Parity::Even, 1) == rat(1));
  CHECK(proportionality_constant(Parity::Even, 2) == rat(-4));
  CHECK(proportionality_constant(Parity::Odd, 1) == rat(8));
}

TEST_CASE("representative independence") {
  for (int p = 1; p <= 2; ++p) {
    CHECK(representative_independence(Parity::Even, p, 5, 31 + p).ok());
    CHECK(representative_independence(Parity::Odd, p, 5, 77 + p).ok());
  }
}
