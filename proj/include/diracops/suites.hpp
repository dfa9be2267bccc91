#pragma once

// Identity verification suites for the rewriting engine.  Failures are
// report entries, never faults.  Cases where the paper's displayed formula
// disagrees with the engine's confluent normal form are reported as
// "flagged" with both expressions, not silently corrected.

#include "diracops/report.hpp"

namespace diracops {

enum class AlgebraSuite { Relations, Prop2, Prop3, Prop4, Jacobi, Confluence };

Report verify_identity_suite(AlgebraSuite suite, int pmax, long seed);

}  // namespace diracops
