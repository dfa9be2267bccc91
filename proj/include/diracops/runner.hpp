#pragma once

// Suite cases are pure and independent, so they can be fanned out across
// threads.  The serial runner is the reference; the parallel runner must
// produce an identical case list (results are assembled in input order).

#include <functional>
#include <vector>

#include "diracops/report.hpp"

namespace diracops {

using CaseJob = std::function<Case()>;

std::vector<Case> run_cases_serial(const std::vector<CaseJob>& jobs);
std::vector<Case> run_cases_parallel(const std::vector<CaseJob>& jobs);

inline std::vector<Case> run_cases(const std::vector<CaseJob>& jobs, bool parallel) {
  return parallel ? run_cases_parallel(jobs) : run_cases_serial(jobs);
}

}  // namespace diracops
