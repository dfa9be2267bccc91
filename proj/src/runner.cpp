#include "diracops/runner.hpp"

namespace diracops {

std::vector<Case> run_cases_serial(const std::vector<CaseJob>& jobs) {
  std::vector<Case> out(jobs.size());
  for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
  return out;
}

std::vector<Case> run_cases_parallel(const std::vector<CaseJob>& jobs) {
  std::vector<Case> out(jobs.size());
  const long n = (long)jobs.size();
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = jobs[i]();
  return out;
}

}  // namespace diracops
