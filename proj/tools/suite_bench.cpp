// Compares the serial reference runner against the OpenMP fan-out on the
// heavier concrete suites.  The case lists must agree exactly; timings are
// reported per suite.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diracops/clifford.hpp"

using namespace diracops;

namespace {

double seconds(const std::function<Report()>& f, Report& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same_cases(const Report& a, const Report& b) {
  if (a.cases.size() != b.cases.size()) return false;
  for (size_t i = 0; i < a.cases.size(); ++i) {
    const Case &x = a.cases[i], &y = b.cases[i];
    if (x.id != y.id || x.status != y.status || x.computed != y.computed) return false;
  }
  return true;
}

int bench(const std::string& name, const std::function<Report(bool)>& suite) {
  Report serial, parallel;
  double ts = seconds([&] { return suite(false); }, serial);
  double tp = seconds([&] { return suite(true); }, parallel);
  bool match = same_cases(serial, parallel);
  std::printf("%-18s serial %7.3fs   parallel %7.3fs   speedup %5.2fx   cases %s\n",
              name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0, match ? "identical" : "DIFFER");
  return match && serial.ok() && parallel.ok() ? 0 : 1;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel runner degrades to serial\n");
#endif
  int rc = 0;
  rc |= bench("flat relations", [](bool par) {
    return verify_flat_relations(Signature{3, 2}, 3, 20, 7, par);
  });
  rc |= bench("kernel lemma", [](bool par) { return kernel_suite(8, 5, 7, par); });
  rc |= bench("cross module", [](bool par) {
    return cross_module_suite(Signature{2, 2}, 100, 4, 7, par);
  });
  return rc;
}
