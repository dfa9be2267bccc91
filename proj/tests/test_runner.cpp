#include <doctest.h>

#include "diracops/clifford.hpp"
#include "diracops/runner.hpp"

using namespace diracops;

TEST_CASE("parallel runner matches the serial reference") {
  std::vector<CaseJob> jobs;
  for (int i = 0; i < 24; ++i)
    jobs.push_back([i] {
      Case c;
      c.id = "job " + std::to_string(i);
      c.computed = std::to_string(i * i);
      c.status = i % 5 == 0 ? Status::Flagged : Status::Pass;
      return c;
    });
  auto serial = run_cases_serial(jobs);
  auto parallel = run_cases_parallel(jobs);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].id == parallel[i].id);
    CHECK(serial[i].computed == parallel[i].computed);
    CHECK(serial[i].status == parallel[i].status);
  }
}

TEST_CASE("flat suite is identical under both runners") {
  Report s = verify_flat_relations({2, 1}, 2, 4, 13, false);
  Report p = verify_flat_relations({2, 1}, 2, 4, 13, true);
  CHECK(s.ok());
  REQUIRE(s.cases.size() == p.cases.size());
  for (size_t i = 0; i < s.cases.size(); ++i) {
    CHECK(s.cases[i].id == p.cases[i].id);
    CHECK(s.cases[i].computed == p.cases[i].computed);
  }
}
