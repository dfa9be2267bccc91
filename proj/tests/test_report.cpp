#include <doctest.h>

#include <json.hpp>

#include "diracops/report.hpp"

using namespace diracops;

TEST_CASE("summary counts derive from cases") {
  Report r;
  r.suite = "demo";
  r.seed = 42;
  r.cases.push_back({"a", Status::Pass, "1", "1", ""});
  r.cases.push_back({"b", Status::Flagged, "1", "2", "display differs"});
  CHECK(r.ok());
  r.cases.push_back({"c", Status::Fail, "1", "3", ""});
  CHECK(!r.ok());
  CHECK(r.count(Status::Pass) == 1);
  CHECK(r.count(Status::Flagged) == 1);
  CHECK(r.count(Status::Fail) == 1);
}

TEST_CASE("json document shape and determinism") {
  Report r;
  r.suite = "demo";
  r.seed = 7;
  r.cases.push_back({"a", Status::Pass, "x", "x", ""});
  std::string doc = r.to_json();
  CHECK(doc == r.to_json());
  auto j = nlohmann::json::parse(doc);
  CHECK(j["suite"] == "demo");
  CHECK(j["seed"] == 7);
  CHECK(j["version"] == kEngineVersion);
  CHECK(j["cases"].is_array());
  CHECK(j["cases"][0]["id"] == "a");
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["flagged"] == 0);
}
