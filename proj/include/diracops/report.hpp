#pragma once

#include <string>
#include <vector>

namespace diracops {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Status { Pass, Fail, Flagged };

const char* to_string(Status s);

struct Case {
  std::string id;
  Status status = Status::Pass;
  std::string expected;
  std::string computed;
  std::string note;
};

// Structured verification outcome.  Summary counts are always derived from
// the case list, so they cannot drift out of sync.
struct Report {
  std::string suite;
  std::vector<Case> cases;
  long seed = 0;

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }

  // Single JSON document; byte-deterministic for fixed suite input and seed.
  std::string to_json() const;
  // Human-readable table.
  std::string to_table() const;
};

}  // namespace diracops
