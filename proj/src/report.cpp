#include "diracops/report.hpp"

#include <json.hpp>
#include <sstream>

namespace diracops {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "flagged";
  }
}

int Report::count(Status s) const {
  int n = 0;
  for (const auto& c : cases)
    if (c.status == s) ++n;
  return n;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["status"] = to_string(c.status);
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["note"] = c.note;
    j["cases"].push_back(jc);
  }
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"flagged", count(Status::Flagged)}};
  j["seed"] = seed;
  j["version"] = kEngineVersion;
  return j.dump(2) + "\n";
}

std::string Report::to_table() const {
  std::ostringstream os;
  os << "suite: " << suite << " (seed " << seed << ")\n";
  for (const auto& c : cases) {
    os << "  [" << to_string(c.status) << "] " << c.id;
    if (c.status != Status::Pass || !c.note.empty()) {
      os << "\n      expected: " << c.expected << "\n      computed: " << c.computed;
      if (!c.note.empty()) os << "\n      note: " << c.note;
    }
    os << "\n";
  }
  os << "  summary: " << count(Status::Pass) << " pass, " << count(Status::Fail)
     << " fail, " << count(Status::Flagged) << " flagged\n";
  return os.str();
}

}  // namespace diracops
