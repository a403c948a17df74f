#include "khv/report.hpp"

#include <sstream>

#include "json.hpp"

namespace khv {

bool Report::verdict() const {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const CheckResult& r : results) {
    os << (r.pass ? "pass" : "FAIL") << "  " << r.name;
    if (!r.expected.empty()) os << "  expected: " << r.expected;
    if (!r.observed.empty()) os << "  observed: " << r.observed;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << "\n";
  }
  os << (verdict() ? "verdict: pass" : "verdict: FAIL") << "\n";
  return os.str();
}

std::string Report::json_text() const {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["inputs"] = nlohmann::json::object();
  for (auto& [k, v] : inputs) j["inputs"][k] = v;
  j["results"] = nlohmann::json::array();
  for (const CheckResult& r : results) {
    nlohmann::json e;
    e["name"] = r.name;
    e["pass"] = r.pass;
    if (!r.expected.empty()) e["expected"] = r.expected;
    if (!r.observed.empty()) e["observed"] = r.observed;
    if (!r.detail.empty()) e["detail"] = r.detail;
    j["results"].push_back(e);
  }
  j["verdict"] = verdict() ? "pass" : "fail";
  return j.dump(2);
}

}  // namespace khv
