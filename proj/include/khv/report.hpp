#pragma once

#include <string>
#include <utility>
#include <vector>

namespace khv {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string observed;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<CheckResult> results;

  bool verdict() const;
  std::string text() const;
  std::string json_text() const;
};

}  // namespace khv
