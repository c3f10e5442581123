#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace horolib {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::json counterexample;  // null when passed
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add(std::string name, bool passed, std::string detail = {}, nlohmann::json counterexample = nullptr);
  // Appends other's checks with "prefix/" prepended to their names.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::vector<CheckResult> failures() const;
  // Checks sorted by name, plus an overall "passed" flag.
  nlohmann::json to_json() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace horolib
