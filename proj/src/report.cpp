#include "horolib/report.hpp"

#include <algorithm>

namespace horolib {

void Report::add(std::string name, bool passed, std::string detail, nlohmann::json counterexample) {
  checks_.push_back({std::move(name), passed, std::move(detail), std::move(counterexample)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + "/" + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> Report::failures() const {
  std::vector<CheckResult> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c);
  return out;
}

nlohmann::json Report::to_json() const {
  auto sorted = checks_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : sorted) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
    checks.push_back(j);
  }
  return {{"passed", passed()}, {"checks", checks}};
}

}  // namespace horolib
