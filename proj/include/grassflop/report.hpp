#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace grassflop {

// Outcome of one verification: first_failure is null on success.
struct CheckResult {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  nlohmann::json first_failure = nullptr;
  nlohmann::json metadata = nullptr;

  void fail(nlohmann::json why) {
    if (pass) first_failure = std::move(why);
    pass = false;
  }
  explicit operator bool() const { return pass; }
};

inline void to_json(nlohmann::json& j, const CheckResult& c) {
  j = {{"name", c.name}, {"params", c.params}, {"pass", c.pass}, {"first_failure", c.first_failure}};
  if (!c.metadata.is_null()) j["metadata"] = c.metadata;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace grassflop
