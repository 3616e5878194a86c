#pragma once

#include <map>
#include <string>
#include <vector>

namespace cosetmg {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
  std::map<std::string, long long> cardinalities;
};

struct Report {
  std::string command;
  std::map<std::string, std::string> meta;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  Check& add(const std::string& name) {
    checks.push_back(Check{name, true, "", {}});
    return checks.back();
  }
};

}  // namespace cosetmg
