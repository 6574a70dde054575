#pragma once

#include <string>
#include <vector>

namespace jacobi {

struct Check {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string witness;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string id, std::string anchor, bool pass, std::string witness = {}) {
    checks.push_back({std::move(id), std::move(anchor), pass, pass ? std::string() : std::move(witness)});
  }
  void append(const VerifyReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

}  // namespace jacobi
