#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

namespace cotrans {

// Outcome of one named check within a verification suite.
struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  bool passed = true;
  std::vector<std::string> witnesses;

  static constexpr std::size_t kMaxWitnesses = 8;

  void record(double residual, bool ok, const std::string& witness) {
    ++samples;
    if (residual > max_residual) max_residual = residual;
    if (!ok) {
      passed = false;
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
    }
  }
};

struct Report {
  // deque: add() hands out references that must survive later additions
  std::deque<CheckResult> checks;

  CheckResult& add(const std::string& name) {
    checks.push_back(CheckResult{name});
    return checks.back();
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

// Human-readable table, failing rows first.
std::string render(const Report& report);

}  // namespace cotrans
