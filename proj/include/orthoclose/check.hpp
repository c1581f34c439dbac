#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace orthoclose {

/// Outcome of one named property check; keeps only the first counterexample.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;
  std::size_t cases = 0;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void fail(std::string why) {
    if (passed) counterexample = std::move(why);
    passed = false;
  }
  /// Records a case; `why()` is only evaluated for the first failure.
  template <typename F>
  bool expect(bool ok, F&& why) {
    ++cases;
    if (!ok) {
      if (passed) counterexample = why();
      passed = false;
    }
    return ok;
  }
};

struct CheckReport {
  // deque: add() hands out references that must survive later adds.
  std::deque<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  CheckResult& add(std::string name) {
    checks.push_back(CheckResult{std::move(name)});
    return checks.back();
  }
  std::string summary() const {
    if (const CheckResult* f = first_failure()) return f->name + ": " + f->counterexample;
    return "ok";
  }
};

}  // namespace orthoclose
