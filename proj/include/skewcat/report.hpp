#pragma once

#include <string>
#include <vector>

namespace skewcat {

struct CaseResult {
  std::string axiom;   // e.g. "LSkM1", "triangle-1", "probe:gamma"
  std::string objects; // rendered object tuple the case was evaluated at
  bool passed = true;
  std::string witness; // distinguishing element / reason when failed, or probe detail
  bool skipped = false; // case not evaluated (derived carrier exceeds the size guard)
};

// Aggregated result of one suite. Cases are kept in generation order, so a
// report is deterministic for a fixed palette regardless of execution policy.
struct CheckReport {
  std::string suite;
  std::vector<std::string> notes; // palette bounds, conventions, subsampling
  std::vector<CaseResult> cases;

  int total() const { return static_cast<int>(cases.size()); }
  int failures() const {
    int n = 0;
    for (const auto& c : cases)
      if (!c.passed) ++n;
    return n;
  }
  int skips() const {
    int n = 0;
    for (const auto& c : cases)
      if (c.skipped) ++n;
    return n;
  }
  int passes() const { return total() - failures() - skips(); }
  bool ok() const { return failures() == 0; }

  void note(std::string s) { notes.push_back(std::move(s)); }
  std::string summary() const;      // one line: suite, counts
  std::string render() const;       // stable multi-line text
  std::vector<CaseResult> failed() const;
};

} // namespace skewcat
