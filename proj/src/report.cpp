#include "skewcat/report.hpp"

namespace skewcat {

std::string CheckReport::summary() const {
  std::string s = suite + ": " + (ok() ? "PASS" : "FAIL") + " (" + std::to_string(passes()) +
                  "/" + std::to_string(total()) + " cases";
  if (failures() > 0) s += ", " + std::to_string(failures()) + " failed";
  if (skips() > 0) s += ", " + std::to_string(skips()) + " skipped by size guard";
  return s + ")";
}

std::string CheckReport::render() const {
  std::string out = summary() + "\n";
  for (const auto& n : notes) out += "  note: " + n + "\n";
  for (const auto& c : cases) {
    if (c.passed) continue;
    out += "  FAIL " + c.axiom + " at " + c.objects;
    if (!c.witness.empty()) out += " -- " + c.witness;
    out += "\n";
  }
  return out;
}

std::vector<CaseResult> CheckReport::failed() const {
  std::vector<CaseResult> out;
  for (const auto& c : cases)
    if (!c.passed) out.push_back(c);
  return out;
}

} // namespace skewcat
