#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewcat/report.hpp"

namespace skewcat {

// One independent unit of checking work: evaluate a diagram instance at a
// fixed object tuple and report the result. Cases never share mutable state.
struct CheckCase {
  std::string axiom;
  std::string objects;
  std::function<CaseResult()> run; // returns a CaseResult with axiom/objects filled by the runner
};

CheckCase make_case(std::string axiom, std::string objects,
                    std::function<std::pair<bool, std::string>()> body);

// Case bodies that compare two parallel morphisms are the common pattern;
// helpers in coherence.hpp build those.

enum class ExecPolicy {
  Serial,   // reference implementation, plain loop
  Parallel, // OpenMP when compiled in, otherwise falls back to Serial
};

ExecPolicy default_policy();
void set_default_policy(ExecPolicy p);
bool parallel_available();

// Evaluates all cases under the policy and merges results in case order, so
// the report is identical for both policies. Exceptions thrown by a case
// (StructureError etc.) are re-thrown after the loop, earliest case first.
CheckReport run_cases(const std::string& suite, const std::vector<CheckCase>& cases,
                      ExecPolicy policy);
CheckReport run_cases(const std::string& suite, const std::vector<CheckCase>& cases);

} // namespace skewcat
