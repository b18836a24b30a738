#pragma once

#include <optional>

#include "skewcat/instances.hpp"

namespace skewcat {

// One instance block of a plan file.
struct InstanceSpec {
  std::string kind;
  int line = 0;
  std::optional<MonoidTable> monoid; // kind == monoid
  bool monoid_all = false;           // builtin = all-leq-3
  std::optional<FinSet> j;           // copower / power / exponential-warping
  std::shared_ptr<FinPresCat> shape; // functor-category
  std::vector<FuncObj> functors;     // functor-category: first entry is J
  std::string mutation_target;       // mutation-fixture: suite name or "all"
};

struct CheckPlan {
  int version = 1;
  std::vector<InstanceSpec> instances;
  std::vector<std::string> suites;
  int max_size = 2;
  bool max_size_defaulted = true;
  std::optional<unsigned> seed;
};

const std::vector<std::string>& suite_vocabulary();
const std::vector<std::string>& instance_kinds();

// Parses the plan text; SchemaError with line/field diagnostics on violation.
CheckPlan parse_spec(const std::string& text);

struct InstanceRun {
  std::string kind;
  std::string describe;
  std::vector<std::string> notes;
  std::vector<CheckReport> suites;
  std::vector<std::string> errors; // construction/configuration diagnostics
};

struct RunReport {
  int version = 1;
  int max_size = 2;
  std::optional<unsigned> seed;
  std::vector<std::string> suites_requested;
  std::vector<InstanceRun> instances;

  int total_failures() const;
  int total_errors() const;
  // 0: no failures, no errors; 1: at least one axiom failure; 2: errors.
  int exit_code() const;
};

RunReport run_checks(const CheckPlan& plan);

std::string emit_human(const RunReport& report);
std::string emit_machine(const RunReport& report); // versioned JSON
RunReport parse_machine(const std::string& text);  // inverse of emit_machine

} // namespace skewcat
