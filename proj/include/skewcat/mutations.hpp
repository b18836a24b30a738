#pragma once

#include "skewcat/instances.hpp"

namespace skewcat {

// Deliberately broken fixtures, one per suite: each applies a single
// documented mutation to a passing instance and runs the suite, which must
// fail with a concrete witness. Used by the soundness tests and the CLI's
// mutation-fixture instance kind.
struct MutationOutcome {
  std::string suite;
  std::string description;
  CheckReport report;
};

std::vector<std::string> mutation_names();
MutationOutcome run_mutation(const std::string& suite, int max_size);
std::vector<MutationOutcome> run_all_mutations(int max_size);

} // namespace skewcat
