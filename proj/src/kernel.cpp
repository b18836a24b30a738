#include "skewcat/kernel.hpp"

#include <atomic>
#include <exception>

#include "skewcat/error.hpp"

#ifdef SKEWCAT_HAS_OPENMP
#include <omp.h>
#endif

namespace skewcat {

namespace {
ExecPolicy g_default = ExecPolicy::Parallel;
}

CheckCase make_case(std::string axiom, std::string objects,
                    std::function<std::pair<bool, std::string>()> body) {
  CheckCase c;
  c.axiom = std::move(axiom);
  c.objects = std::move(objects);
  c.run = [axiom = c.axiom, objects = c.objects, body = std::move(body)]() {
    auto [ok, witness] = body();
    return CaseResult{axiom, objects, ok, ok ? std::string{} : witness};
  };
  return c;
}

ExecPolicy default_policy() { return g_default; }
void set_default_policy(ExecPolicy p) { g_default = p; }

bool parallel_available() {
#ifdef SKEWCAT_HAS_OPENMP
  return true;
#else
  return false;
#endif
}

CheckReport run_cases(const std::string& suite, const std::vector<CheckCase>& cases,
                      ExecPolicy policy) {
  CheckReport report;
  report.suite = suite;
  const int n = static_cast<int>(cases.size());
  std::vector<CaseResult> results(n);
  std::vector<std::exception_ptr> errors(n);

  auto eval_one = [&](int i) {
    try {
      results[i] = cases[i].run();
    } catch (const InfeasibleError& e) {
      results[i] = CaseResult{cases[i].axiom, cases[i].objects, true,
                              std::string("skipped: ") + e.what(), true};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

#ifdef SKEWCAT_HAS_OPENMP
  if (policy == ExecPolicy::Parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) eval_one(i);
    for (int i = 0; i < n; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
    report.cases = std::move(results);
    return report;
  }
#else
  (void)policy;
#endif

  for (int i = 0; i < n; ++i) eval_one(i);
  for (int i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  report.cases = std::move(results);
  return report;
}

CheckReport run_cases(const std::string& suite, const std::vector<CheckCase>& cases) {
  return run_cases(suite, cases, g_default);
}

} // namespace skewcat
