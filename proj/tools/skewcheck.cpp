#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewcat/error.hpp"
#include "skewcat/plan.hpp"

using namespace skewcat;

namespace {

struct CommonOpts {
  std::string spec_path;
  int max_size = -1;
  std::string report_path;
  std::string format = "human";
  int64_t seed = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("spec-file", opts.spec_path, "plan file to run")->required();
  cmd->add_option("--max-size", opts.max_size, "palette bound: carriers of size <= N");
  cmd->add_option("--report", opts.report_path, "write the report to this path");
  cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--seed", opts.seed,
                  "seed for palette subsampling when bounds exceed exhaustive limits");
}

int run(const CommonOpts& opts, bool probes_only) {
  std::ifstream in(opts.spec_path);
  if (!in) {
    std::cerr << "error: cannot read plan file " << opts.spec_path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  CheckPlan plan;
  try {
    plan = parse_spec(buffer.str());
  } catch (const SchemaError& e) {
    std::cerr << "plan error: " << e.what() << "\n";
    return 2;
  }
  if (opts.max_size > 0) {
    plan.max_size = opts.max_size;
    plan.max_size_defaulted = false;
  }
  if (opts.seed >= 0) plan.seed = static_cast<unsigned>(opts.seed);
  if (probes_only) plan.suites = {"probes"};

  RunReport report;
  try {
    report = run_checks(plan);
  } catch (const SkewError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string rendered = opts.format == "machine" ? emit_machine(report) : emit_human(report);
  if (opts.report_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(opts.report_path);
    if (!out) {
      std::cerr << "error: cannot write report to " << opts.report_path << "\n";
      return 2;
    }
    out << rendered;
    if (!out) {
      std::cerr << "error: failed while writing " << opts.report_path << "\n";
      return 2;
    }
  }
  return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewcheck: builds skew monoidal structures from strong actions and "
               "verifies their coherence laws on finite carriers"};
  app.require_subcommand(1);

  CommonOpts check_opts, probe_opts;
  CLI::App* check = app.add_subcommand("check", "run the plan's suites");
  add_common(check, check_opts);
  CLI::App* probe = app.add_subcommand("probe", "run invertibility probes only");
  add_common(probe, probe_opts);
  CLI::App* list = app.add_subcommand("instances", "list built-in instance kinds");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    std::cout << "instance kinds:\n";
    std::cout << "  monoid               parameters: builtin = trivial|Z2|Z3|OR|all-leq-3,\n"
                 "                       or elements/table/identity (row-major matrix)\n";
    std::cout << "  self-action          no parameters (FinSet cartesian)\n";
    std::cout << "  functor-category     parameters: objects, arrow (one generator),\n"
                 "                       functor = NAME | obj : elems | arrow : x>y ... (first is J)\n";
    std::cout << "  copower              parameter: j = element labels (default t0 t1)\n";
    std::cout << "  power                parameter: j = element labels (default t0 t1)\n";
    std::cout << "  exponential-warping  parameter: j = element labels (default t0 t1)\n";
    std::cout << "  mutation-fixture     parameter: target = all|<suite>\n";
    std::cout << "suites: ";
    for (const auto& s : suite_vocabulary()) std::cout << s << " ";
    std::cout << "\n";
    return 0;
  }

  return run(check->parsed() ? check_opts : probe_opts, probe->parsed());
}
