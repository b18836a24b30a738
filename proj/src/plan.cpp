#include "skewcat/plan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "skewcat/error.hpp"
#include "skewcat/mutations.hpp"

namespace skewcat {

const std::vector<std::string>& suite_vocabulary() {
  static const std::vector<std::string> v = {
      "skew",     "action",     "adjunction", "lax",    "oplax",         "braiding-left",
      "braiding-right", "symmetry", "closedness", "probes", "theorem-checks"};
  return v;
}

const std::vector<std::string>& instance_kinds() {
  static const std::vector<std::string> v = {"monoid",           "self-action",
                                             "functor-category", "copower",
                                             "power",            "exponential-warping",
                                             "mutation-fixture"};
  return v;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct RawSection {
  std::string header;
  int line;
  std::vector<std::pair<int, std::string>> entries; // (line, "key = value")
};

MonoidTable builtin_monoid(const std::string& name, int line) {
  if (name == "trivial") return MonoidTable::trivial();
  if (name == "Z2") return MonoidTable::cyclic(2);
  if (name == "Z3") return MonoidTable::cyclic(3);
  if (name == "OR") return MonoidTable::boolean_or();
  throw SchemaError(line, "builtin", "unknown builtin monoid '" + name + "'");
}

InstanceSpec parse_monoid_section(const RawSection& sec) {
  InstanceSpec spec;
  spec.kind = "monoid";
  spec.line = sec.line;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  std::optional<int> identity;
  std::string name = "monoid";
  for (const auto& [line, entry] : sec.entries) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw SchemaError(line, entry, "expected 'key = value'");
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (key == "builtin") {
      if (value == "all-leq-3")
        spec.monoid_all = true;
      else
        spec.monoid = builtin_monoid(value, line);
    } else if (key == "name") {
      name = value;
    } else if (key == "elements") {
      elements = split_ws(value);
    } else if (key == "identity") {
      identity = std::stoi(value);
    } else if (key == "table") {
      std::string row;
      std::istringstream rows(value);
      while (std::getline(rows, row, ';')) {
        std::vector<int> r;
        for (const auto& tok : split_ws(row)) r.push_back(std::stoi(tok));
        table.push_back(std::move(r));
      }
    } else {
      throw SchemaError(line, key, "unknown field for a monoid instance");
    }
  }
  if (!spec.monoid && !spec.monoid_all) {
    if (elements.empty() || table.empty() || !identity)
      throw SchemaError(sec.line, "instance monoid",
                        "needs either 'builtin' or 'elements'+'table'+'identity'");
    MonoidTable m{name, elements, table, *identity};
    try {
      m.validate();
    } catch (const MonoidError& e) {
      throw SchemaError(sec.line, "table", e.what());
    }
    spec.monoid = m;
  }
  return spec;
}

FinSet parse_j(const RawSection& sec) {
  for (const auto& [line, entry] : sec.entries) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw SchemaError(line, entry, "expected 'key = value'");
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (key != "j") throw SchemaError(line, key, "only 'j' is valid for this instance kind");
    return FinSet::atoms(split_ws(value));
  }
  return FinSet::range(2, "t"); // documented default: a two-element unit object
}

InstanceSpec parse_functor_category(const RawSection& sec) {
  InstanceSpec spec;
  spec.kind = "functor-category";
  spec.line = sec.line;

  std::vector<std::string> objects;
  struct RawArrow {
    std::string name, dom, cod;
  };
  std::vector<RawArrow> arrows;
  std::vector<std::pair<int, std::string>> functor_lines;

  for (const auto& [line, entry] : sec.entries) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw SchemaError(line, entry, "expected 'key = value'");
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (key == "objects") {
      objects = split_ws(value);
    } else if (key == "arrow") {
      auto toks = split_ws(value);
      if (toks.size() != 3) throw SchemaError(line, key, "expected 'arrow = name dom cod'");
      arrows.push_back({toks[0], toks[1], toks[2]});
    } else if (key == "functor") {
      functor_lines.emplace_back(line, value);
    } else {
      throw SchemaError(line, key, "unknown field for a functor-category instance");
    }
  }
  if (objects.empty()) throw SchemaError(sec.line, "objects", "functor-category needs objects");
  if (functor_lines.size() < 2)
    throw SchemaError(sec.line, "functor",
                      "functor-category needs J plus at least one palette functor");

  auto obj_index = [&objects](const std::string& n, int line) {
    for (int i = 0; i < static_cast<int>(objects.size()); ++i)
      if (objects[i] == n) return i;
    throw SchemaError(line, "arrow", "unknown object '" + n + "'");
  };

  auto shape = std::make_shared<FinPresCat>();
  shape->objects = objects;
  for (const auto& o : objects) {
    shape->arrows.push_back({"id_" + o, obj_index(o, sec.line), obj_index(o, sec.line)});
    shape->identity.push_back(static_cast<int>(shape->arrows.size()) - 1);
  }
  for (const auto& a : arrows)
    shape->arrows.push_back({a.name, obj_index(a.dom, sec.line), obj_index(a.cod, sec.line)});
  int na = shape->n_arrows();
  shape->comp.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f) {
      if (!shape->composable(g, f)) continue;
      if (shape->identity[shape->arrows[f].cod] == g)
        shape->comp[g][f] = f;
      else if (shape->identity[shape->arrows[f].cod] == f || shape->arrows[f].name.rfind("id_", 0) == 0)
        shape->comp[g][f] = g;
      // composites of two generators are not supported by the plan grammar
    }
  for (int g = 0; g < na; ++g)
    for (int f = 0; f < na; ++f)
      if (shape->composable(g, f) && shape->comp[g][f] < 0)
        throw SchemaError(sec.line, "arrow",
                          "plan grammar supports at most one composable generator chain "
                          "(composite " + shape->arrows[g].name + "." + shape->arrows[f].name +
                          " undefined)");

  // functor = NAME | obj : e e | ... | arrow : e>e e>e
  for (const auto& [line, value] : functor_lines) {
    std::istringstream parts(value);
    std::string seg;
    std::vector<std::string> segs;
    while (std::getline(parts, seg, '|')) segs.push_back(trim(seg));
    if (segs.empty()) throw SchemaError(line, "functor", "empty functor description");
    std::string fname = segs[0];
    std::vector<FinSet> at_obj(shape->n_objects());
    std::vector<bool> have_obj(shape->n_objects(), false);
    std::vector<FinFn> at_arrow;
    std::vector<std::pair<int, std::vector<std::string>>> arrow_specs;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      auto colon = segs[i].find(':');
      if (colon == std::string::npos)
        throw SchemaError(line, "functor", "expected 'name : values' in '" + segs[i] + "'");
      std::string target = trim(segs[i].substr(0, colon));
      auto values = split_ws(segs[i].substr(colon + 1));
      bool matched = false;
      for (int c = 0; c < shape->n_objects(); ++c)
        if (shape->objects[c] == target) {
          at_obj[c] = FinSet::atoms(values);
          have_obj[c] = true;
          matched = true;
        }
      if (matched) continue;
      for (int a = 0; a < shape->n_arrows(); ++a)
        if (shape->arrows[a].name == target) {
          arrow_specs.emplace_back(a, values);
          matched = true;
        }
      if (!matched) throw SchemaError(line, "functor", "unknown object or arrow '" + target + "'");
    }
    for (int c = 0; c < shape->n_objects(); ++c)
      if (!have_obj[c])
        throw SchemaError(line, "functor",
                          fname + " missing a value for object " + shape->objects[c]);
    // Identities are implicit; generators come from the arrow specs x>y.
    at_arrow.reserve(shape->n_arrows());
    for (int a = 0; a < shape->n_arrows(); ++a) {
      if (shape->identity[shape->arrows[a].dom] == a &&
          shape->arrows[a].dom == shape->arrows[a].cod &&
          shape->arrows[a].name.rfind("id_", 0) == 0) {
        at_arrow.push_back(FinFn::identity(at_obj[shape->arrows[a].dom]));
        continue;
      }
      const std::vector<std::string>* spec_values = nullptr;
      int spec_line = line;
      for (const auto& [ai, values] : arrow_specs)
        if (ai == a) spec_values = &values;
      if (!spec_values)
        throw SchemaError(spec_line, "functor",
                          fname + " missing a value for arrow " + shape->arrows[a].name);
      const FinSet& dom = at_obj[shape->arrows[a].dom];
      const FinSet& cod = at_obj[shape->arrows[a].cod];
      std::vector<int> table(dom.size(), -1);
      for (const auto& m : *spec_values) {
        auto gt = m.find('>');
        if (gt == std::string::npos)
          throw SchemaError(spec_line, "functor", "expected mappings 'x>y', got '" + m + "'");
        auto di = dom.index_of(Label::atom(m.substr(0, gt)));
        auto ci = cod.index_of(Label::atom(m.substr(gt + 1)));
        if (!di || !ci)
          throw SchemaError(spec_line, "functor", "mapping '" + m + "' uses unknown elements");
        table[*di] = *ci;
      }
      for (int i = 0; i < dom.size(); ++i)
        if (table[i] < 0)
          throw SchemaError(spec_line, "functor",
                            fname + " arrow " + shape->arrows[a].name + " is not total");
      at_arrow.emplace_back(dom, cod, table);
    }
    try {
      spec.functors.push_back(make_func_obj(shape, at_obj, at_arrow, fname));
    } catch (const FunctorError& e) {
      throw SchemaError(line, "functor", e.what());
    }
  }
  spec.shape = shape;
  return spec;
}

} // namespace

CheckPlan parse_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<RawSection> sections;
  bool have_header = false;
  CheckPlan plan;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_header) {
      auto toks = split_ws(t);
      if (toks.size() != 2 || toks[0] != "skewcheck")
        throw SchemaError(lineno, "header", "plan must start with 'skewcheck <version>'");
      plan.version = std::stoi(toks[1]);
      if (plan.version != 1)
        throw SchemaError(lineno, "header", "unsupported plan version " + toks[1]);
      have_header = true;
      continue;
    }
    if (t.front() == '[') {
      if (t.back() != ']') throw SchemaError(lineno, t, "unterminated section header");
      sections.push_back({trim(t.substr(1, t.size() - 2)), lineno, {}});
      continue;
    }
    if (sections.empty()) throw SchemaError(lineno, t, "entry outside any section");
    sections.back().entries.emplace_back(lineno, t);
  }
  if (!have_header) throw SchemaError(lineno, "header", "empty plan");

  bool have_run = false;
  for (const auto& sec : sections) {
    auto toks = split_ws(sec.header);
    if (toks.size() == 2 && toks[0] == "instance") {
      const std::string& kind = toks[1];
      if (std::find(instance_kinds().begin(), instance_kinds().end(), kind) ==
          instance_kinds().end())
        throw SchemaError(sec.line, "instance", "unknown instance kind '" + kind + "'");
      if (kind == "monoid") {
        plan.instances.push_back(parse_monoid_section(sec));
      } else if (kind == "functor-category") {
        plan.instances.push_back(parse_functor_category(sec));
      } else if (kind == "mutation-fixture") {
        InstanceSpec spec;
        spec.kind = kind;
        spec.line = sec.line;
        spec.mutation_target = "all";
        for (const auto& [l, entry] : sec.entries) {
          auto eq = entry.find('=');
          if (eq == std::string::npos) throw SchemaError(l, entry, "expected 'key = value'");
          std::string key = trim(entry.substr(0, eq));
          std::string value = trim(entry.substr(eq + 1));
          if (key != "target")
            throw SchemaError(l, key, "only 'target' is valid for mutation-fixture");
          if (value != "all" &&
              std::find(suite_vocabulary().begin(), suite_vocabulary().end(), value) ==
                  suite_vocabulary().end())
            throw SchemaError(l, "target", "unknown suite '" + value + "'");
          spec.mutation_target = value;
        }
        plan.instances.push_back(spec);
      } else if (kind == "self-action") {
        if (!sec.entries.empty())
          throw SchemaError(sec.entries.front().first, sec.entries.front().second,
                            "self-action takes no parameters");
        InstanceSpec spec;
        spec.kind = kind;
        spec.line = sec.line;
        plan.instances.push_back(spec);
      } else { // copower / power / exponential-warping
        InstanceSpec spec;
        spec.kind = kind;
        spec.line = sec.line;
        spec.j = parse_j(sec);
        plan.instances.push_back(spec);
      }
    } else if (sec.header == "run") {
      have_run = true;
      for (const auto& [l, entry] : sec.entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) throw SchemaError(l, entry, "expected 'key = value'");
        std::string key = trim(entry.substr(0, eq));
        std::string value = trim(entry.substr(eq + 1));
        if (key == "suites") {
          for (const auto& s : split_ws(value)) {
            if (std::find(suite_vocabulary().begin(), suite_vocabulary().end(), s) ==
                suite_vocabulary().end())
              throw SchemaError(l, "suites", "unknown suite '" + s + "'");
            plan.suites.push_back(s);
          }
        } else if (key == "max-size") {
          plan.max_size = std::stoi(value);
          plan.max_size_defaulted = false;
          if (plan.max_size < 1) throw SchemaError(l, "max-size", "bound must be >= 1");
        } else if (key == "seed") {
          plan.seed = static_cast<unsigned>(std::stoul(value));
        } else {
          throw SchemaError(l, key, "unknown field in [run]");
        }
      }
    } else {
      throw SchemaError(sec.line, sec.header, "unknown section");
    }
  }
  if (!have_run || plan.suites.empty())
    throw SchemaError(lineno, "run", "plan needs a [run] section with a non-empty 'suites' list");
  if (plan.instances.empty()) throw SchemaError(lineno, "instance", "plan has no instances");
  return plan;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

namespace {

constexpr int kPaletteCap = 5; // larger palettes are subsampled (seeded, recorded)

struct ResolvedInstance {
  Instance inst;
  std::string title;
};

std::vector<ResolvedInstance> resolve(const InstanceSpec& spec) {
  std::vector<ResolvedInstance> out;
  if (spec.kind == "monoid") {
    if (spec.monoid_all) {
      for (const auto& m : monoids_up_to(3))
        out.push_back({monoid_warping(m), "monoid " + m.name});
    } else {
      out.push_back({monoid_warping(*spec.monoid), "monoid " + spec.monoid->name});
    }
  } else if (spec.kind == "self-action") {
    out.push_back({self_action_instance(), "self-action"});
  } else if (spec.kind == "copower") {
    out.push_back({copower_instance(*spec.j), "copower j=" + spec.j->str()});
  } else if (spec.kind == "power") {
    out.push_back({power_instance(*spec.j), "power j=" + spec.j->str()});
  } else if (spec.kind == "exponential-warping") {
    out.push_back(
        {exponential_warping_instance(*spec.j), "exponential-warping j=" + spec.j->str()});
  } else if (spec.kind == "functor-category") {
    std::vector<FuncObj> palette(spec.functors.begin() + 1, spec.functors.end());
    out.push_back({functor_category_instance(spec.shape, spec.functors.front(), palette),
                   "functor-category"});
  }
  return out;
}

std::vector<Obj> maybe_subsample(std::vector<Obj> objs, const CheckPlan& plan,
                                 std::vector<std::string>& notes) {
  if (static_cast<int>(objs.size()) <= kPaletteCap) return objs;
  unsigned seed = plan.seed.value_or(0);
  std::mt19937 rng(seed);
  std::shuffle(objs.begin(), objs.end(), rng);
  objs.resize(kPaletteCap);
  notes.push_back("palette subsampled to " + std::to_string(kPaletteCap) +
                  " objects (seed " + std::to_string(seed) + ")");
  return objs;
}

void run_instance_suites(const CheckPlan& plan, const ResolvedInstance& ri, InstanceRun& run) {
  const Instance& inst = ri.inst;
  int n = plan.max_size;
  std::vector<Obj> aobjs = maybe_subsample(inst.apalette(n), plan, run.notes);
  std::vector<Obj> vobjs = maybe_subsample(inst.vpalette(n), plan, run.notes);
  for (const auto& note : inst.notes) run.notes.push_back(note);
  run.notes.push_back("palette bounds: carriers of size <= " + std::to_string(n));

  // Pre-flight: action axioms and triangle identities always run first.
  CheckReport action_report = check_strong_action(inst.action, vobjs, aobjs);
  action_report.note("pre-flight");
  bool source_is_carrier = inst.variant == Variant::LL || inst.variant == Variant::RL;
  CheckReport adj_report = check_adjunction_triangles(
      inst.adj, source_is_carrier ? aobjs : vobjs, source_is_carrier ? vobjs : aobjs);
  adj_report.note("pre-flight");
  run.suites.push_back(action_report);
  run.suites.push_back(adj_report);

  bool wants = false;
  auto requested = [&plan, &wants](const std::string& s) {
    bool r = std::find(plan.suites.begin(), plan.suites.end(), s) != plan.suites.end();
    wants = wants || r;
    return r;
  };

  std::optional<BuiltSkew> built;
  auto ensure_built = [&]() -> BuiltSkew& {
    if (!built) built = build_skew_structure(inst.action, inst.adj, inst.variant, aobjs);
    return *built;
  };

  try {
    if (requested("skew")) {
      CheckReport r = check_skew_monoidal(ensure_built().data, aobjs);
      r.note("variant " + to_string(inst.variant));
      run.suites.push_back(r);
    }
    if (requested("lax"))
      run.suites.push_back(check_lax_monoidal(build_lax_on_right_adjoint(ensure_built()), vobjs));
    if (requested("oplax"))
      run.suites.push_back(
          check_oplax_monoidal(build_oplax_on_left_adjoint(ensure_built()), aobjs));
    if (requested("braiding-left") || requested("braiding-right") || requested("symmetry")) {
      if (!inst.braiding) {
        run.errors.push_back("instance has no acting braiding; braiding suites not applicable");
      } else if (inst.variant != Variant::LL && inst.variant != Variant::RR) {
        run.errors.push_back("braiding construction needs variant LL or RR");
      } else {
        SkewBraiding sb = build_braiding(ensure_built(), inst.action, inst.adj, *inst.braiding,
                                         vobjs);
        bool is_left = sb.side == Side::Left;
        if (requested("braiding-left")) {
          if (is_left)
            run.suites.push_back(check_left_braiding(sb, aobjs));
          else
            run.errors.push_back("this instance induces a right braiding, not a left one");
        }
        if (requested("braiding-right")) {
          if (!is_left)
            run.suites.push_back(check_right_braiding(sb, aobjs));
          else
            run.errors.push_back("this instance induces a left braiding, not a right one");
        }
        if (requested("symmetry")) run.suites.push_back(check_symmetry(sb, aobjs));
      }
    }
    if (requested("closedness")) {
      if (!inst.left_hom || !inst.right_hom) {
        run.errors.push_back("instance has no internal-hom candidates");
      } else {
        CheckReport left =
            check_closedness(ensure_built().data, *inst.left_hom, Side::Left, aobjs,
                             inst.aarrows(n));
        left.suite = "closedness-left";
        run.suites.push_back(left);
        CheckReport right =
            check_closedness(ensure_built().data, *inst.right_hom, Side::Right, aobjs,
                             inst.aarrows(n));
        right.suite = "closedness-right";
        run.suites.push_back(right);
      }
    }
    if (requested("probes")) run.suites.push_back(invertibility_probe(ensure_built(), aobjs));
    if (requested("theorem-checks")) {
      if (!inst.monoid) {
        run.errors.push_back("theorem-checks applies to monoid instances only");
      } else {
        std::vector<Obj> nonempty = finset_palette(1, n);
        GroupIffResult g = group_iff_check(*inst.monoid, ensure_built().data, nonempty);
        CheckReport r;
        r.suite = "theorem-checks";
        r.cases.push_back({"group-iff-associator", inst.monoid->name, !g.violation.has_value(),
                           g.violation.value_or("")});
        r.note(std::string("group: ") + (g.is_group ? "yes" : "no") +
               ", associator invertible: " + (g.associator_invertible ? "yes" : "no") +
               ", pairing oracle bijective: " + (g.oracle_bijective ? "yes" : "no"));
        CheckReport units = unit_invertibility_check(*inst.monoid, ensure_built().data, nonempty);
        for (auto& c : units.cases) r.cases.push_back(std::move(c));
        for (auto& note : units.notes) r.notes.push_back(std::move(note));
        run.suites.push_back(r);
      }
    }
  } catch (const SkewError& e) {
    run.errors.push_back(std::string("instance aborted: ") + e.what());
  }
}

} // namespace

int RunReport::total_failures() const {
  int n = 0;
  for (const auto& i : instances)
    for (const auto& s : i.suites) n += s.failures();
  return n;
}

int RunReport::total_errors() const {
  int n = 0;
  for (const auto& i : instances) n += static_cast<int>(i.errors.size());
  return n;
}

int RunReport::exit_code() const {
  if (total_failures() > 0) return 1;
  if (total_errors() > 0) return 2;
  return 0;
}

RunReport run_checks(const CheckPlan& plan) {
  RunReport report;
  report.max_size = plan.max_size;
  report.seed = plan.seed;
  report.suites_requested = plan.suites;

  for (const auto& spec : plan.instances) {
    if (spec.kind == "mutation-fixture") {
      InstanceRun run;
      run.kind = spec.kind;
      run.describe = "mutation fixtures (" + spec.mutation_target + ")";
      try {
        std::vector<MutationOutcome> outcomes =
            spec.mutation_target == "all"
                ? run_all_mutations(plan.max_size)
                : std::vector<MutationOutcome>{run_mutation(spec.mutation_target, plan.max_size)};
        for (auto& o : outcomes) {
          o.report.note("mutation: " + o.description);
          run.suites.push_back(std::move(o.report));
        }
      } catch (const SkewError& e) {
        run.errors.push_back(e.what());
      }
      report.instances.push_back(std::move(run));
      continue;
    }
    std::vector<ResolvedInstance> resolved;
    try {
      resolved = resolve(spec);
    } catch (const SkewError& e) {
      InstanceRun run;
      run.kind = spec.kind;
      run.describe = spec.kind;
      run.errors.push_back(std::string("instance construction failed: ") + e.what());
      report.instances.push_back(std::move(run));
      continue;
    }
    for (const auto& ri : resolved) {
      InstanceRun run;
      run.kind = spec.kind;
      run.describe = ri.title;
      run_instance_suites(plan, ri, run);
      report.instances.push_back(std::move(run));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

std::string emit_human(const RunReport& report) {
  std::ostringstream out;
  out << "skewcheck report v" << report.version << "\n";
  out << "palette bound: carriers of size <= " << report.max_size;
  if (report.seed) out << ", seed " << *report.seed;
  out << "\nsuites requested:";
  for (const auto& s : report.suites_requested) out << " " << s;
  out << "\n\n";
  for (const auto& inst : report.instances) {
    out << "instance " << inst.describe << "\n";
    for (const auto& note : inst.notes) out << "  note: " << note << "\n";
    for (const auto& err : inst.errors) out << "  ERROR: " << err << "\n";
    for (const auto& suite : inst.suites) {
      out << "  " << suite.summary() << "\n";
      for (const auto& n : suite.notes) out << "    note: " << n << "\n";
      for (const auto& c : suite.cases) {
        if (c.passed && !c.skipped && c.witness.empty()) continue;
        if (c.skipped) {
          out << "    SKIP " << c.axiom << " at " << c.objects << " -- " << c.witness << "\n";
        } else if (!c.passed) {
          out << "    FAIL " << c.axiom << " at " << c.objects << " -- " << c.witness << "\n";
        } else if (c.axiom.rfind("probe:", 0) == 0) {
          out << "    " << c.axiom << " at " << c.objects << ": " << c.witness << "\n";
        }
      }
    }
    out << "\n";
  }
  out << "total failures: " << report.total_failures() << ", errors: " << report.total_errors()
      << "\n";
  return out.str();
}

namespace {

nlohmann::json case_to_json(const CaseResult& c) {
  nlohmann::json j;
  j["axiom"] = c.axiom;
  j["objects"] = c.objects;
  j["passed"] = c.passed;
  j["witness"] = c.witness;
  j["skipped"] = c.skipped;
  return j;
}

CaseResult case_from_json(const nlohmann::json& j) {
  return CaseResult{j.at("axiom").get<std::string>(), j.at("objects").get<std::string>(),
                    j.at("passed").get<bool>(), j.at("witness").get<std::string>(),
                    j.at("skipped").get<bool>()};
}

} // namespace

std::string emit_machine(const RunReport& report) {
  nlohmann::json j;
  j["skewcheck-report"] = report.version;
  j["max-size"] = report.max_size;
  if (report.seed)
    j["seed"] = *report.seed;
  else
    j["seed"] = nullptr;
  j["suites-requested"] = report.suites_requested;
  j["instances"] = nlohmann::json::array();
  for (const auto& inst : report.instances) {
    nlohmann::json ji;
    ji["kind"] = inst.kind;
    ji["describe"] = inst.describe;
    ji["notes"] = inst.notes;
    ji["errors"] = inst.errors;
    ji["suites"] = nlohmann::json::array();
    for (const auto& suite : inst.suites) {
      nlohmann::json js;
      js["suite"] = suite.suite;
      js["notes"] = suite.notes;
      js["cases"] = nlohmann::json::array();
      for (const auto& c : suite.cases) js["cases"].push_back(case_to_json(c));
      ji["suites"].push_back(js);
    }
    j["instances"].push_back(ji);
  }
  j["summary"] = {{"failures", report.total_failures()}, {"errors", report.total_errors()}};
  return j.dump(2) + "\n";
}

RunReport parse_machine(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunReport report;
  report.version = j.at("skewcheck-report").get<int>();
  report.max_size = j.at("max-size").get<int>();
  if (!j.at("seed").is_null()) report.seed = j.at("seed").get<unsigned>();
  report.suites_requested = j.at("suites-requested").get<std::vector<std::string>>();
  for (const auto& ji : j.at("instances")) {
    InstanceRun inst;
    inst.kind = ji.at("kind").get<std::string>();
    inst.describe = ji.at("describe").get<std::string>();
    inst.notes = ji.at("notes").get<std::vector<std::string>>();
    inst.errors = ji.at("errors").get<std::vector<std::string>>();
    for (const auto& js : ji.at("suites")) {
      CheckReport suite;
      suite.suite = js.at("suite").get<std::string>();
      suite.notes = js.at("notes").get<std::vector<std::string>>();
      for (const auto& jc : js.at("cases")) suite.cases.push_back(case_from_json(jc));
      inst.suites.push_back(std::move(suite));
    }
    report.instances.push_back(std::move(inst));
  }
  return report;
}

} // namespace skewcat
