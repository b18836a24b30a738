#include "skewcat/mutations.hpp"

#include "skewcat/error.hpp"

namespace skewcat {
namespace {

// Transposition of the first two elements of a set, identity when too small.
FinFn head_swap(const FinSet& s) {
  std::vector<int> t(s.size());
  for (int i = 0; i < s.size(); ++i) t[i] = i;
  if (s.size() >= 2) std::swap(t[0], t[1]);
  return FinFn(s, s, std::move(t));
}

// Cycle of the first three elements, identity when too small.
FinFn head_cycle3(const FinSet& s) {
  std::vector<int> t(s.size());
  for (int i = 0; i < s.size(); ++i) t[i] = i;
  if (s.size() >= 3) {
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
  }
  return FinFn(s, s, std::move(t));
}

MutationOutcome mutate_skew(int n) {
  Instance inst = monoid_warping(MonoidTable::cyclic(2));
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  SkewMonoidal bad = built.data;
  const MonoidTable m = *inst.monoid;
  // rho sent to a |-> ((1,a),*) instead of ((0,a),*).
  bad.gamma = built.data.gamma;
  bad.rho = [m](const Obj& a) {
    const FinSet& s = as_finset(a);
    FinSet cod = product(product(m.carrier(), s).carrier, FinSet::singleton(Label::atom("*")))
                     .carrier;
    return Mor{FinFn::from_map(s, cod, [&m](const Label& l) {
      return Label::pair(Label::pair(m.carrier().at(1), l), Label::atom("*"));
    })};
  };
  return {"skew", "monoid Z2 with rho sent to a |-> ((1,a),*)", check_skew_monoidal(bad, objs)};
}

MutationOutcome mutate_action(int n) {
  Instance inst = monoid_warping(MonoidTable::cyclic(2));
  StrongAction bad = inst.action;
  auto unitor = inst.action.unitor;
  bad.unitor = [unitor](const Obj& b) {
    const FinFn& u = as_finfn(unitor(b));
    if (u.cod().empty() || u.dom().size() < 2) return Mor{u};
    return Mor{FinFn::constant(u.dom(), u.cod(), u.cod().at(0))};
  };
  return {"action", "monoid Z2 action with the unitor replaced by a constant",
          check_strong_action(bad, inst.vpalette(n), inst.apalette(n))};
}

MutationOutcome mutate_adjunction(int n) {
  Instance inst = monoid_warping(MonoidTable::cyclic(2));
  Adjunction bad = inst.adj;
  auto counit = inst.adj.counit;
  MonoidTable m = *inst.monoid;
  bad.counit = [counit, m](const Obj& x) {
    // Precompose with the flip of the free M-coordinate.
    const FinFn& e = as_finfn(counit(x));
    FinFn flip = FinFn::from_map(e.dom(), e.dom(), [&m](const Label& l) {
      int mi = *m.carrier().index_of(l.first());
      return Label::pair(m.carrier().at(m.mul(1, mi)), l.second());
    });
    return Mor{compose(e, flip)};
  };
  return {"adjunction", "monoid Z2 counit precomposed with the free-coordinate flip",
          check_adjunction_triangles(bad, inst.apalette(n), inst.vpalette(n))};
}

MutationOutcome mutate_lax(int n) {
  Instance inst = monoid_warping(MonoidTable::cyclic(2));
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  MonoidalFunctor lax = build_lax_on_right_adjoint(built);
  auto phi = lax.phi;
  lax.phi = [phi](const Obj& x, const Obj& y) {
    const FinFn& p = as_finfn(phi(x, y));
    return Mor{compose(head_swap(p.cod()), p)};
  };
  return {"lax", "Z2 lax structure map postcomposed with a transposition",
          check_lax_monoidal(lax, inst.vpalette(n))};
}

MutationOutcome mutate_oplax(int n) {
  Instance inst = monoid_warping(MonoidTable::cyclic(2));
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  MonoidalFunctor oplax = build_oplax_on_left_adjoint(built);
  auto phi = oplax.phi;
  oplax.phi = [phi](const Obj& a, const Obj& b) {
    const FinFn& p = as_finfn(phi(a, b));
    return Mor{compose(head_swap(p.cod()), p)};
  };
  return {"oplax", "Z2 oplax structure map postcomposed with a transposition",
          check_oplax_monoidal(oplax, objs)};
}

MutationOutcome mutate_braiding_right(int n) {
  Instance inst = exponential_warping_instance(FinSet::range(2, "t"));
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::RR, objs);
  SkewBraiding sb = build_braiding(built, inst.action, inst.adj, *inst.braiding,
                                   inst.vpalette(n));
  auto s = sb.s;
  sb.s = [s](const Obj& p, const Obj& a, const Obj& b) {
    const FinFn& f = as_finfn(s(p, a, b));
    return Mor{compose(f, head_swap(f.dom()))};
  };
  return {"braiding-right", "exponential-warping braiding precomposed with a transposition",
          check_right_braiding(sb, objs)};
}

MutationOutcome mutate_braiding_left(int n) {
  Instance inst = monoid_warping(MonoidTable::cyclic(2));
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  SkewBraiding sb = build_braiding(built, inst.action, inst.adj, *inst.braiding,
                                   inst.vpalette(n));
  auto s = sb.s;
  sb.s = [s](const Obj& p, const Obj& a, const Obj& b) {
    // Pick a fixed element: not natural, not invertible.
    const FinFn& f = as_finfn(s(p, a, b));
    if (f.cod().empty() || f.dom().empty()) return Mor{f};
    return Mor{FinFn::constant(f.dom(), f.cod(), f.cod().at(0))};
  };
  return {"braiding-left", "monoid Z2 left braiding replaced by a constant family",
          check_left_braiding(sb, objs)};
}

MutationOutcome mutate_symmetry(int n) {
  Instance inst = exponential_warping_instance(FinSet::range(2, "t"));
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::RR, objs);
  SkewBraiding sb = build_braiding(built, inst.action, inst.adj, *inst.braiding,
                                   inst.vpalette(n));
  auto s = sb.s;
  sb.s = [s](const Obj& p, const Obj& a, const Obj& b) {
    const FinFn& f = as_finfn(s(p, a, b));
    return Mor{compose(head_cycle3(f.cod()), f)};
  };
  return {"symmetry", "exponential-warping braiding postcomposed with a 3-cycle",
          check_symmetry(sb, objs)};
}

MutationOutcome mutate_closedness(int n) {
  MonoidTable m = MonoidTable::cyclic(2);
  Instance inst = monoid_warping(m);
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  // Wrong exponent: <A,C> = C^A instead of C^(M x A).
  InternalHom bad;
  bad.name = "exponential with the monoid factor dropped";
  bad.ob = [](const Obj& a, const Obj& c) {
    return Obj{exponential(as_finset(a), as_finset(c)).carrier};
  };
  MonoidTable mt = m;
  bad.transpose = [mt](const Obj& a, const Obj& b, const Obj& c, const Mor& f) {
    const FinSet& sa = as_finset(a);
    const FinSet& sb = as_finset(b);
    const FinFn& fn = as_finfn(f);
    FinSet target = exponential(sa, as_finset(c)).carrier;
    Label e = mt.carrier().at(mt.identity);
    return Mor{FinFn::from_map(sb, target, [&, e](const Label& bl) {
      std::vector<std::pair<Label, Label>> graph;
      for (int i = 0; i < sa.size(); ++i)
        graph.emplace_back(sa.at(i), fn(Label::pair(Label::pair(e, sa.at(i)), bl)));
      return Label::fn(std::move(graph));
    })};
  };
  bad.untranspose = [mt](const Obj& a, const Obj& b, const Obj& c, const Mor& g) {
    const FinSet& sa = as_finset(a);
    const FinSet& sb = as_finset(b);
    const FinFn& gn = as_finfn(g);
    FinSet dom = product(product(mt.carrier(), sa).carrier, sb).carrier;
    return Mor{FinFn::from_map(dom, as_finset(c), [&](const Label& l) {
      for (const auto& [k, v] : gn(l.second()).graph())
        if (k == l.first().second()) return v;
      throw IndexError("untranspose lookup failed");
    })};
  };
  return {"closedness", "right internal hom with the monoid factor dropped",
          check_closedness(built.data, bad, Side::Right, objs, inst.aarrows(n))};
}

MutationOutcome mutate_probes(int n) {
  Instance inst = monoid_warping(MonoidTable::trivial());
  auto objs = inst.apalette(n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  auto lambda = built.data.lambda;
  built.data.lambda = [lambda](const Obj& a) {
    const FinFn& l = as_finfn(lambda(a));
    if (l.cod().empty() || l.dom().size() < 2) return Mor{l};
    return Mor{FinFn::constant(l.dom(), l.cod(), l.cod().at(0))};
  };
  return {"probes",
          "trivial monoid with lambda collapsed to a constant (breaks the strong-monoidal "
          "implication)",
          invertibility_probe(built, objs)};
}

MutationOutcome mutate_theorem_checks(int n) {
  MonoidTable m = MonoidTable::cyclic(2);
  Instance inst = monoid_warping(m);
  auto objs = finset_palette(1, n);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, objs);
  SkewMonoidal bad = built.data;
  auto gamma = built.data.gamma;
  bad.gamma = [gamma](const Obj& a, const Obj& b, const Obj& c) {
    const FinFn& g = as_finfn(gamma(a, b, c));
    if (g.cod().empty() || g.dom().empty()) return Mor{g};
    return Mor{FinFn::constant(g.dom(), g.cod(), g.cod().at(0))};
  };
  GroupIffResult r = group_iff_check(m, bad, objs);
  CheckReport report;
  report.suite = "theorem-checks";
  report.cases.push_back({"group-iff-associator", "Z2", !r.violation.has_value(),
                          r.violation.value_or("")});
  return {"theorem-checks", "Z2 with the associator collapsed to a constant", report};
}

} // namespace

std::vector<std::string> mutation_names() {
  return {"skew",          "action",        "adjunction", "lax",
          "oplax",         "braiding-right", "braiding-left", "symmetry",
          "closedness",    "probes",        "theorem-checks"};
}

MutationOutcome run_mutation(const std::string& suite, int max_size) {
  if (suite == "skew") return mutate_skew(max_size);
  if (suite == "action") return mutate_action(max_size);
  if (suite == "adjunction") return mutate_adjunction(max_size);
  if (suite == "lax") return mutate_lax(max_size);
  if (suite == "oplax") return mutate_oplax(max_size);
  if (suite == "braiding-right") return mutate_braiding_right(max_size);
  if (suite == "braiding-left") return mutate_braiding_left(max_size);
  if (suite == "symmetry") return mutate_symmetry(max_size);
  if (suite == "closedness") return mutate_closedness(max_size);
  if (suite == "probes") return mutate_probes(max_size);
  if (suite == "theorem-checks") return mutate_theorem_checks(max_size);
  throw SchemaError(0, "mutation", "unknown mutation target '" + suite + "'");
}

std::vector<MutationOutcome> run_all_mutations(int max_size) {
  std::vector<MutationOutcome> out;
  for (const auto& name : mutation_names()) out.push_back(run_mutation(name, max_size));
  return out;
}

} // namespace skewcat
