#include "skewcat/functor.hpp"

#include "skewcat/error.hpp"
#include "skewcat/kernel.hpp"

namespace skewcat {

Functor identity_functor(const CatPtr& c) {
  return Functor{"Id", c, c, [](const Obj& o) { return o; }, [](const Mor& m) { return m; }};
}

Functor compose_functors(const Functor& g, const Functor& f) {
  return Functor{g.name + "." + f.name, f.source, g.target,
                 [g, f](const Obj& o) { return g.ob(f.ob(o)); },
                 [g, f](const Mor& m) { return g.mor(f.mor(m)); }};
}

Mor apply_bifunctor(const Bifunctor& b, const Mor& f, const Mor& g) { return b.mor(f, g); }

Mor lwhisker(const Bifunctor& b, const Obj& x, const Mor& g) {
  return b.mor(b.left->id(x), g);
}

Mor rwhisker(const Bifunctor& b, const Mor& f, const Obj& y) {
  return b.mor(f, b.right->id(y));
}

CheckReport check_category_laws(const Category& cat, const std::vector<ArrowInstance>& palette) {
  std::vector<CheckCase> cases;
  for (const auto& f : palette) {
    cases.push_back(make_case("identity", f.label, [&cat, &f]() -> std::pair<bool, std::string> {
      Mor left = cat.compose(cat.id(f.cod), f.m);
      if (!cat.mor_equal(left, f.m)) return {false, "id.f differs: " + cat.diff(left, f.m)};
      Mor right = cat.compose(f.m, cat.id(f.dom));
      if (!cat.mor_equal(right, f.m)) return {false, "f.id differs: " + cat.diff(right, f.m)};
      return {true, ""};
    }));
  }
  for (const auto& h : palette)
    for (const auto& g : palette)
      for (const auto& f : palette) {
        if (!cat.obj_equal(f.cod, g.dom) || !cat.obj_equal(g.cod, h.dom)) continue;
        std::string objs = "(" + h.label + "," + g.label + "," + f.label + ")";
        cases.push_back(
            make_case("associativity", objs, [&cat, &h, &g, &f]() -> std::pair<bool, std::string> {
              Mor left = cat.compose(cat.compose(h.m, g.m), f.m);
              Mor right = cat.compose(h.m, cat.compose(g.m, f.m));
              if (!cat.mor_equal(left, right)) return {false, cat.diff(left, right)};
              return {true, ""};
            }));
      }
  return run_cases("category-laws", cases);
}

CheckReport check_functor_laws(const Functor& fun, const std::vector<Obj>& objects,
                               const std::vector<ArrowInstance>& arrows) {
  std::vector<CheckCase> cases;
  const Category& src = *fun.source;
  const Category& dst = *fun.target;
  for (const auto& x : objects) {
    cases.push_back(make_case("preserves-identity", src.show_obj(x),
                              [&, x]() -> std::pair<bool, std::string> {
                                Mor fid = fun.mor(src.id(x));
                                Mor idf = dst.id(fun.ob(x));
                                if (!dst.mor_equal(fid, idf)) return {false, dst.diff(fid, idf)};
                                return {true, ""};
                              }));
  }
  for (const auto& g : arrows)
    for (const auto& f : arrows) {
      if (!src.obj_equal(f.cod, g.dom)) continue;
      std::string objs = "(" + g.label + "," + f.label + ")";
      cases.push_back(make_case("preserves-composition", objs,
                                [&, g, f]() -> std::pair<bool, std::string> {
                                  Mor lhs = fun.mor(src.compose(g.m, f.m));
                                  Mor rhs = dst.compose(fun.mor(g.m), fun.mor(f.m));
                                  if (!dst.mor_equal(lhs, rhs)) return {false, dst.diff(lhs, rhs)};
                                  return {true, ""};
                                }));
    }
  return run_cases("functor-laws", cases);
}

CheckReport check_naturality(const NatFamily& t, const std::vector<ArrowInstance>& arrows) {
  std::vector<CheckCase> cases;
  const Category& dst = *t.source.target;
  for (const auto& f : arrows) {
    cases.push_back(
        make_case("naturality:" + t.name, f.label, [&, f]() -> std::pair<bool, std::string> {
          Mor lhs = dst.compose(t.at(f.cod), t.source.mor(f.m));
          Mor rhs = dst.compose(t.target.mor(f.m), t.at(f.dom));
          if (!dst.mor_equal(lhs, rhs)) return {false, dst.diff(lhs, rhs)};
          return {true, ""};
        }));
  }
  return run_cases("naturality", cases);
}

CheckReport check_naturality2(const NatFamily2& t, const std::vector<ArrowInstance>& left,
                              const std::vector<ArrowInstance>& right) {
  std::vector<CheckCase> cases;
  const Category& dst = *t.source.target;
  for (const auto& f : left)
    for (const auto& g : right) {
      std::string objs = "(" + f.label + "," + g.label + ")";
      cases.push_back(
          make_case("naturality:" + t.name, objs, [&, f, g]() -> std::pair<bool, std::string> {
            Mor lhs = dst.compose(t.at(f.cod, g.cod), t.source.mor(f.m, g.m));
            Mor rhs = dst.compose(t.target.mor(f.m, g.m), t.at(f.dom, g.dom));
            if (!dst.mor_equal(lhs, rhs)) return {false, dst.diff(lhs, rhs)};
            return {true, ""};
          }));
    }
  return run_cases("naturality", cases);
}

CheckReport check_bifunctor_interchange(const Bifunctor& b, const std::vector<ArrowInstance>& left,
                                        const std::vector<ArrowInstance>& right) {
  std::vector<CheckCase> cases;
  const Category& dst = *b.target;
  for (const auto& f : left)
    for (const auto& g : right) {
      std::string objs = "(" + f.label + "," + g.label + ")";
      cases.push_back(make_case("interchange", objs, [&, f, g]() -> std::pair<bool, std::string> {
        Mor joint = b.mor(f.m, g.m);
        Mor first = dst.compose(rwhisker(b, f.m, g.cod), lwhisker(b, f.dom, g.m));
        Mor second = dst.compose(lwhisker(b, f.cod, g.m), rwhisker(b, f.m, g.dom));
        if (!dst.mor_equal(first, joint))
          return {false, "(f*id).(id*g) differs from f*g: " + dst.diff(first, joint)};
        if (!dst.mor_equal(second, joint))
          return {false, "(id*g).(f*id) differs from f*g: " + dst.diff(second, joint)};
        return {true, ""};
      }));
    }
  return run_cases("interchange", cases);
}

} // namespace skewcat
