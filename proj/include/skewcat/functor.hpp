#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/report.hpp"

namespace skewcat {

// Functor with object and morphism maps evaluated on demand.
struct Functor {
  std::string name;
  CatPtr source, target;
  std::function<Obj(const Obj&)> ob;
  std::function<Mor(const Mor&)> mor;
};

Functor identity_functor(const CatPtr& c);
Functor compose_functors(const Functor& g, const Functor& f);

struct Bifunctor {
  std::string name;
  CatPtr left, right, target;
  std::function<Obj(const Obj&, const Obj&)> ob;
  std::function<Mor(const Mor&, const Mor&)> mor;
};

Mor apply_bifunctor(const Bifunctor& b, const Mor& f, const Mor& g);
// Whiskering: the bifunctor applied with an identity in one slot.
Mor lwhisker(const Bifunctor& b, const Obj& x, const Mor& g); // b(id_x, g)
Mor rwhisker(const Bifunctor& b, const Mor& f, const Obj& y); // b(f, id_y)

// A palette arrow together with its object-level boundaries, which morphism
// payloads do not carry on their own.
struct ArrowInstance {
  std::string label;
  Obj dom, cod;
  Mor m;
};

// Natural family t : source => target with components looked up per object.
struct NatFamily {
  std::string name;
  Functor source, target;
  std::function<Mor(const Obj&)> at;
};

struct NatFamily2 {
  std::string name;
  Bifunctor source, target;
  std::function<Mor(const Obj&, const Obj&)> at;
};

// Identity and associativity on all palette pairs/triples whose boundaries
// line up (exhaustive when the palette is the full arrow list).
CheckReport check_category_laws(const Category& cat, const std::vector<ArrowInstance>& palette);

CheckReport check_functor_laws(const Functor& f, const std::vector<Obj>& objects,
                               const std::vector<ArrowInstance>& arrows);

// Naturality squares target(F f) . t = t . source(F f) for each palette arrow.
CheckReport check_naturality(const NatFamily& t, const std::vector<ArrowInstance>& arrows);
CheckReport check_naturality2(const NatFamily2& t, const std::vector<ArrowInstance>& left,
                              const std::vector<ArrowInstance>& right);

// Interchange (f * id).(id * g) = f * g = (id * g').(f' * id) on palette pairs.
CheckReport check_bifunctor_interchange(const Bifunctor& b, const std::vector<ArrowInstance>& left,
                                        const std::vector<ArrowInstance>& right);

} // namespace skewcat
