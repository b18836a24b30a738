#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/colimit.hpp"
#include "skewcat/fpcat.hpp"

namespace skewcat {

// ---------------------------------------------------------------------------
// Functor category [C, FinSet] for a finitely presented C.
// Objects are tabulated functors, morphisms are component families indexed by
// C's objects: finite C makes componentwise equality decide everything.
// ---------------------------------------------------------------------------

struct FuncObjData {
  std::shared_ptr<const FinPresCat> shape;
  std::vector<FinSet> at_obj;
  std::vector<FinFn> at_arrow;
  std::string name;
};

// Validates functoriality (FunctorError otherwise).
FuncObj make_func_obj(std::shared_ptr<const FinPresCat> shape, std::vector<FinSet> at_obj,
                      std::vector<FinFn> at_arrow, std::string name = "");

struct FuncMorData {
  FuncObj dom, cod;
  std::vector<FinFn> components; // per shape object
};

FuncMor make_func_mor(FuncObj dom, FuncObj cod, std::vector<FinFn> components);

CatPtr func_cat(std::shared_ptr<const FinPresCat> shape);

// ---------------------------------------------------------------------------
// Pointwise left Kan extension along a tabulated J, as a finite colimit over
// the comma category (J down d).
// ---------------------------------------------------------------------------

struct LanResult {
  struct CommaNode {
    int c;        // shape object index
    FinFn arm;    // J(c) -> d
    std::string name;
  };
  FinSet d;
  std::vector<CommaNode> nodes;
  FinPresCat comma;            // shape of the comma category
  FinSet carrier;              // colimit carrier
  std::vector<FinFn> cocone;   // per comma node: G(c) -> carrier
};

LanResult left_kan_extension(const FuncObj& j, const FuncObj& g, const FinSet& d);

// Unit component at shape object c: G(c) -> Lan(J(c)), the cocone leg at the
// identity-shaped comma node.
FinFn lan_unit_component(const FuncObj& j, const FuncObj& g, int c);

// Lan(h) : Lan(d) -> Lan(d') for h : d -> d'.
FinFn lan_on_map(const FuncObj& j, const FuncObj& g, const FinFn& h);

// Component at d of Lan_J(t) for t : F => G given by per-object components.
FinFn lan_nat_component(const FuncObj& j, const FuncObj& f, const FuncObj& g,
                        const std::vector<FinFn>& t, const FinSet& d);

// Component at d of the counit of Lan_J -| (-).J at an endofunctor expression
// X: Lan_J(X.J)(d) -> X(d), sending a class ((c, f : Jc -> d), x) to X(f)(x).
FinFn lan_counit_component(const FuncObj& j, const EndoExpr& x, const FinSet& d);

// ---------------------------------------------------------------------------
// Endofunctor expressions over FinSet: identity, pointwise Lan of a tabulated
// functor, and formal composites. Values are computed on demand and memoized
// per carrier. Natural-transformation equality between expressions is decided
// at a configured finite probe list of carriers; every check that must be
// exact lives in [C, FinSet], where components at C's objects settle it.
// ---------------------------------------------------------------------------

EndoExpr endo_ident();
EndoExpr endo_lan(FuncObj j, FuncObj g);
EndoExpr endo_comp(const EndoExpr& outer, const EndoExpr& inner);

FinSet endo_eval(const EndoExpr& x, const FinSet& d);
FinFn endo_eval_mor(const EndoExpr& x, const FinFn& f);
bool endo_expr_equal(const EndoExpr& a, const EndoExpr& b);
std::string endo_expr_str(const EndoExpr& x);

struct EndoMorData {
  EndoExpr dom, cod;
  std::function<FinFn(const FinSet&)> component;
  std::string name;
};

EndoMor make_endo_mor(EndoExpr dom, EndoExpr cod, std::function<FinFn(const FinSet&)> component,
                      std::string name = "");
EndoMor endo_identity_mor(const EndoExpr& x);

CatPtr endo_cat(std::vector<FinSet> probes);

const FuncObjData& as_funcobj(const Obj& o);
const FuncMorData& as_funcmor(const Mor& m);
const EndoExpr& as_endoexpr(const Obj& o);
const EndoMorData& as_endomor(const Mor& m);

// Tabulation of an endofunctor expression against a tabulated functor:
// c |-> X(F(c)).
FuncObj tabulate(const EndoExpr& x, const FuncObj& f);

} // namespace skewcat
