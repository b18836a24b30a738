#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewcat/finset.hpp"
#include "skewcat/monoid.hpp"

namespace skewcat {

// Object and morphism payloads of the computable categories in this project.
// Functor-category and endofunctor-expression payloads are defined in
// funcats.hpp; here they are opaque handles.
struct FuncObjData;
struct FuncMorData;
struct EndoExprNode;
struct EndoMorData;
using FuncObj = std::shared_ptr<const FuncObjData>;
using FuncMor = std::shared_ptr<const FuncMorData>;
using EndoExpr = std::shared_ptr<const EndoExprNode>;
using EndoMor = std::shared_ptr<const EndoMorData>;

using Obj = std::variant<FinSet, MSetObj, FuncObj, EndoExpr>;
using Mor = std::variant<FinFn, FuncMor, EndoMor>;

const FinSet& as_finset(const Obj& o);
const MSetObj& as_mset(const Obj& o);
const FinFn& as_finfn(const Mor& m);

// A category with computable composition and decidable morphism equality on
// equal boundaries. Morphisms of a formal opposite are the base morphisms
// read backwards; the wrapper (not the payload) carries the reading.
class Category {
public:
  virtual ~Category() = default;
  virtual std::string name() const = 0;

  virtual bool obj_equal(const Obj& a, const Obj& b) const = 0;
  virtual std::string show_obj(const Obj& o) const = 0;

  virtual Mor id(const Obj& o) const = 0;
  // Throws CompositionError on boundary mismatch.
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;
  // Throws StructureError when the two morphisms do not have equal boundaries.
  virtual bool mor_equal(const Mor& a, const Mor& b) const = 0;
  // Rendering of the first disagreement of two parallel unequal morphisms.
  virtual std::string diff(const Mor& a, const Mor& b) const = 0;
  virtual std::variant<Mor, NotIso> try_invert(const Mor& m) const = 0;

  // Full hom-set enumeration in a deterministic order, when feasible.
  virtual std::optional<std::vector<Mor>> hom(const Obj& x, const Obj& y) const {
    (void)x;
    (void)y;
    return std::nullopt;
  }

  virtual std::shared_ptr<const Category> op_base() const { return nullptr; }
};

using CatPtr = std::shared_ptr<const Category>;

CatPtr finset_cat();
CatPtr mset_cat(const MonoidTable& m);
// Formal opposite; an involution (opposite(opposite(c)) is c itself).
CatPtr opposite(const CatPtr& c);

Mor invert_mor(const Category& cat, const Mor& m, const std::string& what); // StructureError if not iso
bool is_identity_mor(const Category& cat, const Mor& m, const Obj& at);

} // namespace skewcat
