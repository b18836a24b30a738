#include "skewcat/category.hpp"

#include "skewcat/error.hpp"

namespace skewcat {

const FinSet& as_finset(const Obj& o) {
  if (const auto* s = std::get_if<FinSet>(&o)) return *s;
  if (const auto* m = std::get_if<MSetObj>(&o)) return m->carrier;
  throw StructureError("object is not backed by a finite set");
}

const MSetObj& as_mset(const Obj& o) {
  if (const auto* m = std::get_if<MSetObj>(&o)) return *m;
  throw StructureError("object is not an M-set");
}

const FinFn& as_finfn(const Mor& m) {
  if (const auto* f = std::get_if<FinFn>(&m)) return *f;
  throw StructureError("morphism is not a finite function");
}

namespace {

void require_parallel(const FinFn& a, const FinFn& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod())
    throw StructureError("cannot compare maps with different boundaries: " + a.dom().str() +
                         " -> " + a.cod().str() + " vs " + b.dom().str() + " -> " + b.cod().str());
}

class FinSetCat final : public Category {
public:
  std::string name() const override { return "FinSet"; }

  bool obj_equal(const Obj& a, const Obj& b) const override {
    return as_finset(a) == as_finset(b);
  }
  std::string show_obj(const Obj& o) const override { return as_finset(o).str(); }

  Mor id(const Obj& o) const override { return FinFn::identity(as_finset(o)); }

  Mor compose(const Mor& g, const Mor& f) const override {
    return skewcat::compose(as_finfn(g), as_finfn(f));
  }

  bool mor_equal(const Mor& a, const Mor& b) const override {
    const FinFn& fa = as_finfn(a);
    const FinFn& fb = as_finfn(b);
    require_parallel(fa, fb);
    return fa == fb;
  }

  std::string diff(const Mor& a, const Mor& b) const override {
    return first_difference(as_finfn(a), as_finfn(b));
  }

  std::variant<Mor, NotIso> try_invert(const Mor& m) const override {
    auto r = invert(as_finfn(m));
    if (auto* f = std::get_if<FinFn>(&r)) return Mor{*f};
    return std::get<NotIso>(r);
  }

  std::optional<std::vector<Mor>> hom(const Obj& x, const Obj& y) const override {
    auto maps = all_maps(as_finset(x), as_finset(y));
    std::vector<Mor> out(maps.begin(), maps.end());
    return out;
  }
};

// Equivariance of the maps this category hosts is a property established by
// the constructions that produce them, not enforced per morphism; deliberately
// broken families surface as check failures, not as crashes.
class MSetCat final : public Category {
public:
  explicit MSetCat(MonoidTable m) : monoid_(std::move(m)) {}

  std::string name() const override { return monoid_.name + "-Set"; }

  bool obj_equal(const Obj& a, const Obj& b) const override { return as_mset(a) == as_mset(b); }
  std::string show_obj(const Obj& o) const override { return as_mset(o).str(); }

  Mor id(const Obj& o) const override { return FinFn::identity(as_mset(o).carrier); }

  Mor compose(const Mor& g, const Mor& f) const override {
    return skewcat::compose(as_finfn(g), as_finfn(f));
  }

  bool mor_equal(const Mor& a, const Mor& b) const override {
    const FinFn& fa = as_finfn(a);
    const FinFn& fb = as_finfn(b);
    require_parallel(fa, fb);
    return fa == fb;
  }

  std::string diff(const Mor& a, const Mor& b) const override {
    return first_difference(as_finfn(a), as_finfn(b));
  }

  std::variant<Mor, NotIso> try_invert(const Mor& m) const override {
    auto r = invert(as_finfn(m));
    if (auto* f = std::get_if<FinFn>(&r)) return Mor{*f};
    return std::get<NotIso>(r);
  }

  std::optional<std::vector<Mor>> hom(const Obj& x, const Obj& y) const override {
    const MSetObj& mx = as_mset(x);
    const MSetObj& my = as_mset(y);
    std::vector<Mor> out;
    for (const auto& f : all_maps(mx.carrier, my.carrier)) {
      bool equivariant = true;
      for (int m = 0; m < monoid_.size() && equivariant; ++m)
        for (int i = 0; i < mx.carrier.size() && equivariant; ++i)
          if (f.map_index(mx.act[m][i]) != my.act[m][f.map_index(i)]) equivariant = false;
      if (equivariant) out.push_back(f);
    }
    return out;
  }

private:
  MonoidTable monoid_;
};

class OpCat final : public Category {
public:
  explicit OpCat(CatPtr base) : base_(std::move(base)) {}

  std::string name() const override { return base_->name() + "^op"; }

  bool obj_equal(const Obj& a, const Obj& b) const override { return base_->obj_equal(a, b); }
  std::string show_obj(const Obj& o) const override { return base_->show_obj(o); }

  Mor id(const Obj& o) const override { return base_->id(o); }

  Mor compose(const Mor& g, const Mor& f) const override { return base_->compose(f, g); }

  bool mor_equal(const Mor& a, const Mor& b) const override { return base_->mor_equal(a, b); }
  std::string diff(const Mor& a, const Mor& b) const override { return base_->diff(a, b); }

  std::variant<Mor, NotIso> try_invert(const Mor& m) const override {
    return base_->try_invert(m);
  }

  std::optional<std::vector<Mor>> hom(const Obj& x, const Obj& y) const override {
    return base_->hom(y, x);
  }

  CatPtr op_base() const override { return base_; }

private:
  CatPtr base_;
};

} // namespace

CatPtr finset_cat() {
  static CatPtr instance = std::make_shared<FinSetCat>();
  return instance;
}

CatPtr mset_cat(const MonoidTable& m) { return std::make_shared<MSetCat>(m); }

CatPtr opposite(const CatPtr& c) {
  if (auto base = c->op_base()) return base;
  return std::make_shared<OpCat>(c);
}

Mor invert_mor(const Category& cat, const Mor& m, const std::string& what) {
  auto r = cat.try_invert(m);
  if (auto* f = std::get_if<Mor>(&r)) return *f;
  throw StructureError(what + " is not invertible (" + std::get<NotIso>(r).str() + ")");
}

bool is_identity_mor(const Category& cat, const Mor& m, const Obj& at) {
  return cat.mor_equal(m, cat.id(at));
}

} // namespace skewcat
