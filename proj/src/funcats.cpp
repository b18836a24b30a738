#include "skewcat/funcats.hpp"

#include <map>
#include <mutex>

#include "skewcat/error.hpp"

namespace skewcat {

const FuncObjData& as_funcobj(const Obj& o) {
  if (const auto* f = std::get_if<FuncObj>(&o)) return **f;
  throw StructureError("object is not a tabulated functor");
}

const FuncMorData& as_funcmor(const Mor& m) {
  if (const auto* f = std::get_if<FuncMor>(&m)) return **f;
  throw StructureError("morphism is not a functor-category morphism");
}

const EndoExpr& as_endoexpr(const Obj& o) {
  if (const auto* e = std::get_if<EndoExpr>(&o)) return *e;
  throw StructureError("object is not an endofunctor expression");
}

const EndoMorData& as_endomor(const Mor& m) {
  if (const auto* e = std::get_if<EndoMor>(&m)) return **e;
  throw StructureError("morphism is not an endofunctor transformation");
}

FuncObj make_func_obj(std::shared_ptr<const FinPresCat> shape, std::vector<FinSet> at_obj,
                      std::vector<FinFn> at_arrow, std::string name) {
  auto data = std::make_shared<FuncObjData>();
  data->shape = std::move(shape);
  data->at_obj = std::move(at_obj);
  data->at_arrow = std::move(at_arrow);
  data->name = std::move(name);
  const auto& s = *data->shape;
  if (static_cast<int>(data->at_obj.size()) != s.n_objects() ||
      static_cast<int>(data->at_arrow.size()) != s.n_arrows())
    throw FunctorError("functor tabulation sizes do not match the shape");
  for (int a = 0; a < s.n_arrows(); ++a)
    if (data->at_arrow[a].dom() != data->at_obj[s.arrows[a].dom] ||
        data->at_arrow[a].cod() != data->at_obj[s.arrows[a].cod])
      throw FunctorError("tabulated arrow " + s.arrows[a].name + " has wrong boundaries");
  for (int x = 0; x < s.n_objects(); ++x)
    if (!data->at_arrow[s.identity[x]].is_identity())
      throw FunctorError("tabulated functor does not preserve the identity of " + s.objects[x]);
  for (int g = 0; g < s.n_arrows(); ++g)
    for (int f = 0; f < s.n_arrows(); ++f) {
      if (!s.composable(g, f)) continue;
      if (compose(data->at_arrow[g], data->at_arrow[f]) != data->at_arrow[s.comp[g][f]])
        throw FunctorError("tabulated functor not functorial on " + s.arrows[g].name + "." +
                           s.arrows[f].name);
    }
  return data;
}

FuncMor make_func_mor(FuncObj dom, FuncObj cod, std::vector<FinFn> components) {
  auto data = std::make_shared<FuncMorData>();
  data->dom = std::move(dom);
  data->cod = std::move(cod);
  data->components = std::move(components);
  if (data->components.size() != data->dom->at_obj.size())
    throw StructureError("component count does not match the shape");
  for (std::size_t i = 0; i < data->components.size(); ++i)
    if (data->components[i].dom() != data->dom->at_obj[i] ||
        data->components[i].cod() != data->cod->at_obj[i])
      throw StructureError("component boundaries do not match the functor tabulations");
  return data;
}

namespace {

std::string func_obj_str(const FuncObjData& f) {
  if (!f.name.empty()) return f.name;
  std::string out = "[";
  for (int i = 0; i < static_cast<int>(f.at_obj.size()); ++i) {
    if (i) out += ";";
    out += f.shape->objects[i] + ":" + f.at_obj[i].str();
  }
  return out + "]";
}

bool func_obj_equal(const FuncObjData& a, const FuncObjData& b) {
  return a.at_obj == b.at_obj && a.at_arrow == b.at_arrow;
}

class FuncCat final : public Category {
public:
  explicit FuncCat(std::shared_ptr<const FinPresCat> shape) : shape_(std::move(shape)) {}

  std::string name() const override { return "[C,FinSet]"; }

  bool obj_equal(const Obj& a, const Obj& b) const override {
    return func_obj_equal(as_funcobj(a), as_funcobj(b));
  }

  std::string show_obj(const Obj& o) const override { return func_obj_str(as_funcobj(o)); }

  Mor id(const Obj& o) const override {
    const auto& fo = std::get<FuncObj>(o);
    std::vector<FinFn> comps;
    for (const auto& s : fo->at_obj) comps.push_back(FinFn::identity(s));
    return make_func_mor(fo, fo, std::move(comps));
  }

  Mor compose(const Mor& g, const Mor& f) const override {
    const auto& gm = as_funcmor(g);
    const auto& fm = as_funcmor(f);
    if (!func_obj_equal(*fm.cod, *gm.dom))
      throw CompositionError("functor-category morphisms not composable");
    std::vector<FinFn> comps;
    for (std::size_t i = 0; i < gm.components.size(); ++i)
      comps.push_back(skewcat::compose(gm.components[i], fm.components[i]));
    return make_func_mor(fm.dom, gm.cod, std::move(comps));
  }

  bool mor_equal(const Mor& a, const Mor& b) const override {
    const auto& am = as_funcmor(a);
    const auto& bm = as_funcmor(b);
    if (am.components.size() != bm.components.size())
      throw StructureError("cannot compare families with different component counts");
    for (std::size_t i = 0; i < am.components.size(); ++i) {
      if (am.components[i].dom() != bm.components[i].dom() ||
          am.components[i].cod() != bm.components[i].cod())
        throw StructureError("cannot compare families with different boundaries at " +
                             shape_->objects[i]);
      if (am.components[i] != bm.components[i]) return false;
    }
    return true;
  }

  std::string diff(const Mor& a, const Mor& b) const override {
    const auto& am = as_funcmor(a);
    const auto& bm = as_funcmor(b);
    for (std::size_t i = 0; i < am.components.size(); ++i)
      if (am.components[i] != bm.components[i])
        return "at " + shape_->objects[i] + ": " +
               first_difference(am.components[i], bm.components[i]);
    return "(no difference)";
  }

  std::variant<Mor, NotIso> try_invert(const Mor& m) const override {
    const auto& mm = as_funcmor(m);
    std::vector<FinFn> inv;
    for (const auto& c : mm.components) {
      auto r = invert(c);
      if (const auto* w = std::get_if<NotIso>(&r)) return *w;
      inv.push_back(std::get<FinFn>(r));
    }
    return Mor{make_func_mor(mm.cod, mm.dom, std::move(inv))};
  }

  std::optional<std::vector<Mor>> hom(const Obj& x, const Obj& y) const override {
    const auto& fo = std::get<FuncObj>(x);
    const auto& go = std::get<FuncObj>(y);
    const auto& f = *fo;
    const auto& g = *go;
    const auto& s = *shape_;
    std::vector<std::vector<FinFn>> per_obj;
    for (int c = 0; c < s.n_objects(); ++c) per_obj.push_back(all_maps(f.at_obj[c], g.at_obj[c]));
    std::vector<Mor> out;
    std::vector<int> pick(s.n_objects(), 0);
    for (const auto& p : per_obj)
      if (p.empty()) return std::vector<Mor>{};
    while (true) {
      std::vector<FinFn> comps;
      for (int c = 0; c < s.n_objects(); ++c) comps.push_back(per_obj[c][pick[c]]);
      bool natural = true;
      for (int a = 0; a < s.n_arrows() && natural; ++a) {
        int d0 = s.arrows[a].dom, d1 = s.arrows[a].cod;
        if (skewcat::compose(comps[d1], f.at_arrow[a]) !=
            skewcat::compose(g.at_arrow[a], comps[d0]))
          natural = false;
      }
      if (natural) out.push_back(make_func_mor(fo, go, comps));
      int k = s.n_objects() - 1;
      while (k >= 0 && pick[k] == static_cast<int>(per_obj[k].size()) - 1) pick[k--] = 0;
      if (k < 0) break;
      ++pick[k];
    }
    return out;
  }

private:
  std::shared_ptr<const FinPresCat> shape_;
};

} // namespace

CatPtr func_cat(std::shared_ptr<const FinPresCat> shape) {
  return std::make_shared<FuncCat>(std::move(shape));
}

// ---------------------------------------------------------------------------
// Left Kan extension
// ---------------------------------------------------------------------------

namespace {

std::string node_name(const FinPresCat& shape, int c, const FinFn& arm) {
  return shape.objects[c] + "|" + label_of_fn(arm).str();
}

} // namespace

LanResult left_kan_extension(const FuncObj& j, const FuncObj& g, const FinSet& d) {
  const auto& s = *j->shape;
  LanResult out;
  out.d = d;

  for (int c = 0; c < s.n_objects(); ++c)
    for (const auto& arm : all_maps(j->at_obj[c], d))
      out.nodes.push_back({c, arm, node_name(s, c, arm)});

  auto node_index = [&](int c, const FinFn& arm) -> int {
    for (int i = 0; i < static_cast<int>(out.nodes.size()); ++i)
      if (out.nodes[i].c == c && out.nodes[i].arm == arm) return i;
    throw IndexError("comma node lookup failed");
  };

  // Comma arrows: one per (shape arrow k : c -> c', arm f' : J c' -> d),
  // from (c, f'.J(k)) to (c', f').
  FinPresCat comma;
  for (const auto& n : out.nodes) comma.objects.push_back(n.name);
  struct CommaArrow {
    int k;
    int dst; // node index of (c', f')
  };
  std::vector<CommaArrow> gen;
  for (int k = 0; k < s.n_arrows(); ++k)
    for (int ni = 0; ni < static_cast<int>(out.nodes.size()); ++ni) {
      if (out.nodes[ni].c != s.arrows[k].cod) continue;
      gen.push_back({k, ni});
    }
  comma.identity.assign(comma.objects.size(), -1);
  for (const auto& a : gen) {
    int src = node_index(s.arrows[a.k].dom, compose(out.nodes[a.dst].arm, j->at_arrow[a.k]));
    comma.arrows.push_back({s.arrows[a.k].name + "|" + out.nodes[a.dst].name, src, a.dst});
    if (s.identity[s.arrows[a.k].cod] == a.k) comma.identity[a.dst] = comma.n_arrows() - 1;
  }
  comma.comp.assign(comma.n_arrows(), std::vector<int>(comma.n_arrows(), -1));
  for (int b = 0; b < comma.n_arrows(); ++b)
    for (int a = 0; a < comma.n_arrows(); ++a) {
      if (!comma.composable(b, a)) continue;
      int kk = s.comp[gen[b].k][gen[a].k];
      if (kk < 0) throw DiagramError("shape composition table hole in comma construction");
      // Composite lands at gen[b]'s target arm.
      for (int cidx = 0; cidx < comma.n_arrows(); ++cidx)
        if (gen[cidx].k == kk && gen[cidx].dst == gen[b].dst) comma.comp[b][a] = cidx;
    }

  Diagram diag;
  diag.shape = comma;
  for (const auto& n : out.nodes) diag.at_obj.push_back(g->at_obj[n.c]);
  for (const auto& a : gen) diag.at_arrow.push_back(g->at_arrow[a.k]);

  ColimitResult colim = finite_colimit(diag);
  out.comma = std::move(comma);
  out.carrier = colim.carrier;
  out.cocone = std::move(colim.cocone);
  return out;
}

FinFn lan_unit_component(const FuncObj& j, const FuncObj& g, int c) {
  LanResult lan = left_kan_extension(j, g, j->at_obj[c]);
  FinFn idj = FinFn::identity(j->at_obj[c]);
  for (int i = 0; i < static_cast<int>(lan.nodes.size()); ++i)
    if (lan.nodes[i].c == c && lan.nodes[i].arm == idj) return lan.cocone[i];
  throw IndexError("identity-shaped comma node not found");
}

namespace {

// Maps a colimit class by sending its representative (node, x) through the
// node assignment.
FinFn map_classes(const LanResult& src,
                  const std::function<std::pair<int, Label>(int node, const Label& x)>& send,
                  const FinSet& target_carrier, const std::vector<FinFn>& target_cocone) {
  return FinFn::from_map(src.carrier, target_carrier, [&](const Label& cl) {
    const Label& rep = cl.inner(); // (node-name, x)
    const std::string tag = rep.first().text();
    for (int i = 0; i < static_cast<int>(src.nodes.size()); ++i)
      if (src.nodes[i].name == tag) {
        auto [tnode, tx] = send(i, rep.second());
        return target_cocone[tnode](tx);
      }
    throw IndexError("colimit class representative has unknown node tag " + tag);
  });
}

} // namespace

FinFn lan_on_map(const FuncObj& j, const FuncObj& g, const FinFn& h) {
  LanResult src = left_kan_extension(j, g, h.dom());
  LanResult dst = left_kan_extension(j, g, h.cod());
  auto dst_index = [&](int c, const FinFn& arm) -> int {
    for (int i = 0; i < static_cast<int>(dst.nodes.size()); ++i)
      if (dst.nodes[i].c == c && dst.nodes[i].arm == arm) return i;
    throw IndexError("comma node lookup failed in lan_on_map");
  };
  return map_classes(
      src,
      [&](int node, const Label& x) {
        return std::make_pair(dst_index(src.nodes[node].c, compose(h, src.nodes[node].arm)), x);
      },
      dst.carrier, dst.cocone);
}

FinFn lan_nat_component(const FuncObj& j, const FuncObj& f, const FuncObj& g,
                        const std::vector<FinFn>& t, const FinSet& d) {
  LanResult src = left_kan_extension(j, f, d);
  LanResult dst = left_kan_extension(j, g, d);
  auto dst_index = [&](int c, const FinFn& arm) -> int {
    for (int i = 0; i < static_cast<int>(dst.nodes.size()); ++i)
      if (dst.nodes[i].c == c && dst.nodes[i].arm == arm) return i;
    throw IndexError("comma node lookup failed in lan_nat_component");
  };
  return map_classes(
      src,
      [&](int node, const Label& x) {
        int c = src.nodes[node].c;
        return std::make_pair(dst_index(c, src.nodes[node].arm), t[c](x));
      },
      dst.carrier, dst.cocone);
}

FinFn lan_counit_component(const FuncObj& j, const EndoExpr& x, const FinSet& d) {
  FuncObj xj = tabulate(x, j);
  LanResult src = left_kan_extension(j, xj, d);
  FinSet target = endo_eval(x, d);
  return FinFn::from_map(src.carrier, target, [&](const Label& cl) {
    const Label& rep = cl.inner();
    const std::string tag = rep.first().text();
    for (const auto& n : src.nodes)
      if (n.name == tag) return endo_eval_mor(x, n.arm)(rep.second());
    throw IndexError("colimit class representative has unknown node tag " + tag);
  });
}

// ---------------------------------------------------------------------------
// Endofunctor expressions
// ---------------------------------------------------------------------------

struct EndoExprNode {
  enum class Kind { Ident, Lan, Comp } kind = Kind::Ident;
  FuncObj j, g;            // Lan
  EndoExpr outer, inner;   // Comp
  mutable std::mutex memo_mu;
  mutable std::map<std::string, FinSet> obj_memo;
};

EndoExpr endo_ident() {
  static EndoExpr instance = std::make_shared<EndoExprNode>();
  return instance;
}

EndoExpr endo_lan(FuncObj j, FuncObj g) {
  auto n = std::make_shared<EndoExprNode>();
  n->kind = EndoExprNode::Kind::Lan;
  n->j = std::move(j);
  n->g = std::move(g);
  return n;
}

EndoExpr endo_comp(const EndoExpr& outer, const EndoExpr& inner) {
  auto n = std::make_shared<EndoExprNode>();
  n->kind = EndoExprNode::Kind::Comp;
  n->outer = outer;
  n->inner = inner;
  return n;
}

FinSet endo_eval(const EndoExpr& x, const FinSet& d) {
  switch (x->kind) {
    case EndoExprNode::Kind::Ident:
      return d;
    case EndoExprNode::Kind::Lan: {
      std::string key = d.str();
      {
        std::scoped_lock lock(x->memo_mu);
        auto it = x->obj_memo.find(key);
        if (it != x->obj_memo.end()) return it->second;
      }
      FinSet value = left_kan_extension(x->j, x->g, d).carrier;
      std::scoped_lock lock(x->memo_mu);
      return x->obj_memo.emplace(key, value).first->second;
    }
    case EndoExprNode::Kind::Comp:
      return endo_eval(x->outer, endo_eval(x->inner, d));
  }
  throw StructureError("unreachable endofunctor kind");
}

FinFn endo_eval_mor(const EndoExpr& x, const FinFn& f) {
  switch (x->kind) {
    case EndoExprNode::Kind::Ident:
      return f;
    case EndoExprNode::Kind::Lan:
      return lan_on_map(x->j, x->g, f);
    case EndoExprNode::Kind::Comp:
      return endo_eval_mor(x->outer, endo_eval_mor(x->inner, f));
  }
  throw StructureError("unreachable endofunctor kind");
}

bool endo_expr_equal(const EndoExpr& a, const EndoExpr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case EndoExprNode::Kind::Ident:
      return true;
    case EndoExprNode::Kind::Lan:
      return func_obj_equal(*a->j, *b->j) && func_obj_equal(*a->g, *b->g);
    case EndoExprNode::Kind::Comp:
      return endo_expr_equal(a->outer, b->outer) && endo_expr_equal(a->inner, b->inner);
  }
  return false;
}

std::string endo_expr_str(const EndoExpr& x) {
  switch (x->kind) {
    case EndoExprNode::Kind::Ident:
      return "Id";
    case EndoExprNode::Kind::Lan:
      return "Lan(" + func_obj_str(*x->g) + ")";
    case EndoExprNode::Kind::Comp:
      return endo_expr_str(x->outer) + "." + endo_expr_str(x->inner);
  }
  return "?";
}

EndoMor make_endo_mor(EndoExpr dom, EndoExpr cod, std::function<FinFn(const FinSet&)> component,
                      std::string name) {
  auto m = std::make_shared<EndoMorData>();
  m->dom = std::move(dom);
  m->cod = std::move(cod);
  m->component = std::move(component);
  m->name = std::move(name);
  return m;
}

EndoMor endo_identity_mor(const EndoExpr& x) {
  return make_endo_mor(x, x, [x](const FinSet& d) { return FinFn::identity(endo_eval(x, d)); },
                       "id");
}

namespace {

class EndoCat final : public Category {
public:
  explicit EndoCat(std::vector<FinSet> probes) : probes_(std::move(probes)) {}

  std::string name() const override { return "[FinSet,FinSet]"; }

  bool obj_equal(const Obj& a, const Obj& b) const override {
    return endo_expr_equal(as_endoexpr(a), as_endoexpr(b));
  }

  std::string show_obj(const Obj& o) const override { return endo_expr_str(as_endoexpr(o)); }

  Mor id(const Obj& o) const override { return endo_identity_mor(as_endoexpr(o)); }

  Mor compose(const Mor& g, const Mor& f) const override {
    const auto& gm = as_endomor(g);
    const auto& fm = as_endomor(f);
    if (!endo_expr_equal(fm.cod, gm.dom))
      throw CompositionError("endofunctor transformations not composable: " +
                             endo_expr_str(fm.cod) + " vs " + endo_expr_str(gm.dom));
    auto gc = gm.component;
    auto fc = fm.component;
    return make_endo_mor(fm.dom, gm.cod,
                         [gc, fc](const FinSet& d) { return skewcat::compose(gc(d), fc(d)); });
  }

  bool mor_equal(const Mor& a, const Mor& b) const override {
    const auto& am = as_endomor(a);
    const auto& bm = as_endomor(b);
    if (!endo_expr_equal(am.dom, bm.dom) || !endo_expr_equal(am.cod, bm.cod))
      throw StructureError("cannot compare transformations with different boundaries");
    for (const auto& p : probes_)
      if (am.component(p) != bm.component(p)) return false;
    return true;
  }

  std::string diff(const Mor& a, const Mor& b) const override {
    const auto& am = as_endomor(a);
    const auto& bm = as_endomor(b);
    for (const auto& p : probes_) {
      FinFn fa = am.component(p);
      FinFn fb = bm.component(p);
      if (fa != fb) return "at carrier " + p.str() + ": " + first_difference(fa, fb);
    }
    return "(no difference at probe carriers)";
  }

  std::variant<Mor, NotIso> try_invert(const Mor& m) const override {
    const auto& mm = as_endomor(m);
    for (const auto& p : probes_) {
      auto r = invert(mm.component(p));
      if (const auto* w = std::get_if<NotIso>(&r)) return *w;
    }
    auto comp = mm.component;
    return Mor{make_endo_mor(mm.cod, mm.dom, [comp](const FinSet& d) {
      return invert_or_throw(comp(d), "transformation component");
    })};
  }

private:
  std::vector<FinSet> probes_;
};

} // namespace

CatPtr endo_cat(std::vector<FinSet> probes) { return std::make_shared<EndoCat>(std::move(probes)); }

FuncObj tabulate(const EndoExpr& x, const FuncObj& f) {
  std::vector<FinSet> at_obj;
  std::vector<FinFn> at_arrow;
  for (const auto& s : f->at_obj) at_obj.push_back(endo_eval(x, s));
  for (const auto& a : f->at_arrow) at_arrow.push_back(endo_eval_mor(x, a));
  return make_func_obj(f->shape, std::move(at_obj), std::move(at_arrow));
}

} // namespace skewcat
