#include "skewcat/instances.hpp"

#include "skewcat/error.hpp"

namespace skewcat {

namespace {

// Canonical cartesian rebracketing and unit maps, by label surgery.
FinFn assoc_fwd(const FinSet& x, const FinSet& y, const FinSet& z) {
  FinSet dom = product(product(x, y).carrier, z).carrier;
  FinSet cod = product(x, product(y, z).carrier).carrier;
  return FinFn::from_map(dom, cod, [](const Label& l) {
    return Label::pair(l.first().first(), Label::pair(l.first().second(), l.second()));
  });
}

const Label kStar = Label::atom("*");

FinFn proj_from_left_unit(const FinSet& x) { // 1 x X -> X
  return FinFn::from_map(product(FinSet::singleton(kStar), x).carrier, x,
                         [](const Label& l) { return l.second(); });
}

FinFn into_right_unit(const FinSet& x) { // X -> X x 1
  return FinFn::from_map(x, product(x, FinSet::singleton(kStar)).carrier,
                         [](const Label& l) { return Label::pair(l, kStar); });
}

std::vector<Obj> to_objs(const std::vector<FinSet>& sets) {
  std::vector<Obj> out;
  for (const auto& s : sets) out.emplace_back(s);
  return out;
}

} // namespace

std::vector<Obj> finset_palette(int lo, int hi) {
  std::vector<FinSet> sets;
  for (int n = lo; n <= hi; ++n) sets.push_back(FinSet::range(n, "e"));
  return to_objs(sets);
}

std::vector<ArrowInstance> finset_arrows(int bound) {
  std::vector<ArrowInstance> out;
  FinSet zero;
  FinSet one = FinSet::range(1, "e");
  FinSet two = FinSet::range(2, "e");
  out.push_back({"empty-into", Obj{zero}, Obj{one}, Mor{FinFn(zero, one, {})}});
  if (bound >= 2) {
    out.push_back({"incl", Obj{one}, Obj{two}, Mor{FinFn(one, two, {0})}});
    out.push_back({"fold", Obj{two}, Obj{one}, Mor{FinFn(two, one, {0, 0})}});
    out.push_back({"swap", Obj{two}, Obj{two}, Mor{FinFn(two, two, {1, 0})}});
  }
  return out;
}

SkewMonoidal cartesian_monoidal() {
  CatPtr cat = finset_cat();
  SkewMonoidal v;
  v.cat = cat;
  v.unit = FinSet::singleton(kStar);
  v.orientation = Orientation::Left;
  v.describe = "FinSet with the cartesian product";
  v.tensor = Bifunctor{"x", cat, cat, cat,
                       [](const Obj& x, const Obj& y) {
                         return Obj{product(as_finset(x), as_finset(y)).carrier};
                       },
                       [](const Mor& f, const Mor& g) {
                         return Mor{product_map(as_finfn(f), as_finfn(g))};
                       }};
  v.gamma = [](const Obj& a, const Obj& b, const Obj& c) {
    return Mor{assoc_fwd(as_finset(a), as_finset(b), as_finset(c))};
  };
  v.lambda = [](const Obj& a) { return Mor{proj_from_left_unit(as_finset(a))}; };
  v.rho = [](const Obj& a) { return Mor{into_right_unit(as_finset(a))}; };
  return v;
}

Braiding cartesian_swap() {
  Braiding b;
  b.host = cartesian_monoidal();
  b.c = [](const Obj& x, const Obj& y) {
    FinSet dom = product(as_finset(x), as_finset(y)).carrier;
    FinSet cod = product(as_finset(y), as_finset(x)).carrier;
    return Mor{FinFn::from_map(dom, cod, [](const Label& l) {
      return Label::pair(l.second(), l.first());
    })};
  };
  return b;
}

// ---------------------------------------------------------------------------
// Monoid warping
// ---------------------------------------------------------------------------

namespace {

SkewMonoidal mset_cartesian(const MonoidTable& m, const CatPtr& cat) {
  SkewMonoidal v;
  v.cat = cat;
  v.unit = MSetObj::trivial_unit(m);
  v.orientation = Orientation::Left;
  v.describe = m.name + "-sets with the cartesian tensor";
  v.tensor = Bifunctor{"x", cat, cat, cat,
                       [](const Obj& x, const Obj& y) {
                         return Obj{MSetObj::diagonal_product(as_mset(x), as_mset(y))};
                       },
                       [](const Mor& f, const Mor& g) {
                         return Mor{product_map(as_finfn(f), as_finfn(g))};
                       }};
  v.gamma = [](const Obj& a, const Obj& b, const Obj& c) {
    return Mor{assoc_fwd(as_mset(a).carrier, as_mset(b).carrier, as_mset(c).carrier)};
  };
  v.lambda = [](const Obj& a) { return Mor{proj_from_left_unit(as_mset(a).carrier)}; };
  v.rho = [](const Obj& a) { return Mor{into_right_unit(as_mset(a).carrier)}; };
  return v;
}

} // namespace

Instance monoid_warping(const MonoidTable& m) {
  m.validate();
  Instance inst;
  inst.kind = "monoid";
  inst.describe = "warping of FinSet by the monoid " + m.name;
  inst.notes.push_back("free action convention: n.(m,a) = (n.m, a), table order row.column");
  inst.monoid = m;
  inst.variant = Variant::LL;

  CatPtr vcat = mset_cat(m);
  CatPtr acat = finset_cat();
  inst.action.acting = mset_cartesian(m, vcat);
  inst.action.carrier = acat;
  inst.action.act = Bifunctor{"*", vcat, acat, acat,
                              [](const Obj& x, const Obj& b) {
                                return Obj{product(as_mset(x).carrier, as_finset(b)).carrier};
                              },
                              [](const Mor& f, const Mor& g) {
                                return Mor{product_map(as_finfn(f), as_finfn(g))};
                              }};
  inst.action.mult = [](const Obj& x, const Obj& y, const Obj& b) {
    return Mor{assoc_fwd(as_mset(x).carrier, as_mset(y).carrier, as_finset(b))};
  };
  inst.action.unitor = [](const Obj& b) { return Mor{proj_from_left_unit(as_finset(b))}; };
  inst.action.handedness = Handedness::Left;
  inst.action.describe = inst.describe;

  FinSet j = FinSet::singleton(kStar);
  MonoidTable mt = m;
  inst.adj.left = Functor{"free", acat, vcat,
                          [mt](const Obj& a) { return Obj{MSetObj::free_on(mt, as_finset(a))}; },
                          [mt](const Mor& f) {
                            return Mor{product_map(FinFn::identity(mt.carrier()), as_finfn(f))};
                          }};
  inst.adj.right = Functor{"underlying", vcat, acat,
                           [j](const Obj& x) {
                             return Obj{product(as_mset(x).carrier, j).carrier};
                           },
                           [j](const Mor& f) {
                             return Mor{product_map(as_finfn(f), FinFn::identity(j))};
                           }};
  Label e = mt.carrier().at(mt.identity);
  inst.adj.unit = [mt, j, e](const Obj& a) {
    const FinSet& s = as_finset(a);
    FinSet cod = product(product(mt.carrier(), s).carrier, j).carrier;
    return Mor{FinFn::from_map(s, cod, [e](const Label& l) {
      return Label::pair(Label::pair(e, l), kStar);
    })};
  };
  inst.adj.counit = [mt, j](const Obj& x) {
    const MSetObj& ms = as_mset(x);
    FinSet dom = product(mt.carrier(), product(ms.carrier, j).carrier).carrier;
    return Mor{FinFn::from_map(dom, ms.carrier, [mt, &ms](const Label& l) {
      int mi = *mt.carrier().index_of(l.first());
      return ms.apply(mi, l.second().first());
    })};
  };
  inst.adj.variant = Variant::LL;
  inst.adj.inducing = j;

  Braiding b;
  b.host = inst.action.acting;
  b.c = [](const Obj& x, const Obj& y) {
    FinSet dom = product(as_mset(x).carrier, as_mset(y).carrier).carrier;
    FinSet cod = product(as_mset(y).carrier, as_mset(x).carrier).carrier;
    return Mor{FinFn::from_map(dom, cod, [](const Label& l) {
      return Label::pair(l.second(), l.first());
    })};
  };
  inst.braiding = b;

  auto homs = closedness_witness_monoid(m);
  inst.left_hom = homs.first;
  inst.right_hom = homs.second;

  inst.apalette = [](int n) { return finset_palette(0, n); };
  inst.vpalette = [mt](int n) {
    std::vector<Obj> out;
    out.emplace_back(MSetObj::trivial_unit(mt));
    for (int k = 0; k <= n; ++k) out.emplace_back(MSetObj::free_on(mt, FinSet::range(k, "e")));
    return out;
  };
  inst.aarrows = finset_arrows;
  return inst;
}

std::pair<InternalHom, InternalHom> closedness_witness_monoid(const MonoidTable& m) {
  FinSet mc = m.carrier();

  // Left closed: <B,C> = (C^B)^M, transpose of f : (M x A) x B -> C sends
  // a to the table m |-> (b |-> f((m,a),b)).
  InternalHom left;
  left.name = "underlying cofree hom";
  left.ob = [mc](const Obj& b, const Obj& c) {
    FinSet cb = exponential(as_finset(b), as_finset(c)).carrier;
    return Obj{exponential(mc, cb).carrier};
  };
  left.transpose = [mc](const Obj& a, const Obj& b, const Obj& c, const Mor& f) {
    const FinSet& sa = as_finset(a);
    const FinSet& sb = as_finset(b);
    const FinFn& fn = as_finfn(f);
    FinSet cb = exponential(sb, as_finset(c)).carrier;
    FinSet target = exponential(mc, cb).carrier;
    return Mor{FinFn::from_map(sa, target, [&](const Label& al) {
      std::vector<std::pair<Label, Label>> outer;
      for (int mi = 0; mi < mc.size(); ++mi) {
        std::vector<std::pair<Label, Label>> inner;
        for (int bi = 0; bi < sb.size(); ++bi)
          inner.emplace_back(sb.at(bi),
                             fn(Label::pair(Label::pair(mc.at(mi), al), sb.at(bi))));
        outer.emplace_back(mc.at(mi), Label::fn(std::move(inner)));
      }
      return Label::fn(std::move(outer));
    })};
  };
  left.untranspose = [mc](const Obj& a, const Obj& b, const Obj& c, const Mor& g) {
    const FinSet& sa = as_finset(a);
    const FinSet& sb = as_finset(b);
    const FinFn& gn = as_finfn(g);
    FinSet dom = product(product(mc, sa).carrier, sb).carrier;
    return Mor{FinFn::from_map(dom, as_finset(c), [&](const Label& l) {
      const Label& ml = l.first().first();
      const Label& al = l.first().second();
      const Label& bl = l.second();
      for (const auto& [mk, inner] : gn(al).graph())
        if (mk == ml)
          for (const auto& [bk, v] : inner.graph())
            if (bk == bl) return v;
      throw IndexError("untranspose table lookup failed");
    })};
  };

  // Right closed: <A,C> = C^(M x A), transpose of f : (M x A) x B -> C sends
  // b to the table (m,a) |-> f((m,a),b).
  InternalHom right;
  right.name = "exponential by the free carrier";
  right.ob = [mc](const Obj& a, const Obj& c) {
    FinSet ma = product(mc, as_finset(a)).carrier;
    return Obj{exponential(ma, as_finset(c)).carrier};
  };
  right.transpose = [mc](const Obj& a, const Obj& b, const Obj& c, const Mor& f) {
    const FinSet& sa = as_finset(a);
    const FinSet& sb = as_finset(b);
    const FinFn& fn = as_finfn(f);
    FinSet ma = product(mc, sa).carrier;
    FinSet target = exponential(ma, as_finset(c)).carrier;
    return Mor{FinFn::from_map(sb, target, [&](const Label& bl) {
      std::vector<std::pair<Label, Label>> graph;
      for (int i = 0; i < ma.size(); ++i)
        graph.emplace_back(ma.at(i), fn(Label::pair(ma.at(i), bl)));
      return Label::fn(std::move(graph));
    })};
  };
  right.untranspose = [mc](const Obj& a, const Obj& b, const Obj& c, const Mor& g) {
    const FinSet& sa = as_finset(a);
    const FinSet& sb = as_finset(b);
    const FinFn& gn = as_finfn(g);
    FinSet dom = product(product(mc, sa).carrier, sb).carrier;
    return Mor{FinFn::from_map(dom, as_finset(c), [&](const Label& l) {
      for (const auto& [k, v] : gn(l.second()).graph())
        if (k == l.first()) return v;
      throw IndexError("untranspose table lookup failed");
    })};
  };

  return {left, right};
}

// ---------------------------------------------------------------------------
// Self action
// ---------------------------------------------------------------------------

Instance self_action_instance() {
  Instance inst;
  inst.kind = "self-action";
  inst.describe = "FinSet cartesian acting on itself, unit object fixed";
  inst.variant = Variant::LL;

  SkewMonoidal v = cartesian_monoidal();
  CatPtr cat = v.cat;
  inst.action.acting = v;
  inst.action.carrier = cat;
  inst.action.act = v.tensor;
  SkewMonoidal vcopy = v;
  inst.action.mult = [vcopy](const Obj& x, const Obj& y, const Obj& a) {
    return vcopy.gamma(x, y, a);
  };
  inst.action.unitor = [vcopy](const Obj& a) { return vcopy.lambda(a); };
  inst.action.handedness = Handedness::Left;
  inst.action.describe = inst.describe;

  Obj j = v.unit;
  inst.adj.left = identity_functor(cat);
  inst.adj.left.name = "Id";
  Bifunctor tensor = v.tensor;
  inst.adj.right = Functor{"(-)xI", cat, cat,
                           [tensor, j](const Obj& x) { return tensor.ob(x, j); },
                           [tensor, j, cat](const Mor& f) { return rwhisker(tensor, f, j); }};
  inst.adj.unit = [vcopy](const Obj& a) { return vcopy.rho(a); };
  inst.adj.counit = [vcopy, cat](const Obj& x) {
    return invert_mor(*cat, vcopy.rho(x), "right unitor");
  };
  inst.adj.variant = Variant::LL;
  inst.adj.inducing = j;

  inst.braiding = cartesian_swap();
  inst.apalette = [](int n) { return finset_palette(0, n); };
  inst.vpalette = [](int n) { return finset_palette(0, n); };
  inst.aarrows = finset_arrows;
  return inst;
}

// ---------------------------------------------------------------------------
// Copower
// ---------------------------------------------------------------------------

Instance copower_instance(const FinSet& j) {
  Instance inst;
  inst.kind = "copower";
  inst.describe = "copower action of FinSet on itself, unit " + j.str();
  inst.variant = Variant::LR;

  SkewMonoidal v = cartesian_monoidal();
  CatPtr cat = v.cat;
  inst.action.acting = v;
  inst.action.carrier = cat;
  inst.action.act = v.tensor; // X * c = X x c
  SkewMonoidal vcopy = v;
  inst.action.mult = [vcopy](const Obj& x, const Obj& y, const Obj& a) {
    return vcopy.gamma(x, y, a);
  };
  inst.action.unitor = [vcopy](const Obj& a) { return vcopy.lambda(a); };
  inst.action.handedness = Handedness::Left;
  inst.action.describe = inst.describe;

  FinSet jc = j;
  // J_* = (-) x j with right adjoint Hom(j, -).
  inst.adj.left = Functor{"(-)xj", cat, cat,
                          [jc](const Obj& x) { return Obj{product(as_finset(x), jc).carrier}; },
                          [jc](const Mor& f) {
                            return Mor{product_map(as_finfn(f), FinFn::identity(jc))};
                          }};
  inst.adj.right = Functor{"Hom(j,-)", cat, cat,
                           [jc](const Obj& c) {
                             return Obj{exponential(jc, as_finset(c)).carrier};
                           },
                           [jc](const Mor& f) {
                             const FinFn& fn = as_finfn(f);
                             FinSet dom = exponential(jc, fn.dom()).carrier;
                             FinSet cod = exponential(jc, fn.cod()).carrier;
                             return Mor{FinFn::from_map(dom, cod, [&](const Label& g) {
                               return label_of_fn(compose(fn, fn_of_label(jc, fn.dom(), g)));
                             })};
                           }};
  inst.adj.unit = [jc](const Obj& x) {
    const FinSet& sx = as_finset(x);
    FinSet xj = product(sx, jc).carrier;
    FinSet cod = exponential(jc, xj).carrier;
    return Mor{FinFn::from_map(sx, cod, [&](const Label& xl) {
      std::vector<std::pair<Label, Label>> graph;
      for (int t = 0; t < jc.size(); ++t) graph.emplace_back(jc.at(t), Label::pair(xl, jc.at(t)));
      return Label::fn(std::move(graph));
    })};
  };
  inst.adj.counit = [jc](const Obj& c) {
    Exponential e = exponential(jc, as_finset(c));
    return Mor{e.eval};
  };
  inst.adj.variant = Variant::LR;
  inst.adj.inducing = j;

  inst.apalette = [](int n) { return finset_palette(0, n); };
  inst.vpalette = [](int n) { return finset_palette(0, n); };
  inst.aarrows = finset_arrows;
  return inst;
}

// ---------------------------------------------------------------------------
// Power
// ---------------------------------------------------------------------------

Instance power_instance(const FinSet& j) {
  Instance inst;
  inst.kind = "power";
  inst.describe = "power action of the opposite of FinSet, unit " + j.str();
  inst.variant = Variant::LL;
  inst.notes.push_back("cases whose derived carriers exceed the size guard are skipped");

  CatPtr opcat = opposite(finset_cat());
  CatPtr acat = finset_cat();

  // Cartesian structure read in the opposite category (payloads are plain
  // finite functions; the wrapper supplies the reversed reading).
  SkewMonoidal v;
  v.cat = opcat;
  v.unit = FinSet::singleton(kStar);
  v.orientation = Orientation::Left;
  v.describe = "opposite of FinSet with the cartesian tensor";
  v.tensor = Bifunctor{"x^op", opcat, opcat, opcat,
                       [](const Obj& x, const Obj& y) {
                         return Obj{product(as_finset(x), as_finset(y)).carrier};
                       },
                       [](const Mor& f, const Mor& g) {
                         return Mor{product_map(as_finfn(f), as_finfn(g))};
                       }};
  v.gamma = [](const Obj& a, const Obj& b, const Obj& c) {
    // Payload runs backwards: X x (Y x Z) -> (X x Y) x Z.
    FinSet dom = product(as_finset(a), product(as_finset(b), as_finset(c)).carrier).carrier;
    FinSet cod = product(product(as_finset(a), as_finset(b)).carrier, as_finset(c)).carrier;
    return Mor{FinFn::from_map(dom, cod, [](const Label& l) {
      return Label::pair(Label::pair(l.first(), l.second().first()), l.second().second());
    })};
  };
  v.lambda = [](const Obj& a) {
    const FinSet& s = as_finset(a);
    return Mor{FinFn::from_map(s, product(FinSet::singleton(kStar), s).carrier,
                               [](const Label& l) { return Label::pair(kStar, l); })};
  };
  // rho payload runs X x 1 -> X in the base and reads X -> X@I in the opposite.
  v.rho = [](const Obj& a) {
    const FinSet& s = as_finset(a);
    return Mor{FinFn::from_map(product(s, FinSet::singleton(kStar)).carrier, s,
                               [](const Label& l) { return l.first(); })};
  };

  inst.action.acting = v;
  inst.action.carrier = acat;
  inst.action.act = Bifunctor{"pitchfork", opcat, acat, acat,
                              [](const Obj& x, const Obj& c) {
                                return Obj{exponential(as_finset(x), as_finset(c)).carrier};
                              },
                              [](const Mor& f, const Mor& g) {
                                // f is an op-arrow X -> X', payload X' -> X.
                                const FinFn& a = as_finfn(f);
                                const FinFn& h = as_finfn(g);
                                FinSet dom = exponential(a.cod(), h.dom()).carrier;
                                FinSet cod = exponential(a.dom(), h.cod()).carrier;
                                return Mor{FinFn::from_map(dom, cod, [&](const Label& gl) {
                                  FinFn base = fn_of_label(a.cod(), h.dom(), gl);
                                  return label_of_fn(compose(h, compose(base, a)));
                                })};
                              }};
  inst.action.mult = [](const Obj& x, const Obj& y, const Obj& c) {
    // c^(X x Y) -> (c^Y)^X
    const FinSet& sx = as_finset(x);
    const FinSet& sy = as_finset(y);
    const FinSet& sc = as_finset(c);
    FinSet xy = product(sx, sy).carrier;
    FinSet dom = exponential(xy, sc).carrier;
    FinSet cy = exponential(sy, sc).carrier;
    FinSet cod = exponential(sx, cy).carrier;
    return Mor{FinFn::from_map(dom, cod, [sx, sy, xy, sc](const Label& t) {
      FinFn whole = fn_of_label(xy, sc, t);
      std::vector<std::pair<Label, Label>> outer;
      for (int i = 0; i < sx.size(); ++i) {
        std::vector<std::pair<Label, Label>> inner;
        for (int k = 0; k < sy.size(); ++k)
          inner.emplace_back(sy.at(k), whole(Label::pair(sx.at(i), sy.at(k))));
        outer.emplace_back(sx.at(i), Label::fn(std::move(inner)));
      }
      return Label::fn(std::move(outer));
    })};
  };
  inst.action.unitor = [](const Obj& c) {
    const FinSet& sc = as_finset(c);
    FinSet one = FinSet::singleton(kStar);
    FinSet dom = exponential(one, sc).carrier;
    return Mor{FinFn::from_map(dom, sc, [&](const Label& g) {
      return fn_of_label(one, sc, g)(kStar);
    })};
  };
  inst.action.handedness = Handedness::Left;
  inst.action.describe = inst.describe;

  FinSet jc = j;
  inst.adj.left = Functor{"Hom(-,j)", acat, opcat,
                          [jc](const Obj& c) {
                            return Obj{exponential(as_finset(c), jc).carrier};
                          },
                          [jc](const Mor& f) {
                            // payload: Hom(c',j) -> Hom(c,j), precomposition
                            const FinFn& fn = as_finfn(f);
                            FinSet dom = exponential(fn.cod(), jc).carrier;
                            FinSet cod = exponential(fn.dom(), jc).carrier;
                            return Mor{FinFn::from_map(dom, cod, [&](const Label& g) {
                              return label_of_fn(compose(fn_of_label(fn.cod(), jc, g), fn));
                            })};
                          }};
  Bifunctor act = inst.action.act;
  inst.adj.right = Functor{"j^(-)", opcat, acat,
                           [act, jc](const Obj& x) { return act.ob(x, Obj{jc}); },
                           [act, jc](const Mor& f) {
                             return act.mor(f, FinFn::identity(jc));
                           }};
  inst.adj.unit = [jc](const Obj& c) {
    const FinSet& sc = as_finset(c);
    FinSet homcj = exponential(sc, jc).carrier;
    FinSet cod = exponential(homcj, jc).carrier;
    return Mor{FinFn::from_map(sc, cod, [&](const Label& xl) {
      std::vector<std::pair<Label, Label>> graph;
      for (int i = 0; i < homcj.size(); ++i)
        graph.emplace_back(homcj.at(i), fn_of_label(sc, jc, homcj.at(i))(xl));
      return Label::fn(std::move(graph));
    })};
  };
  inst.adj.counit = [jc, act](const Obj& x) {
    // payload: X -> Hom(j^X, j), evaluation
    const FinSet& sx = as_finset(x);
    FinSet jx = as_finset(act.ob(x, Obj{jc}));
    FinSet cod = exponential(jx, jc).carrier;
    return Mor{FinFn::from_map(sx, cod, [&](const Label& xl) {
      std::vector<std::pair<Label, Label>> graph;
      for (int i = 0; i < jx.size(); ++i)
        graph.emplace_back(jx.at(i), fn_of_label(sx, jc, jx.at(i))(xl));
      return Label::fn(std::move(graph));
    })};
  };
  inst.adj.variant = Variant::LL;
  inst.adj.inducing = j;

  inst.apalette = [](int n) { return finset_palette(0, n); };
  inst.vpalette = [](int n) { return finset_palette(0, n); };
  inst.aarrows = finset_arrows;
  return inst;
}

// ---------------------------------------------------------------------------
// Exponential warping
// ---------------------------------------------------------------------------

Instance exponential_warping_instance(const FinSet& j) {
  Instance inst;
  inst.kind = "exponential-warping";
  inst.describe = "right cartesian action with exponential adjoint, unit " + j.str();
  inst.variant = Variant::RR;

  SkewMonoidal v = cartesian_monoidal();
  CatPtr cat = v.cat;
  inst.action.acting = v;
  inst.action.carrier = cat;
  inst.action.act = Bifunctor{"*", cat, cat, cat,
                              [](const Obj& a, const Obj& x) {
                                return Obj{product(as_finset(a), as_finset(x)).carrier};
                              },
                              [](const Mor& f, const Mor& g) {
                                return Mor{product_map(as_finfn(f), as_finfn(g))};
                              }};
  inst.action.mult = [](const Obj& x, const Obj& y, const Obj& a) {
    // (A*X)*Y -> A*(X@Y)
    const FinSet& sa = as_finset(a);
    const FinSet& sx = as_finset(x);
    const FinSet& sy = as_finset(y);
    FinSet dom = product(product(sa, sx).carrier, sy).carrier;
    FinSet cod = product(sa, product(sx, sy).carrier).carrier;
    return Mor{FinFn::from_map(dom, cod, [](const Label& l) {
      return Label::pair(l.first().first(), Label::pair(l.first().second(), l.second()));
    })};
  };
  inst.action.unitor = [](const Obj& a) { return Mor{into_right_unit(as_finset(a))}; };
  inst.action.handedness = Handedness::Right;
  inst.action.describe = inst.describe;

  FinSet jc = j;
  Bifunctor act = inst.action.act;
  inst.adj.left = Functor{"jx(-)", cat, cat,
                          [act, jc](const Obj& x) { return act.ob(Obj{jc}, x); },
                          [act, jc](const Mor& f) {
                            return act.mor(FinFn::identity(jc), f);
                          }};
  inst.adj.right = Functor{"(-)^j", cat, cat,
                           [jc](const Obj& a) {
                             return Obj{exponential(jc, as_finset(a)).carrier};
                           },
                           [jc](const Mor& f) {
                             const FinFn& fn = as_finfn(f);
                             FinSet dom = exponential(jc, fn.dom()).carrier;
                             FinSet cod = exponential(jc, fn.cod()).carrier;
                             return Mor{FinFn::from_map(dom, cod, [&](const Label& g) {
                               return label_of_fn(compose(fn, fn_of_label(jc, fn.dom(), g)));
                             })};
                           }};
  inst.adj.unit = [jc](const Obj& x) {
    const FinSet& sx = as_finset(x);
    FinSet jx = product(jc, sx).carrier;
    FinSet cod = exponential(jc, jx).carrier;
    return Mor{FinFn::from_map(sx, cod, [&](const Label& xl) {
      std::vector<std::pair<Label, Label>> graph;
      for (int t = 0; t < jc.size(); ++t) graph.emplace_back(jc.at(t), Label::pair(jc.at(t), xl));
      return Label::fn(std::move(graph));
    })};
  };
  inst.adj.counit = [jc](const Obj& a) {
    const FinSet& sa = as_finset(a);
    FinSet aj = exponential(jc, sa).carrier;
    FinSet dom = product(jc, aj).carrier;
    return Mor{FinFn::from_map(dom, sa, [&](const Label& l) {
      return fn_of_label(jc, sa, l.second())(l.first());
    })};
  };
  inst.adj.variant = Variant::RR;
  inst.adj.inducing = j;

  inst.braiding = cartesian_swap();
  inst.apalette = [](int n) { return finset_palette(0, n); };
  inst.vpalette = [](int n) { return finset_palette(0, n); };
  inst.aarrows = finset_arrows;
  return inst;
}

// ---------------------------------------------------------------------------
// Functor category
// ---------------------------------------------------------------------------

Instance functor_category_instance(std::shared_ptr<const FinPresCat> shape, const FuncObj& j,
                                   std::vector<FuncObj> palette) {
  Instance inst;
  inst.kind = "functor-category";
  inst.describe = "postcomposition action on [C,FinSet] with Lan along J";
  inst.notes.push_back(
      "acting-category morphism equality is probe-scoped (canonical carriers + functor values)");
  inst.variant = Variant::LL;

  CatPtr acat = func_cat(shape);
  std::vector<FinSet> probes{FinSet(), FinSet::range(1, "e"), FinSet::range(2, "e")};
  auto add_probe = [&probes](const FinSet& s) {
    for (const auto& p : probes)
      if (p == s) return;
    probes.push_back(s);
  };
  for (const auto& s : j->at_obj) add_probe(s);
  for (const auto& f : palette)
    for (const auto& s : f->at_obj) add_probe(s);
  CatPtr vcat = endo_cat(probes);

  SkewMonoidal v;
  v.cat = vcat;
  v.unit = endo_ident();
  v.orientation = Orientation::Left;
  v.describe = "endofunctor expressions under composition";
  v.tensor = Bifunctor{
      "compose", vcat, vcat, vcat,
      [](const Obj& x, const Obj& y) {
        return Obj{endo_comp(as_endoexpr(x), as_endoexpr(y))};
      },
      [](const Mor& f, const Mor& g) {
        const EndoMorData& fm = as_endomor(f);
        const EndoMorData& gm = as_endomor(g);
        EndoExpr fdom = fm.dom, fcod = fm.cod, gdom = gm.dom, gcod = gm.cod;
        auto fc = fm.component;
        auto gc = gm.component;
        return Mor{make_endo_mor(
            endo_comp(fdom, gdom), endo_comp(fcod, gcod), [fdom, gcod, fc, gc](const FinSet& d) {
              FinFn inner = gc(d);
              return compose(fc(endo_eval(gcod, d)), endo_eval_mor(fdom, inner));
            })};
      }};
  v.gamma = [](const Obj& x, const Obj& y, const Obj& z) {
    EndoExpr ex = as_endoexpr(x), ey = as_endoexpr(y), ez = as_endoexpr(z);
    EndoExpr dom = endo_comp(endo_comp(ex, ey), ez);
    EndoExpr cod = endo_comp(ex, endo_comp(ey, ez));
    return Mor{make_endo_mor(dom, cod, [dom](const FinSet& d) {
      return FinFn::identity(endo_eval(dom, d));
    })};
  };
  v.lambda = [](const Obj& x) {
    EndoExpr ex = as_endoexpr(x);
    EndoExpr dom = endo_comp(endo_ident(), ex);
    return Mor{make_endo_mor(dom, ex, [dom](const FinSet& d) {
      return FinFn::identity(endo_eval(dom, d));
    })};
  };
  v.rho = [](const Obj& x) {
    EndoExpr ex = as_endoexpr(x);
    EndoExpr cod = endo_comp(ex, endo_ident());
    return Mor{make_endo_mor(ex, cod, [ex](const FinSet& d) {
      return FinFn::identity(endo_eval(ex, d));
    })};
  };

  inst.action.acting = v;
  inst.action.carrier = acat;
  inst.action.act = Bifunctor{
      "postcompose", vcat, acat, acat,
      [](const Obj& x, const Obj& f) { return Obj{tabulate(as_endoexpr(x), as_funcobj(f))}; },
      [](const Mor& am, const Mor& hm) {
        const EndoMorData& a = as_endomor(am);
        const FuncMorData& h = as_funcmor(hm);
        std::vector<FinFn> comps;
        for (const auto& hc : h.components)
          comps.push_back(compose(a.component(hc.cod()), endo_eval_mor(a.dom, hc)));
        return Mor{make_func_mor(tabulate(a.dom, h.dom), tabulate(a.cod, h.cod),
                                 std::move(comps))};
      }};
  inst.action.mult = [](const Obj& x, const Obj& y, const Obj& f) {
    EndoExpr exy = endo_comp(as_endoexpr(x), as_endoexpr(y));
    FuncObj dom = tabulate(exy, as_funcobj(f));
    FuncObj cod = tabulate(as_endoexpr(x), tabulate(as_endoexpr(y), as_funcobj(f)));
    std::vector<FinFn> comps;
    for (const auto& s : dom->at_obj) comps.push_back(FinFn::identity(s));
    return Mor{make_func_mor(dom, cod, std::move(comps))};
  };
  inst.action.unitor = [](const Obj& f) {
    const FuncObj& fo = std::get<FuncObj>(f);
    FuncObj dom = tabulate(endo_ident(), fo);
    std::vector<FinFn> comps;
    for (const auto& s : fo->at_obj) comps.push_back(FinFn::identity(s));
    return Mor{make_func_mor(dom, fo, std::move(comps))};
  };
  inst.action.handedness = Handedness::Left;
  inst.action.strict = true;
  inst.action.describe = inst.describe;

  FuncObj jtab = j;
  inst.adj.left = Functor{
      "Lan", acat, vcat,
      [jtab](const Obj& f) { return Obj{endo_lan(jtab, as_funcobj(f))}; },
      [jtab](const Mor& hm) {
        const FuncMorData& h = as_funcmor(hm);
        FuncObj fdom = h.dom, fcod = h.cod;
        std::vector<FinFn> comps = h.components;
        return Mor{make_endo_mor(endo_lan(jtab, fdom), endo_lan(jtab, fcod),
                                 [jtab, fdom, fcod, comps](const FinSet& d) {
                                   return lan_nat_component(jtab, fdom, fcod, comps, d);
                                 })};
      }};
  inst.adj.right = Functor{
      "(-).J", vcat, acat,
      [jtab](const Obj& x) { return Obj{tabulate(as_endoexpr(x), jtab)}; },
      [jtab](const Mor& am) {
        const EndoMorData& a = as_endomor(am);
        std::vector<FinFn> comps;
        for (const auto& s : jtab->at_obj) comps.push_back(a.component(s));
        return Mor{make_func_mor(tabulate(a.dom, jtab), tabulate(a.cod, jtab),
                                 std::move(comps))};
      }};
  inst.adj.unit = [jtab](const Obj& f) {
    const FuncObj& fo = std::get<FuncObj>(f);
    std::vector<FinFn> comps;
    for (int c = 0; c < fo->shape->n_objects(); ++c)
      comps.push_back(lan_unit_component(jtab, fo, c));
    return Mor{make_func_mor(fo, tabulate(endo_lan(jtab, fo), jtab), std::move(comps))};
  };
  inst.adj.counit = [jtab](const Obj& x) {
    EndoExpr ex = as_endoexpr(x);
    EndoExpr dom = endo_lan(jtab, tabulate(ex, jtab));
    return Mor{make_endo_mor(dom, ex, [jtab, ex](const FinSet& d) {
      return lan_counit_component(jtab, ex, d);
    })};
  };
  inst.adj.variant = Variant::LL;
  inst.adj.inducing = Obj{j};

  std::vector<FuncObj> pal = palette;
  inst.apalette = [pal](int) { return std::vector<Obj>(pal.begin(), pal.end()); };
  FuncObj j0 = j;
  inst.vpalette = [pal, j0](int) {
    std::vector<Obj> out;
    out.emplace_back(endo_ident());
    for (const auto& f : pal) out.emplace_back(endo_lan(j0, f));
    return out;
  };
  CatPtr acat_copy = acat;
  inst.aarrows = [pal, acat_copy](int) {
    std::vector<ArrowInstance> out;
    int budget = 4;
    for (const auto& f : pal)
      for (const auto& g : pal) {
        auto hs = acat_copy->hom(Obj{f}, Obj{g});
        if (!hs) continue;
        for (const auto& h : *hs) {
          if (budget == 0) return out;
          out.push_back({"nat" + std::to_string(4 - budget), Obj{f}, Obj{g}, h});
          --budget;
        }
      }
    return out;
  };
  return inst;
}

// ---------------------------------------------------------------------------
// Theorem-level checks
// ---------------------------------------------------------------------------

GroupIffResult group_iff_check(const MonoidTable& m, const SkewMonoidal& data,
                               const std::vector<Obj>& palette) {
  GroupIffResult out;
  out.is_group = m.is_group();

  out.associator_invertible = true;
  const Category& cat = *data.cat;
  for (const auto& a : palette)
    for (const auto& b : palette)
      for (const auto& c : palette) {
        auto r = cat.try_invert(data.gamma(a, b, c));
        if (std::holds_alternative<NotIso>(r)) out.associator_invertible = false;
      }

  // Independent oracle: (m,n) |-> (m.n, m) bijective on M^2.
  FinSet mc = m.carrier();
  FinSet m2 = product(mc, mc).carrier;
  FinFn pairing_map = FinFn::from_map(m2, m2, [&m, &mc](const Label& l) {
    int a = *mc.index_of(l.first());
    int b = *mc.index_of(l.second());
    return Label::pair(mc.at(m.mul(a, b)), l.first());
  });
  out.oracle_bijective = is_iso(invert(pairing_map));

  if (out.is_group != out.associator_invertible || out.is_group != out.oracle_bijective) {
    out.violation = "group=" + std::string(out.is_group ? "yes" : "no") +
                    " associator-invertible=" + (out.associator_invertible ? "yes" : "no") +
                    " oracle-bijective=" + (out.oracle_bijective ? "yes" : "no");
  }
  return out;
}

GroupIffResult group_iff_associator_invertible(const MonoidTable& m,
                                               const std::vector<Obj>& palette) {
  Instance inst = monoid_warping(m);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, palette);
  return group_iff_check(m, built.data, palette);
}

CheckReport unit_invertibility_check(const MonoidTable& m, const SkewMonoidal& data,
                                     const std::vector<Obj>& palette) {
  const Category& cat = *data.cat;
  bool expect = m.size() == 1;
  std::vector<CheckCase> cases;
  for (const auto& a : palette) {
    if (as_finset(a).empty()) continue; // maps between empty sets are always iso
    cases.push_back(make_case("lambda-invertible-iff-trivial", cat.show_obj(a),
                              [&cat, &data, a, expect]() -> std::pair<bool, std::string> {
                                auto r = cat.try_invert(data.lambda(a));
                                bool inv = !std::holds_alternative<NotIso>(r);
                                if (inv == expect) return {true, ""};
                                if (inv) return {false, "lambda invertible on nontrivial monoid"};
                                return {false, std::get<NotIso>(r).str()};
                              }));
    cases.push_back(make_case("rho-invertible-iff-trivial", cat.show_obj(a),
                              [&cat, &data, a, expect]() -> std::pair<bool, std::string> {
                                auto r = cat.try_invert(data.rho(a));
                                bool inv = !std::holds_alternative<NotIso>(r);
                                if (inv == expect) return {true, ""};
                                if (inv) return {false, "rho invertible on nontrivial monoid"};
                                return {false, std::get<NotIso>(r).str()};
                              }));
  }
  CheckReport report = run_cases("theorem-checks", cases);
  report.note("unit constraints invertible iff the monoid is trivial; |" + m.name +
              "| = " + std::to_string(m.size()));
  return report;
}

CheckReport unit_invertibility(const MonoidTable& m, const std::vector<Obj>& palette) {
  Instance inst = monoid_warping(m);
  BuiltSkew built = build_skew_structure(inst.action, inst.adj, Variant::LL, palette);
  return unit_invertibility_check(m, built.data, palette);
}

} // namespace skewcat
