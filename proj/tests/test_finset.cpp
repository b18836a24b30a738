#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "skewcat/colimit.hpp"
#include "skewcat/error.hpp"
#include "skewcat/finset.hpp"
#include "skewcat/fpcat.hpp"

using namespace skewcat;

namespace {

const FinSet two = FinSet::atoms({"0", "1"});
const FinSet abc = FinSet::atoms({"a", "b", "c"});
const FinSet one = FinSet::atoms({"*"});

FinFn swap2() {
  return FinFn(two, two, {1, 0});
}

} // namespace

TEST_CASE("labels order and compare canonically") {
  Label a = Label::atom("a");
  Label b = Label::atom("b");
  CHECK(a == Label::atom("a"));
  CHECK(a < b);
  CHECK(Label::pair(a, b) == Label::pair(a, b));
  CHECK(Label::pair(a, b) != Label::pair(b, a));
  CHECK(a < Label::pair(a, a));           // atoms sort before pairs
  CHECK(Label::inl(a) < Label::inr(a));
  CHECK(Label::cls(a).inner() == a);
  CHECK(Label::fn({{a, b}}).str() == "fn{a>b}");
}

TEST_CASE("finite sets reject duplicates and index elements") {
  CHECK_THROWS_AS(FinSet({Label::atom("x"), Label::atom("x")}), StructureError);
  CHECK(two.size() == 2);
  CHECK(two.index_of(Label::atom("1")) == 1);
  CHECK_FALSE(two.contains(Label::atom("z")));
  CHECK(FinSet() == FinSet());
}

TEST_CASE("compose: identities, involutions, constants") {
  FinFn idt = FinFn::identity(two);
  CHECK(compose(idt, idt) == idt);

  CHECK(compose(swap2(), swap2()) == idt);

  FinSet a = FinSet::atoms({"a"});
  FinSet z = FinSet::atoms({"z"});
  FinFn const_a = FinFn::constant(two, a, Label::atom("a"));
  FinFn const_z = FinFn::constant(a, z, Label::atom("z"));
  CHECK(compose(const_z, const_a) == FinFn::constant(two, z, Label::atom("z")));

  CHECK_THROWS_AS(compose(const_a, const_z), CompositionError);
  try {
    compose(const_a, const_z);
  } catch (const CompositionError& e) {
    std::string msg = e.what();
    CHECK(msg.find("{z}") != std::string::npos); // names both boundaries
    CHECK(msg.find("{0,1}") != std::string::npos);
  }
}

TEST_CASE("invert: identity, involution, constant witness") {
  FinFn idt = FinFn::identity(two);
  CHECK(iso(invert(idt)) == idt);
  CHECK(iso(invert(swap2())) == swap2());

  FinSet ab = FinSet::atoms({"a", "b"});
  FinFn c = FinFn::constant(two, ab, Label::atom("a"));
  auto r = invert(c);
  REQUIRE_FALSE(is_iso(r));
  NotIso w = std::get<NotIso>(r);
  // Both elements hit a; the collision is found before the missed element.
  CHECK(w.collided.has_value());
  CHECK(w.str().find("collide") != std::string::npos);

  FinFn inj = FinFn(one, ab, {1});
  auto r2 = invert(inj);
  REQUIRE_FALSE(is_iso(r2));
  CHECK(std::get<NotIso>(r2).missed == Label::atom("a"));
}

TEST_CASE("invert succeeds exactly on bijections (counting check)") {
  // Independent criterion: injective and surjective by counting images.
  for (const auto& f : all_maps(two, two)) {
    std::vector<int> hits(2, 0);
    for (int i = 0; i < 2; ++i) hits[f.map_index(i)]++;
    bool bij = hits[0] == 1 && hits[1] == 1;
    CHECK(is_iso(invert(f)) == bij);
  }
}

TEST_CASE("product: cardinality, unit law, pairing uniqueness") {
  Product p = product(two, abc);
  CHECK(p.carrier.size() == 6);
  CHECK(p.carrier.at(0) == Label::pair(Label::atom("0"), Label::atom("a")));

  Product pu = product(two, one);
  CHECK(is_iso(invert(pu.proj1)));

  // Enumerate all h : Z -> X x Y and count factorizations of each (f, g).
  for (int zsize : {0, 1, 2}) {
    FinSet z = FinSet::range(zsize, "z");
    auto hs = all_maps(z, p.carrier);
    for (const auto& f : all_maps(z, two))
      for (const auto& g : all_maps(z, abc)) {
        int count = 0;
        for (const auto& h : hs)
          if (compose(p.proj1, h) == f && compose(p.proj2, h) == g) ++count;
        CHECK(count == 1);
        CHECK(pairing(p, f, g) == [&] {
          for (const auto& h : hs)
            if (compose(p.proj1, h) == f && compose(p.proj2, h) == g) return h;
          throw std::runtime_error("unreachable");
        }());
      }
  }
}

TEST_CASE("coproduct: cardinality, empty unit, copairing uniqueness") {
  Coproduct c = coproduct(FinSet::atoms({"x"}), FinSet::atoms({"y"}));
  CHECK(c.carrier.size() == 2);

  Coproduct cu = coproduct(FinSet(), two);
  CHECK(is_iso(invert(cu.inj2)));

  FinSet x = FinSet::range(2, "x");
  FinSet y = FinSet::range(2, "y");
  FinSet z = FinSet::range(2, "z");
  Coproduct xy = coproduct(x, y);
  auto hs = all_maps(xy.carrier, z);
  for (const auto& f : all_maps(x, z))
    for (const auto& g : all_maps(y, z)) {
      int count = 0;
      for (const auto& h : hs)
        if (compose(h, xy.inj1) == f && compose(h, xy.inj2) == g) ++count;
      CHECK(count == 1);
      CHECK(compose(copairing(xy, f, g), xy.inj1) == f);
      CHECK(compose(copairing(xy, f, g), xy.inj2) == g);
    }
}

TEST_CASE("exponential: cardinality, curry/eval, hom counting") {
  Exponential e = exponential(two, abc); // abc^two
  CHECK(e.carrier.size() == 9);

  FinSet z = FinSet::range(2, "z");
  for (int xs : {1, 2})
    for (int ys : {1, 2}) {
      FinSet x = FinSet::range(xs, "x");
      FinSet y = FinSet::range(ys, "y");
      Exponential yx = exponential(x, y);
      Product zx = product(z, x);
      for (const auto& f : all_maps(zx.carrier, y)) {
        CHECK(uncurry(yx, z, curry(yx, z, f)) == f);
      }
      for (const auto& g : all_maps(z, yx.carrier)) {
        CHECK(curry(yx, z, uncurry(yx, z, g)) == g);
      }
    }

  // |Hom(Z x X, Y)| = |Hom(Z, Y^X)| at sizes 2.
  FinSet x2 = FinSet::range(2, "x");
  FinSet y2 = FinSet::range(2, "y");
  Exponential e2 = exponential(x2, y2);
  CHECK(all_maps(product(z, x2).carrier, y2).size() == 16);
  CHECK(all_maps(z, e2.carrier).size() == 16);

  // Empty cases: Y^0 is a point, 0^X is empty for nonempty X.
  CHECK(exponential(FinSet(), abc).carrier.size() == 1);
  CHECK(exponential(two, FinSet()).carrier.size() == 0);
  CHECK(fn_of_label(two, abc, e.carrier.at(0)) == FinFn::constant(two, abc, Label::atom("a")));
  CHECK(label_of_fn(fn_of_label(two, abc, e.carrier.at(5))) == e.carrier.at(5));
}

namespace {

// Test-only union-find oracle, independent of the colimit implementation.
struct TinyUF {
  std::vector<int> p;
  explicit TinyUF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int i) { return p[i] == i ? i : (p[i] = find(p[i])); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

TEST_CASE("finite colimit: identity diagram, discrete pair, coequalizer") {
  // One object, identity only.
  Diagram d1{FinPresCat::terminal(), {two}, {FinFn::identity(two)}};
  ColimitResult r1 = finite_colimit(d1);
  CHECK(r1.carrier.size() == 2);
  CHECK(is_iso(invert(r1.cocone[0])));

  // Discrete two-object diagram.
  Diagram d2{FinPresCat::discrete({"p", "q"}),
             {FinSet::atoms({"x"}), FinSet::atoms({"y"})},
             {FinFn::identity(FinSet::atoms({"x"})), FinFn::identity(FinSet::atoms({"y"}))}};
  CHECK(finite_colimit(d2).carrier.size() == 2);

  // Coequalizer of const_a, const_b : {0,1} -> {a,b} via a two-arrow shape.
  FinSet ab = FinSet::atoms({"a", "b"});
  FinPresCat shape;
  shape.objects = {"s", "t"};
  shape.arrows = {{"id_s", 0, 0}, {"id_t", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
  shape.identity = {0, 1};
  shape.comp.assign(4, std::vector<int>(4, -1));
  shape.comp[0][0] = 0;
  shape.comp[1][1] = 1;
  shape.comp[2][0] = 2;
  shape.comp[1][2] = 2;
  shape.comp[3][0] = 3;
  shape.comp[1][3] = 3;
  Diagram d3{shape,
             {two, ab},
             {FinFn::identity(two), FinFn::identity(ab),
              FinFn::constant(two, ab, Label::atom("a")),
              FinFn::constant(two, ab, Label::atom("b"))}};
  ColimitResult r3 = finite_colimit(d3);

  // Oracle: disjoint union {s.0, s.1, t.a, t.b}, unite per arrow entry.
  TinyUF uf(4);
  uf.unite(0, 2); // f(0) = a
  uf.unite(1, 2); // f(1) = a
  uf.unite(0, 3); // g(0) = b
  uf.unite(1, 3); // g(1) = b
  std::vector<int> roots;
  for (int i = 0; i < 4; ++i) roots.push_back(uf.find(i));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  CHECK(r3.carrier.size() == static_cast<int>(roots.size()));
  CHECK(r3.carrier.size() == 1);

  // Cocone commutes with both arrows.
  CHECK(compose(r3.cocone[1], d3.at_arrow[2]) == r3.cocone[0]);
  CHECK(compose(r3.cocone[1], d3.at_arrow[3]) == r3.cocone[0]);
}

TEST_CASE("finite colimit rejects non-functorial diagrams") {
  FinPresCat shape = FinPresCat::walking_arrow();
  // Wrong identity assignment on c0.
  Diagram bad{shape, {two, two}, {swap2(), FinFn::identity(two), FinFn::identity(two)}};
  CHECK_THROWS_AS(finite_colimit(bad), DiagramError);
}

TEST_CASE("finite colimit output is independent of presentation order") {
  FinSet ab = FinSet::atoms({"a", "b"});
  auto build = [&](bool swap_objects) {
    FinPresCat shape;
    if (swap_objects) {
      shape.objects = {"t", "s"};
      shape.arrows = {{"id_t", 0, 0}, {"id_s", 1, 1}, {"f", 1, 0}};
      shape.identity = {0, 1};
      shape.comp.assign(3, std::vector<int>(3, -1));
      shape.comp[0][0] = 0;
      shape.comp[1][1] = 1;
      shape.comp[2][1] = 2;
      shape.comp[0][2] = 2;
      Diagram d{shape, {ab, two}, {FinFn::identity(ab), FinFn::identity(two),
                                   FinFn::constant(two, ab, Label::atom("b"))}};
      return finite_colimit(d).carrier;
    }
    shape = FinPresCat::walking_arrow("s", "t", "f");
    Diagram d{shape, {two, ab}, {FinFn::identity(two), FinFn::identity(ab),
                                 FinFn::constant(two, ab, Label::atom("b"))}};
    return finite_colimit(d).carrier;
  };
  CHECK(build(false) == build(true));
}

TEST_CASE("presented category laws: monoid table, discrete, mutation") {
  FinPresCat z2 = FinPresCat::one_object({"0", "1"}, {{0, 1}, {1, 0}}, 0);
  CHECK(check_category_laws(z2).ok());

  CHECK(check_category_laws(FinPresCat::discrete({"a", "b", "c"})).ok());

  FinPresCat bad = z2;
  bad.comp[1][1] = 1; // mutate 1.1 from 0 to 1
  CheckReport r = check_category_laws(bad);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& c : r.failed())
    if (c.axiom == "associativity" || c.axiom == "identity") found = true;
  CHECK(found);
}
