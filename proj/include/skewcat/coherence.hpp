#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/functor.hpp"
#include "skewcat/kernel.hpp"

namespace skewcat {

enum class Orientation { Left, Right };
enum class Handedness { Left, Right };
enum class Side { Left, Right };
enum class Direction { Lax, Oplax };
enum class Variant { LL, LR, RL, RR };

std::string to_string(Variant v);

// Skew monoidal structure in its user-facing orientation. For Left the
// constraints have boundaries
//   gamma : (A@B)@C -> A@(B@C),  lambda : I@A -> A,  rho : A -> A@I
// and for Right all three are reversed. Right-oriented data is checked
// through the formal-opposite wrapper (left_skew_opposite), never by a
// second axiom list.
struct SkewMonoidal {
  CatPtr cat;
  Bifunctor tensor;
  Obj unit;
  std::function<Mor(const Obj&, const Obj&, const Obj&)> gamma;
  std::function<Mor(const Obj&)> lambda, rho;
  Orientation orientation = Orientation::Left;
  std::string describe;
};

// Same structure presented as left-skew over the opposite category (payloads
// unchanged; only the reading flips). Involution.
SkewMonoidal left_skew_opposite(const SkewMonoidal& d);
// (A^op, @^rev): tensor arguments flipped, gamma reindexed, lambda/rho
// swapped, orientation preserved. The self-duality of skew structures.
SkewMonoidal self_dual(const SkewMonoidal& d);
// (A, @^rev) alone: orientation flips.
SkewMonoidal rev_dual(const SkewMonoidal& d);
// (A^op, @) alone: orientation flips, payloads unchanged.
SkewMonoidal op_dual(const SkewMonoidal& d);

// Strong action in its user-facing handedness.
//   Left:  act : V x A -> A, mult m^{X,Y}_A : (X@Y)*A -> X*(Y*A), unitor u_A : I*A -> A
//   Right: act : A x V -> A, mult m^{X,Y}_A : (A*X)*Y -> A*(X@Y), unitor u_A : A -> A*I
struct StrongAction {
  SkewMonoidal acting;
  CatPtr carrier;
  Bifunctor act;
  std::function<Mor(const Obj&, const Obj&, const Obj&)> mult;
  std::function<Mor(const Obj&)> unitor;
  Handedness handedness = Handedness::Left;
  bool strict = false; // mult/unitor are identities; invertibility cases are skipped with a note
  std::string describe;
};

// Canonical form used by one checker and one construction codebase: a left
// action of a left-skew category. Right actions are side-swapped + opposed;
// actions of right-skew categories are opposed.
StrongAction canonical_left_action(const StrongAction& a);

// Adjunction left -| right with unit in left.source and counit in
// left.target. `inducing` is the object J whose action-induced functor the
// right (for LL/RL) or left (for LR/RR) leg realizes.
struct Adjunction {
  Functor left, right;
  std::function<Mor(const Obj&)> unit;
  std::function<Mor(const Obj&)> counit;
  Variant variant = Variant::LL;
  Obj inducing;
};

Adjunction op_adjunction(const Adjunction& adj); // right^op -| left^op, unit/counit payloads swapped

struct MonoidalFunctor {
  Functor f;
  SkewMonoidal dom_skew, cod_skew;
  std::function<Mor(const Obj&, const Obj&)> phi; // lax: FX@FY -> F(X@Y); oplax: F(A@B) -> FA@FB
  Mor iota;                                       // lax: J -> F I; oplax: F J -> I
  Direction direction = Direction::Lax;
};

struct Braiding {
  SkewMonoidal host; // genuinely monoidal
  std::function<Mor(const Obj&, const Obj&)> c; // c_{X,Y} : X@Y -> Y@X
};

struct SkewBraiding {
  SkewMonoidal host;
  // Right: s^P_{A,B} : (P@A)@B -> (P@B)@A. Left: s^P_{A,B} : A@(B@P) -> B@(A@P).
  std::function<Mor(const Obj&, const Obj&, const Obj&)> s;
  Side side = Side::Right;
};

// Internal-hom candidate for closedness checks. For Side::Left the bijection
// is Hom(A@B, C) ~ Hom(A, hom(B,C)); for Side::Right it is
// Hom(A@B, C) ~ Hom(B, hom(A,C)). transpose/untranspose take (A, B, C, map).
struct InternalHom {
  std::string name;
  std::function<Obj(const Obj&, const Obj&)> ob;
  std::function<Mor(const Obj&, const Obj&, const Obj&, const Mor&)> transpose;
  std::function<Mor(const Obj&, const Obj&, const Obj&, const Mor&)> untranspose;
};

// --- Suites -----------------------------------------------------------------

CheckReport check_skew_monoidal(const SkewMonoidal& d, const std::vector<Obj>& objs);

CheckReport check_strong_action(const StrongAction& a, const std::vector<Obj>& vobjs,
                                const std::vector<Obj>& aobjs);

CheckReport check_adjunction_triangles(const Adjunction& adj, const std::vector<Obj>& source_objs,
                                       const std::vector<Obj>& target_objs);

CheckReport check_lax_monoidal(const MonoidalFunctor& mf, const std::vector<Obj>& objs);
CheckReport check_oplax_monoidal(const MonoidalFunctor& mf, const std::vector<Obj>& objs);

CheckReport check_braiding_hexagons(const Braiding& b, const std::vector<Obj>& objs);

CheckReport check_right_braiding(const SkewBraiding& sb, const std::vector<Obj>& objs);
// The four duals of the right-braiding axioms, derived mechanically by
// transporting through (A^op, @^rev); see docs/braiding.md for the list.
CheckReport check_left_braiding(const SkewBraiding& sb, const std::vector<Obj>& objs);
CheckReport check_symmetry(const SkewBraiding& sb, const std::vector<Obj>& objs);

CheckReport check_closedness(const SkewMonoidal& d, const InternalHom& h, Side side,
                             const std::vector<Obj>& objs,
                             const std::vector<ArrowInstance>& arrows);

} // namespace skewcat
