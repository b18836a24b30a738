#pragma once

#include <optional>

#include "skewcat/construction.hpp"
#include "skewcat/funcats.hpp"
#include "skewcat/monoid.hpp"

namespace skewcat {

// A ready-to-drive (action, adjunction) pair plus the extras suites need:
// palette builders scoped by a carrier-size bound, an acting braiding when
// one exists, internal-hom candidates, and the monoid table for the
// theorem-level checks.
struct Instance {
  std::string kind;
  std::string describe;
  std::vector<std::string> notes;
  StrongAction action;
  Adjunction adj;
  Variant variant = Variant::LL;
  std::optional<Braiding> braiding;
  std::optional<InternalHom> left_hom, right_hom;
  std::optional<MonoidTable> monoid;
  std::function<std::vector<Obj>(int)> apalette; // carrier-category objects at bound n
  std::function<std::vector<Obj>(int)> vpalette; // acting-category objects at bound n
  std::function<std::vector<ArrowInstance>(int)> aarrows;
};

// FinSet with cartesian product as a (genuinely monoidal) left-skew structure,
// and its swap braiding. Shared by several instances.
SkewMonoidal cartesian_monoidal();
Braiding cartesian_swap();

// M-sets with the cartesian tensor acting on FinSet by (X,.)*B = UX x B;
// free -| forgetful induced by the one-point set. The built tensor's carrier
// is (M x A) x B. Action convention: n.(m,a) = (n.m, a).
Instance monoid_warping(const MonoidTable& m);

// FinSet acting on itself by the cartesian product, unit object fixed, with
// the identity adjoint; the construction returns the original structure.
Instance self_action_instance();

// Postcomposition action of endofunctor expressions on [C, FinSet];
// Lan_J -| (-) . J gives the tensor G @ F = Lan_J(G) . F with unit J.
// The first functor in the palette plays no special role; J is passed apart.
Instance functor_category_instance(std::shared_ptr<const FinPresCat> shape, const FuncObj& j,
                                   std::vector<FuncObj> palette);

// Copowers: FinSet acts on itself by X*c = X x c; fixing j, the induced
// (-) x j has the right adjoint Hom(j,-), yielding the right-skew tensor
// c @ d = Hom(j,c) x d (variant LR).
Instance copower_instance(const FinSet& j);

// Powers: the opposite of FinSet acts by X*c = c^X; fixing j, Hom(-,j) is
// left adjoint to the induced functor, yielding the left-skew tensor
// c @ d = d^Hom(c,j) (variant LL over the formal opposite).
Instance power_instance(const FinSet& j);

// FinSet acting on itself on the right by A*X = A x X; fixing j, the induced
// j x (-) has the right adjoint (-)^j, yielding the left-skew tensor
// P @ A = P x A^j (variant RR), ready for the braiding construction.
Instance exponential_warping_instance(const FinSet& j);

// Internal-hom candidates for the monoid instance:
//   right closed: <A,C> = C^(M x A)
//   left closed:  <B,C> = ((C^B)^M), the underlying set of the cofree M-set on C^B.
std::pair<InternalHom, InternalHom> closedness_witness_monoid(const MonoidTable& m);

// --- Theorem-level checks on the monoid family ------------------------------

struct GroupIffResult {
  bool is_group = false;
  bool associator_invertible = false;
  bool oracle_bijective = false; // (m,n) |-> (m.n, m) bijective on M^2
  std::optional<std::string> violation;
};

// Decides group-ness from the table, associator invertibility from the built
// structure on the palette, and cross-checks both against the bijectivity
// oracle. A disagreement is reported as a violation (never expected).
GroupIffResult group_iff_associator_invertible(const MonoidTable& m,
                                               const std::vector<Obj>& palette);
// Same decision procedure against an externally supplied structure (exposed
// for the mutation fixtures).
GroupIffResult group_iff_check(const MonoidTable& m, const SkewMonoidal& data,
                               const std::vector<Obj>& palette);

// Unit-constraint invertibility agrees with |M| = 1 on every nonempty palette
// object; disagreements are failures.
CheckReport unit_invertibility(const MonoidTable& m, const std::vector<Obj>& palette);
CheckReport unit_invertibility_check(const MonoidTable& m, const SkewMonoidal& data,
                                     const std::vector<Obj>& palette);

// Canonical FinSet palettes {e0..}, sizes lo..hi.
std::vector<Obj> finset_palette(int lo, int hi);
std::vector<ArrowInstance> finset_arrows(int bound);

} // namespace skewcat
