#pragma once

#include "skewcat/coherence.hpp"

namespace skewcat {

// Adjoint transposition for left -| right: a map f : left(x) -> y in the
// target corresponds to right(f) . unit_x : x -> right(y) in the source, and
// back via counit_y . left(g). The object arguments pin the indexing that the
// morphism payloads cannot carry.
Mor adjoint_transpose(const Adjunction& adj, const Obj& x, const Mor& f);
Mor adjoint_untranspose(const Adjunction& adj, const Obj& y, const Mor& g);

// Strength and fusion maps of a canonical (left action, left adjoint) pair:
//   strength(X, B) : J_!(X*B) -> X @ J_!B
//   fusion(A, B)   : J_!(J_!A*B) -> J_!A @ J_!B   (strength at X = J_!A)
// Built by transposing inverse-multiplicator composites; requires the
// relevant multiplicator components to be invertible (StructureError).
Mor build_strength(const StrongAction& action, const Adjunction& adj, const Obj& x, const Obj& b);
Mor build_fusion(const StrongAction& action, const Adjunction& adj, const Obj& a, const Obj& b);

// The two equations every strength satisfies by construction:
//   (AT*)  strength = counit . J_!(m^-1 . (X*unit))
//   (AT)   (strength * J) . unit = m^-1 . (X*unit)
// Verified by composing the actual tables.
CheckReport check_fusion_equations(const StrongAction& action, const Adjunction& adj,
                                   const std::vector<Obj>& vobjs, const std::vector<Obj>& aobjs);

// A constructed skew structure, keeping both the user-facing presentation and
// the canonical core the formulas ran on (needed by the induced monoidal
// functor structures and the probes).
struct BuiltSkew {
  SkewMonoidal data;          // facing structure on the original carrier
  Variant variant;
  StrongAction core_action;   // canonical left action
  Adjunction core_adj;        // canonical left-adjoint adjunction
  SkewMonoidal core;          // left-skew structure the formulas produced
};

// The construction: tensor A@B = J_!A*B (variant LL; the other three variants
// conjugate by side-swap / opposite wrappers), unit J,
//   gamma = m . (fusion * C),  lambda = u . (counit_I * A) . (J_!u_J^-1 * A),
//   rho = unit.
// Triangle identities are spot-checked on the palette (AdjunctionError).
BuiltSkew build_skew_structure(const StrongAction& action, const Adjunction& adj, Variant variant,
                               const std::vector<Obj>& palette);

// Lax structure on the right adjoint: phi = m^-1 . (counit_X * J_*Y),
// iota = u_J^-1. Oplax structure on the left adjoint: phi-hat = fusion,
// iota-hat = counit_I . J_!(u_J^-1).
MonoidalFunctor build_lax_on_right_adjoint(const BuiltSkew& built);
MonoidalFunctor build_oplax_on_left_adjoint(const BuiltSkew& built);

// Reports invertibility of every gamma/lambda/rho/fusion component on the
// palette and of counit_I, and asserts: if all fusion components and counit_I
// are invertible, then all gamma and lambda components are.
CheckReport invertibility_probe(const BuiltSkew& built, const std::vector<Obj>& objs);

// Braiding construction. For variant RR (right action, right adjoint):
//   s^P_{A,B} = m^{-1} . (P * c_{J^#A,J^#B}) . m, a right braiding.
// For variant LL the mirror composite is a left braiding. The acting braiding
// must pass its hexagons on the given palette first (BraidingError).
SkewBraiding build_braiding(const BuiltSkew& built, const StrongAction& action,
                            const Adjunction& adj, const Braiding& c,
                            const std::vector<Obj>& vpalette);

} // namespace skewcat
