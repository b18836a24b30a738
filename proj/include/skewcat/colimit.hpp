#pragma once

#include <vector>

#include "skewcat/finset.hpp"
#include "skewcat/fpcat.hpp"

namespace skewcat {

// Functor from a finitely presented shape to finite sets.
struct Diagram {
  FinPresCat shape;
  std::vector<FinSet> at_obj;  // indexed like shape.objects
  std::vector<FinFn> at_arrow; // indexed like shape.arrows
};

struct ColimitResult {
  FinSet carrier;               // cls-tagged classes, sorted by canonical label order
  std::vector<FinFn> cocone;    // per shape object: quotient injection
};

// Quotient of the disjoint union of all object carriers by the equivalence
// generated by x ~ (arrow image of x). Classes are represented by the
// smallest member label under the global canonical order, so the result does
// not depend on presentation order. Throws DiagramError when the assignments
// are not functorial, naming the offending composite.
ColimitResult finite_colimit(const Diagram& d);

} // namespace skewcat
