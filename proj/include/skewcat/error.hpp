#pragma once

#include <stdexcept>
#include <string>

namespace skewcat {

// Structural misuse (mismatched boundaries, malformed inputs) is reported by
// throwing; expected negative outcomes (a map failing to be iso, an axiom
// failing on a tuple) are ordinary return values.
struct SkewError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompositionError : SkewError {
  using SkewError::SkewError;
};

// Data handed to a checker or builder is malformed (boundary mismatch inside a
// composite, a required iso that is not one). Distinct from an axiom failure.
struct StructureError : SkewError {
  using SkewError::SkewError;
};

struct DiagramError : SkewError {
  using SkewError::SkewError;
};

struct IndexError : SkewError {
  using SkewError::SkewError;
};

struct MonoidError : SkewError {
  using SkewError::SkewError;
};

struct FunctorError : SkewError {
  using SkewError::SkewError;
};

struct AdjunctionError : SkewError {
  using SkewError::SkewError;
};

struct BraidingError : SkewError {
  using SkewError::SkewError;
};

// A carrier requested during a check would exceed the size guard (the power
// tensor grows doubly exponentially in its first argument). The case runner
// records the case as skipped instead of evaluating it.
struct InfeasibleError : SkewError {
  using SkewError::SkewError;
};

// Plan-file violations carry a position for diagnostics.
struct SchemaError : SkewError {
  int line;
  std::string field;
  SchemaError(int line_, std::string field_, const std::string& what_)
      : SkewError("line " + std::to_string(line_) + ", field '" + field_ + "': " + what_),
        line(line_),
        field(std::move(field_)) {}
};

} // namespace skewcat
