#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace skewcat {

// Immutable structured element label. Carriers built along different
// construction paths must agree on the nose, so every constructor is
// deterministic and comparison is structural.
//
//   atom  opaque name
//   pair  (a,b)            product elements
//   inl   inl(a), inr(b)   coproduct elements
//   fn    fn{x>y,...}      exponential elements (graph of a function,
//                          entries in domain order)
//   cls   [rep]            colimit classes, tagged by their representative
class Label {
public:
  enum class Kind : std::uint8_t { Atom, Pair, Inl, Inr, Fn, Cls };

  static Label atom(std::string name);
  static Label pair(const Label& a, const Label& b);
  static Label inl(const Label& a);
  static Label inr(const Label& a);
  static Label fn(std::vector<std::pair<Label, Label>> graph);
  static Label cls(const Label& representative);

  Kind kind() const { return node_->kind; }
  const std::string& text() const;                        // Atom
  const Label& first() const;                             // Pair
  const Label& second() const;                            // Pair
  const Label& inner() const;                             // Inl/Inr/Cls
  const std::vector<std::pair<Label, Label>>& graph() const; // Fn

  bool operator==(const Label& other) const;
  bool operator!=(const Label& other) const { return !(*this == other); }
  std::strong_ordering operator<=>(const Label& other) const;

  std::size_t hash() const { return node_->hash; }
  std::string str() const;

private:
  struct Node {
    Kind kind;
    std::size_t hash;
    std::string text;
    std::vector<Label> parts;
    std::vector<std::pair<Label, Label>> graph;
  };
  explicit Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

} // namespace skewcat
