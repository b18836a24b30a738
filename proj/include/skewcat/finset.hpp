#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "skewcat/label.hpp"

namespace skewcat {

// Finite set with a fixed element order. The order is part of the value: two
// sets are equal iff their element sequences coincide, which is what makes
// composites built along different paths comparable on the nose.
class FinSet {
public:
  FinSet();
  explicit FinSet(std::vector<Label> elements); // rejects duplicates

  static FinSet atoms(const std::vector<std::string>& names);
  static FinSet range(int n, const std::string& prefix = "x"); // {prefix0,...}
  static FinSet singleton(const Label& l);

  int size() const { return static_cast<int>(data_->elements.size()); }
  bool empty() const { return data_->elements.empty(); }
  const Label& at(int i) const { return data_->elements[i]; }
  const std::vector<Label>& elements() const { return data_->elements; }
  std::optional<int> index_of(const Label& l) const;
  bool contains(const Label& l) const { return index_of(l).has_value(); }

  bool operator==(const FinSet& other) const;
  bool operator!=(const FinSet& other) const { return !(*this == other); }

  std::string str() const;

private:
  struct Data {
    std::vector<Label> elements;
    std::unordered_map<Label, int, LabelHash> index;
  };
  std::shared_ptr<const Data> data_;
};

// Witness that a map is not an isomorphism: either two domain elements with
// the same image or a codomain element that is never hit.
struct NotIso {
  std::optional<std::pair<Label, Label>> collided;
  std::optional<Label> missed;
  std::string str() const;
};

// Total function between finite sets, stored as an index table. Equality is
// extensional: same dom, same cod, pointwise equal tables.
class FinFn {
public:
  FinFn(FinSet dom, FinSet cod, std::vector<int> table);
  static FinFn identity(const FinSet& x);
  static FinFn from_map(const FinSet& dom, const FinSet& cod,
                        const std::function<Label(const Label&)>& f);
  static FinFn constant(const FinSet& dom, const FinSet& cod, const Label& value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  int map_index(int i) const { return (*table_)[i]; }
  const Label& operator()(const Label& x) const;
  const std::vector<int>& table() const { return *table_; }

  bool operator==(const FinFn& other) const;
  bool operator!=(const FinFn& other) const { return !(*this == other); }

  bool is_identity() const;
  std::string str() const;

private:
  FinSet dom_, cod_;
  std::shared_ptr<const std::vector<int>> table_;
};

FinFn compose(const FinFn& g, const FinFn& f); // throws CompositionError on boundary mismatch

using InvertResult = std::variant<FinFn, NotIso>;
InvertResult invert(const FinFn& f);
bool is_iso(const InvertResult& r);
const FinFn& iso(const InvertResult& r); // throws StructureError if NotIso
FinFn invert_or_throw(const FinFn& f, const std::string& what);

// First domain element (in domain order) where two parallel maps disagree,
// rendered for failure witnesses. Maps must have equal boundaries.
std::string first_difference(const FinFn& a, const FinFn& b);

struct Product {
  FinSet carrier; // pair labels, lexicographic in the factor orders
  FinFn proj1, proj2;
};
Product product(const FinSet& x, const FinSet& y);
FinFn pairing(const Product& p, const FinFn& f, const FinFn& g); // unique h with proj1 h = f, proj2 h = g
FinFn product_map(const FinFn& f, const FinFn& g); // f x g on the canonical carriers

struct Coproduct {
  FinSet carrier; // inl-tagged x elements, then inr-tagged y elements
  FinFn inj1, inj2;
};
Coproduct coproduct(const FinSet& x, const FinSet& y);
FinFn copairing(const Coproduct& c, const FinFn& f, const FinFn& g);
FinFn coproduct_map(const FinFn& f, const FinFn& g);

struct Exponential {
  FinSet base, exponent;   // carrier = base^exponent (all maps exponent -> base)
  FinSet carrier;          // fn labels in lexicographic table order
  FinFn eval;              // carrier x exponent -> base, dom = product(carrier, exponent)
};
Exponential exponential(const FinSet& exponent, const FinSet& base);
// f : Z x X -> Y (dom must be product(z, x).carrier) to curry(f) : Z -> Y^X
FinFn curry(const Exponential& e, const FinSet& z, const FinFn& f);
FinFn uncurry(const Exponential& e, const FinSet& z, const FinFn& g);
// Y^X as a function object: recover the FinFn named by an fn label
FinFn fn_of_label(const FinSet& exponent, const FinSet& base, const Label& l);
Label label_of_fn(const FinFn& f);

// All maps x -> y in lexicographic table order.
std::vector<FinFn> all_maps(const FinSet& x, const FinSet& y);

} // namespace skewcat
