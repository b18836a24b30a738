#include "skewcat/finset.hpp"

#include <algorithm>
#include <cmath>

#include "skewcat/error.hpp"

namespace skewcat {

FinSet::FinSet() : FinSet(std::vector<Label>{}) {}

FinSet::FinSet(std::vector<Label> elements) {
  auto data = std::make_shared<Data>();
  data->elements = std::move(elements);
  data->index.reserve(data->elements.size());
  for (int i = 0; i < static_cast<int>(data->elements.size()); ++i) {
    auto [it, fresh] = data->index.emplace(data->elements[i], i);
    if (!fresh) throw StructureError("duplicate label in finite set: " + data->elements[i].str());
  }
  data_ = std::move(data);
}

FinSet FinSet::atoms(const std::vector<std::string>& names) {
  std::vector<Label> ls;
  ls.reserve(names.size());
  for (const auto& n : names) ls.push_back(Label::atom(n));
  return FinSet(std::move(ls));
}

FinSet FinSet::range(int n, const std::string& prefix) {
  std::vector<Label> ls;
  ls.reserve(n);
  for (int i = 0; i < n; ++i) ls.push_back(Label::atom(prefix + std::to_string(i)));
  return FinSet(std::move(ls));
}

FinSet FinSet::singleton(const Label& l) { return FinSet({l}); }

std::optional<int> FinSet::index_of(const Label& l) const {
  auto it = data_->index.find(l);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool FinSet::operator==(const FinSet& other) const {
  if (data_ == other.data_) return true;
  return data_->elements == other.data_->elements;
}

std::string FinSet::str() const {
  std::string out = "{";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += at(i).str();
  }
  return out + "}";
}

std::string NotIso::str() const {
  if (collided) return "not injective: " + collided->first.str() + " and " + collided->second.str() + " collide";
  if (missed) return "not surjective: " + missed->str() + " not hit";
  return "not iso";
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (static_cast<int>(table.size()) != dom_.size())
    throw StructureError("function table size " + std::to_string(table.size()) +
                         " does not match domain size " + std::to_string(dom_.size()));
  for (int v : table)
    if (v < 0 || v >= cod_.size())
      throw StructureError("function table entry out of codomain range");
  table_ = std::make_shared<const std::vector<int>>(std::move(table));
}

FinFn FinFn::identity(const FinSet& x) {
  std::vector<int> t(x.size());
  for (int i = 0; i < x.size(); ++i) t[i] = i;
  return FinFn(x, x, std::move(t));
}

FinFn FinFn::from_map(const FinSet& dom, const FinSet& cod,
                      const std::function<Label(const Label&)>& f) {
  std::vector<int> t;
  t.reserve(dom.size());
  for (int i = 0; i < dom.size(); ++i) {
    Label img = f(dom.at(i));
    auto j = cod.index_of(img);
    if (!j)
      throw StructureError("image " + img.str() + " of " + dom.at(i).str() +
                           " is not in codomain " + cod.str());
    t.push_back(*j);
  }
  return FinFn(dom, cod, std::move(t));
}

FinFn FinFn::constant(const FinSet& dom, const FinSet& cod, const Label& value) {
  auto j = cod.index_of(value);
  if (!j) throw StructureError("constant value " + value.str() + " not in codomain");
  return FinFn(dom, cod, std::vector<int>(dom.size(), *j));
}

const Label& FinFn::operator()(const Label& x) const {
  auto i = dom_.index_of(x);
  if (!i) throw IndexError("element " + x.str() + " not in domain " + dom_.str());
  return cod_.at((*table_)[*i]);
}

bool FinFn::operator==(const FinFn& other) const {
  if (dom_ != other.dom_ || cod_ != other.cod_) return false;
  if (table_ == other.table_) return true;
  return *table_ == *other.table_;
}

bool FinFn::is_identity() const {
  if (dom_ != cod_) return false;
  for (int i = 0; i < dom_.size(); ++i)
    if ((*table_)[i] != i) return false;
  return true;
}

std::string FinFn::str() const {
  std::string out = dom_.str() + " -> " + cod_.str() + " {";
  for (int i = 0; i < dom_.size(); ++i) {
    if (i) out += ",";
    out += dom_.at(i).str() + ">" + cod_.at((*table_)[i]).str();
  }
  return out + "}";
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (f.cod() != g.dom())
    throw CompositionError("cannot compose: codomain " + f.cod().str() +
                           " does not match domain " + g.dom().str());
  std::vector<int> t;
  t.reserve(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i) t.push_back(g.map_index(f.map_index(i)));
  return FinFn(f.dom(), g.cod(), std::move(t));
}

InvertResult invert(const FinFn& f) {
  std::vector<int> pre(f.cod().size(), -1);
  for (int i = 0; i < f.dom().size(); ++i) {
    int j = f.map_index(i);
    if (pre[j] >= 0)
      return NotIso{std::make_pair(f.dom().at(pre[j]), f.dom().at(i)), std::nullopt};
    pre[j] = i;
  }
  for (int j = 0; j < f.cod().size(); ++j)
    if (pre[j] < 0) return NotIso{std::nullopt, f.cod().at(j)};
  return FinFn(f.cod(), f.dom(), std::move(pre));
}

bool is_iso(const InvertResult& r) { return std::holds_alternative<FinFn>(r); }

const FinFn& iso(const InvertResult& r) {
  if (const auto* f = std::get_if<FinFn>(&r)) return *f;
  throw StructureError("expected an isomorphism: " + std::get<NotIso>(r).str());
}

FinFn invert_or_throw(const FinFn& f, const std::string& what) {
  auto r = invert(f);
  if (const auto* g = std::get_if<FinFn>(&r)) return *g;
  throw StructureError(what + " is not invertible (" + std::get<NotIso>(r).str() + ")");
}

std::string first_difference(const FinFn& a, const FinFn& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod())
    throw StructureError("first_difference needs parallel maps");
  for (int i = 0; i < a.dom().size(); ++i)
    if (a.map_index(i) != b.map_index(i))
      return "at " + a.dom().at(i).str() + ": " + a.cod().at(a.map_index(i)).str() +
             " vs " + b.cod().at(b.map_index(i)).str();
  return "(no difference)";
}

namespace {

// Carriers above this size abort construction with InfeasibleError; the case
// runner records such cases as skipped. Keeps doubly-exponential tensors
// (power instance) from hanging a suite.
constexpr double kCarrierGuard = 2e6;

void guard_size(double n, const char* what) {
  if (n > kCarrierGuard)
    throw InfeasibleError(std::string(what) + " carrier would have " + std::to_string(n) +
                          " elements (size guard " + std::to_string(kCarrierGuard) + ")");
}

} // namespace

Product product(const FinSet& x, const FinSet& y) {
  guard_size(static_cast<double>(x.size()) * y.size(), "product");
  std::vector<Label> elems;
  std::vector<int> p1, p2;
  elems.reserve(x.size() * y.size());
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j) {
      elems.push_back(Label::pair(x.at(i), y.at(j)));
      p1.push_back(i);
      p2.push_back(j);
    }
  FinSet carrier(std::move(elems));
  return Product{carrier, FinFn(carrier, x, std::move(p1)), FinFn(carrier, y, std::move(p2))};
}

FinFn pairing(const Product& p, const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom()) throw CompositionError("pairing needs a common domain");
  if (f.cod() != p.proj1.cod() || g.cod() != p.proj2.cod())
    throw CompositionError("pairing codomains do not match the product factors");
  return FinFn::from_map(f.dom(), p.carrier,
                         [&](const Label& z) { return Label::pair(f(z), g(z)); });
}

FinFn product_map(const FinFn& f, const FinFn& g) {
  Product d = product(f.dom(), g.dom());
  Product c = product(f.cod(), g.cod());
  return FinFn::from_map(d.carrier, c.carrier, [&](const Label& l) {
    return Label::pair(f(l.first()), g(l.second()));
  });
}

Coproduct coproduct(const FinSet& x, const FinSet& y) {
  std::vector<Label> elems;
  elems.reserve(x.size() + y.size());
  for (int i = 0; i < x.size(); ++i) elems.push_back(Label::inl(x.at(i)));
  for (int j = 0; j < y.size(); ++j) elems.push_back(Label::inr(y.at(j)));
  FinSet carrier(std::move(elems));
  std::vector<int> i1(x.size()), i2(y.size());
  for (int i = 0; i < x.size(); ++i) i1[i] = i;
  for (int j = 0; j < y.size(); ++j) i2[j] = x.size() + j;
  return Coproduct{carrier, FinFn(x, carrier, std::move(i1)), FinFn(y, carrier, std::move(i2))};
}

FinFn copairing(const Coproduct& c, const FinFn& f, const FinFn& g) {
  if (f.cod() != g.cod()) throw CompositionError("copairing needs a common codomain");
  return FinFn::from_map(c.carrier, f.cod(), [&](const Label& l) {
    return l.kind() == Label::Kind::Inl ? f(l.inner()) : g(l.inner());
  });
}

FinFn coproduct_map(const FinFn& f, const FinFn& g) {
  Coproduct d = coproduct(f.dom(), g.dom());
  Coproduct c = coproduct(f.cod(), g.cod());
  return FinFn::from_map(d.carrier, c.carrier, [&](const Label& l) {
    return l.kind() == Label::Kind::Inl ? Label::inl(f(l.inner())) : Label::inr(g(l.inner()));
  });
}

namespace {

Label graph_label(const FinSet& exponent, const FinSet& base, const std::vector<int>& table) {
  std::vector<std::pair<Label, Label>> graph;
  graph.reserve(table.size());
  for (int i = 0; i < exponent.size(); ++i) graph.emplace_back(exponent.at(i), base.at(table[i]));
  return Label::fn(std::move(graph));
}

} // namespace

Exponential exponential(const FinSet& exponent, const FinSet& base) {
  if (!exponent.empty() && !base.empty())
    guard_size(std::pow(static_cast<double>(base.size()), exponent.size()), "exponential");
  std::vector<Label> elems;
  if (exponent.empty()) {
    elems.push_back(Label::fn({}));
  } else if (!base.empty()) {
    std::vector<int> table(exponent.size(), 0);
    while (true) {
      elems.push_back(graph_label(exponent, base, table));
      int k = exponent.size() - 1;
      while (k >= 0 && table[k] == base.size() - 1) table[k--] = 0;
      if (k < 0) break;
      ++table[k];
    }
  }
  FinSet carrier(std::move(elems));
  Product dom = product(carrier, exponent);
  FinFn eval = FinFn::from_map(dom.carrier, base, [&](const Label& l) {
    for (const auto& [x, y] : l.first().graph())
      if (x == l.second()) return y;
    throw IndexError("evaluation argument " + l.second().str() + " missing from table");
  });
  return Exponential{base, exponent, carrier, eval};
}

FinFn curry(const Exponential& e, const FinSet& z, const FinFn& f) {
  Product zx = product(z, e.exponent);
  if (f.dom() != zx.carrier || f.cod() != e.base)
    throw CompositionError("curry argument must be a map Z x X -> Y on the canonical product");
  return FinFn::from_map(z, e.carrier, [&](const Label& zl) {
    std::vector<std::pair<Label, Label>> graph;
    graph.reserve(e.exponent.size());
    for (int i = 0; i < e.exponent.size(); ++i)
      graph.emplace_back(e.exponent.at(i), f(Label::pair(zl, e.exponent.at(i))));
    return Label::fn(std::move(graph));
  });
}

FinFn uncurry(const Exponential& e, const FinSet& z, const FinFn& g) {
  if (g.cod() != e.carrier)
    throw CompositionError("uncurry argument must land in the exponential carrier");
  Product zx = product(z, e.exponent);
  return FinFn::from_map(zx.carrier, e.base, [&](const Label& l) {
    for (const auto& [x, y] : g(l.first()).graph())
      if (x == l.second()) return y;
    throw IndexError("uncurry argument " + l.second().str() + " missing from table");
  });
}

FinFn fn_of_label(const FinSet& exponent, const FinSet& base, const Label& l) {
  return FinFn::from_map(exponent, base, [&](const Label& x) {
    for (const auto& [a, b] : l.graph())
      if (a == x) return b;
    throw IndexError("function label has no entry for " + x.str());
  });
}

Label label_of_fn(const FinFn& f) {
  std::vector<std::pair<Label, Label>> graph;
  graph.reserve(f.dom().size());
  for (int i = 0; i < f.dom().size(); ++i)
    graph.emplace_back(f.dom().at(i), f.cod().at(f.map_index(i)));
  return Label::fn(std::move(graph));
}

std::vector<FinFn> all_maps(const FinSet& x, const FinSet& y) {
  if (!x.empty() && !y.empty())
    guard_size(std::pow(static_cast<double>(y.size()), x.size()), "hom-set");
  std::vector<FinFn> out;
  if (x.empty()) {
    out.push_back(FinFn(x, y, {}));
    return out;
  }
  if (y.empty()) return out;
  std::vector<int> table(x.size(), 0);
  while (true) {
    out.push_back(FinFn(x, y, table));
    int k = x.size() - 1;
    while (k >= 0 && table[k] == y.size() - 1) table[k--] = 0;
    if (k < 0) break;
    ++table[k];
  }
  return out;
}

} // namespace skewcat
