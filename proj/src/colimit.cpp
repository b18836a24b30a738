#include "skewcat/colimit.hpp"

#include <algorithm>
#include <numeric>

#include "skewcat/error.hpp"

namespace skewcat {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

void validate(const Diagram& d) {
  const auto& s = d.shape;
  if (static_cast<int>(d.at_obj.size()) != s.n_objects() ||
      static_cast<int>(d.at_arrow.size()) != s.n_arrows())
    throw DiagramError("diagram assignment sizes do not match the shape");
  for (int f = 0; f < s.n_arrows(); ++f) {
    if (d.at_arrow[f].dom() != d.at_obj[s.arrows[f].dom] ||
        d.at_arrow[f].cod() != d.at_obj[s.arrows[f].cod])
      throw DiagramError("arrow " + s.arrows[f].name + " assignment has wrong boundaries");
  }
  for (int x = 0; x < s.n_objects(); ++x)
    if (!d.at_arrow[s.identity[x]].is_identity())
      throw DiagramError("identity of " + s.objects[x] + " is not assigned the identity map");
  for (int g = 0; g < s.n_arrows(); ++g)
    for (int f = 0; f < s.n_arrows(); ++f) {
      if (!s.composable(g, f)) continue;
      int gf = s.comp[g][f];
      if (gf < 0) throw DiagramError("composition table hole at " + s.arrows[g].name + "." +
                                     s.arrows[f].name);
      if (compose(d.at_arrow[g], d.at_arrow[f]) != d.at_arrow[gf])
        throw DiagramError("diagram is not functorial on composite " + s.arrows[g].name + "." +
                           s.arrows[f].name + " = " + s.arrows[gf].name);
    }
}

} // namespace

ColimitResult finite_colimit(const Diagram& d) {
  validate(d);
  const auto& s = d.shape;

  // Disjoint union, tagged by shape-object name.
  std::vector<int> offset(s.n_objects() + 1, 0);
  for (int x = 0; x < s.n_objects(); ++x) offset[x + 1] = offset[x] + d.at_obj[x].size();
  int total = offset[s.n_objects()];
  std::vector<Label> tagged;
  tagged.reserve(total);
  for (int x = 0; x < s.n_objects(); ++x)
    for (int i = 0; i < d.at_obj[x].size(); ++i)
      tagged.push_back(Label::pair(Label::atom(s.objects[x]), d.at_obj[x].at(i)));

  UnionFind uf(total);
  for (int f = 0; f < s.n_arrows(); ++f) {
    int src = s.arrows[f].dom, dst = s.arrows[f].cod;
    for (int i = 0; i < d.at_obj[src].size(); ++i)
      uf.unite(offset[src] + i, offset[dst] + d.at_arrow[f].map_index(i));
  }

  // Smallest tagged label in each class is the representative.
  std::vector<int> rep_of_root(total, -1);
  for (int i = 0; i < total; ++i) {
    int r = uf.find(i);
    if (rep_of_root[r] < 0 || tagged[i] < tagged[rep_of_root[r]]) rep_of_root[r] = i;
  }
  std::vector<Label> classes;
  for (int i = 0; i < total; ++i)
    if (uf.find(i) == i) classes.push_back(Label::cls(tagged[rep_of_root[i]]));
  std::sort(classes.begin(), classes.end());
  FinSet carrier(classes);

  std::vector<FinFn> cocone;
  cocone.reserve(s.n_objects());
  for (int x = 0; x < s.n_objects(); ++x) {
    std::vector<int> table;
    table.reserve(d.at_obj[x].size());
    for (int i = 0; i < d.at_obj[x].size(); ++i) {
      int root = uf.find(offset[x] + i);
      table.push_back(*carrier.index_of(Label::cls(tagged[rep_of_root[root]])));
    }
    cocone.emplace_back(d.at_obj[x], carrier, std::move(table));
  }
  return ColimitResult{carrier, std::move(cocone)};
}

} // namespace skewcat
