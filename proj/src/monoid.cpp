#include "skewcat/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "skewcat/error.hpp"

namespace skewcat {

FinSet MonoidTable::carrier() const { return FinSet::atoms(element_names); }

void MonoidTable::validate() const {
  int n = size();
  if (n == 0) throw MonoidError("monoid must be nonempty");
  if (identity < 0 || identity >= n) throw MonoidError("identity index out of range");
  if (static_cast<int>(op.size()) != n) throw MonoidError("operation table has wrong row count");
  for (const auto& row : op) {
    if (static_cast<int>(row.size()) != n) throw MonoidError("operation table row has wrong size");
    for (int v : row)
      if (v < 0 || v >= n) throw MonoidError("operation table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (op[identity][a] != a || op[a][identity] != a)
      throw MonoidError("element " + element_names[identity] + " is not a two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]])
          throw MonoidError("operation not associative at (" + element_names[a] + "," +
                            element_names[b] + "," + element_names[c] + ")");
}

bool MonoidTable::is_group() const {
  for (int a = 0; a < size(); ++a) {
    bool inv = false;
    for (int b = 0; b < size(); ++b)
      if (op[a][b] == identity && op[b][a] == identity) inv = true;
    if (!inv) return false;
  }
  return true;
}

bool MonoidTable::is_commutative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (op[a][b] != op[b][a]) return false;
  return true;
}

MonoidTable MonoidTable::trivial() { return MonoidTable{"trivial", {"0"}, {{0}}, 0}; }

MonoidTable MonoidTable::cyclic(int n) {
  MonoidTable m;
  m.name = "Z" + std::to_string(n);
  for (int i = 0; i < n; ++i) m.element_names.push_back(std::to_string(i));
  m.op.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.op[i][j] = (i + j) % n;
  m.identity = 0;
  return m;
}

MonoidTable MonoidTable::boolean_or() {
  return MonoidTable{"OR", {"0", "1"}, {{0, 1}, {1, 1}}, 0};
}

bool MSetObj::valid() const {
  int n = monoid.size();
  if (static_cast<int>(act.size()) != n) return false;
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != carrier.size()) return false;
    for (int v : row)
      if (v < 0 || v >= carrier.size()) return false;
  }
  for (int x = 0; x < carrier.size(); ++x)
    if (act[monoid.identity][x] != x) return false;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < carrier.size(); ++x)
        if (act[monoid.mul(m, k)][x] != act[m][act[k][x]]) return false;
  return true;
}

Label MSetObj::apply(int m, const Label& x) const {
  auto i = carrier.index_of(x);
  if (!i) throw IndexError("element " + x.str() + " not in M-set carrier");
  return carrier.at(act[m][*i]);
}

bool MSetObj::operator==(const MSetObj& other) const {
  return carrier == other.carrier && act == other.act;
}

std::string MSetObj::str() const { return carrier.str(); }

MSetObj MSetObj::trivial_unit(const MonoidTable& m) {
  MSetObj x;
  x.monoid = m;
  x.carrier = FinSet::atoms({"*"});
  x.act.assign(m.size(), {0});
  return x;
}

MSetObj MSetObj::free_on(const MonoidTable& m, const FinSet& a) {
  MSetObj x;
  x.monoid = m;
  Product p = product(m.carrier(), a);
  x.carrier = p.carrier;
  x.act.assign(m.size(), std::vector<int>(x.carrier.size()));
  for (int n = 0; n < m.size(); ++n)
    for (int i = 0; i < x.carrier.size(); ++i) {
      const Label& l = x.carrier.at(i);
      int mi = *m.carrier().index_of(l.first());
      Label moved = Label::pair(m.carrier().at(m.mul(n, mi)), l.second());
      x.act[n][i] = *x.carrier.index_of(moved);
    }
  return x;
}

MSetObj MSetObj::diagonal_product(const MSetObj& x, const MSetObj& y) {
  MSetObj out;
  out.monoid = x.monoid;
  Product p = product(x.carrier, y.carrier);
  out.carrier = p.carrier;
  out.act.assign(out.monoid.size(), std::vector<int>(out.carrier.size()));
  for (int m = 0; m < out.monoid.size(); ++m)
    for (int i = 0; i < out.carrier.size(); ++i) {
      const Label& l = out.carrier.at(i);
      Label moved = Label::pair(x.apply(m, l.first()), y.apply(m, l.second()));
      out.act[m][i] = *out.carrier.index_of(moved);
    }
  return out;
}

namespace {

bool associative(const std::vector<std::vector<int>>& op, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]]) return false;
  return true;
}

// Canonical key of a table under relabelings of the non-identity elements.
std::string iso_key(const std::vector<std::vector<int>>& op, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  // Identity stays 0; permute the rest.
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    perm[0] = 0;
    for (int i = 1; i < n; ++i) perm[i] = rest[i - 1];
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string key;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) key += static_cast<char>('0' + perm[op[inv[a]][inv[b]]]);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

} // namespace

std::vector<MonoidTable> monoids_up_to(int max_order) {
  std::vector<MonoidTable> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    // Identity normalized to element 0; only the (n-1)x(n-1) block is free.
    int free_cells = (n - 1) * (n - 1);
    std::vector<int> cell(free_cells, 0);
    std::vector<std::string> seen;
    while (true) {
      std::vector<std::vector<int>> op(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a) {
        op[0][a] = a;
        op[a][0] = a;
      }
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) op[a][b] = cell[(a - 1) * (n - 1) + (b - 1)];
      if (associative(op, n)) {
        std::string key = iso_key(op, n);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(key);
          MonoidTable m{"M" + std::to_string(n) + "." + std::to_string(seen.size()), names, op, 0};
          if (n == 1) m.name = "trivial";
          if (m.op == MonoidTable::cyclic(n).op) m.name = "Z" + std::to_string(n);
          if (n == 2 && m.op == MonoidTable::boolean_or().op) m.name = "OR";
          out.push_back(std::move(m));
        }
      }
      int k = free_cells - 1;
      while (k >= 0 && cell[k] == n - 1) cell[k--] = 0;
      if (k < 0) break;
      ++cell[k];
    }
  }
  return out;
}

} // namespace skewcat
