#pragma once

#include <string>
#include <vector>

#include "skewcat/finset.hpp"

namespace skewcat {

// Finite monoid given by its operation table. op[i][j] is the product of
// element i with element j, in that order (row acts from the left).
struct MonoidTable {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> op;
  int identity = 0;

  int size() const { return static_cast<int>(element_names.size()); }
  int mul(int a, int b) const { return op[a][b]; }
  FinSet carrier() const;
  void validate() const; // MonoidError on broken associativity/identity
  bool is_group() const;
  bool is_commutative() const;

  static MonoidTable trivial();
  static MonoidTable cyclic(int n);       // Z_n, elements "0".."n-1"
  static MonoidTable boolean_or();        // ({0,1}, max, 0)
};

// Finite M-set: carrier plus action table act[m][x] -> element index.
struct MSetObj {
  MonoidTable monoid;
  FinSet carrier;
  std::vector<std::vector<int>> act;

  bool valid() const; // identity and compatibility axioms, exhaustively
  int apply(int m, int x) const { return act[m][x]; }
  Label apply(int m, const Label& x) const;

  bool operator==(const MSetObj& other) const;
  std::string str() const;

  static MSetObj trivial_unit(const MonoidTable& m);          // singleton, trivial action
  static MSetObj free_on(const MonoidTable& m, const FinSet& a); // carrier M x A, n.(m,a) = (n.m, a)
  static MSetObj diagonal_product(const MSetObj& x, const MSetObj& y);
};

// All monoids of order <= max_order up to isomorphism, identity normalized to
// element 0, enumerated by table search and deduplicated by relabeling.
std::vector<MonoidTable> monoids_up_to(int max_order);

} // namespace skewcat
