#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewcat/report.hpp"

namespace skewcat {

// Finitely presented category: labeled objects and arrows with a full
// composition table. Identities are ordinary arrows singled out per object.
struct FinPresCat {
  struct Arrow {
    std::string name;
    int dom = 0, cod = 0;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> identity;           // per object: arrow index
  std::vector<std::vector<int>> comp;  // comp[g][f] = index of g.f, -1 when not composable

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  bool composable(int g, int f) const { return arrows[f].cod == arrows[g].dom; }
  int compose(int g, int f) const; // throws CompositionError when not composable or table hole

  static FinPresCat discrete(const std::vector<std::string>& objects);
  // One object, arrows = monoid elements, composition = monoid operation.
  static FinPresCat one_object(const std::vector<std::string>& arrow_names,
                               const std::vector<std::vector<int>>& op_table, int identity);
  // Two objects src, dst and a single non-identity arrow between them.
  static FinPresCat walking_arrow(const std::string& src = "c0", const std::string& dst = "c1",
                                  const std::string& arrow = "k");
  static FinPresCat terminal(); // one object, identity only
};

// Exhaustive identity and associativity check over the full arrow list.
CheckReport check_category_laws(const FinPresCat& cat);

} // namespace skewcat
