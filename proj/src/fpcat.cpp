#include "skewcat/fpcat.hpp"

#include "skewcat/error.hpp"
#include "skewcat/kernel.hpp"

namespace skewcat {

int FinPresCat::compose(int g, int f) const {
  if (!composable(g, f))
    throw CompositionError("arrows " + arrows[g].name + " and " + arrows[f].name +
                           " are not composable");
  int r = comp[g][f];
  if (r < 0)
    throw CompositionError("composition table has no entry for " + arrows[g].name + "." +
                           arrows[f].name);
  return r;
}

FinPresCat FinPresCat::discrete(const std::vector<std::string>& objects) {
  FinPresCat c;
  c.objects = objects;
  for (int i = 0; i < c.n_objects(); ++i) {
    c.arrows.push_back({"id_" + objects[i], i, i});
    c.identity.push_back(i);
  }
  c.comp.assign(c.n_arrows(), std::vector<int>(c.n_arrows(), -1));
  for (int i = 0; i < c.n_arrows(); ++i) c.comp[i][i] = i;
  return c;
}

FinPresCat FinPresCat::one_object(const std::vector<std::string>& arrow_names,
                                  const std::vector<std::vector<int>>& op_table, int identity) {
  FinPresCat c;
  c.objects = {"*"};
  for (const auto& n : arrow_names) c.arrows.push_back({n, 0, 0});
  c.identity = {identity};
  c.comp = op_table;
  return c;
}

FinPresCat FinPresCat::walking_arrow(const std::string& src, const std::string& dst,
                                     const std::string& arrow) {
  FinPresCat c;
  c.objects = {src, dst};
  c.arrows = {{"id_" + src, 0, 0}, {"id_" + dst, 1, 1}, {arrow, 0, 1}};
  c.identity = {0, 1};
  c.comp.assign(3, std::vector<int>(3, -1));
  c.comp[0][0] = 0;
  c.comp[1][1] = 1;
  c.comp[2][0] = 2; // k . id_src = k
  c.comp[1][2] = 2; // id_dst . k = k
  return c;
}

FinPresCat FinPresCat::terminal() { return discrete({"*"}); }

CheckReport check_category_laws(const FinPresCat& cat) {
  std::vector<CheckCase> cases;
  for (int f = 0; f < cat.n_arrows(); ++f) {
    const auto& a = cat.arrows[f];
    cases.push_back(make_case("identity", a.name, [&cat, f]() -> std::pair<bool, std::string> {
      const auto& arr = cat.arrows[f];
      int left = cat.comp[cat.identity[arr.cod]][f];
      if (left != f)
        return {false, "id." + arr.name + " = " +
                           (left >= 0 ? cat.arrows[left].name : std::string("(undefined)"))};
      int right = cat.comp[f][cat.identity[arr.dom]];
      if (right != f)
        return {false, arr.name + ".id = " +
                           (right >= 0 ? cat.arrows[right].name : std::string("(undefined)"))};
      return {true, ""};
    }));
  }
  for (int h = 0; h < cat.n_arrows(); ++h)
    for (int g = 0; g < cat.n_arrows(); ++g)
      for (int f = 0; f < cat.n_arrows(); ++f) {
        if (!cat.composable(g, f) || !cat.composable(h, g)) continue;
        std::string objs =
            "(" + cat.arrows[h].name + "," + cat.arrows[g].name + "," + cat.arrows[f].name + ")";
        cases.push_back(
            make_case("associativity", objs, [&cat, h, g, f]() -> std::pair<bool, std::string> {
              int hg = cat.comp[h][g];
              int gf = cat.comp[g][f];
              if (hg < 0 || gf < 0) return {false, "composition table hole"};
              int left = cat.comp[hg][f];
              int right = cat.comp[h][gf];
              if (left != right)
                return {false,
                        "(" + cat.arrows[h].name + "." + cat.arrows[g].name + ")." +
                            cat.arrows[f].name + " = " +
                            (left >= 0 ? cat.arrows[left].name : std::string("(undefined)")) +
                            " but " + cat.arrows[h].name + ".(" + cat.arrows[g].name + "." +
                            cat.arrows[f].name + ") = " +
                            (right >= 0 ? cat.arrows[right].name : std::string("(undefined)"))};
              return {true, ""};
            }));
      }
  return run_cases("category-laws", cases);
}

} // namespace skewcat
