#include "cosetmg/catalog.hpp"

#include <algorithm>

#include "cosetmg/errors.hpp"

namespace cosetmg {

namespace {

Perm cycle(int degree, const std::string& text) { return parse_cycles(text, degree); }

PermGroup cyclic(int n) {
  if (n == 1) return PermGroup(1);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup::generated(n, {Perm(img)});
}

PermGroup quaternion8() {
  // Regular action on 1, i, -1, -i, j, k, -j, -k.
  Perm i_left = cycle(8, "(0 1 2 3)(4 5 6 7)");
  Perm j_left = cycle(8, "(0 4 2 6)(1 7 3 5)");
  return PermGroup::generated(8, {i_left, j_left});
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"trivial", "all", false}, {"Z2", "all", false}, {"Z3", "all", false},
      {"Z4", "all", false},      {"Z8", "all", false}, {"V4", "all", false},
      {"S3", "all", false},      {"D4", "all", false}, {"Q8", "all", false},
      {"S4", "all", true},
  };
  return entries;
}

PermGroup catalog_group(const std::string& name) {
  if (name == "trivial") return PermGroup(1);
  if (name == "Z2") return cyclic(2);
  if (name == "Z3") return cyclic(3);
  if (name == "Z4") return cyclic(4);
  if (name == "Z8") return cyclic(8);
  if (name == "Z16") return cyclic(16);
  if (name == "V4" || name == "Z2xZ2")
    return PermGroup::generated(4, {cycle(4, "(0 1)(2 3)"), cycle(4, "(0 2)(1 3)")});
  if (name == "S3") return PermGroup::generated(3, {cycle(3, "(0 1)"), cycle(3, "(0 1 2)")});
  if (name == "D4") return PermGroup::generated(4, {cycle(4, "(0 1 2 3)"), cycle(4, "(1 3)")});
  if (name == "Q8") return quaternion8();
  if (name == "S4") return PermGroup::generated(4, {cycle(4, "(0 1)"), cycle(4, "(0 1 2 3)")});
  throw PreconditionError("unknown catalog group: " + name);
}

bool catalog_has(const std::string& name) {
  if (name == "Z2xZ2") return true;
  for (const auto& e : catalog())
    if (e.name == name) return true;
  return false;
}

bool catalog_requires_large(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.requires_large;
  return false;
}

InverseSystem tower_2adic(int depth) {
  if (depth < 0 || depth > 6) throw PreconditionError("2-adic tower supports depth 0..6");
  std::vector<PermGroup> levels;
  std::vector<std::vector<int>> maps;
  levels.push_back(PermGroup(1));
  for (int d = 1; d <= depth; ++d) {
    int n = 1 << d;
    levels.push_back(cyclic(n));
    // Elements of the cyclic group sort as id, r, r^2, ...; reduction mod
    // the previous order is index reduction.
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = i % (n / 2);
    maps.push_back(std::move(map));
  }
  return make_tower(std::move(levels), std::move(maps));
}

InverseSystem tower_dihedral() {
  PermGroup d4 = catalog_group("D4");
  PermGroup v4 = catalog_group("V4");
  // D4 -> D4 / <r^2> = V4, by generator images r -> a, s -> b.
  int a = v4.index_of(parse_cycles("(0 1)(2 3)", 4));
  int b = v4.index_of(parse_cycles("(0 2)(1 3)", 4));
  std::vector<int> to_v4 = d4.extend_generator_images(v4, {a, b});
  std::vector<int> to_trivial(v4.order(), 0);
  return make_tower({PermGroup(1), v4, d4}, {std::move(to_trivial), std::move(to_v4)});
}

InverseSystem named_tower(const std::string& name, int depth) {
  if (name == "2adic") return tower_2adic(depth);
  if (name == "dihedral") return tower_dihedral();
  throw PreconditionError("unknown tower: " + name);
}

SubgroupFamily chain_basis(const std::string& group_name) {
  if (group_name == "Z2") return truncate(tower_2adic(1), 1).second;
  if (group_name == "Z4") return truncate(tower_2adic(2), 2).second;
  if (group_name == "Z8") return truncate(tower_2adic(3), 3).second;
  if (group_name == "Z16") return truncate(tower_2adic(4), 4).second;
  if (group_name == "D4") return truncate(tower_dihedral(), 2).second;
  if (group_name == "trivial") return truncate(tower_2adic(0), 0).second;
  throw PreconditionError("no built-in kernel chain for group: " + group_name);
}

}  // namespace cosetmg
