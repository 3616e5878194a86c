#pragma once

#include <vector>

#include "cosetmg/caps.hpp"
#include "cosetmg/perm_group.hpp"

namespace cosetmg {

/// A subset of a parent group, as sorted element indices.
using ElementSet = std::vector<int>;

bool is_subgroup(const PermGroup& G, const ElementSet& H);
ElementSet subgroup_closure(const PermGroup& G, ElementSet seed);

/// All subgroups, each as a sorted element set, deduplicated and sorted by
/// (order, lexicographic). Throws CapExceeded when |G| exceeds the cap.
std::vector<ElementSet> enumerate_subgroups(const PermGroup& G, const Caps& caps = {});

/// Partition of G into left cosets gH, ordered by representative; the
/// representative of each coset is its minimal element.
std::vector<ElementSet> left_cosets(const PermGroup& G, const ElementSet& H);
std::vector<ElementSet> right_cosets(const PermGroup& G, const ElementSet& H);

ElementSet conjugate_subgroup(const PermGroup& G, int g, const ElementSet& H);

ElementSet set_product(const PermGroup& G, const ElementSet& A, const ElementSet& B);
ElementSet set_inverse(const PermGroup& G, const ElementSet& A);
ElementSet set_image(const std::vector<int>& map, const ElementSet& A);
ElementSet intersect(const ElementSet& A, const ElementSet& B);

ElementSet center(const PermGroup& G);
int double_coset_count(const PermGroup& G, const ElementSet& U);

/// A family of subgroups of a fixed parent, kept in canonical order
/// (decreasing size, then lexicographic). The flags are recomputed at
/// construction and never taken from the caller.
struct SubgroupFamily {
  PermGroup parent{1};
  std::vector<ElementSet> members;
  bool meet_closed = false;
  bool conjugation_closed = false;
  bool separating = false;  // intersection of all members is {identity}

  int index_of_member(const ElementSet& U) const;  // -1 when absent
};

SubgroupFamily make_family(const PermGroup& G, std::vector<ElementSet> members);
SubgroupFamily all_subgroups_family(const PermGroup& G, const Caps& caps = {});

}  // namespace cosetmg
