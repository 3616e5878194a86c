#pragma once

#include <map>
#include <vector>

#include "cosetmg/meet_groupoid.hpp"
#include "cosetmg/subgroups.hpp"

namespace cosetmg {

/// The left cosets of every family member, in canonical order: family order
/// (decreasing subgroup size) first, then by representative. This ordering
/// is shared by the groupoid carrier and the omega labeling of the
/// translation action.
struct CosetTable {
  std::vector<ElementSet> sets;
  std::vector<std::pair<int, int>> index;        // (family member, representative)
  std::vector<std::vector<int>> point_to_coset;  // [member][element] -> table position

  int size() const { return static_cast<int>(sets.size()); }
  int id_of(int member, int element) const { return point_to_coset[member][element]; }
};

CosetTable enumerate_cosets(const SubgroupFamily& S);

/// Smallest family containing the seed that is closed under pairwise
/// intersection and conjugation by every group element.
SubgroupFamily close_basis(const PermGroup& G, std::vector<ElementSet> seed,
                           const Caps& caps = {});

/// A meet groupoid whose carrier is the empty set plus all left cosets of
/// the family members, with product, inverse and meet computed by set
/// arithmetic. Carrier id = coset table position + 1; id 0 is empty.
struct CosetGroupoid {
  MeetGroupoid groupoid;
  SubgroupFamily family;
  CosetTable cosets;
  std::vector<int> left_frame;   // per id: family member the coset belongs to, -1 for empty
  std::vector<int> right_frame;  // per id: member it is a right coset of, -1 for empty

  const PermGroup& group() const { return family.parent; }
  const ElementSet& set_of(int id) const { return cosets.sets[id - 1]; }
  int id_of_set(const ElementSet& s) const;

  std::map<ElementSet, int> set_index;  // coset set -> carrier id
};

CosetGroupoid build_w(const PermGroup& G, const SubgroupFamily& S);

/// Carrier map of W on an isomorphism: id -> image id, elementwise images of
/// cosets. Requires alpha to carry the source family onto the target family;
/// the result is checked to preserve product, inverse and meet.
std::vector<int> w_on_morphism(const GroupHom& alpha, const CosetGroupoid& WG,
                               const CosetGroupoid& WH);

}  // namespace cosetmg
