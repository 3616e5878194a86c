#pragma once

#include <optional>
#include <vector>

#include "cosetmg/functor_w.hpp"
#include "cosetmg/report.hpp"
#include "cosetmg/subgroups.hpp"

namespace cosetmg {

/// A tower of finite groups G_0 <- G_1 <- ... <- G_D with surjective
/// connecting homomorphisms, standing in for its inverse limit. Cosets of
/// the kernel chain are represented at the level where they live.
struct InverseSystem {
  std::vector<PermGroup> levels;
  std::vector<std::vector<int>> maps;  // maps[d] : element of G_{d+1} -> element of G_d

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  int project(int from_level, int element, int to_level) const;
};

InverseSystem make_tower(std::vector<PermGroup> levels, std::vector<std::vector<int>> maps);

/// A coset of the kernel to some level, in canonical (minimal-level) form,
/// or the empty set.
struct LevelCoset {
  bool empty = true;
  int level = 0;
  int rep = 0;  // element index in levels[level]

  friend bool operator==(const LevelCoset&, const LevelCoset&) = default;
  friend auto operator<=>(const LevelCoset&, const LevelCoset&) = default;
};

LevelCoset lc_make(const InverseSystem& sys, int level, int element);
LevelCoset lc_empty();

bool lc_leq(const InverseSystem& sys, const LevelCoset& a, const LevelCoset& b);
LevelCoset lc_meet(const InverseSystem& sys, const LevelCoset& a, const LevelCoset& b);
LevelCoset lc_inverse(const InverseSystem& sys, const LevelCoset& a);
/// Partial: defined for two cosets of the same kernel (or empty*empty).
std::optional<LevelCoset> lc_product(const InverseSystem& sys, const LevelCoset& a,
                                     const LevelCoset& b);
/// The unique coset at a shallower level containing a.
LevelCoset lc_level_up(const InverseSystem& sys, const LevelCoset& a, int to_level);

/// The level-d group together with its chain-of-kernels basis
/// {ker(G_d -> G_j) : j <= d}.
std::pair<PermGroup, SubgroupFamily> truncate(const InverseSystem& sys, int d);

/// All coherent extensions of a depth-d filter (named by the group element
/// it converges to) to depth d2, as element indices of G_{d2}.
std::vector<int> refine_filter(const InverseSystem& sys, int d, int element, int d2);

/// Lazy level arithmetic against the eager coset groupoid of the truncation:
/// an element-for-element isomorphism check, plus filter counts per depth
/// and projection compatibility.
Report profinite_suite(const InverseSystem& sys, int depth);

}  // namespace cosetmg
