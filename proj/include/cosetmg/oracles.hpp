#pragma once

#include <vector>

#include "cosetmg/caps.hpp"
#include "cosetmg/perm_group.hpp"
#include "cosetmg/subgroups.hpp"

namespace cosetmg {

/// All automorphisms of G, found by assigning generator images of matching
/// order and checking the extension. Each automorphism is a total map on
/// element indices; the list is sorted lexicographically.
std::vector<std::vector<int>> brute_automorphisms(const PermGroup& G, const Caps& caps = {});

/// The same group presented as permutations of G's element list.
PermGroup automorphism_group(const PermGroup& G, const Caps& caps = {});

/// { alpha in Sym(Omega) : alpha h = h alpha for all h in H }, by
/// backtracking with forced-image propagation along the generators.
PermGroup centralizer_in_sym(const PermGroup& H, const Caps& caps = {});

/// { alpha in Sym(Omega) : alpha H alpha^-1 = H }, by exhaustive search.
/// Only available for small Omega; larger instances must go through the
/// constructive split-extension route.
PermGroup normalizer_in_sym(const PermGroup& H, const Caps& caps = {});

}  // namespace cosetmg
