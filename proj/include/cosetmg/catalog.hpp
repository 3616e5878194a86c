#pragma once

#include <string>
#include <vector>

#include "cosetmg/profinite.hpp"
#include "cosetmg/subgroups.hpp"

namespace cosetmg {

struct CatalogEntry {
  std::string name;
  std::string basis_policy;  // "all" | "chain"
  bool requires_large = false;
};

const std::vector<CatalogEntry>& catalog();

/// Built-in groups: trivial, Z2, Z3, Z4, Z8, V4 (alias Z2xZ2), S3, D4, Q8, S4.
PermGroup catalog_group(const std::string& name);
bool catalog_has(const std::string& name);
bool catalog_requires_large(const std::string& name);

/// The 2-adic tower trivial <- Z2 <- Z4 <- ... <- Z2^depth.
InverseSystem tower_2adic(int depth);
/// trivial <- V4 <- D4 along the rotation-square quotient.
InverseSystem tower_dihedral();
InverseSystem named_tower(const std::string& name, int depth);

/// Kernel-chain basis for groups that are truncations of a built-in tower.
SubgroupFamily chain_basis(const std::string& group_name);

}  // namespace cosetmg
