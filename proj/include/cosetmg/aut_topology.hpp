#pragma once

#include <map>
#include <vector>

#include "cosetmg/functor_w.hpp"
#include "cosetmg/oracles.hpp"
#include "cosetmg/report.hpp"

namespace cosetmg {

/// The regular-on-cosets embedding: G acts from the left on the cosets of
/// the family members, giving permutations of the labeled coset index
/// (which doubles as the bijection rho from points to cosets).
struct ThetaResult {
  SubgroupFamily family;
  CosetTable omega;              // position k holds rho(k)
  std::vector<Perm> theta;       // per group element
  PermGroup ghat;                // the image group on Omega
  std::vector<int> kernel;       // elements mapped to the identity
  bool injective = false;

  int omega_size() const { return omega.size(); }
  const PermGroup& group() const { return family.parent; }
  /// Group element represented by a hat-group member; requires injectivity.
  int theta_inverse(const Perm& alpha) const;
};

ThetaResult theta(const PermGroup& G, const SubgroupFamily& S);

/// The coset permutation induced by an automorphism phi (one image per
/// element index): rU maps to phi(r)phi(U). Requires phi to preserve the
/// family.
Perm delta(const ThetaResult& T, const std::vector<int>& phi);

/// The automorphism g -> Theta^-1(alpha Theta(g) alpha^-1) induced by a
/// permutation normalizing the hat group. Requires a separating family.
std::vector<int> gamma(const ThetaResult& T, const Perm& alpha);

/// Aut(G) as bijections of the element list, with the conjugation subgroup
/// distinguished and a transversal of it.
struct AutPresentation {
  PermGroup aut;
  std::vector<int> inn;       // indices into aut
  std::vector<int> out_reps;  // coset representatives of inn in aut
};

AutPresentation inn_out(const PermGroup& G, const Caps& caps = {});

/// Setwise stabilizer of the chosen cosets inside the automorphism list;
/// returns indices of stabilizing automorphisms.
std::vector<int> basis_subgroup(const ThetaResult& T, const std::vector<std::vector<int>>& auts,
                                const std::vector<int>& omega_points);

/// The kernel of the retraction is exactly the centralizer: verifies
/// C = { alpha in Delta(Aut G) * C : gamma(alpha) = id }.
Report centralizer_kernel_check(const PermGroup& G, const SubgroupFamily& S,
                                const Caps& caps = {});

/// Split extension: the section meets the centralizer trivially, their
/// product is a group normalizing the embedded copy, and for small Omega the
/// product equals the brute-forced normalizer exactly.
Report split_extension_check(const PermGroup& G, const SubgroupFamily& S, const Caps& caps = {});

/// The whole verification battery for one instance: section and retraction
/// identities, centralizer kernel, split extension, stabilizer separation,
/// the neighbourhood biconditional, and Inn/Out cardinalities.
Report aut_suite(const PermGroup& G, const SubgroupFamily& S, const Caps& caps = {});

}  // namespace cosetmg
