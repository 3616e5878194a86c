#pragma once

#include <string>
#include <vector>

#include "cosetmg/meet_groupoid.hpp"
#include "cosetmg/perm_group.hpp"

namespace cosetmg {

/// A coherent choice of one left *coset per idempotent; stands for a single
/// group element. Choices are kept sorted by idempotent id.
struct FullFilter {
  std::vector<std::pair<int, int>> choices;  // (idempotent, chosen left *coset)

  int choice(int U) const;  // throws when U has no entry
  friend bool operator==(const FullFilter&, const FullFilter&) = default;
  friend auto operator<=>(const FullFilter&, const FullFilter&) = default;
};

struct AutCertificate {
  bool ok = false;
  std::string clause;        // failing condition when !ok
  std::vector<int> witness;  // offending ids
};

/// True iff p fixes the empty element, preserves meet, and satisfies
/// p(A*B) = p(A)*B whenever A*B is defined. On failure the certificate
/// carries a witness.
AutCertificate is_groupoid_aut(const MeetGroupoid& M, const Perm& p);

/// All full filters, by backtracking over idempotents from the top of the
/// containment order downward. Requires a full meet groupoid.
std::vector<FullFilter> enumerate_full_filters(const MeetGroupoid& M);

/// Total map induced by a filter: p(U) = choice(U) on idempotents, extended
/// to p(B) = choice(V)*B for B a right-V *coset.
Perm filter_to_aut(const MeetGroupoid& M, const FullFilter& R);

FullFilter aut_to_filter(const MeetGroupoid& M, const Perm& p);

/// The group of all meet-and-right-translation-preserving permutations of
/// the carrier, enumerated through the filter correspondence.
PermGroup g_of_m(const MeetGroupoid& M);

/// hat(A) = { p : p(U) = A } for A a left-U *coset; hat(empty) = {}.
/// Returned as sorted indices into GM's element list.
std::vector<int> hat(const MeetGroupoid& M, const PermGroup& GM, int A);

/// Conjugation by a groupoid isomorphism, as an index map from GM to GN;
/// verified to be a group isomorphism.
std::vector<int> g_on_morphism(const std::vector<int>& theta, const MeetGroupoid& M,
                               const MeetGroupoid& N, const PermGroup& GM,
                               const PermGroup& GN);

}  // namespace cosetmg
