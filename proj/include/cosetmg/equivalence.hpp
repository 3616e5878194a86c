#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetmg/functor_g.hpp"
#include "cosetmg/functor_w.hpp"
#include "cosetmg/report.hpp"

namespace cosetmg {

/// The left-translation map g -> (A -> gA) into the reconstructed group of
/// the coset groupoid. Injectivity fails exactly when the basis does not
/// separate; the result reports this instead of silently accepting it.
struct EtaG {
  PermGroup gm;              // the reconstructed group
  std::vector<Perm> images;  // one carrier permutation per group element
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  std::vector<int> kernel;  // elements acting trivially

  bool isomorphism() const { return homomorphism && injective && surjective; }
};

EtaG eta_g(const CosetGroupoid& W);

/// Membership in the reconstruction-closed class, against the finite basis
/// assignment that gives every group all of its subgroups: each subgroup of
/// the reconstructed group must be the hat image of an idempotent, and the
/// hat family must be intersection- and conjugation-closed and separating.
struct MMDetails {
  bool is_object = false;
  bool full = false;
  bool hat_meet_closed = false;
  bool hat_conjugation_closed = false;
  bool hat_separating = false;
  bool all_subgroups_witnessed = false;
  std::string witness;
};

MMDetails mm_details(const MeetGroupoid& M, const Caps& caps = {});
bool is_object_of_MM(const MeetGroupoid& M, const Caps& caps = {});

/// The hat map A -> { p : p(U) = A } realized as an isomorphism onto the
/// coset groupoid of the reconstructed group over the basis transported
/// along hat, {hat(U) : U idempotent}. Requires a full meet groupoid;
/// membership in the stricter all-subgroups class is a separate predicate.
struct EtaM {
  PermGroup gm;
  CosetGroupoid wgm;
  std::vector<int> map;  // carrier id of M -> carrier id of wgm
  bool isomorphism = false;
  std::string witness;
};

EtaM eta_m(const MeetGroupoid& M, const Caps& caps = {});

struct NaturalitySquare {
  bool commutes = false;
  std::string witness;
};

/// Commutativity of the group-side square for alpha : G -> H, checked
/// exhaustively over group elements and carrier points.
NaturalitySquare check_naturality_g(const GroupHom& alpha, const CosetGroupoid& WG,
                                    const CosetGroupoid& WH);

/// Commutativity of the groupoid-side square for theta : M -> N, comparing
/// hat images inside the reconstructed group of N.
NaturalitySquare check_naturality_m(const std::vector<int>& theta, const MeetGroupoid& M,
                                    const MeetGroupoid& N);
/// Same, reusing already-reconstructed groups.
NaturalitySquare check_naturality_m(const std::vector<int>& theta, const MeetGroupoid& M,
                                    const MeetGroupoid& N, const PermGroup& GM,
                                    const PermGroup& GN);

/// Reproducible pool of isomorphisms out of G: automorphisms first, then
/// relabelings by random conjugation in the ambient symmetric group.
std::vector<GroupHom> sample_isomorphisms(const PermGroup& G, int count, std::uint64_t seed,
                                          const Caps& caps = {});

/// Both round trips, the hat lemmas and the sampled naturality suites.
Report roundtrip_suite(const PermGroup& G, const SubgroupFamily& S, int samples,
                       std::uint64_t seed, const Caps& caps = {});

}  // namespace cosetmg
