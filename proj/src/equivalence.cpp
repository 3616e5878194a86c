#include "cosetmg/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cosetmg/aut_topology.hpp"
#include "cosetmg/errors.hpp"
#include "cosetmg/oracles.hpp"

namespace cosetmg {

namespace {

// Left-translation images without the reconstruction cross-check; used by
// the naturality squares where only the carrier action is needed.
std::vector<Perm> eta_images(const CosetGroupoid& W) {
  const PermGroup& G = W.group();
  const MeetGroupoid& M = W.groupoid;
  std::vector<Perm> images;
  images.reserve(G.order());
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    std::vector<int> img(M.size());
    img[MeetGroupoid::kEmpty] = MeetGroupoid::kEmpty;
    for (int a = 1; a < M.size(); ++a) {
      ElementSet moved;
      moved.reserve(W.set_of(a).size());
      for (int x : W.set_of(a)) moved.push_back(G.mul(g, x));
      std::sort(moved.begin(), moved.end());
      int id = W.id_of_set(moved);
      if (id < 0) throw Error("translated coset left the carrier");
      img[a] = id;
    }
    images.push_back(Perm(std::move(img)));
  }
  return images;
}

}  // namespace

EtaG eta_g(const CosetGroupoid& W) {
  EtaG out{g_of_m(W.groupoid), eta_images(W), true, false, false, {}};
  const PermGroup& G = W.group();

  for (int g = 0; out.homomorphism && g < static_cast<int>(G.order()); ++g)
    for (int h = 0; h < static_cast<int>(G.order()); ++h)
      if (!(out.images[g] * out.images[h] == out.images[G.mul(g, h)])) {
        out.homomorphism = false;
        break;
      }

  for (int g = 0; g < static_cast<int>(G.order()); ++g)
    if (out.images[g].is_identity()) out.kernel.push_back(g);
  out.injective = out.kernel.size() == 1;

  std::set<Perm> image_set(out.images.begin(), out.images.end());
  out.surjective = image_set.size() == out.gm.order();
  for (const Perm& p : out.images)
    if (!out.gm.contains(p)) {
      out.surjective = false;
      break;
    }
  return out;
}

MMDetails mm_details(const MeetGroupoid& M, const Caps& caps) {
  MMDetails d;
  d.full = check_axioms(M, true, true).passed;
  if (!d.full) {
    d.witness = "groupoid axioms fail";
    return d;
  }
  PermGroup P = g_of_m(M);

  std::set<ElementSet> hat_family;
  for (int u : M.idempotents()) hat_family.insert(hat(M, P, u));

  d.hat_meet_closed = true;
  for (const auto& A : hat_family)
    for (const auto& B : hat_family)
      if (!hat_family.count(intersect(A, B))) {
        d.hat_meet_closed = false;
        d.witness = "hat family not closed under intersection";
      }

  d.hat_conjugation_closed = true;
  for (int p = 0; d.hat_conjugation_closed && p < static_cast<int>(P.order()); ++p)
    for (const auto& A : hat_family) {
      ElementSet conj;
      conj.reserve(A.size());
      for (int x : A) conj.push_back(P.conj(p, x));
      std::sort(conj.begin(), conj.end());
      if (!hat_family.count(conj)) {
        d.hat_conjugation_closed = false;
        d.witness = "hat family not closed under conjugation";
        break;
      }
    }

  ElementSet core;
  core.resize(P.order());
  std::iota(core.begin(), core.end(), 0);
  for (const auto& A : hat_family) core = intersect(core, A);
  d.hat_separating = core.size() == 1 && core[0] == P.identity();
  if (!d.hat_separating) d.witness = "hat family does not separate the identity";

  d.all_subgroups_witnessed = true;
  for (const auto& U : enumerate_subgroups(P, caps))
    if (!hat_family.count(U)) {
      d.all_subgroups_witnessed = false;
      std::ostringstream os;
      os << "subgroup of order " << U.size() << " is not a hat image";
      d.witness = os.str();
      break;
    }

  d.is_object = d.full && d.hat_meet_closed && d.hat_conjugation_closed && d.hat_separating &&
                d.all_subgroups_witnessed;
  if (d.is_object) d.witness.clear();
  return d;
}

bool is_object_of_MM(const MeetGroupoid& M, const Caps& caps) {
  return mm_details(M, caps).is_object;
}

EtaM eta_m(const MeetGroupoid& M, const Caps& caps) {
  (void)caps;
  if (!check_axioms(M, true, true).passed)
    throw PreconditionError("eta_m requires a full meet groupoid");

  EtaM out{g_of_m(M), CosetGroupoid{MeetGroupoid(GroupoidTables{1, {0}, {0}, {0}, {}}),
                                    SubgroupFamily{}, CosetTable{}, {}, {}, {}},
           {}, false, ""};

  std::vector<ElementSet> members;
  for (int u : M.idempotents()) members.push_back(hat(M, out.gm, u));
  out.wgm = build_w(out.gm, make_family(out.gm, std::move(members)));

  const MeetGroupoid& N = out.wgm.groupoid;
  out.map.assign(M.size(), -1);
  out.map[MeetGroupoid::kEmpty] = MeetGroupoid::kEmpty;
  for (int a = 1; a < M.size(); ++a) {
    out.map[a] = out.wgm.id_of_set(hat(M, out.gm, a));
    if (out.map[a] < 0) {
      out.witness = "hat image of " + std::to_string(a) + " is not a coset";
      return out;
    }
  }

  if (M.size() != N.size()) {
    out.witness = "carrier sizes differ";
    return out;
  }
  std::vector<char> hit(N.size(), 0);
  for (int v : out.map) {
    if (hit[v]) {
      out.witness = "hat map is not injective";
      return out;
    }
    hit[v] = 1;
  }
  for (int a = 0; a < M.size(); ++a) {
    if (N.inverse(out.map[a]) != out.map[M.inverse(a)]) {
      out.witness = "inverse not preserved at " + std::to_string(a);
      return out;
    }
    for (int b = 0; b < M.size(); ++b) {
      if (N.meet(out.map[a], out.map[b]) != out.map[M.meet(a, b)]) {
        out.witness = "meet not preserved";
        return out;
      }
      int ab = M.product(a, b);
      int im = N.product(out.map[a], out.map[b]);
      if (ab == MeetGroupoid::kUndefined ? im != MeetGroupoid::kUndefined : im != out.map[ab]) {
        out.witness = "product not preserved";
        return out;
      }
    }
  }
  out.isomorphism = true;
  return out;
}

NaturalitySquare check_naturality_g(const GroupHom& alpha, const CosetGroupoid& WG,
                                    const CosetGroupoid& WH) {
  std::vector<int> theta = w_on_morphism(alpha, WG, WH);
  std::vector<int> theta_inv(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) theta_inv[theta[i]] = static_cast<int>(i);

  std::vector<Perm> etaG = eta_images(WG);
  std::vector<Perm> etaH = eta_images(WH);
  const int m = WH.groupoid.size();
  for (std::size_t g = 0; g < alpha.source.order(); ++g) {
    const Perm& lhs_inner = etaG[g];
    const Perm& rhs = etaH[alpha.map[g]];
    for (int c = 0; c < m; ++c) {
      int lhs = theta[lhs_inner(theta_inv[c])];
      if (lhs != rhs(c)) {
        return {false,
                "mismatch at element " + std::to_string(g) + ", carrier " + std::to_string(c)};
      }
    }
  }
  return {true, ""};
}

NaturalitySquare check_naturality_m(const std::vector<int>& theta, const MeetGroupoid& M,
                                    const MeetGroupoid& N) {
  return check_naturality_m(theta, M, N, g_of_m(M), g_of_m(N));
}

NaturalitySquare check_naturality_m(const std::vector<int>& theta, const MeetGroupoid& M,
                                    const MeetGroupoid& N, const PermGroup& GM,
                                    const PermGroup& GN) {
  if (static_cast<int>(theta.size()) != M.size()) return {false, "carrier map size mismatch"};
  std::vector<int> theta_inv(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) theta_inv[theta[i]] = static_cast<int>(i);

  for (int a = 0; a < M.size(); ++a) {
    std::vector<int> lhs = a == MeetGroupoid::kEmpty ? std::vector<int>{} : hat(N, GN, theta[a]);
    std::vector<int> rhs;
    for (int pi : a == MeetGroupoid::kEmpty ? std::vector<int>{} : hat(M, GM, a)) {
      const Perm& p = GM.element(pi);
      std::vector<int> img(N.size());
      for (int c = 0; c < N.size(); ++c) img[c] = theta[p(theta_inv[c])];
      int j = GN.index_of(Perm(std::move(img)));
      if (j < 0) return {false, "conjugated automorphism left the target group"};
      rhs.push_back(j);
    }
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return {false, "hat images differ at carrier " + std::to_string(a)};
  }
  return {true, ""};
}

std::vector<GroupHom> sample_isomorphisms(const PermGroup& G, int count, std::uint64_t seed,
                                          const Caps& caps) {
  std::vector<GroupHom> out;
  auto auts = brute_automorphisms(G, caps);
  for (const auto& phi : auts) {
    if (static_cast<int>(out.size()) >= count) break;
    out.push_back(GroupHom{G, G, phi});
  }
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> sigma_img(G.degree());
    std::iota(sigma_img.begin(), sigma_img.end(), 0);
    std::shuffle(sigma_img.begin(), sigma_img.end(), rng);
    Perm sigma{sigma_img};
    Perm sigma_inv = sigma.inverse();
    std::vector<Perm> relabeled;
    relabeled.reserve(G.order());
    for (const Perm& g : G.elements()) relabeled.push_back(sigma * g * sigma_inv);
    PermGroup H = PermGroup::from_elements(G.degree(), relabeled);
    std::vector<int> map(G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
      map[i] = H.index_of(sigma * G.element(static_cast<int>(i)) * sigma_inv);
    GroupHom relabel{G, H, std::move(map)};
    // Mix in a random automorphism so samples vary beyond conjugation.
    std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
    out.push_back(compose(relabel, GroupHom{G, G, auts[pick(rng)]}));
  }
  return out;
}

Report roundtrip_suite(const PermGroup& G, const SubgroupFamily& S, int samples,
                       std::uint64_t seed, const Caps& caps) {
  if (!S.separating)
    throw PreconditionError(
        "the basis does not separate the identity; round trips reconstruct a quotient, not the "
        "group");
  Report rep;
  rep.command = "roundtrip";
  rep.meta["basis_assignment"] = "hat";
  rep.meta["seed"] = std::to_string(seed);
  rep.meta["samples"] = std::to_string(samples);

  CosetGroupoid W = build_w(G, S);
  const MeetGroupoid& M = W.groupoid;

  auto& ax = rep.add("carrier-axioms-full");
  ValidationReport v = check_axioms(M, true);
  ax.passed = v.passed;
  if (!v.passed) ax.witness = v.violations.front().axiom;
  ax.cardinalities["carrier"] = M.size();

  auto& fc = rep.add("filter-count-equals-group-order");
  auto filters = enumerate_full_filters(M);
  fc.passed = filters.size() == G.order();
  fc.cardinalities["filters"] = static_cast<long long>(filters.size());
  fc.cardinalities["group"] = static_cast<long long>(G.order());

  auto& eg = rep.add("eta-g-isomorphism");
  EtaG etag = eta_g(W);
  eg.passed = etag.isomorphism();
  if (!eg.passed) eg.witness = etag.homomorphism ? "not bijective" : "not a homomorphism";
  eg.cardinalities["reconstructed"] = static_cast<long long>(etag.gm.order());

  // Hat lemmas, exhaustively over the carrier.
  {
    PermGroup& GM = etag.gm;
    auto& hm = rep.add("hat-meet");
    auto& hp = rep.add("hat-product");
    auto& hi = rep.add("hat-inverse");
    auto& hn = rep.add("hat-nonempty");
    auto& ho = rep.add("hat-order-embedding");
    auto& hc = rep.add("hat-coset-form");
    std::vector<std::vector<int>> hats(M.size());
    for (int a = 1; a < M.size(); ++a) hats[a] = hat(M, GM, a);

    for (int a = 1; a < M.size(); ++a) {
      if (hats[a].empty()) {
        hn.passed = false;
        hn.witness = std::to_string(a);
      }
      if (M.inverse(a) != MeetGroupoid::kEmpty) {
        std::vector<int> inv_set;
        for (int x : hats[a]) inv_set.push_back(GM.inv(x));
        std::sort(inv_set.begin(), inv_set.end());
        if (inv_set != hats[M.inverse(a)]) {
          hi.passed = false;
          hi.witness = std::to_string(a);
        }
      }
    }
    for (int a = 1; a < M.size(); ++a)
      for (int b = 1; b < M.size(); ++b) {
        int met = M.meet(a, b);
        std::vector<int> lhs = met == MeetGroupoid::kEmpty ? std::vector<int>{} : hats[met];
        if (intersect(hats[a], hats[b]) != lhs) {
          hm.passed = false;
          hm.witness = std::to_string(a) + "," + std::to_string(b);
        }
        int ab = M.product(a, b);
        if (ab != MeetGroupoid::kUndefined) {
          std::set<int> prod;
          for (int x : hats[a])
            for (int y : hats[b]) prod.insert(GM.mul(x, y));
          if (std::vector<int>(prod.begin(), prod.end()) != hats[ab]) {
            hp.passed = false;
            hp.witness = std::to_string(a) + "," + std::to_string(b);
          }
        }
        bool le = M.leq(a, b);
        bool hat_le = intersect(hats[a], hats[b]) == hats[a];
        if (le != hat_le) {
          ho.passed = false;
          ho.witness = std::to_string(a) + "," + std::to_string(b);
        }
      }
    // Injectivity comes with order preservation in both directions, but the
    // map is also checked to be injective outright.
    std::set<std::vector<int>> distinct(hats.begin() + 1, hats.end());
    if (distinct.size() + 1 != static_cast<std::size_t>(M.size())) {
      ho.passed = false;
      ho.witness = "hat map collides";
    }
    for (int u : M.idempotents()) {
      if (!is_subgroup(GM, hats[u])) {
        hc.passed = false;
        hc.witness = "hat of idempotent " + std::to_string(u) + " is not a subgroup";
      }
      for (int a : M.left_star_cosets(u)) {
        std::vector<int> coset;
        for (int x : hats[u]) coset.push_back(GM.mul(hats[a].front(), x));
        std::sort(coset.begin(), coset.end());
        if (coset != hats[a]) {
          hc.passed = false;
          hc.witness = "hat of " + std::to_string(a) + " is not a coset of its frame";
        }
      }
    }
  }

  // Closure of the transported basis; membership in the stricter
  // all-subgroups class is informational, since the reconstruction run uses
  // the hat family.
  auto& mm = rep.add("hat-basis-closure");
  MMDetails det = mm_details(M, caps);
  mm.passed = det.hat_meet_closed && det.hat_conjugation_closed && det.hat_separating;
  if (!mm.passed) mm.witness = det.witness;
  rep.meta["all_subgroups_class_member"] = det.is_object ? "true" : "false";

  auto& em = rep.add("eta-m-isomorphism");
  EtaM etam = eta_m(M, caps);
  em.passed = etam.isomorphism;
  if (!em.passed) em.witness = etam.witness;
  em.cardinalities["carrier"] = M.size();

  // Sampled naturality, both squares, exhaustive per sample.
  auto isos = sample_isomorphisms(G, samples, seed, caps);
  auto& ng = rep.add("naturality-group-square");
  auto& nm = rep.add("naturality-groupoid-square");
  ng.cardinalities["samples"] = static_cast<long long>(isos.size());
  nm.cardinalities["samples"] = static_cast<long long>(isos.size());
  for (const GroupHom& alpha : isos) {
    std::vector<ElementSet> image_members;
    for (const auto& U : S.members) image_members.push_back(set_image(alpha.map, U));
    SubgroupFamily SH = make_family(alpha.target, std::move(image_members));
    CosetGroupoid WH = build_w(alpha.target, SH);
    NaturalitySquare sq = check_naturality_g(alpha, W, WH);
    if (!sq.commutes) {
      ng.passed = false;
      ng.witness = sq.witness;
    }
    std::vector<int> theta = w_on_morphism(alpha, W, WH);
    NaturalitySquare sm =
        check_naturality_m(theta, M, WH.groupoid, etag.gm, g_of_m(WH.groupoid));
    if (!sm.commutes) {
      nm.passed = false;
      nm.witness = sm.witness;
    }
  }

  // Functor law: compose a source automorphism into a sampled isomorphism.
  if (!isos.empty()) {
    auto& fl = rep.add("w-functor-law");
    const GroupHom& a0 = isos.back();
    GroupHom a1{G, G, brute_automorphisms(G, caps).back()};
    GroupHom comp = compose(a0, a1);
    std::vector<ElementSet> image_members;
    for (const auto& U : S.members) image_members.push_back(set_image(a0.map, U));
    CosetGroupoid W0 = build_w(a0.target, make_family(a0.target, std::move(image_members)));
    std::vector<int> t_comp = w_on_morphism(comp, W, W0);
    std::vector<int> t0 = w_on_morphism(a0, W, W0);
    std::vector<int> t1 = w_on_morphism(a1, W, W);
    for (std::size_t i = 0; i < t_comp.size(); ++i)
      if (t_comp[i] != t0[t1[i]]) {
        fl.passed = false;
        fl.witness = "W(a0 . a1) != W(a0) . W(a1) at " + std::to_string(i);
        break;
      }
  }

  // Basis invariance under every sampled isomorphism (the invariance
  // condition the whole construction assumes).
  auto& icb = rep.add("basis-invariance");
  for (const GroupHom& alpha : isos) {
    for (const auto& U : S.members) {
      ElementSet img = set_image(alpha.map, U);
      if (!is_subgroup(alpha.target, img)) {
        icb.passed = false;
        icb.witness = "image of a basis member is not a subgroup";
      }
    }
  }
  // For the full subgroup basis, images must exhaust the target's subgroups.
  {
    SubgroupFamily all_G = all_subgroups_family(G, caps);
    if (S.members == all_G.members && !isos.empty()) {
      const GroupHom& alpha = isos.back();
      std::set<ElementSet> images;
      for (const auto& U : S.members) images.insert(set_image(alpha.map, U));
      for (const auto& U : enumerate_subgroups(alpha.target, caps))
        if (!images.count(U)) {
          icb.passed = false;
          icb.witness = "image family misses a subgroup of the target";
        }
    }
  }

  // Every basis member has finitely many double cosets, counted directly.
  auto& rp = rep.add("basis-members-roelcke-precompact");
  for (const auto& U : S.members) {
    int dc = double_coset_count(G, U);
    long long index = static_cast<long long>(G.order() / U.size());
    if (dc < 1 || dc > index) {
      rp.passed = false;
      rp.witness = "double coset count out of range";
    }
  }

  auto& card = rep.add("automorphism-cardinalities");
  AutPresentation A = inn_out(G, caps);
  card.cardinalities["aut"] = static_cast<long long>(A.aut.order());
  card.cardinalities["inn"] = static_cast<long long>(A.inn.size());
  card.cardinalities["out"] = static_cast<long long>(A.out_reps.size());
  return rep;
}

}  // namespace cosetmg
