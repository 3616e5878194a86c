#include "cosetmg/aut_topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cosetmg/errors.hpp"

namespace cosetmg {

namespace {

std::string ids(std::initializer_list<long long> vals) {
  std::ostringstream out;
  bool first = true;
  for (long long v : vals) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  return out.str();
}

}  // namespace

int ThetaResult::theta_inverse(const Perm& alpha) const {
  if (!injective) throw PreconditionError("theta is not injective; basis is not separating");
  for (std::size_t g = 0; g < theta.size(); ++g)
    if (theta[g] == alpha) return static_cast<int>(g);
  return -1;
}

ThetaResult theta(const PermGroup& G, const SubgroupFamily& S) {
  if (!S.meet_closed || !S.conjugation_closed)
    throw PreconditionError("basis must be closed under intersection and conjugation");
  ThetaResult T{S, enumerate_cosets(S), {}, PermGroup(1), {}, false};
  const int omega = T.omega.size();
  std::vector<Perm> image_elems;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    std::vector<int> img(omega);
    for (int k = 0; k < omega; ++k) {
      auto [member, rep] = T.omega.index[k];
      img[k] = T.omega.id_of(member, G.mul(g, rep));
    }
    Perm p{std::move(img)};
    if (p.is_identity()) T.kernel.push_back(g);
    image_elems.push_back(std::move(p));
    T.theta.push_back(image_elems.back());
  }
  std::sort(image_elems.begin(), image_elems.end());
  image_elems.erase(std::unique(image_elems.begin(), image_elems.end()), image_elems.end());
  T.ghat = PermGroup::from_elements(omega, std::move(image_elems));
  T.injective = T.kernel.size() == 1;
  return T;
}

Perm delta(const ThetaResult& T, const std::vector<int>& phi) {
  const PermGroup& G = T.group();
  if (phi.size() != G.order()) throw PreconditionError("automorphism map has wrong size");
  const int omega = T.omega.size();
  std::vector<int> img(omega);
  for (int k = 0; k < omega; ++k) {
    auto [member, rep] = T.omega.index[k];
    ElementSet image_subgroup = set_image(phi, T.family.members[member]);
    int member_img = T.family.index_of_member(image_subgroup);
    if (member_img < 0)
      throw PreconditionError("automorphism does not preserve the basis family");
    img[k] = T.omega.id_of(member_img, phi[rep]);
  }
  return Perm(std::move(img));
}

std::vector<int> gamma(const ThetaResult& T, const Perm& alpha) {
  if (!T.injective) throw PreconditionError("gamma requires a separating basis");
  const PermGroup& G = T.group();
  std::map<Perm, int> theta_index;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) theta_index.emplace(T.theta[g], g);
  Perm alpha_inv = alpha.inverse();
  std::vector<int> out(G.order(), -1);
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    Perm conj = alpha * T.theta[g] * alpha_inv;
    auto it = theta_index.find(conj);
    if (it == theta_index.end())
      throw PreconditionError("permutation does not normalize the embedded group");
    out[g] = it->second;
  }
  GroupHom h{G, G, out};
  if (!h.is_homomorphism() || !h.is_bijective())
    throw Error("conjugation did not induce an automorphism");
  return out;
}

AutPresentation inn_out(const PermGroup& G, const Caps& caps) {
  auto maps = brute_automorphisms(G, caps);
  std::vector<Perm> perms;
  perms.reserve(maps.size());
  for (const auto& m : maps) perms.push_back(Perm(m));
  AutPresentation A{PermGroup::from_elements(static_cast<int>(G.order()), perms), {}, {}};

  std::set<int> inn;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    std::vector<int> conj_map(G.order());
    for (int x = 0; x < static_cast<int>(G.order()); ++x) conj_map[x] = G.conj(g, x);
    int idx = A.aut.index_of(Perm(std::move(conj_map)));
    if (idx < 0) throw Error("conjugation map missing from the automorphism oracle");
    inn.insert(idx);
  }
  A.inn.assign(inn.begin(), inn.end());

  ElementSet Z = center(G);
  if (A.inn.size() * Z.size() != G.order())
    throw Error("inner automorphism count disagrees with the center index");

  std::vector<char> covered(A.aut.order(), 0);
  for (std::size_t i = 0; i < A.aut.order(); ++i) {
    if (covered[i]) continue;
    A.out_reps.push_back(static_cast<int>(i));
    for (int j : A.inn) covered[A.aut.mul(static_cast<int>(i), j)] = 1;
  }
  if (A.out_reps.size() * A.inn.size() != A.aut.order())
    throw Error("outer transversal does not tile the automorphism group");
  return A;
}

std::vector<int> basis_subgroup(const ThetaResult& T, const std::vector<std::vector<int>>& auts,
                                const std::vector<int>& omega_points) {
  for (int p : omega_points)
    if (p < 0 || p >= T.omega.size()) throw PreconditionError("omega point out of range");
  std::vector<int> out;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    bool fixes = true;
    for (int p : omega_points) {
      if (set_image(auts[i], T.omega.sets[p]) != T.omega.sets[p]) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

struct SuiteContext {
  const PermGroup& G;
  ThetaResult T;
  std::vector<std::vector<int>> auts;
  std::map<std::vector<int>, int> aut_index;
  std::vector<Perm> delta_perms;
};

void theta_checks(SuiteContext& cx, Report& rep) {
  const PermGroup& G = cx.G;
  auto& hom = rep.add("theta-homomorphism");
  for (int g = 0; hom.passed && g < static_cast<int>(G.order()); ++g)
    for (int h = 0; h < static_cast<int>(G.order()); ++h)
      if (!(cx.T.theta[g] * cx.T.theta[h] == cx.T.theta[G.mul(g, h)])) {
        hom.passed = false;
        hom.witness = ids({g, h});
        break;
      }
  hom.cardinalities["omega"] = cx.T.omega_size();
  hom.cardinalities["ghat"] = static_cast<long long>(cx.T.ghat.order());

  auto& ker = rep.add("theta-kernel-is-basis-intersection");
  ElementSet core = cx.T.family.members[0];
  for (const auto& U : cx.T.family.members) core = intersect(core, U);
  ker.passed = cx.T.kernel == core;
  if (!ker.passed) ker.witness = "kernel differs from intersection of the family";
  ker.cardinalities["kernel"] = static_cast<long long>(cx.T.kernel.size());
}

void section_retraction_checks(SuiteContext& cx, Report& rep) {
  const PermGroup& G = cx.G;
  const std::size_t na = cx.auts.size();

  auto& inj = rep.add("delta-injective-homomorphism");
  std::set<Perm> distinct(cx.delta_perms.begin(), cx.delta_perms.end());
  if (distinct.size() != na) {
    inj.passed = false;
    inj.witness = "delta images collide";
  }
  for (std::size_t i = 0; inj.passed && i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      std::vector<int> comp(G.order());
      for (std::size_t x = 0; x < G.order(); ++x) comp[x] = cx.auts[i][cx.auts[j][x]];
      int k = cx.aut_index.at(comp);
      if (!(cx.delta_perms[i] * cx.delta_perms[j] == cx.delta_perms[k])) {
        inj.passed = false;
        inj.witness = ids({static_cast<long long>(i), static_cast<long long>(j)});
        break;
      }
    }
  inj.cardinalities["aut"] = static_cast<long long>(na);

  auto& norm = rep.add("delta-conjugation-identity");
  for (std::size_t i = 0; norm.passed && i < na; ++i) {
    Perm alpha_inv = cx.delta_perms[i].inverse();
    for (int g = 0; g < static_cast<int>(G.order()); ++g)
      if (!(cx.delta_perms[i] * cx.T.theta[g] * alpha_inv == cx.T.theta[cx.auts[i][g]])) {
        norm.passed = false;
        norm.witness = ids({static_cast<long long>(i), g});
        break;
      }
  }

  auto& retract = rep.add("gamma-after-delta-is-identity");
  for (std::size_t i = 0; retract.passed && i < na; ++i)
    if (gamma(cx.T, cx.delta_perms[i]) != cx.auts[i]) {
      retract.passed = false;
      retract.witness = ids({static_cast<long long>(i)});
    }

  auto& inner = rep.add("gamma-of-theta-is-conjugation");
  for (int g = 0; inner.passed && g < static_cast<int>(G.order()); ++g) {
    std::vector<int> conj_map(G.order());
    for (int x = 0; x < static_cast<int>(G.order()); ++x) conj_map[x] = G.conj(g, x);
    if (gamma(cx.T, cx.T.theta[g]) != conj_map) {
      inner.passed = false;
      inner.witness = ids({g});
    }
  }
}

struct SplitData {
  PermGroup C{1};
  std::vector<Perm> N;           // Delta(Aut) * C, sorted
  std::vector<int> gamma_idx;    // per N element, index into auts
};

SuiteContext make_context(const PermGroup& G, const SubgroupFamily& S, const Caps& caps) {
  if (!S.separating)
    throw PreconditionError(
        "the basis does not separate the identity; the embedding is not injective");
  SuiteContext cx{G, theta(G, S), {}, {}, {}};
  cx.auts = brute_automorphisms(G, caps);
  for (std::size_t i = 0; i < cx.auts.size(); ++i)
    cx.aut_index.emplace(cx.auts[i], static_cast<int>(i));
  for (const auto& phi : cx.auts) cx.delta_perms.push_back(delta(cx.T, phi));
  return cx;
}

SplitData compute_split(SuiteContext& cx, const Caps& caps) {
  SplitData sd;
  sd.C = centralizer_in_sym(cx.T.ghat, caps);
  std::vector<Perm> prods;
  prods.reserve(cx.auts.size() * sd.C.order());
  for (const Perm& d : cx.delta_perms)
    for (const Perm& c : sd.C.elements()) prods.push_back(d * c);
  std::sort(prods.begin(), prods.end());
  sd.N = std::move(prods);
  sd.gamma_idx.assign(sd.N.size(), -1);
  for (std::size_t i = 0; i < sd.N.size(); ++i) {
    std::vector<int> phi = gamma(cx.T, sd.N[i]);
    auto it = cx.aut_index.find(phi);
    if (it == cx.aut_index.end()) throw Error("gamma left the automorphism list");
    sd.gamma_idx[i] = it->second;
  }
  return sd;
}

void split_extension_checks(SuiteContext& cx, const SplitData& sd, const Caps& caps,
                            Report& rep) {
  auto& disjoint = rep.add("section-meets-centralizer-trivially");
  for (std::size_t i = 0; i < cx.auts.size(); ++i) {
    bool in_c = sd.C.contains(cx.delta_perms[i]);
    bool is_id = cx.delta_perms[i].is_identity();
    if (in_c != is_id) {
      disjoint.passed = false;
      disjoint.witness = ids({static_cast<long long>(i)});
      break;
    }
  }
  disjoint.cardinalities["centralizer"] = static_cast<long long>(sd.C.order());

  // Distinct products witness the trivial intersection from the other side.
  auto& product_size = rep.add("section-centralizer-product-size");
  product_size.passed = std::adjacent_find(sd.N.begin(), sd.N.end()) == sd.N.end();
  if (!product_size.passed) product_size.witness = "products of section and centralizer collide";
  product_size.cardinalities["normalizer"] = static_cast<long long>(sd.N.size());

  auto& normalizes = rep.add("product-normalizes-embedded-group");
  std::set<Perm> ghat_set(cx.T.ghat.elements().begin(), cx.T.ghat.elements().end());
  for (const Perm& alpha : sd.N) {
    Perm alpha_inv = alpha.inverse();
    bool ok = true;
    for (const Perm& h : cx.T.ghat.elements())
      if (!ghat_set.count(alpha * h * alpha_inv)) {
        ok = false;
        break;
      }
    if (!ok) {
      normalizes.passed = false;
      normalizes.witness = to_cycles(alpha);
      break;
    }
  }

  if (cx.T.omega_size() <= caps.normalizer_max_omega) {
    auto& brute = rep.add("product-equals-brute-normalizer");
    PermGroup NB = normalizer_in_sym(cx.T.ghat, caps);
    brute.passed = sd.N == NB.elements();
    if (!brute.passed) brute.witness = "constructive normalizer differs from brute force";
    brute.cardinalities["normalizer"] = static_cast<long long>(NB.order());
  }
}

void kernel_check(SuiteContext& cx, const SplitData& sd, Report& rep) {
  auto& kernel = rep.add("gamma-kernel-is-centralizer");
  std::vector<Perm> in_kernel;
  std::vector<int> id_map(cx.G.order());
  std::iota(id_map.begin(), id_map.end(), 0);
  int id_idx = cx.aut_index.at(id_map);
  for (std::size_t i = 0; i < sd.N.size(); ++i)
    if (sd.gamma_idx[i] == id_idx) in_kernel.push_back(sd.N[i]);
  kernel.passed = in_kernel == sd.C.elements();
  if (!kernel.passed) kernel.witness = "kernel of gamma differs from the centralizer";
  kernel.cardinalities["centralizer"] = static_cast<long long>(sd.C.order());
}

// alpha in C*U iff gamma(alpha) fixes the chosen cosets, for U the pointwise
// stabilizer of the subgroup and coset codes. Tuples are traced through the
// centralizer orbit of the code tuple.
void biconditional_checks(SuiteContext& cx, const SplitData& sd, Report& rep) {
  const int omega = cx.T.omega_size();
  auto& bic = rep.add("stabilizer-biconditional");
  bic.cardinalities["single"] = omega;
  bic.cardinalities["pairs"] = static_cast<long long>(omega) * (omega + 1) / 2;

  // Frame subgroup code per coset: the member's own coset position.
  std::vector<int> frame_code(omega);
  for (int k = 0; k < omega; ++k) {
    auto [member, rep_elt] = cx.T.omega.index[k];
    frame_code[k] = cx.T.omega.id_of(member, cx.T.group().identity());
  }

  std::vector<char> in_orbit(static_cast<std::size_t>(omega) * omega * omega * omega, 0);
  std::vector<std::size_t> touched;
  auto encode = [omega](int a, int b, int c, int d) {
    return ((static_cast<std::size_t>(a) * omega + b) * omega + c) * omega + d;
  };

  auto run_choice = [&](const std::vector<int>& cosets) {
    std::vector<int> points;
    for (int a : cosets) {
      points.push_back(frame_code[a]);
      points.push_back(a);
    }
    int p0 = points[0], p1 = points[1];
    int p2 = points.size() > 2 ? points[2] : points[0];
    int p3 = points.size() > 2 ? points[3] : points[1];
    for (const Perm& c : sd.C.elements()) {
      std::size_t code = encode(c(p0), c(p1), c(p2), c(p3));
      if (!in_orbit[code]) {
        in_orbit[code] = 1;
        touched.push_back(code);
      }
    }
    std::vector<int> stab = basis_subgroup(cx.T, cx.auts, cosets);
    std::vector<char> in_A(cx.auts.size(), 0);
    for (int i : stab) in_A[i] = 1;
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; ok && i < sd.N.size(); ++i) {
      const Perm& alpha = sd.N[i];
      bool lhs = in_orbit[encode(alpha(p0), alpha(p1), alpha(p2), alpha(p3))] != 0;
      bool rhs = in_A[sd.gamma_idx[i]] != 0;
      if (lhs != rhs) {
        ok = false;
        witness = to_cycles(alpha);
      }
    }
    for (std::size_t code : touched) in_orbit[code] = 0;
    touched.clear();
    return std::make_pair(ok, witness);
  };

  for (int a = 1; bic.passed && a <= omega; ++a) {
    auto [ok, witness] = run_choice({a - 1});
    if (!ok) {
      bic.passed = false;
      bic.witness = witness;
    }
  }
  for (int a = 0; bic.passed && a < omega; ++a)
    for (int b = a; b < omega; ++b) {
      auto [ok, witness] = run_choice({a, b});
      if (!ok) {
        bic.passed = false;
        bic.witness = witness;
        break;
      }
    }
}

void separation_check(SuiteContext& cx, Report& rep) {
  auto& sep = rep.add("coset-stabilizers-separate-automorphisms");
  std::vector<int> common;
  for (std::size_t i = 0; i < cx.auts.size(); ++i) common.push_back(static_cast<int>(i));
  for (int k = 0; k < cx.T.omega_size(); ++k) {
    std::vector<int> stab = basis_subgroup(cx.T, cx.auts, {k});
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), stab.begin(), stab.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  std::vector<int> id(cx.G.order());
  std::iota(id.begin(), id.end(), 0);
  sep.passed = common.size() == 1 && cx.auts[common[0]] == id;
  if (!sep.passed) sep.witness = "a nontrivial automorphism fixes every coset";
}

void inn_out_checks(SuiteContext& cx, const Caps& caps, Report& rep) {
  AutPresentation A = inn_out(cx.G, caps);
  auto& card = rep.add("inner-outer-cardinalities");
  ElementSet Z = center(cx.G);
  card.passed = A.inn.size() * Z.size() == cx.G.order();
  if (!card.passed) card.witness = "inner count disagrees with center index";
  card.cardinalities["aut"] = static_cast<long long>(A.aut.order());
  card.cardinalities["inn"] = static_cast<long long>(A.inn.size());
  card.cardinalities["out"] = static_cast<long long>(A.out_reps.size());
  card.cardinalities["center"] = static_cast<long long>(Z.size());

  auto& normal = rep.add("inner-subgroup-is-normal");
  std::set<int> inn_set(A.inn.begin(), A.inn.end());
  for (std::size_t i = 0; normal.passed && i < A.aut.order(); ++i)
    for (int j : A.inn)
      if (!inn_set.count(A.aut.conj(static_cast<int>(i), j))) {
        normal.passed = false;
        normal.witness = ids({static_cast<long long>(i), j});
        break;
      }
}

}  // namespace

Report centralizer_kernel_check(const PermGroup& G, const SubgroupFamily& S, const Caps& caps) {
  Report rep;
  rep.command = "centralizer-kernel";
  SuiteContext cx = make_context(G, S, caps);
  SplitData sd = compute_split(cx, caps);
  kernel_check(cx, sd, rep);
  return rep;
}

Report split_extension_check(const PermGroup& G, const SubgroupFamily& S, const Caps& caps) {
  Report rep;
  rep.command = "split-extension";
  SuiteContext cx = make_context(G, S, caps);
  SplitData sd = compute_split(cx, caps);
  split_extension_checks(cx, sd, caps, rep);
  return rep;
}

Report aut_suite(const PermGroup& G, const SubgroupFamily& S, const Caps& caps) {
  Report rep;
  rep.command = "aut";

  SuiteContext cx = make_context(G, S, caps);
  theta_checks(cx, rep);
  section_retraction_checks(cx, rep);
  SplitData sd = compute_split(cx, caps);
  split_extension_checks(cx, sd, caps, rep);
  kernel_check(cx, sd, rep);
  biconditional_checks(cx, sd, rep);
  separation_check(cx, rep);
  inn_out_checks(cx, caps, rep);

  // Headline numbers gathered in one place for report consumers.
  AutPresentation A = inn_out(G, caps);
  auto& summary = rep.add("cardinalities");
  summary.cardinalities["aut"] = static_cast<long long>(A.aut.order());
  summary.cardinalities["inn"] = static_cast<long long>(A.inn.size());
  summary.cardinalities["out"] = static_cast<long long>(A.out_reps.size());
  summary.cardinalities["omega"] = cx.T.omega_size();
  summary.cardinalities["centralizer"] = static_cast<long long>(sd.C.order());
  return rep;
}

}  // namespace cosetmg
