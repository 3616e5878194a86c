#include "cosetmg/functor_w.hpp"

#include <algorithm>
#include <set>

#include "cosetmg/errors.hpp"

namespace cosetmg {

CosetTable enumerate_cosets(const SubgroupFamily& S) {
  CosetTable T;
  const PermGroup& G = S.parent;
  T.point_to_coset.resize(S.members.size());
  for (std::size_t mi = 0; mi < S.members.size(); ++mi) {
    auto cosets = left_cosets(G, S.members[mi]);
    T.point_to_coset[mi].assign(G.order(), -1);
    for (auto& c : cosets) {
      int pos = static_cast<int>(T.sets.size());
      for (int x : c) T.point_to_coset[mi][x] = pos;
      T.index.emplace_back(static_cast<int>(mi), c.front());
      T.sets.push_back(std::move(c));
    }
  }
  return T;
}

SubgroupFamily close_basis(const PermGroup& G, std::vector<ElementSet> seed, const Caps& caps) {
  std::set<ElementSet> family;
  for (auto& m : seed) {
    std::sort(m.begin(), m.end());
    if (!is_subgroup(G, m)) throw PreconditionError("basis seed member is not a subgroup");
    family.insert(std::move(m));
  }
  if (family.empty()) throw PreconditionError("basis seed must be nonempty");
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> snapshot(family.begin(), family.end());
    for (const auto& U : snapshot) {
      for (int g = 0; g < static_cast<int>(G.order()); ++g) {
        if (family.insert(conjugate_subgroup(G, g, U)).second) grew = true;
      }
      for (const auto& V : snapshot) {
        if (family.insert(intersect(U, V)).second) grew = true;
      }
      if (family.size() > caps.closure_max)
        throw CapExceeded("basis closure exceeds cap");
    }
  }
  return make_family(G, std::vector<ElementSet>(family.begin(), family.end()));
}

int CosetGroupoid::id_of_set(const ElementSet& s) const {
  if (s.empty()) return MeetGroupoid::kEmpty;
  auto it = set_index.find(s);
  return it == set_index.end() ? -1 : it->second;
}

namespace {

std::string set_label(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

CosetGroupoid build_w(const PermGroup& G, const SubgroupFamily& S) {
  if (!S.meet_closed || !S.conjugation_closed)
    throw PreconditionError("basis must be closed under intersection and conjugation");

  CosetGroupoid W{MeetGroupoid(GroupoidTables{1, {0}, {0}, {0}, {}}), S, enumerate_cosets(S),
                  {}, {}, {}};
  const CosetTable& T = W.cosets;
  const int m = T.size() + 1;

  W.set_index.clear();
  for (int pos = 0; pos < T.size(); ++pos) W.set_index.emplace(T.sets[pos], pos + 1);

  W.left_frame.assign(m, -1);
  W.right_frame.assign(m, -1);
  for (int pos = 0; pos < T.size(); ++pos) {
    int id = pos + 1;
    W.left_frame[id] = T.index[pos].first;
    // A = rU is a right coset of rUr^-1, which conjugation closure keeps in S.
    int rep = T.index[pos].second;
    ElementSet conj = conjugate_subgroup(G, rep, S.members[T.index[pos].first]);
    int member = S.index_of_member(conj);
    if (member < 0) throw PreconditionError("family is not closed under conjugation");
    W.right_frame[id] = member;
  }

  GroupoidTables t;
  t.size = m;
  t.inverse.assign(m, 0);
  t.meet.assign(static_cast<std::size_t>(m) * m, MeetGroupoid::kEmpty);
  t.product.assign(static_cast<std::size_t>(m) * m, MeetGroupoid::kUndefined);
  t.labels.resize(m);
  t.labels[0] = "{}";
  for (int id = 1; id < m; ++id) t.labels[id] = set_label(T.sets[id - 1]);

  t.product[0] = MeetGroupoid::kEmpty;  // empty * empty
  for (int a = 1; a < m; ++a) {
    const ElementSet& A = T.sets[a - 1];
    ElementSet inv = set_inverse(G, A);
    auto it = W.set_index.find(inv);
    if (it == W.set_index.end()) throw Error("carrier is not closed under inverse");
    t.inverse[a] = it->second;
    for (int b = 1; b < m; ++b) {
      const ElementSet& B = T.sets[b - 1];
      ElementSet met = intersect(A, B);
      if (!met.empty()) {
        auto mit = W.set_index.find(met);
        if (mit == W.set_index.end())
          throw Error("carrier is not closed under nonempty intersection");
        t.meet[static_cast<std::size_t>(a) * m + b] = mit->second;
      }
      if (W.left_frame[a] == W.right_frame[b]) {
        // A = rU, B = Us: the set product is r * B.
        ElementSet prod;
        prod.reserve(B.size());
        int rep = T.index[a - 1].second;
        for (int x : B) prod.push_back(G.mul(rep, x));
        std::sort(prod.begin(), prod.end());
        auto pit = W.set_index.find(prod);
        if (pit == W.set_index.end()) throw Error("carrier is not closed under coset product");
        t.product[static_cast<std::size_t>(a) * m + b] = pit->second;
      }
    }
  }

  W.groupoid = MeetGroupoid(std::move(t));
  return W;
}

std::vector<int> w_on_morphism(const GroupHom& alpha, const CosetGroupoid& WG,
                               const CosetGroupoid& WH) {
  if (!alpha.is_bijective()) throw PreconditionError("morphism must be bijective");
  if (alpha.source.order() != WG.group().order() || alpha.target.order() != WH.group().order())
    throw PreconditionError("morphism endpoints do not match the groupoids");
  for (const auto& U : WG.family.members)
    if (WH.family.index_of_member(set_image(alpha.map, U)) < 0)
      throw PreconditionError("morphism does not carry the source basis onto the target basis");

  const MeetGroupoid& M = WG.groupoid;
  const MeetGroupoid& N = WH.groupoid;
  std::vector<int> theta(M.size(), MeetGroupoid::kEmpty);
  for (int a = 1; a < M.size(); ++a) {
    theta[a] = WH.id_of_set(set_image(alpha.map, WG.set_of(a)));
    if (theta[a] <= 0) throw PreconditionError("image of a coset is not a target coset");
  }
  std::vector<char> hit(N.size(), 0);
  for (int v : theta) {
    if (hit[v]) throw Error("induced carrier map is not injective");
    hit[v] = 1;
  }
  if (M.size() != N.size()) throw Error("induced carrier map is not onto");
  for (int a = 0; a < M.size(); ++a) {
    if (N.inverse(theta[a]) != theta[M.inverse(a)]) throw Error("carrier map breaks inverse");
    for (int b = 0; b < M.size(); ++b) {
      if (N.meet(theta[a], theta[b]) != theta[M.meet(a, b)])
        throw Error("carrier map breaks meet");
      int ab = M.product(a, b);
      int im = N.product(theta[a], theta[b]);
      if ((ab == MeetGroupoid::kUndefined) != (im == MeetGroupoid::kUndefined))
        throw Error("carrier map breaks product definedness");
      if (ab != MeetGroupoid::kUndefined && im != theta[ab])
        throw Error("carrier map breaks product");
    }
  }
  return theta;
}

}  // namespace cosetmg
