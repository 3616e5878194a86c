#include "cosetmg/functor_g.hpp"

#include <algorithm>

#include "cosetmg/errors.hpp"

namespace cosetmg {

int FullFilter::choice(int U) const {
  for (auto [u, a] : choices)
    if (u == U) return a;
  throw Error("filter has no choice at idempotent " + std::to_string(U));
}

AutCertificate is_groupoid_aut(const MeetGroupoid& M, const Perm& p) {
  if (p.degree() != M.size()) return {false, "degree", {}};
  if (p(MeetGroupoid::kEmpty) != MeetGroupoid::kEmpty)
    return {false, "fixes-empty", {MeetGroupoid::kEmpty}};
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b)
      if (p(M.meet(a, b)) != M.meet(p(a), p(b))) return {false, "meet", {a, b}};
  for (int a = 0; a < M.size(); ++a)
    for (int b = 0; b < M.size(); ++b) {
      int ab = M.product(a, b);
      if (ab != MeetGroupoid::kUndefined) {
        int rhs = M.product(p(a), b);
        if (rhs == MeetGroupoid::kUndefined || p(ab) != rhs)
          return {false, "right-translation", {a, b}};
      }
    }
  return {true, "", {}};
}

namespace {

// Idempotents in a linear extension of reverse containment: every idempotent
// comes after all idempotents above it. For coset-backed groupoids this is
// the decreasing-size order.
std::vector<int> idempotents_top_down(const MeetGroupoid& M) {
  auto idem = M.idempotents();
  std::vector<std::pair<int, int>> keyed;
  for (int u : idem) {
    int above = 0;
    for (int v : idem)
      if (M.leq(u, v)) ++above;
    keyed.emplace_back(above, u);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  out.reserve(keyed.size());
  for (auto [k, u] : keyed) out.push_back(u);
  return out;
}

void require_full(const MeetGroupoid& M) {
  auto idem = M.idempotents();
  std::vector<std::vector<int>> lc;
  lc.reserve(idem.size());
  for (int u : idem) lc.push_back(M.left_star_cosets(u));
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = 0; j < idem.size(); ++j) {
      if (!M.leq(idem[i], idem[j])) continue;
      for (int a : lc[i]) {
        int count = 0;
        for (int b : lc[j])
          if (M.leq(a, b)) ++count;
        if (count != 1) throw PreconditionError("groupoid is not full (level up fails)");
      }
      if (i != j)
        for (int b : lc[j]) {
          int count = 0;
          for (int a : lc[i])
            if (M.leq(a, b)) ++count;
          if (count < 2) throw PreconditionError("groupoid is not full (level down fails)");
        }
    }
}

}  // namespace

std::vector<FullFilter> enumerate_full_filters(const MeetGroupoid& M) {
  require_full(M);
  std::vector<int> order = idempotents_top_down(M);
  std::vector<std::vector<int>> lc;
  lc.reserve(order.size());
  for (int u : order) lc.push_back(M.left_star_cosets(u));

  std::vector<FullFilter> result;
  std::vector<std::pair<int, int>> partial;
  constexpr int kNoMeet = -2;
  // Any completion keeps the meet of all choices nonempty (it contains the
  // choice at the bottom idempotent), so an empty running meet prunes.
  auto rec = [&](auto&& self, std::size_t depth, int running_meet) -> void {
    if (depth == order.size()) {
      FullFilter R{partial};
      std::sort(R.choices.begin(), R.choices.end());
      result.push_back(std::move(R));
      return;
    }
    int u = order[depth];
    for (int a : lc[depth]) {
      int next_meet = running_meet == kNoMeet ? a : M.meet(a, running_meet);
      if (next_meet == MeetGroupoid::kEmpty) continue;
      bool coherent = true;
      for (auto [v, b] : partial) {
        // Processed idempotents are above or incomparable; upward coherence
        // constrains exactly the comparable ones.
        if (M.leq(u, v) && !M.leq(a, b)) {
          coherent = false;
          break;
        }
      }
      if (!coherent) continue;
      partial.emplace_back(u, a);
      self(self, depth + 1, next_meet);
      partial.pop_back();
    }
  };
  rec(rec, 0, kNoMeet);
  std::sort(result.begin(), result.end());
  return result;
}

Perm filter_to_aut(const MeetGroupoid& M, const FullFilter& R) {
  // Enforce the coherence precondition: one valid choice per idempotent,
  // upward compatible.
  auto idem = M.idempotents();
  if (R.choices.size() != idem.size())
    throw PreconditionError("filter must choose at every idempotent");
  for (auto [u, a] : R.choices) {
    if (!M.is_idempotent(u) || M.product(a, u) != a)
      throw PreconditionError("filter choice is not a left *coset of its idempotent");
    for (auto [v, b] : R.choices)
      if (M.leq(u, v) && !M.leq(a, b))
        throw PreconditionError("filter choices are not upward coherent");
  }

  std::vector<int> image(M.size(), -1);
  image[MeetGroupoid::kEmpty] = MeetGroupoid::kEmpty;
  for (int b = 1; b < M.size(); ++b) {
    int v = M.coset_frame(b).second;  // b is a right-V *coset
    int cv = R.choice(v);
    int img = M.product(cv, b);
    if (img == MeetGroupoid::kUndefined)
      throw PreconditionError("filter extension hit an undefined product; filter is incoherent");
    image[b] = img;
  }
  std::vector<char> hit(M.size(), 0);
  for (int v : image) {
    if (v < 0 || hit[v]) throw PreconditionError("filter does not induce a bijection");
    hit[v] = 1;
  }
  return Perm(std::move(image));
}

FullFilter aut_to_filter(const MeetGroupoid& M, const Perm& p) {
  AutCertificate cert = is_groupoid_aut(M, p);
  if (!cert.ok) throw PreconditionError("map is not a groupoid automorphism: " + cert.clause);
  FullFilter R;
  for (int u : M.idempotents()) R.choices.emplace_back(u, p(u));
  return R;
}

PermGroup g_of_m(const MeetGroupoid& M) {
  std::vector<Perm> elements;
  for (const FullFilter& R : enumerate_full_filters(M)) {
    Perm p = filter_to_aut(M, R);
    AutCertificate cert = is_groupoid_aut(M, p);
    if (!cert.ok)
      throw Error("filter induced a non-automorphism (" + cert.clause + ")");
    elements.push_back(std::move(p));
  }
  return PermGroup::from_elements(M.size(), std::move(elements));
}

std::vector<int> hat(const MeetGroupoid& M, const PermGroup& GM, int A) {
  if (A == MeetGroupoid::kEmpty) return {};
  int u = M.coset_frame(A).first;  // A is a left-U *coset
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(GM.order()); ++i)
    if (GM.element(i)(u) == A) out.push_back(i);
  return out;
}

std::vector<int> g_on_morphism(const std::vector<int>& theta, const MeetGroupoid& M,
                               const MeetGroupoid& N, const PermGroup& GM,
                               const PermGroup& GN) {
  if (static_cast<int>(theta.size()) != M.size() || M.size() != N.size())
    throw PreconditionError("carrier map size mismatch");
  std::vector<int> theta_inv(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) theta_inv[theta[i]] = static_cast<int>(i);

  std::vector<int> out(GM.order(), -1);
  for (std::size_t i = 0; i < GM.order(); ++i) {
    const Perm& p = GM.element(static_cast<int>(i));
    std::vector<int> img(N.size());
    for (int a = 0; a < N.size(); ++a) img[a] = theta[p(theta_inv[a])];
    int j = GN.index_of(Perm(std::move(img)));
    if (j < 0) throw Error("conjugated automorphism left the target group");
    out[i] = j;
  }
  GroupHom h{GM, GN, out};
  if (!h.is_homomorphism() || !h.is_bijective())
    throw Error("induced map is not a group isomorphism");
  return out;
}

}  // namespace cosetmg
