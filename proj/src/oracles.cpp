#include "cosetmg/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "cosetmg/errors.hpp"

namespace cosetmg {

std::vector<std::vector<int>> brute_automorphisms(const PermGroup& G, const Caps& caps) {
  if (G.order() > caps.automorphism_max_order)
    throw CapExceeded("automorphism oracle cap exceeded: |G| = " + std::to_string(G.order()));
  const int n = static_cast<int>(G.order());
  const auto& gens = G.generators();

  std::vector<std::vector<int>> result;
  if (gens.empty() || n == 1) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    result.push_back(std::move(id));
    return result;
  }

  std::vector<int> gen_idx(gens.size());
  std::vector<int> gen_ord(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gen_idx[i] = G.index_of(gens[i]);
    gen_ord[i] = gens[i].order();
  }
  std::vector<int> elem_ord(n);
  for (int i = 0; i < n; ++i) elem_ord[i] = G.element_order(i);

  std::vector<int> images(gens.size(), 0);
  auto check_candidate = [&]() {
    std::vector<int> phi = G.extend_generator_images(G, images);
    std::vector<char> hit(n, 0);
    for (int v : phi) {
      if (hit[v]) return;
      hit[v] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (phi[G.mul(a, b)] != G.mul(phi[a], phi[b])) return;
    result.push_back(std::move(phi));
  };

  // All generator-image tuples with matching element orders.
  std::vector<int> stack(gens.size(), -1);
  std::size_t depth = 0;
  while (true) {
    int next = stack[depth] + 1;
    while (next < n && elem_ord[next] != gen_ord[depth]) ++next;
    if (next >= n) {
      stack[depth] = -1;
      if (depth == 0) break;
      --depth;
      continue;
    }
    stack[depth] = next;
    images[depth] = next;
    if (depth + 1 == gens.size()) {
      check_candidate();
    } else {
      ++depth;
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

PermGroup automorphism_group(const PermGroup& G, const Caps& caps) {
  auto maps = brute_automorphisms(G, caps);
  std::vector<Perm> perms;
  perms.reserve(maps.size());
  for (auto& m : maps) perms.push_back(Perm(std::move(m)));
  return PermGroup::from_elements(static_cast<int>(G.order()), std::move(perms));
}

namespace {

struct CentralizerSearch {
  const std::vector<Perm>& gens;
  int omega;
  std::vector<int> image;      // -1 unassigned
  std::vector<char> used;
  std::vector<Perm> found;

  // Assigns image[x] = y and propagates alpha(h(x)) = h(y) along all
  // generators. Returns false on contradiction; records assignments in trail.
  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue = {{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (image[a] == b) continue;
      if (image[a] != -1 || used[b]) return false;
      image[a] = b;
      used[b] = 1;
      trail.push_back(a);
      for (const Perm& h : gens) queue.emplace_back(h(a), h(b));
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t from) {
    while (trail.size() > from) {
      int a = trail.back();
      trail.pop_back();
      used[image[a]] = 0;
      image[a] = -1;
    }
  }

  void search(std::vector<int>& trail) {
    int x = -1;
    for (int i = 0; i < omega; ++i)
      if (image[i] == -1) {
        x = i;
        break;
      }
    if (x == -1) {
      found.push_back(Perm(image));
      return;
    }
    for (int y = 0; y < omega; ++y) {
      if (used[y]) continue;
      std::size_t mark = trail.size();
      if (assign(x, y, trail)) search(trail);
      undo(trail, mark);
    }
  }
};

}  // namespace

PermGroup centralizer_in_sym(const PermGroup& H, const Caps& caps) {
  const int omega = H.degree();
  if (omega > caps.centralizer_max_omega)
    throw CapExceeded("centralizer cap exceeded: |Omega| = " + std::to_string(omega));
  std::vector<Perm> gens = H.generators();
  if (gens.empty()) gens.push_back(Perm(omega));
  CentralizerSearch cs{gens, omega, std::vector<int>(omega, -1), std::vector<char>(omega, 0), {}};
  std::vector<int> trail;
  cs.search(trail);
  PermGroup C = PermGroup::from_elements_unchecked(omega, std::move(cs.found));
  for (const Perm& c : C.elements())
    for (const Perm& h : H.generators())
      if (!(c * h == h * c)) throw Error("centralizer search produced a non-commuting element");
  return C;
}

PermGroup normalizer_in_sym(const PermGroup& H, const Caps& caps) {
  const int omega = H.degree();
  if (omega > caps.normalizer_max_omega)
    throw CapExceeded("exhaustive normalizer cap exceeded: |Omega| = " + std::to_string(omega));
  std::vector<int> img(omega);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> found;
  do {
    Perm alpha(img);
    Perm alpha_inv = alpha.inverse();
    bool ok = true;
    for (const Perm& h : H.generators())
      if (!H.contains(alpha * h * alpha_inv)) {
        ok = false;
        break;
      }
    if (ok) found.push_back(std::move(alpha));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements_unchecked(omega, std::move(found));
}

}  // namespace cosetmg
