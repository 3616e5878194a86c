#include "cosetmg/subgroups.hpp"

#include <algorithm>
#include <set>

#include "cosetmg/errors.hpp"

namespace cosetmg {

bool is_subgroup(const PermGroup& G, const ElementSet& H) {
  if (H.empty() || !std::binary_search(H.begin(), H.end(), G.identity())) return false;
  for (int a : H) {
    if (a < 0 || a >= static_cast<int>(G.order())) return false;
    for (int b : H)
      if (!std::binary_search(H.begin(), H.end(), G.mul(a, b))) return false;
  }
  return true;
}

ElementSet subgroup_closure(const PermGroup& G, ElementSet seed) {
  std::set<int> have(seed.begin(), seed.end());
  have.insert(G.identity());
  std::vector<int> queue(have.begin(), have.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    if (have.insert(G.inv(a)).second) queue.push_back(G.inv(a));
    for (std::size_t i = 0; i <= head; ++i) {
      for (int c : {G.mul(a, queue[i]), G.mul(queue[i], a)})
        if (have.insert(c).second) queue.push_back(c);
    }
  }
  return ElementSet(have.begin(), have.end());
}

std::vector<ElementSet> enumerate_subgroups(const PermGroup& G, const Caps& caps) {
  if (G.order() > caps.subgroup_enum_max_order)
    throw CapExceeded("subgroup enumeration cap exceeded: |G| = " + std::to_string(G.order()));
  std::set<ElementSet> found;
  ElementSet trivial = {G.identity()};
  found.insert(trivial);
  std::vector<ElementSet> queue = {trivial};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementSet H = queue[head];
    for (int x = 0; x < static_cast<int>(G.order()); ++x) {
      if (std::binary_search(H.begin(), H.end(), x)) continue;
      ElementSet seed = H;
      seed.push_back(x);
      ElementSet K = subgroup_closure(G, std::move(seed));
      if (found.insert(K).second) queue.push_back(std::move(K));
    }
  }
  std::vector<ElementSet> result(found.begin(), found.end());
  std::sort(result.begin(), result.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

std::vector<ElementSet> left_cosets(const PermGroup& G, const ElementSet& H) {
  if (!is_subgroup(G, H)) throw PreconditionError("not a subgroup of the parent group");
  std::vector<char> marked(G.order(), 0);
  std::vector<ElementSet> cosets;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    if (marked[g]) continue;
    ElementSet coset;
    coset.reserve(H.size());
    for (int h : H) coset.push_back(G.mul(g, h));
    std::sort(coset.begin(), coset.end());
    for (int x : coset) marked[x] = 1;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<ElementSet> right_cosets(const PermGroup& G, const ElementSet& H) {
  if (!is_subgroup(G, H)) throw PreconditionError("not a subgroup of the parent group");
  std::vector<char> marked(G.order(), 0);
  std::vector<ElementSet> cosets;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    if (marked[g]) continue;
    ElementSet coset;
    coset.reserve(H.size());
    for (int h : H) coset.push_back(G.mul(h, g));
    std::sort(coset.begin(), coset.end());
    for (int x : coset) marked[x] = 1;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

ElementSet conjugate_subgroup(const PermGroup& G, int g, const ElementSet& H) {
  ElementSet out;
  out.reserve(H.size());
  for (int h : H) out.push_back(G.conj(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_product(const PermGroup& G, const ElementSet& A, const ElementSet& B) {
  std::set<int> out;
  for (int a : A)
    for (int b : B) out.insert(G.mul(a, b));
  return ElementSet(out.begin(), out.end());
}

ElementSet set_inverse(const PermGroup& G, const ElementSet& A) {
  ElementSet out;
  out.reserve(A.size());
  for (int a : A) out.push_back(G.inv(a));
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_image(const std::vector<int>& map, const ElementSet& A) {
  ElementSet out;
  out.reserve(A.size());
  for (int a : A) out.push_back(map[a]);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet intersect(const ElementSet& A, const ElementSet& B) {
  ElementSet out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

ElementSet center(const PermGroup& G) {
  ElementSet out;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    bool central = true;
    for (int h = 0; central && h < static_cast<int>(G.order()); ++h)
      central = G.mul(g, h) == G.mul(h, g);
    if (central) out.push_back(g);
  }
  return out;
}

int double_coset_count(const PermGroup& G, const ElementSet& U) {
  if (!is_subgroup(G, U)) throw PreconditionError("not a subgroup of the parent group");
  std::set<ElementSet> classes;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    ElementSet single = {g};
    classes.insert(set_product(G, set_product(G, U, single), U));
  }
  return static_cast<int>(classes.size());
}

int SubgroupFamily::index_of_member(const ElementSet& U) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == U) return static_cast<int>(i);
  return -1;
}

SubgroupFamily make_family(const PermGroup& G, std::vector<ElementSet> members) {
  SubgroupFamily S;
  S.parent = G;
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    if (!is_subgroup(G, m)) throw PreconditionError("family member is not a subgroup");
  }
  std::sort(members.begin(), members.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw PreconditionError("family must have at least one member");
  S.members = std::move(members);

  S.meet_closed = true;
  for (std::size_t i = 0; S.meet_closed && i < S.members.size(); ++i)
    for (std::size_t j = i + 1; S.meet_closed && j < S.members.size(); ++j)
      if (S.index_of_member(intersect(S.members[i], S.members[j])) < 0) S.meet_closed = false;

  S.conjugation_closed = true;
  for (int g = 0; S.conjugation_closed && g < static_cast<int>(G.order()); ++g)
    for (const auto& U : S.members)
      if (S.index_of_member(conjugate_subgroup(G, g, U)) < 0) {
        S.conjugation_closed = false;
        break;
      }

  ElementSet core = S.members[0];
  for (const auto& U : S.members) core = intersect(core, U);
  S.separating = core.size() == 1 && core[0] == G.identity();
  return S;
}

SubgroupFamily all_subgroups_family(const PermGroup& G, const Caps& caps) {
  return make_family(G, enumerate_subgroups(G, caps));
}

}  // namespace cosetmg
