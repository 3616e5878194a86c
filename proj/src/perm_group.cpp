#include "cosetmg/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cosetmg/errors.hpp"

namespace cosetmg {

namespace {
// Orders small enough to precompute the full multiplication table.
constexpr std::size_t kMulTableMaxOrder = 512;
}  // namespace

PermGroup::PermGroup(int degree) : degree_(degree) {
  elements_.push_back(Perm(degree));
  finalize(true);
}

PermGroup PermGroup::generated(int degree, std::vector<Perm> gens, std::size_t closure_cap) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.generators_ = gens;

  std::map<Perm, int> seen;
  std::vector<Perm> elems;
  std::vector<std::pair<int, int>> deriv;
  elems.push_back(Perm(degree));
  deriv.emplace_back(-1, -1);
  seen.emplace(elems[0], 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = elems[head] * gens[gi];
      if (seen.emplace(next, static_cast<int>(elems.size())).second) {
        if (elems.size() + 1 > closure_cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(closure_cap));
        elems.push_back(std::move(next));
        deriv.emplace_back(static_cast<int>(head), static_cast<int>(gi));
      }
    }
  }

  // Sort into canonical order and remap the derivation tree.
  std::vector<int> pos(elems.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::sort(pos.begin(), pos.end(), [&](int a, int b) { return elems[a] < elems[b]; });
  std::vector<int> where(elems.size());
  for (std::size_t i = 0; i < pos.size(); ++i) where[pos[i]] = static_cast<int>(i);

  G.elements_.reserve(elems.size());
  G.derivation_.assign(elems.size(), {-1, -1});
  G.bfs_order_.reserve(elems.size());
  for (int p : pos) G.elements_.push_back(elems[p]);
  for (std::size_t old = 0; old < elems.size(); ++old) {
    auto [parent, gi] = deriv[old];
    G.derivation_[where[old]] = {parent < 0 ? -1 : where[parent], gi};
  }
  for (std::size_t old = 0; old < elems.size(); ++old) G.bfs_order_.push_back(where[old]);

  G.finalize(false);
  return G;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  PermGroup G = from_elements_unchecked(degree, std::move(elements));
  if (G.elements_.empty() || !G.elements_[0].is_identity())
    throw Error("element list lacks the identity");
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (G.index_of(G.elements_[i].inverse()) < 0) throw Error("element list not closed under inverse");
    for (std::size_t j = 0; j < G.order(); ++j)
      if (G.index_of(G.elements_[i] * G.elements_[j]) < 0)
        throw Error("element list not closed under composition");
  }
  return G;
}

PermGroup PermGroup::from_elements_unchecked(int degree, std::vector<Perm> elements) {
  PermGroup G;
  G.degree_ = degree;
  for (const Perm& p : elements)
    if (p.degree() != degree) throw Error("element degree mismatch");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  G.elements_ = std::move(elements);
  G.generators_ = G.elements_;
  G.finalize(false);
  return G;
}

void PermGroup::finalize(bool build_derivations) {
  if (build_derivations) {
    derivation_.assign(elements_.size(), {-1, -1});
    bfs_order_.resize(elements_.size());
    std::iota(bfs_order_.begin(), bfs_order_.end(), 0);
  }
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int j = index_of(elements_[i].inverse());
    inverse_[i] = j;
  }
  if (order() <= kMulTableMaxOrder) {
    mul_table_.assign(order() * order(), -1);
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j)
        mul_table_[i * order() + j] = index_of(elements_[i] * elements_[j]);
  }
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::mul(int i, int j) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(i) * order() + j];
  return index_of(elements_[i] * elements_[j]);
}

int PermGroup::conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

std::vector<int> PermGroup::extend_generator_images(const PermGroup& target,
                                                    const std::vector<int>& gen_images) const {
  if (!has_derivations()) throw Error("group was not built from generators");
  if (gen_images.size() != generators_.size()) throw Error("one image per generator required");
  std::vector<int> img(order(), -1);
  for (int k : bfs_order_) {
    auto [parent, gi] = derivation_[k];
    if (parent < 0) {
      img[k] = target.identity();
    } else {
      img[k] = target.mul(img[parent], gen_images[gi]);
      if (img[k] < 0) throw Error("generator image extension left the target group");
    }
  }
  return img;
}

bool GroupHom::is_homomorphism() const {
  if (map.size() != source.order()) return false;
  for (int v : map)
    if (v < 0 || v >= static_cast<int>(target.order())) return false;
  for (std::size_t i = 0; i < source.order(); ++i)
    for (std::size_t j = 0; j < source.order(); ++j)
      if (map[source.mul(static_cast<int>(i), static_cast<int>(j))] !=
          target.mul(map[i], map[j]))
        return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

GroupHom identity_hom(const PermGroup& G) {
  std::vector<int> m(G.order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom{G, G, std::move(m)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (g.target.order() != f.source.order()) throw Error("homomorphism composition mismatch");
  std::vector<int> m(g.source.order());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = f.map[g.map[i]];
  return GroupHom{g.source, f.target, std::move(m)};
}

GroupHom inverse_hom(const GroupHom& f) {
  if (!f.is_bijective()) throw PreconditionError("homomorphism is not bijective");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) m[f.map[i]] = static_cast<int>(i);
  return GroupHom{f.target, f.source, std::move(m)};
}

}  // namespace cosetmg
