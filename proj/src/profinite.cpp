#include "cosetmg/profinite.hpp"

#include <algorithm>
#include <set>

#include "cosetmg/errors.hpp"
#include "cosetmg/functor_g.hpp"

namespace cosetmg {

int InverseSystem::project(int from_level, int element, int to_level) const {
  if (to_level > from_level) throw PreconditionError("cannot project upward in the tower");
  for (int l = from_level; l > to_level; --l) element = maps[l - 1][element];
  return element;
}

InverseSystem make_tower(std::vector<PermGroup> levels, std::vector<std::vector<int>> maps) {
  if (levels.empty()) throw PreconditionError("tower needs at least one level");
  if (maps.size() + 1 != levels.size()) throw PreconditionError("one connecting map per step");
  for (std::size_t d = 0; d < maps.size(); ++d) {
    const PermGroup& src = levels[d + 1];
    const PermGroup& dst = levels[d];
    if (maps[d].size() != src.order()) throw PreconditionError("connecting map has wrong size");
    std::vector<char> hit(dst.order(), 0);
    for (int v : maps[d]) {
      if (v < 0 || v >= static_cast<int>(dst.order()))
        throw PreconditionError("connecting map image out of range");
      hit[v] = 1;
    }
    for (char h : hit)
      if (!h) throw PreconditionError("connecting map is not surjective");
    for (std::size_t i = 0; i < src.order(); ++i)
      for (std::size_t j = 0; j < src.order(); ++j)
        if (maps[d][src.mul(static_cast<int>(i), static_cast<int>(j))] !=
            dst.mul(maps[d][i], maps[d][j]))
          throw PreconditionError("connecting map is not a homomorphism");
  }
  return InverseSystem{std::move(levels), std::move(maps)};
}

LevelCoset lc_empty() { return LevelCoset{true, 0, 0}; }

LevelCoset lc_make(const InverseSystem& sys, int level, int element) {
  if (level < 0 || level > sys.depth()) throw PreconditionError("level out of range");
  if (element < 0 || element >= static_cast<int>(sys.levels[level].order()))
    throw PreconditionError("element out of range");
  // Minimal-level canonical form: drop through bijective connecting maps.
  while (level > 0 && sys.levels[level].order() == sys.levels[level - 1].order()) {
    element = sys.maps[level - 1][element];
    --level;
  }
  return LevelCoset{false, level, element};
}

bool lc_leq(const InverseSystem& sys, const LevelCoset& a, const LevelCoset& b) {
  if (a.empty) return true;
  if (b.empty) return false;
  if (a.level < b.level) return false;
  return sys.project(a.level, a.rep, b.level) == b.rep;
}

LevelCoset lc_meet(const InverseSystem& sys, const LevelCoset& a, const LevelCoset& b) {
  if (a.empty || b.empty) return lc_empty();
  const LevelCoset& deep = a.level >= b.level ? a : b;
  const LevelCoset& shallow = a.level >= b.level ? b : a;
  if (sys.project(deep.level, deep.rep, shallow.level) == shallow.rep) return deep;
  return lc_empty();
}

LevelCoset lc_inverse(const InverseSystem& sys, const LevelCoset& a) {
  if (a.empty) return lc_empty();
  return LevelCoset{false, a.level, sys.levels[a.level].inv(a.rep)};
}

std::optional<LevelCoset> lc_product(const InverseSystem& sys, const LevelCoset& a,
                                     const LevelCoset& b) {
  if (a.empty && b.empty) return lc_empty();
  if (a.empty || b.empty) return std::nullopt;
  // Kernels are normal, so a coset is a matching left and right coset
  // exactly of its own kernel: products exist only within one level.
  if (a.level != b.level) return std::nullopt;
  return lc_make(sys, a.level, sys.levels[a.level].mul(a.rep, b.rep));
}

LevelCoset lc_level_up(const InverseSystem& sys, const LevelCoset& a, int to_level) {
  if (a.empty) throw PreconditionError("level_up undefined on the empty coset");
  if (to_level > a.level) throw PreconditionError("level_up cannot refine");
  return lc_make(sys, to_level, sys.project(a.level, a.rep, to_level));
}

std::pair<PermGroup, SubgroupFamily> truncate(const InverseSystem& sys, int d) {
  if (d < 0 || d > sys.depth()) throw PreconditionError("depth exceeds the tower");
  const PermGroup& G = sys.levels[d];
  std::vector<ElementSet> kernels;
  for (int j = 0; j <= d; ++j) {
    ElementSet K;
    for (int i = 0; i < static_cast<int>(G.order()); ++i)
      if (sys.project(d, i, j) == sys.levels[j].identity()) K.push_back(i);
    kernels.push_back(std::move(K));
  }
  return {G, make_family(G, std::move(kernels))};
}

std::vector<int> refine_filter(const InverseSystem& sys, int d, int element, int d2) {
  if (d2 > sys.depth()) throw PreconditionError("target depth exceeds the tower");
  if (d > d2) throw PreconditionError("refinement goes downward in depth");
  if (element < 0 || element >= static_cast<int>(sys.levels[d].order()))
    throw PreconditionError("element out of range");
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sys.levels[d2].order()); ++i)
    if (sys.project(d2, i, d) == element) out.push_back(i);
  return out;
}

Report profinite_suite(const InverseSystem& sys, int depth) {
  if (depth > sys.depth()) throw PreconditionError("depth exceeds the tower");
  Report rep;
  rep.command = "profinite";
  rep.meta["depth"] = std::to_string(depth);

  for (int d = 0; d <= depth; ++d) {
    auto [G, S] = truncate(sys, d);
    std::string tag = "depth-" + std::to_string(d);

    auto& flags = rep.add(tag + "-chain-basis");
    flags.passed = S.meet_closed && S.conjugation_closed && S.separating;
    if (!flags.passed) flags.witness = "kernel chain lost a closure property";
    flags.cardinalities["members"] = static_cast<long long>(S.members.size());

    CosetGroupoid W = build_w(G, S);

    // Lazy carrier: the canonical level cosets down to level d, plus empty.
    std::vector<LevelCoset> lazy = {lc_empty()};
    for (int j = 0; j <= d; ++j)
      for (int g = 0; g < static_cast<int>(sys.levels[j].order()); ++g) {
        LevelCoset lc = lc_make(sys, j, g);
        if (lc.level == j) lazy.push_back(lc);  // skip non-canonical duplicates
      }

    auto& agree = rep.add(tag + "-lazy-eager-agreement");
    agree.cardinalities["carrier"] = static_cast<long long>(lazy.size());
    if (static_cast<int>(lazy.size()) != W.groupoid.size()) {
      agree.passed = false;
      agree.witness = "carrier sizes differ";
    } else {
      // The eager coset of a level coset is its fiber in G_d.
      std::vector<int> to_eager(lazy.size(), MeetGroupoid::kEmpty);
      for (std::size_t i = 1; i < lazy.size(); ++i) {
        ElementSet fiber;
        for (int x = 0; x < static_cast<int>(G.order()); ++x)
          if (sys.project(d, x, lazy[i].level) == lazy[i].rep) fiber.push_back(x);
        to_eager[i] = W.id_of_set(fiber);
        if (to_eager[i] < 0) {
          agree.passed = false;
          agree.witness = "fiber is not an eager coset";
          break;
        }
      }
      std::vector<char> hit(W.groupoid.size(), 0);
      for (int v : to_eager) {
        if (v < 0 || hit[v]) agree.passed = false;
        if (v >= 0) hit[v] = 1;
      }
      for (std::size_t i = 0; agree.passed && i < lazy.size(); ++i) {
        if (W.groupoid.inverse(to_eager[i]) !=
            to_eager[std::find(lazy.begin(), lazy.end(), lc_inverse(sys, lazy[i])) -
                     lazy.begin()]) {
          agree.passed = false;
          agree.witness = "inverse tables differ";
          break;
        }
        for (std::size_t j = 0; j < lazy.size(); ++j) {
          LevelCoset met = lc_meet(sys, lazy[i], lazy[j]);
          int lazy_meet = static_cast<int>(std::find(lazy.begin(), lazy.end(), met) - lazy.begin());
          if (W.groupoid.meet(to_eager[i], to_eager[j]) != to_eager[lazy_meet]) {
            agree.passed = false;
            agree.witness = "meet tables differ";
            break;
          }
          auto prod = lc_product(sys, lazy[i], lazy[j]);
          int eager_prod = W.groupoid.product(to_eager[i], to_eager[j]);
          if (prod.has_value() != (eager_prod != MeetGroupoid::kUndefined)) {
            agree.passed = false;
            agree.witness = "product definedness differs";
            break;
          }
          if (prod.has_value()) {
            int lazy_prod =
                static_cast<int>(std::find(lazy.begin(), lazy.end(), *prod) - lazy.begin());
            if (eager_prod != to_eager[lazy_prod]) {
              agree.passed = false;
              agree.witness = "product tables differ";
              break;
            }
          }
        }
      }
    }

    auto& counts = rep.add(tag + "-filter-count");
    auto filters = enumerate_full_filters(W.groupoid);
    bool refine_ok =
        refine_filter(sys, 0, sys.levels[0].identity(), d).size() == G.order();
    counts.passed = filters.size() == G.order() && refine_ok;
    counts.cardinalities["filters"] = static_cast<long long>(filters.size());
    counts.cardinalities["group"] = static_cast<long long>(G.order());
    if (!counts.passed) counts.witness = "filter count differs from the group order";
  }

  // Projection compatibility: level-up matches the connecting maps.
  auto& compat = rep.add("projection-compatible-with-level-up");
  for (int d = 0; d < depth; ++d) {
    for (int g = 0; g < static_cast<int>(sys.levels[d + 1].order()); ++g)
      for (int j = 0; j <= d; ++j) {
        LevelCoset up = lc_level_up(sys, lc_make(sys, d + 1, g), j);
        if (up != lc_make(sys, j, sys.project(d + 1, g, j))) {
          compat.passed = false;
          compat.witness = "level-up disagrees with projection";
        }
      }
  }

  // Refinement fan-out partitions the next level.
  auto& fan = rep.add("refinement-partitions-next-level");
  for (int d = 0; d < depth; ++d) {
    std::size_t total = 0;
    for (int g = 0; g < static_cast<int>(sys.levels[d].order()); ++g) {
      auto ext = refine_filter(sys, d, g, d + 1);
      if (ext.empty()) {
        fan.passed = false;
        fan.witness = "a filter has no extension";
      }
      total += ext.size();
    }
    if (total != sys.levels[d + 1].order()) {
      fan.passed = false;
      fan.witness = "extensions do not partition the next level";
    }
  }
  return rep;
}

}  // namespace cosetmg
