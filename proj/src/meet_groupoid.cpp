#include "cosetmg/meet_groupoid.hpp"

#include <algorithm>

#include "cosetmg/errors.hpp"

namespace cosetmg {

MeetGroupoid::MeetGroupoid(GroupoidTables t)
    : size_(t.size),
      inverse_(std::move(t.inverse)),
      meet_(std::move(t.meet)),
      product_(std::move(t.product)),
      labels_(std::move(t.labels)) {
  if (size_ < 1) throw Error("meet groupoid needs at least the empty element");
  auto expect = [&](std::size_t got, std::size_t want, const char* what) {
    if (got != want) throw Error(std::string("bad table size for ") + what);
  };
  expect(inverse_.size(), static_cast<std::size_t>(size_), "inverse");
  expect(meet_.size(), static_cast<std::size_t>(size_) * size_, "meet");
  expect(product_.size(), static_cast<std::size_t>(size_) * size_, "product");
  if (!labels_.empty()) expect(labels_.size(), static_cast<std::size_t>(size_), "labels");
  for (int v : inverse_)
    if (v < 0 || v >= size_) throw Error("inverse table entry out of range");
  for (int v : meet_)
    if (v < 0 || v >= size_) throw Error("meet table entry out of range");
  for (int v : product_)
    if (v != kUndefined && (v < 0 || v >= size_)) throw Error("product table entry out of range");
}

void MeetGroupoid::throw_bad_id(int a) const {
  throw Error("invalid element id " + std::to_string(a));
}

bool MeetGroupoid::is_idempotent(int a) const { return a != kEmpty && product(a, a) == a; }

std::vector<int> MeetGroupoid::idempotents() const {
  std::vector<int> out;
  for (int a = 1; a < size_; ++a)
    if (product(a, a) == a) out.push_back(a);
  return out;
}

std::vector<int> MeetGroupoid::left_star_cosets(int U) const {
  if (!is_idempotent(U)) throw PreconditionError("left_star_cosets requires an idempotent");
  std::vector<int> out;
  for (int a = 1; a < size_; ++a)
    if (product(a, U) == a) out.push_back(a);
  return out;
}

std::vector<int> MeetGroupoid::right_star_cosets(int U) const {
  if (!is_idempotent(U)) throw PreconditionError("right_star_cosets requires an idempotent");
  std::vector<int> out;
  for (int b = 1; b < size_; ++b)
    if (product(U, b) == b) out.push_back(b);
  return out;
}

std::pair<int, int> MeetGroupoid::coset_frame(int A) const {
  check_id(A);
  if (A == kEmpty) throw PreconditionError("the empty element has no coset frame");
  int left = product(inverse(A), A);
  int right = product(A, inverse(A));
  if (left == kUndefined || right == kUndefined)
    throw Error("frame products undefined; groupoid axioms are violated");
  return {left, right};
}

int MeetGroupoid::level_up(int A, int V) const {
  if (!is_idempotent(V)) throw PreconditionError("level_up target must be an idempotent");
  check_id(A);
  if (A == kEmpty) throw PreconditionError("level_up is undefined on the empty element");
  int found = kUndefined;
  for (int B : left_star_cosets(V)) {
    if (leq(A, B)) {
      if (found != kUndefined)
        throw Error("level_up ambiguous: groupoid is not full");
      found = B;
    }
  }
  if (found == kUndefined) throw Error("level_up has no witness: groupoid is not full");
  return found;
}

std::string MeetGroupoid::label(int a) const {
  check_id(a);
  if (!labels_.empty()) return labels_[a];
  return a == kEmpty ? "{}" : "#" + std::to_string(a);
}

namespace {

class AxiomRun {
 public:
  AxiomRun(const MeetGroupoid& M, bool stop_at_first) : M_(M), stop_(stop_at_first) {}

  bool done() const { return stop_ && !report_.violations.empty(); }

  // Records the first witness per axiom tag.
  void violate(const std::string& axiom, std::vector<int> witness) {
    for (const auto& v : report_.violations)
      if (v.axiom == axiom) return;
    report_.violations.push_back({axiom, std::move(witness)});
  }

  ValidationReport take() {
    report_.passed = report_.violations.empty();
    return std::move(report_);
  }

  const MeetGroupoid& M_;
  bool stop_;
  ValidationReport report_;
};

constexpr int kU = MeetGroupoid::kUndefined;
constexpr int kE = MeetGroupoid::kEmpty;

void check_empty_conventions(AxiomRun& run) {
  const auto& M = run.M_;
  if (M.inverse(kE) != kE) run.violate("empty-inverse", {kE});
  if (M.product(kE, kE) != kE) run.violate("empty-product", {kE, kE});
  for (int a = 1; a < M.size(); ++a) {
    if (M.product(kE, a) != kU) run.violate("empty-undefined", {kE, a});
    if (M.product(a, kE) != kU) run.violate("empty-undefined", {a, kE});
    if (run.done()) return;
  }
}

void check_semilattice(AxiomRun& run) {
  const auto& M = run.M_;
  const int m = M.size();
  for (int a = 0; a < m; ++a) {
    if (M.meet(a, a) != a) run.violate("meet-idempotent", {a});
    if (M.meet(a, kE) != kE) run.violate("meet-least", {a});
    if (run.done()) return;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (M.meet(a, b) != M.meet(b, a)) {
        run.violate("meet-commutative", {a, b});
        if (run.done()) return;
      }
    }
  for (int a = 0; a < m && !run.done(); ++a)
    for (int b = 0; b < m; ++b) {
      int ab = M.meet(a, b);
      for (int c = 0; c < m; ++c)
        if (M.meet(ab, c) != M.meet(a, M.meet(b, c))) {
          run.violate("meet-associative", {a, b, c});
          if (run.done()) return;
          break;
        }
    }
}

void check_b_and_c(AxiomRun& run) {
  const auto& M = run.M_;
  const int m = M.size();
  for (int a = 0; a < m; ++a) {
    if (M.product(a, M.inverse(a)) == kU || M.product(M.inverse(a), a) == kU) {
      run.violate("b", {a});
      if (run.done()) return;
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int ab = M.product(a, b);
      if (ab == kU) continue;
      int left = M.product(ab, M.inverse(b));
      if (left != a) {
        run.violate("c-right-cancel", {a, b});
        if (run.done()) return;
      }
      int ia = M.product(M.inverse(a), a);
      int right = ia == kU ? kU : M.product(ia, b);
      if (right != b) {
        run.violate("c-left-cancel", {a, b});
        if (run.done()) return;
      }
    }
}

void check_associativity(AxiomRun& run) {
  const auto& M = run.M_;
  const int m = M.size();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int ab = M.product(a, b);
      for (int c = 0; c < m; ++c) {
        int bc = M.product(b, c);
        int lhs = ab == kU ? kU : M.product(ab, c);
        int rhs = bc == kU ? kU : M.product(a, bc);
        if (lhs != rhs) {
          run.violate("a-associativity", {a, b, c});
          if (run.done()) return;
        }
      }
    }
  }
}

void check_order_axioms(AxiomRun& run) {
  const auto& M = run.M_;
  const int m = M.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (M.leq(a, b) != M.leq(M.inverse(a), M.inverse(b))) {
        run.violate("d-inversion-order", {a, b});
        if (run.done()) return;
      }
    }
  auto idem = M.idempotents();
  for (int u : idem)
    for (int v : idem)
      if (M.meet(u, v) == kE) {
        run.violate("idempotent-meet-nonempty", {u, v});
        if (run.done()) return;
      }
}

void check_e_and_f(AxiomRun& run) {
  const auto& M = run.M_;
  const int m = M.size();
  std::vector<std::pair<int, int>> defined;
  for (int a = 1; a < m; ++a)
    for (int b = 1; b < m; ++b)
      if (M.defined(a, b)) defined.emplace_back(a, b);
  for (auto [a0, b0] : defined) {
    for (auto [a1, b1] : defined) {
      int ma = M.meet(a0, a1);
      int mb = M.meet(b0, b1);
      if (ma != kE && mb != kE) {
        int lhs = M.product(ma, mb);
        int rhs = M.meet(M.product(a0, b0), M.product(a1, b1));
        if (lhs == kU || lhs != rhs) {
          run.violate("e-meet-product", {a0, b0, a1, b1});
          if (run.done()) return;
        }
      }
      if (M.leq(a0, a1) && M.leq(b0, b1) &&
          !M.leq(M.product(a0, b0), M.product(a1, b1))) {
        run.violate("f-monotone", {a0, b0, a1, b1});
        if (run.done()) return;
      }
    }
  }
}

void check_fullness(AxiomRun& run) {
  const auto& M = run.M_;
  auto idem = M.idempotents();
  std::vector<std::vector<int>> lcs, rcs;
  lcs.reserve(idem.size());
  rcs.reserve(idem.size());
  for (int w : idem) {
    lcs.push_back(M.left_star_cosets(w));
    rcs.push_back(M.right_star_cosets(w));
  }
  for (std::size_t ui = 0; ui < idem.size(); ++ui) {
    int u = idem[ui];
    const auto& lu = lcs[ui];
    const auto& ru = rcs[ui];
    for (std::size_t vi = 0; vi < idem.size(); ++vi) {
      int v = idem[vi];
      if (!M.leq(u, v)) continue;
      const auto& lv = lcs[vi];
      const auto& rv = rcs[vi];
      // (g) level up: unique *coset above, on both sides.
      for (int a : lu) {
        int count = 0;
        for (int b : lv)
          if (M.leq(a, b)) ++count;
        if (count != 1) {
          run.violate("g-level-up-left", {a, u, v});
          if (run.done()) return;
        }
      }
      for (int a : ru) {
        int count = 0;
        for (int b : rv)
          if (M.leq(a, b)) ++count;
        if (count != 1) {
          run.violate("g-level-up-right", {a, u, v});
          if (run.done()) return;
        }
      }
      // (h) level down: at least two below a proper inclusion.
      if (u != v) {
        for (int b : lv) {
          int count = 0;
          for (int a : lu)
            if (M.leq(a, b)) ++count;
          if (count < 2) {
            run.violate("h-level-down-left", {b, u, v});
            if (run.done()) return;
          }
        }
        for (int b : rv) {
          int count = 0;
          for (int a : ru)
            if (M.leq(a, b)) ++count;
          if (count < 2) {
            run.violate("h-level-down-right", {b, u, v});
            if (run.done()) return;
          }
        }
      }
    }
  }
}

}  // namespace

ValidationReport check_axioms(const MeetGroupoid& M, bool fullness, bool stop_at_first) {
  AxiomRun run(M, stop_at_first);
  check_empty_conventions(run);
  if (!run.done()) check_b_and_c(run);
  if (!run.done()) check_semilattice(run);
  if (!run.done()) check_order_axioms(run);
  if (!run.done()) check_e_and_f(run);
  if (fullness && !run.done()) check_fullness(run);
  if (!run.done()) check_associativity(run);
  return run.take();
}

MeetGroupoid with_mutation(const MeetGroupoid& M, const TableMutation& mut) {
  GroupoidTables t;
  t.size = M.size();
  t.inverse = M.inverse_table();
  t.meet = M.meet_table();
  t.product = M.product_table();
  t.labels = M.labels();
  auto at = [&](std::vector<int>& tab) -> int& {
    return tab[static_cast<std::size_t>(mut.a) * M.size() + mut.b];
  };
  switch (mut.kind) {
    case TableMutation::Kind::kProductSet:
      at(t.product) = mut.value;
      break;
    case TableMutation::Kind::kProductDelete:
      at(t.product) = MeetGroupoid::kUndefined;
      break;
    case TableMutation::Kind::kMeetSet:
      at(t.meet) = mut.value;
      break;
    case TableMutation::Kind::kInverseSet:
      t.inverse[mut.a] = mut.value;
      break;
  }
  return MeetGroupoid(std::move(t));
}

TableMutation random_mutation(const MeetGroupoid& M, std::mt19937_64& rng) {
  const int m = M.size();
  auto pick_id = [&](int exclude) {
    std::uniform_int_distribution<int> d(0, m - 1);
    int v = d(rng);
    while (m > 1 && v == exclude) v = d(rng);
    return v;
  };
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (;;) {
    TableMutation mut;
    switch (kind(rng)) {
      case 0: {  // change or add a product entry
        mut.a = pick(rng);
        mut.b = pick(rng);
        int current = M.product(mut.a, mut.b);
        mut.kind = TableMutation::Kind::kProductSet;
        mut.value = pick_id(current);
        if (mut.value == current) continue;
        return mut;
      }
      case 1: {  // delete a defined product entry
        std::vector<std::pair<int, int>> defined;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            if (M.defined(a, b)) defined.emplace_back(a, b);
        if (defined.empty()) continue;
        std::uniform_int_distribution<std::size_t> d(0, defined.size() - 1);
        auto [a, b] = defined[d(rng)];
        return {TableMutation::Kind::kProductDelete, a, b, 0};
      }
      case 2: {
        mut.kind = TableMutation::Kind::kMeetSet;
        mut.a = pick(rng);
        mut.b = pick(rng);
        mut.value = pick_id(M.meet(mut.a, mut.b));
        if (mut.value == M.meet(mut.a, mut.b)) continue;
        return mut;
      }
      default: {
        mut.kind = TableMutation::Kind::kInverseSet;
        mut.a = pick(rng);
        mut.value = pick_id(M.inverse(mut.a));
        if (mut.value == M.inverse(mut.a)) continue;
        return mut;
      }
    }
  }
}

}  // namespace cosetmg
