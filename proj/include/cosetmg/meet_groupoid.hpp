#pragma once

#include <random>
#include <string>
#include <vector>

namespace cosetmg {

struct GroupoidTables {
  int size = 0;
  std::vector<int> inverse;           // size entries
  std::vector<int> meet;              // size*size, row-major
  std::vector<int> product;           // size*size, kUndefined marks undefined
  std::vector<std::string> labels;    // optional, size entries when present
};

/// A finite meet groupoid carrier with a partial product, total inverse and
/// total meet. Id 0 is reserved for the least element (the empty coset).
/// The constructor only range-checks the tables; semantic validity is the
/// job of check_axioms, so broken instances can be represented and reported.
class MeetGroupoid {
 public:
  static constexpr int kEmpty = 0;
  static constexpr int kUndefined = -1;

  explicit MeetGroupoid(GroupoidTables tables);

  int size() const { return size_; }
  bool valid_id(int a) const { return a >= 0 && a < size_; }

  /// Table lookup; kUndefined is a first-class outcome, not an error.
  int product(int a, int b) const {
    check_id(a);
    check_id(b);
    return product_[static_cast<std::size_t>(a) * size_ + b];
  }
  int meet(int a, int b) const {
    check_id(a);
    check_id(b);
    return meet_[static_cast<std::size_t>(a) * size_ + b];
  }
  int inverse(int a) const {
    check_id(a);
    return inverse_[a];
  }
  bool defined(int a, int b) const { return product(a, b) != kUndefined; }

  /// The order A <= B iff A meet B = A.
  bool leq(int a, int b) const { return meet(a, b) == a; }

  bool is_idempotent(int a) const;
  std::vector<int> idempotents() const;  // nonempty ones, sorted

  std::vector<int> left_star_cosets(int U) const;   // all A with A*U = A
  std::vector<int> right_star_cosets(int U) const;  // all B with U*B = B

  /// The unique idempotents (U, V) with A a left-U and right-V *coset,
  /// computed as U = A^-1 * A and V = A * A^-1.
  std::pair<int, int> coset_frame(int A) const;

  /// The unique left-V *coset above the left-*coset A, for an idempotent V
  /// above A's frame. Throws when absence or ambiguity shows the groupoid
  /// is not full.
  int level_up(int A, int V) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;

  const std::vector<int>& inverse_table() const { return inverse_; }
  const std::vector<int>& meet_table() const { return meet_; }
  const std::vector<int>& product_table() const { return product_; }

 private:
  void check_id(int a) const {
    if (!valid_id(a)) throw_bad_id(a);
  }
  [[noreturn]] void throw_bad_id(int a) const;
  int size_;
  std::vector<int> inverse_;
  std::vector<int> meet_;
  std::vector<int> product_;
  std::vector<std::string> labels_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;
};

struct ValidationReport {
  bool passed = false;
  std::vector<AxiomViolation> violations;
};

/// Exhaustively tests every quantified axiom over all tuples, recording the
/// first witness per violated axiom. With fullness on, the level-up and
/// level-down clauses are included. stop_at_first ends the whole run at the
/// first violation (used by the mutation harness).
ValidationReport check_axioms(const MeetGroupoid& M, bool fullness,
                              bool stop_at_first = false);

struct TableMutation {
  enum class Kind { kProductSet, kProductDelete, kMeetSet, kInverseSet };
  Kind kind = Kind::kProductSet;
  int a = 0;
  int b = 0;
  int value = 0;
};

MeetGroupoid with_mutation(const MeetGroupoid& M, const TableMutation& mut);

/// A uniformly chosen single-entry table mutation that is guaranteed to
/// change the structure.
TableMutation random_mutation(const MeetGroupoid& M, std::mt19937_64& rng);

}  // namespace cosetmg
