#include "doctest.h"

#include <array>
#include <random>
#include <thread>

#include "cosetmg/catalog.hpp"
#include "cosetmg/errors.hpp"
#include "cosetmg/functor_w.hpp"
#include "cosetmg/meet_groupoid.hpp"

using namespace cosetmg;

namespace {

CosetGroupoid w_of(const char* name) {
  PermGroup G = catalog_group(name);
  return build_w(G, all_subgroups_family(G));
}

// One nonempty idempotent plus the empty element.
MeetGroupoid one_idempotent() {
  GroupoidTables t;
  t.size = 2;
  t.inverse = {0, 1};
  t.meet = {0, 0, 0, 1};
  t.product = {0, MeetGroupoid::kUndefined, MeetGroupoid::kUndefined, 1};
  return MeetGroupoid(std::move(t));
}

}  // namespace

TEST_SUITE("meet_groupoid") {
  TEST_CASE("products in the coset groupoid of Z4") {
    CosetGroupoid W = w_of("Z4");
    const MeetGroupoid& M = W.groupoid;
    REQUIRE(M.size() == 8);

    int odd = W.id_of_set({1, 3});
    int even = W.id_of_set({0, 2});
    REQUIRE(odd > 0);
    REQUIRE(even > 0);

    // {1,3} is both a left and a right coset of {0,2}; the product is the
    // elementwise set product, recomputed here as the oracle.
    const PermGroup& G = W.group();
    ElementSet prod = set_product(G, {1, 3}, {1, 3});
    CHECK(M.product(odd, odd) == W.id_of_set(prod));
    CHECK(M.product(odd, odd) == even);

    for (int a = 0; a < M.size(); ++a) {
      CHECK(M.product(a, M.inverse(a)) != MeetGroupoid::kUndefined);
      CHECK(M.product(M.inverse(a), a) != MeetGroupoid::kUndefined);
    }
    CHECK(M.product(MeetGroupoid::kEmpty, MeetGroupoid::kEmpty) == MeetGroupoid::kEmpty);
    CHECK(M.product(MeetGroupoid::kEmpty, odd) == MeetGroupoid::kUndefined);
    CHECK_THROWS_AS(M.product(0, 99), Error);
  }

  TEST_CASE("meet is intersection with least element empty") {
    CosetGroupoid W = w_of("Z4");
    const MeetGroupoid& M = W.groupoid;
    int odd = W.id_of_set({1, 3});
    int one = W.id_of_set({1});
    CHECK(M.meet(odd, MeetGroupoid::kEmpty) == MeetGroupoid::kEmpty);
    CHECK(M.meet(odd, odd) == odd);
    CHECK(M.meet(odd, one) == one);
    for (int a = 0; a < M.size(); ++a)
      for (int b = 0; b < M.size(); ++b) {
        ElementSet lhs =
            a == 0 || b == 0 ? ElementSet{} : intersect(W.set_of(a), W.set_of(b));
        int expect = lhs.empty() ? MeetGroupoid::kEmpty : W.id_of_set(lhs);
        CHECK(M.meet(a, b) == expect);
      }
  }

  TEST_CASE("idempotent counts") {
    CHECK(w_of("Z4").groupoid.idempotents().size() == 3);
    CHECK(w_of("trivial").groupoid.idempotents().size() == 1);
    CHECK(w_of("S3").groupoid.idempotents().size() == 6);
  }

  TEST_CASE("star cosets") {
    CosetGroupoid W = w_of("Z4");
    const MeetGroupoid& M = W.groupoid;
    int even = W.id_of_set({0, 2});
    int odd = W.id_of_set({1, 3});

    auto lc = M.left_star_cosets(even);
    CHECK(lc == std::vector<int>{even, odd});
    CHECK(M.right_star_cosets(even) == std::vector<int>{even, odd});
    CHECK_THROWS_AS(M.left_star_cosets(odd), PreconditionError);
  }

  TEST_CASE("distinct star cosets of one idempotent are disjoint") {
    for (const char* name : {"Z4", "S3", "D4"}) {
      CosetGroupoid W = w_of(name);
      const MeetGroupoid& M = W.groupoid;
      for (int u : M.idempotents()) {
        auto lc = M.left_star_cosets(u);
        for (int a : lc)
          for (int b : lc)
            if (a != b) CHECK(M.meet(a, b) == MeetGroupoid::kEmpty);
      }
    }
  }

  TEST_CASE("coset frames") {
    CosetGroupoid W = w_of("Z4");
    const MeetGroupoid& M = W.groupoid;
    int even = W.id_of_set({0, 2});
    int odd = W.id_of_set({1, 3});
    CHECK(M.coset_frame(even) == std::pair<int, int>{even, even});
    CHECK(M.coset_frame(odd) == std::pair<int, int>{even, even});
    CHECK_THROWS_AS(M.coset_frame(MeetGroupoid::kEmpty), PreconditionError);

    // A coset of the normal rotation subgroup of S3 has it on both sides.
    CosetGroupoid WS = w_of("S3");
    const PermGroup& S3 = WS.group();
    int rot = S3.index_of(parse_cycles("(0 1 2)", 3));
    int rot2 = S3.index_of(parse_cycles("(0 2 1)", 3));
    ElementSet A3 = {S3.identity(), rot, rot2};
    std::sort(A3.begin(), A3.end());
    int a3 = WS.id_of_set(A3);
    int t = S3.index_of(parse_cycles("(0 1)", 3));
    ElementSet coset;
    for (int x : A3) coset.push_back(S3.mul(t, x));
    std::sort(coset.begin(), coset.end());
    int odd_coset = WS.id_of_set(coset);
    CHECK(WS.groupoid.coset_frame(odd_coset) == std::pair<int, int>{a3, a3});
  }

  TEST_CASE("level up") {
    CosetGroupoid W = w_of("Z4");
    const MeetGroupoid& M = W.groupoid;
    int even = W.id_of_set({0, 2});
    int odd = W.id_of_set({1, 3});
    int one = W.id_of_set({1});
    int three = W.id_of_set({3});
    int top = W.id_of_set({0, 1, 2, 3});

    CHECK(M.level_up(one, even) == odd);
    CHECK(M.level_up(odd, even) == odd);  // target equals the frame
    CHECK(M.level_up(three, top) == top);
    CHECK_THROWS_AS(M.level_up(one, odd), PreconditionError);
    CHECK_THROWS_AS(M.level_up(MeetGroupoid::kEmpty, even), PreconditionError);
  }

  TEST_CASE("derived order and frame properties") {
    for (const char* name : {"Z4", "V4", "S3", "D4"}) {
      CosetGroupoid W = w_of(name);
      const MeetGroupoid& M = W.groupoid;

      // Inversion distributes over nonempty meets.
      for (int a = 1; a < M.size(); ++a)
        for (int b = 1; b < M.size(); ++b) {
          int met = M.meet(a, b);
          if (met != MeetGroupoid::kEmpty)
            CHECK(M.inverse(met) == M.meet(M.inverse(a), M.inverse(b)));
        }

      // The meet of two idempotents is an idempotent.
      auto idem = M.idempotents();
      for (int u : idem)
        for (int v : idem) CHECK(M.is_idempotent(M.meet(u, v)));

      // A nonempty meet of left *cosets is a left *coset of the meet of
      // the frames.
      for (int a = 1; a < M.size(); ++a)
        for (int b = 1; b < M.size(); ++b) {
          int met = M.meet(a, b);
          if (met == MeetGroupoid::kEmpty) continue;
          int frame = M.meet(M.coset_frame(a).first, M.coset_frame(b).first);
          CHECK(M.product(met, frame) == met);
          CHECK(M.coset_frame(met).first == frame);
        }
    }
  }

  TEST_CASE("axioms pass on every catalog instance") {
    for (const char* name : {"trivial", "Z2", "Z3", "Z4", "Z8", "V4", "S3", "D4", "Q8"}) {
      ValidationReport v = check_axioms(w_of(name).groupoid, true);
      CHECK(v.passed);
      CHECK(v.violations.empty());
    }
    CHECK(check_axioms(one_idempotent(), true).passed);
  }

  TEST_CASE("deleting a product entry is detected") {
    CosetGroupoid W = w_of("Z4");
    int odd = W.id_of_set({1, 3});
    MeetGroupoid broken =
        with_mutation(W.groupoid, {TableMutation::Kind::kProductDelete, odd, odd, 0});
    ValidationReport v = check_axioms(broken, true);
    CHECK(!v.passed);
    bool structural = false;
    for (const auto& viol : v.violations)
      if (viol.axiom == "a-associativity" || viol.axiom == "b" ||
          viol.axiom == "c-right-cancel" || viol.axiom == "c-left-cancel")
        structural = true;
    CHECK(structural);
  }

  TEST_CASE("random single-entry mutations are always detected") {
    std::mt19937_64 rng(7);
    for (const char* name : {"Z4", "S3"}) {
      CosetGroupoid W = w_of(name);
      for (int trial = 0; trial < 100; ++trial) {
        TableMutation mut = random_mutation(W.groupoid, rng);
        MeetGroupoid broken = with_mutation(W.groupoid, mut);
        CHECK(!check_axioms(broken, true, true).passed);
      }
    }
  }

  TEST_CASE("validator and accessors are safe to share across threads") {
    CosetGroupoid W = w_of("S3");
    const MeetGroupoid& M = W.groupoid;
    std::vector<std::thread> workers;
    std::array<bool, 4> passed{};
    std::array<std::size_t, 4> idem_counts{};
    for (int t = 0; t < 4; ++t)
      workers.emplace_back([&, t] {
        passed[t] = check_axioms(M, true).passed;
        idem_counts[t] = M.idempotents().size();
      });
    for (auto& w : workers) w.join();
    for (bool p : passed) CHECK(p);
    for (std::size_t n : idem_counts) CHECK(n == 6);
  }

  TEST_CASE("violation reporting carries a witness") {
    MeetGroupoid M = one_idempotent();
    MeetGroupoid broken = with_mutation(M, {TableMutation::Kind::kInverseSet, 1, 0, 0});
    ValidationReport v = check_axioms(broken, false);
    REQUIRE(!v.passed);
    CHECK(!v.violations.front().axiom.empty());
    CHECK(!v.violations.front().witness.empty());
  }
}
