#include "doctest.h"

#include <algorithm>

#include "cosetmg/catalog.hpp"
#include "cosetmg/errors.hpp"
#include "cosetmg/subgroups.hpp"

using namespace cosetmg;

namespace {

std::vector<std::size_t> member_orders(const std::vector<ElementSet>& subs) {
  std::vector<std::size_t> orders;
  for (const auto& s : subs) orders.push_back(s.size());
  return orders;
}

}  // namespace

TEST_SUITE("subgroups") {
  TEST_CASE("subgroup enumeration with frozen counts") {
    CHECK(enumerate_subgroups(catalog_group("Z4")).size() == 3);
    CHECK(member_orders(enumerate_subgroups(catalog_group("Z4"))) ==
          std::vector<std::size_t>{1, 2, 4});

    CHECK(enumerate_subgroups(PermGroup(1)).size() == 1);

    auto s3 = enumerate_subgroups(catalog_group("S3"));
    CHECK(s3.size() == 6);
    CHECK(member_orders(s3) == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});

    CHECK(enumerate_subgroups(catalog_group("D4")).size() == 10);
    CHECK(enumerate_subgroups(catalog_group("Q8")).size() == 6);
    CHECK(enumerate_subgroups(catalog_group("S4")).size() == 30);
  }

  TEST_CASE("subgroup enumeration cap is a hard error") {
    Caps caps;
    caps.subgroup_enum_max_order = 4;
    CHECK_THROWS_AS(enumerate_subgroups(catalog_group("S3"), caps), CapExceeded);
  }

  TEST_CASE("left cosets of the even subgroup of Z4") {
    PermGroup z4 = catalog_group("Z4");
    auto cosets = left_cosets(z4, {0, 2});
    REQUIRE(cosets.size() == 2);
    CHECK(cosets[0] == ElementSet{0, 2});
    CHECK(cosets[1] == ElementSet{1, 3});
  }

  TEST_CASE("cosets of the whole group and of order-2 subgroups") {
    PermGroup s3 = catalog_group("S3");
    ElementSet whole(s3.order());
    for (std::size_t i = 0; i < s3.order(); ++i) whole[i] = static_cast<int>(i);
    CHECK(left_cosets(s3, whole).size() == 1);

    int t = s3.index_of(parse_cycles("(0 1)", 3));
    ElementSet H = {s3.identity(), t};
    CHECK(left_cosets(s3, H).size() == 3);
    CHECK_THROWS_AS(left_cosets(s3, ElementSet{t}), PreconditionError);
  }

  TEST_CASE("cosets partition the group with equal sizes") {
    for (const char* name : {"Z4", "V4", "S3", "D4", "Q8"}) {
      PermGroup G = catalog_group(name);
      for (const auto& H : enumerate_subgroups(G)) {
        auto cosets = left_cosets(G, H);
        CHECK(cosets.size() * H.size() == G.order());
        std::vector<char> seen(G.order(), 0);
        for (const auto& c : cosets) {
          CHECK(c.size() == H.size());
          for (int x : c) {
            CHECK(!seen[x]);
            seen[x] = 1;
          }
        }
      }
    }
  }

  TEST_CASE("conjugation examples") {
    PermGroup s3 = catalog_group("S3");
    int t01 = s3.index_of(parse_cycles("(0 1)", 3));
    int t12 = s3.index_of(parse_cycles("(1 2)", 3));
    int rot = s3.index_of(parse_cycles("(0 1 2)", 3));
    ElementSet H = {s3.identity(), t01};

    CHECK(conjugate_subgroup(s3, s3.identity(), H) == H);
    ElementSet expected = {s3.identity(), t12};
    std::sort(expected.begin(), expected.end());
    CHECK(conjugate_subgroup(s3, rot, H) == expected);

    PermGroup z4 = catalog_group("Z4");
    for (int g = 0; g < 4; ++g) CHECK(conjugate_subgroup(z4, g, {0, 2}) == ElementSet{0, 2});
  }

  TEST_CASE("conjugation by g then by its inverse is the identity") {
    for (const char* name : {"S3", "D4", "Q8"}) {
      PermGroup G = catalog_group(name);
      for (const auto& H : enumerate_subgroups(G))
        for (int g = 0; g < static_cast<int>(G.order()); ++g)
          CHECK(conjugate_subgroup(G, G.inv(g), conjugate_subgroup(G, g, H)) == H);
    }
  }

  TEST_CASE("conjugation by frame elements fixes a coset setwise") {
    // For A a right coset of U and a left coset of V, every g in both U and
    // V conjugates A to itself.
    for (const char* name : {"S3", "D4", "Q8"}) {
      PermGroup G = catalog_group(name);
      for (const auto& U : enumerate_subgroups(G)) {
        for (const auto& A : right_cosets(G, U)) {
          int a0 = A.front();
          // A = U a0 = a0 (a0^-1 U a0), so A is also a left coset of V.
          ElementSet V = conjugate_subgroup(G, G.inv(a0), U);
          for (int g : intersect(U, V)) {
            ElementSet conj;
            for (int x : A) conj.push_back(G.conj(g, x));
            std::sort(conj.begin(), conj.end());
            CHECK(conj == A);
          }
        }
      }
    }
  }

  TEST_CASE("centers") {
    CHECK(center(catalog_group("S3")) == ElementSet{0});
    CHECK(center(catalog_group("Z8")).size() == 8);
    CHECK(center(catalog_group("D4")).size() == 2);
    CHECK(center(catalog_group("Q8")).size() == 2);
  }

  TEST_CASE("double coset counts") {
    PermGroup s3 = catalog_group("S3");
    int t01 = s3.index_of(parse_cycles("(0 1)", 3));
    CHECK(double_coset_count(s3, {s3.identity(), t01}) == 2);
    // Abelian: double cosets are plain cosets.
    CHECK(double_coset_count(catalog_group("Z4"), {0, 2}) == 2);
  }

  TEST_CASE("family flags are recomputed") {
    PermGroup z4 = catalog_group("Z4");
    SubgroupFamily all = all_subgroups_family(z4);
    CHECK(all.members.size() == 3);
    CHECK(all.meet_closed);
    CHECK(all.conjugation_closed);
    CHECK(all.separating);
    // Canonical order is decreasing size.
    CHECK(all.members[0].size() == 4);
    CHECK(all.members[2].size() == 1);

    SubgroupFamily partial = make_family(z4, {{0, 1, 2, 3}, {0, 2}});
    CHECK(partial.meet_closed);
    CHECK(partial.conjugation_closed);
    CHECK(!partial.separating);

    PermGroup s3 = catalog_group("S3");
    int t01 = s3.index_of(parse_cycles("(0 1)", 3));
    SubgroupFamily lone = make_family(s3, {{s3.identity(), t01}});
    CHECK(!lone.conjugation_closed);

    CHECK_THROWS_AS(make_family(s3, {{t01}}), PreconditionError);
  }
}
