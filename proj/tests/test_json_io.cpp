#include "doctest.h"

#include <algorithm>

#include "cosetmg/catalog.hpp"
#include "cosetmg/errors.hpp"
#include "cosetmg/json_io.hpp"

using namespace cosetmg;

TEST_SUITE("json_io") {
  TEST_CASE("group round trip") {
    PermGroup s3 = catalog_group("S3");
    std::string name;
    PermGroup back = group_from_json(group_to_json(s3, "S3"), &name);
    CHECK(name == "S3");
    CHECK(back.elements() == s3.elements());
  }

  TEST_CASE("groupoid round trip preserves all tables") {
    PermGroup z4 = catalog_group("Z4");
    CosetGroupoid W = build_w(z4, all_subgroups_family(z4));
    MeetGroupoid back = groupoid_from_json(groupoid_to_json(W.groupoid));
    CHECK(back.size() == W.groupoid.size());
    CHECK(back.inverse_table() == W.groupoid.inverse_table());
    CHECK(back.meet_table() == W.groupoid.meet_table());
    CHECK(back.product_table() == W.groupoid.product_table());
    CHECK(back.labels() == W.groupoid.labels());
  }

  TEST_CASE("groupoid json with provenance parses as plain groupoid") {
    PermGroup z2 = catalog_group("Z2");
    CosetGroupoid W = build_w(z2, all_subgroups_family(z2));
    MeetGroupoid back = groupoid_from_json(groupoid_to_json(W));
    CHECK(back.size() == 4);
  }

  TEST_CASE("malformed groupoid json is rejected") {
    CHECK_THROWS(groupoid_from_json("{\"size\": 2}"));
    CHECK_THROWS_AS(
        groupoid_from_json(
            "{\"size\":1,\"inverse\":[0],\"meet\":[[0]],\"product\":[[0,0,7]]}"),
        Error);
  }

  TEST_CASE("tower round trip") {
    InverseSystem sys = tower_2adic(2);
    InverseSystem back = tower_from_json(tower_to_json(sys));
    REQUIRE(back.levels.size() == sys.levels.size());
    for (std::size_t d = 0; d < sys.levels.size(); ++d)
      CHECK(back.levels[d].elements() == sys.levels[d].elements());
    CHECK(back.maps == sys.maps);
  }

  TEST_CASE("dot export of the Z4 idempotent chain") {
    PermGroup z4 = catalog_group("Z4");
    CosetGroupoid W = build_w(z4, all_subgroups_family(z4));
    std::string dot = idempotent_order_dot(W.groupoid);
    // Three subgroups in a chain: three nodes, two covering edges.
    CHECK(std::count(dot.begin(), dot.end(), '[') == 3);
    CHECK(dot.find("->") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
      ++edges;
    CHECK(edges == 2);
  }

  TEST_CASE("reports serialize deterministically") {
    Report rep;
    rep.command = "demo";
    rep.meta["group"] = "Z4";
    auto& c = rep.add("sample-check");
    c.cardinalities["alpha"] = 1;
    c.cardinalities["beta"] = 2;
    std::string a = report_to_json(rep);
    std::string b = report_to_json(rep);
    CHECK(a == b);
    CHECK(a.find("sample-check") != std::string::npos);
  }

  TEST_CASE("filter serialization") {
    PermGroup z2 = catalog_group("Z2");
    CosetGroupoid W = build_w(z2, all_subgroups_family(z2));
    auto filters = enumerate_full_filters(W.groupoid);
    REQUIRE(filters.size() == 2);
    std::string text = filter_to_json(filters[0]);
    CHECK(text.find("choices") != std::string::npos);
  }
}
