#include <doctest.h>

#include <set>

#include "nutforge/canonical.hpp"
#include "nutforge/enumeration.hpp"
#include "nutforge/kernel.hpp"
#include "nutforge/reference_census.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nutforge;
using namespace nutforge::testutil;

TEST_CASE("skeleton examples") {
  auto sk2 = list_skeletons(2);
  CHECK(sk2.size() == 2);  // theta and dumbbell
  std::set<std::vector<Edge>> sets;
  for (const auto& sk : sk2) sets.insert(sk.edges);
  CHECK(sets.count({{0, 0}, {0, 1}, {1, 1}}) == 1);          // dumbbell
  CHECK(sets.count({{0, 1}, {0, 1}, {0, 1}}) == 1);          // theta

  CHECK(list_skeletons(0).empty());

  auto sk4 = list_skeletons(4);
  bool has_k4 = false;
  for (const auto& sk : sk4)
    if (sk.min_subdivisions() == 0) has_k4 = true;
  CHECK(has_k4);
  CHECK(sk4.size() > 1);
  CHECK_THROWS_AS(list_skeletons(3), Error);
  CHECK_THROWS_AS(list_skeletons(16), Error);  // above the default order bound
}

TEST_CASE("skeleton counts match a labelled brute force for tiny orders") {
  CHECK(static_cast<int>(list_skeletons(2).size()) == naive_multigraph_skeleton_count(2));
  CHECK(static_cast<int>(list_skeletons(4).size()) == naive_multigraph_skeleton_count(4));
}

TEST_CASE("simple cubic skeleton counts match the known sequence") {
  auto simple_count = [](int v3) {
    int c = 0;
    for (const auto& sk : list_skeletons(v3, 0)) c += sk.min_subdivisions() == 0 ? 1 : 0;
    return c;
  };
  CHECK(simple_count(4) == 1);
  CHECK(simple_count(6) == 2);
  CHECK(simple_count(8) == 5);
  CHECK(simple_count(10) == 19);
  CHECK(simple_count(12) == 85);
}

TEST_CASE("min_subdivisions") {
  SkeletonMultigraph dumbbell{2, {{0, 0}, {0, 1}, {1, 1}}};
  CHECK(dumbbell.min_subdivisions() == 4);
  SkeletonMultigraph theta{2, {{0, 1}, {0, 1}, {0, 1}}};
  CHECK(theta.min_subdivisions() == 2);
  SkeletonMultigraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(k4.min_subdivisions() == 0);
}

TEST_CASE("enumerate_leafless examples") {
  auto only_c5 = list_leafless(ParameterPair(0, 5));
  REQUIRE(only_c5.size() == 1);
  CHECK(canonical_form(only_c5[0]) == canonical_form(cycle(5)));

  auto only_k4 = list_leafless(ParameterPair(4, 0));
  REQUIRE(only_k4.size() == 1);
  CHECK(canonical_form(only_k4[0]) == canonical_form(complete(4)));

  auto cubic6 = list_leafless(ParameterPair(6, 0));
  REQUIRE(cubic6.size() == 2);
  std::set<std::string> keys{canonical_form(cubic6[0]).bytes, canonical_form(cubic6[1]).bytes};
  CHECK(keys.count(canonical_form(complete_bipartite(3, 3)).bytes) == 1);
  CHECK(keys.count(canonical_form(prism()).bytes) == 1);

  CHECK(list_leafless(ParameterPair(0, 2)).empty());
  CHECK(list_leafless(ParameterPair(2, 0)).empty());
  CHECK(list_leafless(ParameterPair(2, 1)).empty());
  CHECK_THROWS_AS(list_leafless(ParameterPair(14, 4)), Error);  // beyond the order bound
}

TEST_CASE("enumeration agrees with the naive oracle up to order 8") {
  for (int n = 3; n <= 8; ++n) {
    for (int v3 = 0; v3 <= n; v3 += 2) {
      int v2 = n - v3;
      auto expect = naive_leafless_classes(v3, v2);
      std::set<std::string> got;
      enumerate_leafless(ParameterPair(v3, v2), [&](const Graph& g) {
        auto sig = degree_signature(g);
        CHECK(sig.v3 == v3);
        CHECK(sig.v2 == v2);
        CHECK(is_connected(g));
        CHECK(got.insert(canonical_form(g).bytes).second);  // no duplicates
      });
      INFO("(", v3, ",", v2, ")");
      CHECK(got == expect);
    }
  }
}

TEST_CASE("count_nuts reproduces published cells") {
  CHECK(count_nuts(ParameterPair(2, 7)) == 1);
  CHECK(count_nuts(ParameterPair(2, 9)) == 1);
  CHECK(count_nuts(ParameterPair(8, 3)) == 7);
  CHECK(count_nuts(ParameterPair(4, 10)) == 2);
  CHECK(count_nuts(ParameterPair(12, 0)) == 9);
  CHECK(count_nuts(ParameterPair(8, 4)) == 0);
  CHECK(count_nuts(ParameterPair(10, 2)) == 0);
}

TEST_CASE("census structure and zero cells") {
  CensusTable t = census(11);
  CHECK(t.cells.at({8, 3}).nut_count == 7);
  CHECK(t.cells.at({10, 1}).nut_count == 0);
  CHECK(t.cells.at({10, 1}).leafless_count > 0);
  CHECK(t.cells.at({6, 5}).nut_count == 0);
  CHECK(t.cells.at({2, 7}).nut_count == 1);
  // cycles are never nuts
  for (int v2 = 0; v2 <= 11; ++v2) CHECK(t.cells.at({0, v2}).nut_count == 0);
  // no-graph cells really have no graphs
  for (auto key : {std::pair{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}}) CHECK(t.cells.at(key).leafless_count == 0);
  CHECK(compare_with_reference(t).empty());
}

TEST_CASE("census is deterministic and job-count independent") {
  CensusTable a = census(10);
  CensusTable b = census(10);
  CensusOptions four;
  four.jobs = 4;
  CensusTable c = census(10, four);
  CHECK(a.cells == b.cells);
  CHECK(a.cells == c.cells);
  CHECK(census_to_csv(a) == census_to_csv(c));
}

TEST_CASE("compare_with_reference flags discrepancies") {
  CensusTable t = census(9);
  CHECK(compare_with_reference(t).empty());
  t.cells[{2, 7}].nut_count = 2;  // corrupt one cell
  auto diffs = compare_with_reference(t);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].v3 == 2);
  CHECK(diffs[0].v2 == 7);
  CHECK(diffs[0].expected == 1);
  CHECK(diffs[0].actual == 2);
}

TEST_CASE("order bound is env-overridable") {
  CHECK(default_order_bound() == 14);  // assumes the test env does not set NUTFORGE_MAX_ORDER
  EnumerationOptions wide;
  wide.order_bound = 15;
  CHECK(count_nuts(ParameterPair(2, 13), wide) == 3);
  CHECK_THROWS_AS(census(15), Error);
}
