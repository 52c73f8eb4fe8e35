#include <doctest.h>

#include <map>
#include <set>

#include "nutforge/canonical.hpp"
#include "nutforge/seeds.hpp"
#include "test_util.hpp"

using namespace nutforge;

TEST_CASE("seed database shape") {
  const auto& seeds = all_seeds();
  CHECK(seeds.size() == 27);  // 21 S + 3 Pi + 3 N roles

  std::map<SeedRole, int> per_role;
  std::set<std::string> ids;
  for (const auto& rec : seeds) {
    ++per_role[rec.role];
    CHECK(ids.insert(rec.id).second);
  }
  CHECK(per_role[SeedRole::S] == 21);
  CHECK(per_role[SeedRole::Pi] == 3);
  CHECK(per_role[SeedRole::N] == 3);

  // 24 distinct graphs: (12,0) and (26,0) shared S/Pi, (20,0) shared S/N.
  std::set<std::string> keys;
  for (const auto& rec : seeds) keys.insert(canonical_form(rec.graph).bytes);
  CHECK(keys.size() == 24);
  CHECK(canonical_form(seed_by_id("S-12-0").graph) == canonical_form(seed_by_id("Pi-12-0").graph));
  CHECK(canonical_form(seed_by_id("S-20-0").graph) == canonical_form(seed_by_id("N-20-0").graph));
  CHECK(canonical_form(seed_by_id("S-26-0").graph) == canonical_form(seed_by_id("Pi-26-0").graph));
  // the planar and toroidal (22,0) records are different graphs
  CHECK(canonical_form(seed_by_id("S-22-0").graph) != canonical_form(seed_by_id("N-22-0").graph));
}

TEST_CASE("seed lookups") {
  const auto& s27 = seed_by_id("S-2-7");
  CHECK(s27.n == 9);
  CHECK(s27.m == 10);
  std::vector<long long> expect{1, 1, -1, -2, 1, 1, -1, -1, 1};
  REQUIRE(s27.kernel.entries.size() == 9);
  for (size_t i = 0; i < expect.size(); ++i) CHECK(s27.kernel.entries[i] == expect[i]);

  const auto& pi28 = seed_by_id("Pi-28-0");
  CHECK(pi28.m == 42);
  CHECK(pi28.flag == SeedFlag::Pi);

  const auto& n24 = seed_by_id("N-24-0");
  CHECK(n24.m == 36);
  for (const auto& e : n24.kernel.entries) CHECK((e == 1 || e == -2));

  CHECK_THROWS_AS(seed_by_id("S-99-9"), Error);
}

TEST_CASE("stored kernels are primitive") {
  for (const auto& rec : all_seeds()) {
    BigInt g = 0;
    for (const auto& e : rec.kernel.entries) g = boost::multiprecision::gcd(g, e);
    CHECK(g == 1);
  }
}

TEST_CASE("parse_seed") {
  std::string good =
      "# comment\n"
      "3 3\n"
      "0 1\n"
      "1 2\n"
      "0 2\n"
      "kernel: 1 -1 1\n"
      "flag: P\n"
      "roles: S\n";
  auto rec = parse_seed(good);
  CHECK(rec.n == 3);
  CHECK(rec.m == 3);
  CHECK(rec.v2 == 3);
  CHECK(rec.flag == SeedFlag::P);

  // one edge missing
  CHECK_THROWS_AS(parse_seed("3 3\n0 1\n1 2\nkernel: 1 -1 1\nflag: P\nroles: S\n"), Error);
  // kernel of wrong length
  CHECK_THROWS_AS(parse_seed("3 3\n0 1\n1 2\n0 2\nkernel: 1 -1\nflag: P\nroles: S\n"), Error);
  // missing flag
  CHECK_THROWS_AS(parse_seed("3 3\n0 1\n1 2\n0 2\nkernel: 1 -1 1\nroles: S\n"), Error);
  // unknown flag
  CHECK_THROWS_AS(parse_seed("3 3\n0 1\n1 2\n0 2\nkernel: 1 -1 1\nflag: Q\nroles: S\n"), Error);

  // role expansion produces one record per role with distinct ids
  std::string both =
      "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\nkernel: 1 -1 1 -1\nflag: Pi\nroles: S Pi\n";
  auto recs = parse_seed_records(both);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].id == "S-4-0");
  CHECK(recs[1].id == "Pi-4-0");
}

TEST_CASE("verify_all_seeds certifies every record") {
  auto report = verify_all_seeds();
  CHECK(report.checks.size() == 27);
  for (const auto& check : report.checks) {
    INFO(check.id, ": ", check.detail);
    CHECK(check.passed);
  }
  CHECK(report.ok());
}

TEST_CASE("perturbed records fail verification") {
  const auto& rec = seed_by_id("S-2-7");
  // drop one edge: no longer a nut (and the kernel line no longer checks)
  auto edges = rec.graph.edges();
  edges.pop_back();
  Graph broken(rec.graph.order(), edges);
  CHECK(!verify_nut(broken).is_chemical_nut);

  // flip one kernel entry: fails the neighbour sums
  auto bad = rec.kernel;
  bad.entries[0] = -bad.entries[0];
  CHECK(!check_kernel_vector(rec.graph, bad));
}

TEST_CASE("lemma class tallies") {
  // 11 bridged, 7 planar 2-connected, 3 polyhedral, 3 non-planar roles among
  // the distinct graphs (by flag, counting each graph once).
  std::map<std::string, SeedFlag> by_graph;
  for (const auto& rec : all_seeds()) by_graph[canonical_form(rec.graph).bytes] = rec.flag;
  std::map<SeedFlag, int> tally;
  for (auto& [k, f] : by_graph) ++tally[f];
  CHECK(tally[SeedFlag::B] == 11);
  CHECK(tally[SeedFlag::P] == 7);
  CHECK(tally[SeedFlag::Pi] == 3);
  CHECK(tally[SeedFlag::N] == 3);
}
