#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nutforge/canonical.hpp"
#include "nutforge/formats.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/seeds.hpp"
#include "test_util.hpp"

using namespace nutforge;
using namespace nutforge::testutil;

TEST_CASE("graph construction validates simplicity") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("degree signature") {
  const auto& seed = seed_by_id("S-2-7");
  auto sig = degree_signature(seed.graph);
  CHECK(sig == DegreeSignature{2, 7, 0, 0});

  CHECK(degree_signature(cycle(5)) == DegreeSignature{0, 5, 0, 0});
  CHECK(degree_signature(path(3)) == DegreeSignature{0, 1, 2, 0});
  CHECK_THROWS_AS(degree_signature(complete(5)), Error);

  // sum of degrees = 2m on a few assorted graphs
  for (const Graph& g : {cycle(6), prism(), petersen(), path(4)}) {
    int total = 0;
    for (int v = 0; v < g.order(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.size());
  }
}

TEST_CASE("chemical and leafless predicates") {
  CHECK(is_chemical(complete(4)));
  CHECK(!is_chemical(complete(5)));
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(!is_chemical(two_triangles));

  CHECK(is_leafless(cycle(6)));
  CHECK(!is_leafless(path(3)));
  CHECK(is_leafless(seed_by_id("S-8-3").graph));
}

TEST_CASE("bridges") {
  const auto& seed = seed_by_id("S-2-7");
  CHECK(bridges(seed.graph) == std::vector<Edge>{{2, 3}, {3, 4}});
  CHECK(bridges(cycle(8)).empty());

  Graph joined(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  CHECK(bridges(joined) == std::vector<Edge>{{2, 3}});

  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(bridges(two_triangles), Error);
}

TEST_CASE("bridges agree with deletion on small graphs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    Graph g = random_chemical(rng, 4 + static_cast<int>(rng() % 6));
    if (g.size() > 10) continue;
    auto br = bridges(g);
    for (auto e : g.edges()) {
      std::vector<Edge> rest;
      for (auto f : g.edges())
        if (f != e) rest.push_back(f);
      Graph without(g.order(), rest);
      bool disconnects = !is_connected(without);
      bool listed = std::find(br.begin(), br.end(), e) != br.end();
      CHECK(listed == disconnects);
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(connectivity(seed_by_id("Pi-12-0").graph) == 3);
  CHECK(connectivity(seed_by_id("S-2-7").graph) == 1);
  CHECK(connectivity(cycle(6)) == 2);
  CHECK(connectivity(complete(4)) == 3);
  CHECK(connectivity(complete(3)) == 2);
  CHECK(connectivity(path(4)) == 1);
  CHECK(connectivity(petersen()) == 3);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(connectivity(two_triangles) == 0);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_chemical(rng, 3 + static_cast<int>(rng() % 8));
    auto key = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(g, perm)) == key);
  }
  CHECK(canonical_form(cycle(6)) != canonical_form(prism()));
}

namespace {

// Brute-force smallest certificate over all |V|! relabellings.
std::string brute_min_cert(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string bits(static_cast<size_t>(g.order()) * g.order(), '0');
    for (auto [u, v] : g.edges()) {
      bits[perm[u] * g.order() + perm[v]] = '1';
      bits[perm[v] * g.order() + perm[u]] = '1';
    }
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("canonical form matches full permutation search on small graphs") {
  std::mt19937_64 rng(13);
  std::map<std::string, CanonicalForm> seen;  // brute cert -> refined cert
  for (int it = 0; it < 120; ++it) {
    int n = 3 + static_cast<int>(rng() % 4);  // up to 6 vertices
    Graph g = random_chemical(rng, n);
    auto brute = brute_min_cert(g);
    auto refined = canonical_form(g);
    auto [pos, inserted] = seen.emplace(brute, refined);
    CHECK(pos->second == refined);  // same brute class -> same refined class
  }
  // distinct brute classes -> distinct refined keys
  std::set<std::string> refined_keys;
  for (auto& [b, r] : seen) refined_keys.insert(r.bytes);
  CHECK(refined_keys.size() == seen.size());
}

TEST_CASE("canonical labelling witnesses the key") {
  Graph g = petersen();
  auto lab = canonical_labelling(g);
  CHECK(lab.order.size() == 10);
  std::vector<int> inverse(10);
  for (int pos = 0; pos < 10; ++pos) inverse[lab.order[pos]] = pos;
  CHECK(canonical_form(relabel(g, inverse)) == lab.form);
}

TEST_CASE("order bound") {
  std::vector<Edge> e;
  for (int i = 0; i < 65; ++i) e.emplace_back(i, (i + 1) % 65);
  CHECK_THROWS_AS(canonical_form(Graph(65, e)), Error);
}

TEST_CASE("edge list round trip") {
  const auto& seed = seed_by_id("S-6-7");
  auto text = write_edge_list(seed.graph);
  Graph back = parse_edge_list(text);
  CHECK(back == seed.graph);

  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), Error);       // count mismatch
  CHECK_THROWS_AS(parse_edge_list("abc\n"), Error);            // bad header
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 zzz\n"), Error);     // bad edge line
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 9\n"), Error);     // trailing junk
}

TEST_CASE("graph6 round trip and known strings") {
  // C5 in graph6: n=5, upper-triangle bits column by column.
  CHECK(write_graph6(cycle(5)) == "Dhc");
  CHECK(parse_graph6("Dhc") == cycle(5));
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    Graph g = random_chemical(rng, 2 + static_cast<int>(rng() % 20));
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
  }
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("D"), Error);
}
