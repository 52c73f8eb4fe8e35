#include <doctest.h>

#include <random>

#include "nutforge/canonical.hpp"
#include "nutforge/constructions.hpp"
#include "nutforge/planarity.hpp"
#include "nutforge/seeds.hpp"
#include "test_util.hpp"

using namespace nutforge;
using namespace nutforge::testutil;

TEST_CASE("bridge insertion") {
  const auto& seed = seed_by_id("S-2-7");
  Graph out = bridge_insert(seed.graph, {2, 3});
  auto sig = degree_signature(out);
  CHECK(sig.v3 == 2);
  CHECK(sig.v2 == 9);
  CHECK(out.order() == seed.graph.order() + 2);
  CHECK(out.size() == seed.graph.size() + 2);
  CHECK(verify_nut(out).is_chemical_nut);

  // new vertices spliced as u-x-y-v
  int n = seed.graph.order();
  CHECK(out.has_edge(2, n));
  CHECK(out.has_edge(n, n + 1));
  CHECK(out.has_edge(n + 1, 3));
  CHECK(!out.has_edge(2, 3));

  CHECK_THROWS_AS(bridge_insert(cycle(6), {0, 1}), Error);
  CHECK_THROWS_AS(bridge_insert(seed.graph, {0, 5}), Error);  // not even an edge
}

TEST_CASE("bridge kernel propagation") {
  for (const char* id : {"S-2-7", "S-6-7", "S-8-3", "S-12-3", "S-20-2"}) {
    const auto& seed = seed_by_id(id);
    for (Edge b : bridges(seed.graph)) {
      KernelVector prop = bridge_kernel(seed.graph, b, seed.kernel);
      Graph out = bridge_insert(seed.graph, b);
      CHECK(check_kernel_vector(out, prop));
      auto cert = verify_nut(out);
      REQUIRE(cert.kernel.has_value());
      CHECK(cert.kernel->equal_up_to_sign(prop));
    }
  }
}

TEST_CASE("bridge reduction is an involution on the kernel") {
  const auto& seed = seed_by_id("S-6-8");
  Edge b = bridges(seed.graph).front();
  Graph big = bridge_insert(seed.graph, b);
  KernelVector prop = bridge_kernel(seed.graph, b, seed.kernel);
  // Delete x,y, rejoin uv, re-negate u's side: recovers the original vector.
  const int n = seed.graph.order();
  std::vector<BigInt> back(prop.entries.begin(), prop.entries.begin() + n);
  // u's side of the bridge in the original graph
  std::vector<bool> side(n, false);
  {
    std::vector<int> stack{b.first};
    side[b.first] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int c : seed.graph.neighbors(a)) {
        if (a == b.first && c == b.second) continue;
        if (!side[c]) {
          side[c] = true;
          stack.push_back(c);
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (side[v]) back[v] = -back[v];
  CHECK(normalize_kernel_vector(std::move(back)).equal_up_to_sign(seed.kernel));
}

TEST_CASE("subdivision by four") {
  const auto& seed = seed_by_id("S-2-7");
  Graph out = subdivide4(seed.graph, {0, 1});
  auto sig = degree_signature(out);
  CHECK(sig.v3 == 2);
  CHECK(sig.v2 == 11);
  CHECK(verify_nut(out).is_chemical_nut);

  CHECK(canonical_form(subdivide4(cycle(4), {0, 1})) == canonical_form(cycle(8)));
  CHECK(nullity(subdivide4(cycle(4), {0, 1})) == 2);

  CHECK_THROWS_AS(subdivide4(cycle(4), {0, 2}), Error);
}

TEST_CASE("subdivision kernel follows the a,b,-a,-b pattern") {
  const auto& seed = seed_by_id("S-4-10");
  Edge e{0, 6};
  KernelVector prop = subdivide4_kernel(seed.graph, e, seed.kernel);
  Graph out = subdivide4(seed.graph, e);
  CHECK(check_kernel_vector(out, prop));
  auto cert = verify_nut(out);
  REQUIRE(cert.kernel.has_value());
  CHECK(cert.kernel->equal_up_to_sign(prop));
  // w,x,y,z carry b,-a,-b,a relative to the (possibly sign-flipped) original
  const int n = seed.graph.order();
  const BigInt& a = prop.entries[e.first];
  const BigInt& b = prop.entries[e.second];
  CHECK(prop.entries[n] == b);
  CHECK(prop.entries[n + 1] == -a);
  CHECK(prop.entries[n + 2] == -b);
  CHECK(prop.entries[n + 3] == a);
}

TEST_CASE("fowler expansion at a cubic vertex") {
  const auto& seed = seed_by_id("Pi-12-0");
  Graph out = fowler_expand(seed.graph, 0);
  auto sig = degree_signature(out);
  CHECK(sig.v3 == 18);
  CHECK(sig.v2 == 0);
  CHECK(out.order() == 18);
  CHECK(verify_nut(out).is_chemical_nut);

  KernelVector prop = fowler_kernel(seed.graph, 0, seed.kernel);
  CHECK(check_kernel_vector(out, prop));
  CHECK(verify_nut(out).kernel->equal_up_to_sign(prop));
}

TEST_CASE("fowler expansion at a degree-2 vertex grows the path by four") {
  const auto& seed = seed_by_id("S-2-7");
  int v = -1;
  for (int i = 0; i < seed.graph.order(); ++i)
    if (seed.graph.degree(i) == 2) {
      v = i;
      break;
    }
  REQUIRE(v >= 0);
  Graph out = fowler_expand(seed.graph, v);
  auto sig = degree_signature(out);
  CHECK(sig.v3 == 2);
  CHECK(sig.v2 == 11);
  CHECK(verify_nut(out).is_chemical_nut);
  KernelVector prop = fowler_kernel(seed.graph, v, seed.kernel);
  CHECK(check_kernel_vector(out, prop));

  Graph p = path(3);
  CHECK_THROWS_AS(fowler_expand(p, 0), Error);  // degree 1
}

TEST_CASE("fowler kernel carries (1-d)x at the hub") {
  const auto& seed = seed_by_id("S-10-3");
  KernelVector prop = fowler_kernel(seed.graph, 3, seed.kernel);
  // the hub keeps position 3; up to a global sign flip s
  const BigInt& x = seed.kernel.entries[3];
  bool plain = prop.entries[3] == BigInt(1 - 3) * x;
  bool flipped = prop.entries[3] == -BigInt(1 - 3) * x;
  CHECK((plain || flipped));
}

TEST_CASE("signature arithmetic of the three constructions") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int it = 0; it < 200 && checked < 60; ++it) {
    Graph g = random_chemical(rng, 5 + static_cast<int>(rng() % 8));
    DegreeSignature before{};
    try {
      before = degree_signature(g);
    } catch (const Error&) {
      continue;
    }
    auto bs = bridges(g);
    if (!bs.empty()) {
      auto after = degree_signature(bridge_insert(g, bs[0]));
      CHECK(after.v3 == before.v3);
      CHECK(after.v2 == before.v2 + 2);
      ++checked;
    }
    auto edges = g.edges();
    if (!edges.empty()) {
      auto after = degree_signature(subdivide4(g, edges[0]));
      CHECK(after.v3 == before.v3);
      CHECK(after.v2 == before.v2 + 4);
    }
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3) {
        auto after = degree_signature(fowler_expand(g, v));
        CHECK(after.v3 == before.v3 + 6);
        CHECK(after.v2 == before.v2);
        break;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("fowler preserves bridges") {
  for (const char* id : {"S-2-7", "S-6-7", "S-8-3", "S-14-4"}) {
    const auto& seed = seed_by_id(id);
    REQUIRE(!bridges(seed.graph).empty());
    for (int v = 0; v < seed.graph.order(); ++v) {
      if (seed.graph.degree(v) != 3) continue;
      CHECK(!bridges(fowler_expand(seed.graph, v)).empty());
    }
  }
}

TEST_CASE("apply_trace") {
  const auto& seed12 = seed_by_id("Pi-12-0");
  ConstructionTrace t{seed12.id, {{StepKind::Fowler, 0, -1}, {StepKind::Fowler, 0, -1}}};
  auto [g, k] = apply_trace(seed12, t);
  auto sig = degree_signature(g);
  CHECK(sig.v3 == 24);
  CHECK(sig.v2 == 0);
  CHECK(check_kernel_vector(g, k));
  CHECK(verify_nut(g).is_chemical_nut);

  const auto& seed27 = seed_by_id("S-2-7");
  ConstructionTrace t2{seed27.id, {{StepKind::Bridge, 2, 3}, {StepKind::Bridge, 2, 3}}};
  // after the first step (2,3) is replaced by 2-9-10-3; (2,3) is no longer an edge
  CHECK_THROWS_AS(apply_trace(seed27, t2), Error);
  ConstructionTrace t3{seed27.id, {{StepKind::Bridge, 2, 3}, {StepKind::Bridge, 2, 9}}};
  auto [g3, k3] = apply_trace(seed27, t3);
  CHECK(degree_signature(g3).v2 == 11);
  CHECK(verify_nut(g3).is_chemical_nut);

  ConstructionTrace empty{seed27.id, {}};
  auto [g4, k4] = apply_trace(seed27, empty);
  CHECK(g4 == seed27.graph);
  CHECK(k4.equal_up_to_sign(seed27.kernel));
}

TEST_CASE("trace serialisation round trip") {
  ConstructionTrace t{"S-2-7",
                      {{StepKind::Fowler, 4, -1}, {StepKind::Bridge, 2, 3}, {StepKind::Subdivide4, 0, 1}}};
  auto text = write_trace(t);
  ConstructionTrace back = parse_trace(text);
  CHECK(back.seed_id == t.seed_id);
  REQUIRE(back.steps.size() == 3);
  CHECK(back.steps[0] == t.steps[0]);
  CHECK(back.steps[1] == t.steps[1]);
  CHECK(back.steps[2] == t.steps[2]);

  CHECK_THROWS_AS(parse_trace("fowler 1\n"), Error);          // no seed
  CHECK_THROWS_AS(parse_trace("seed: X\nwobble 1\n"), Error);  // unknown step
}
