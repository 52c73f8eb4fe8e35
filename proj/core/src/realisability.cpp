#include "nutforge/realisability.hpp"

#include <algorithm>
#include <array>

#include "nutforge/seeds.hpp"

namespace nutforge {

namespace {

// The eleven small signatures with v3 >= 8 that admit no chemical nut graph.
constexpr std::array<std::pair<int, int>, 11> kExceptions = {{
    {8, 0}, {8, 1}, {8, 2}, {8, 4}, {10, 0}, {10, 1}, {10, 2}, {12, 1}, {14, 0}, {14, 2}, {16, 0},
}};

bool in_exception_list(int v3, int v2) {
  for (auto [a, b] : kExceptions)
    if (a == v3 && b == v2) return true;
  return false;
}

}  // namespace

RealisabilityVerdict is_realisable(ParameterPair p) {
  RealisabilityVerdict v;
  if (p.v3 == 0) {
    v.realisable = false;
    v.reason = "v3=0: no cycle is a nut graph";
  } else if (p.v3 == 2) {
    v.realisable = p.v2 >= 7 && p.v2 % 2 == 1;
    v.reason = "v3=2: realisable iff v2 is odd and >= 7";
  } else if (p.v3 == 4) {
    v.realisable = p.v2 >= 10 && p.v2 % 2 == 0;
    v.reason = "v3=4: realisable iff v2 is even and >= 10";
  } else if (p.v3 == 6) {
    v.realisable = p.v2 >= 7;
    v.reason = "v3=6: realisable iff v2 >= 7";
  } else if (in_exception_list(p.v3, p.v2)) {
    v.realisable = false;
    v.reason = "excluded small case (" + std::to_string(p.v3) + "," + std::to_string(p.v2) + ")";
  } else {
    v.realisable = true;
    v.reason = "v3 >= 8 outside the finite exception list";
  }
  v.planar_realisable = v.realisable && !(p.v3 == 20 && p.v2 == 0);
  if (v.realisable && !v.planar_realisable) v.reason += "; only non-planar graphs exist at (20,0)";
  return v;
}

bool is_polyhedral_realisable(ParameterPair p) {
  if (p.v2 != 0) return false;
  return p.v3 == 12 || p.v3 == 18 || p.v3 >= 24;
}

bool is_toroidal_cubic_realisable(int n) { return n >= 20 && n % 2 == 0; }

std::set<int> betti_spectrum(int n) {
  if (n < 1) fail(Errc::PreconditionUnmet, "order must be positive");
  std::set<int> sizes;
  for (int v3 = 2; v3 <= n; v3 += 2) {
    if (is_realisable(ParameterPair(v3, n - v3)).realisable) sizes.insert(n + v3 / 2);
  }
  return sizes;
}

bool check_reduction_recurrence(ParameterPair p) {
  if (2 * p.v2 < 9 * p.v3 + 2)
    fail(Errc::PreconditionUnmet, "requires v2 >= (9/2) v3 + 1");
  bool here = is_realisable(p).realisable;
  bool below = p.v2 >= 4 && is_realisable(ParameterPair(p.v3, p.v2 - 4)).realisable;
  return here == below;
}

namespace {

int lowest_degree3_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) return v;
  fail(Errc::PreconditionUnmet, "no degree-3 vertex available for expansion");
}

struct Candidate {
  const SeedRecord* seed = nullptr;
  int steps = 0;
};

int dv2_steps(int dv2) { return dv2 % 4 == 2 ? 1 + (dv2 - 2) / 4 : dv2 / 4; }

}  // namespace

Realisation realise(ParameterPair p, bool require_planar) {
  RealisabilityVerdict verdict = is_realisable(p);
  if (!verdict.realisable)
    fail(Errc::NotRealisable, "(" + std::to_string(p.v3) + "," + std::to_string(p.v2) + "): " + verdict.reason);
  if (require_planar && !verdict.planar_realisable)
    fail(Errc::NotPlanarRealisable, "(20,0) admits no planar chemical nut graph");

  // (20,0) is realised by the non-planar appendix seed alone.
  if (p.v3 == 20 && p.v2 == 0) {
    const SeedRecord& seed = seed_by_id("N-20-0");
    return {seed.graph, seed.kernel, ConstructionTrace{seed.id, {}}};
  }

  Candidate best;
  for (const auto& seed : all_seeds()) {
    if (seed.flag == SeedFlag::N) continue;  // planar routes only; (20,0) handled above
    if (seed.v3 % 6 != p.v3 % 6 || seed.v3 > p.v3 || seed.v2 > p.v2) continue;
    const int dv2 = p.v2 - seed.v2;
    if (dv2 % 2 != 0) continue;
    if (seed.flag != SeedFlag::B && dv2 % 4 != 0) continue;  // bridgeless seeds only gain +4
    const int steps = (p.v3 - seed.v3) / 6 + dv2_steps(dv2);
    if (!best.seed || steps < best.steps || (steps == best.steps && seed.id < best.seed->id))
      best = {&seed, steps};
  }
  if (!best.seed)
    fail(Errc::NotRealisable, "no seed route for (" + std::to_string(p.v3) + "," + std::to_string(p.v2) + ")");

  const SeedRecord& seed = *best.seed;
  Graph g = seed.graph;
  KernelVector x = seed.kernel;
  ConstructionTrace trace{seed.id, {}};

  auto apply = [&](ConstructionStep step) {
    KernelVector nx = apply_step_kernel(g, step, x);
    g = apply_step(g, step);
    x = std::move(nx);
    trace.steps.push_back(step);
  };

  // Fowler first: it preserves bridges and planarity, so the v2 steps that
  // follow always have their sites available.
  for (int k = 0; k < (p.v3 - seed.v3) / 6; ++k) apply({StepKind::Fowler, lowest_degree3_vertex(g), -1});
  int dv2 = p.v2 - seed.v2;
  if (dv2 % 4 == 2) {
    Edge b = bridges(g).front();
    apply({StepKind::Bridge, b.first, b.second});
    dv2 -= 2;
  }
  for (int k = 0; k < dv2 / 4; ++k) {
    Edge e = g.edges().front();
    apply({StepKind::Subdivide4, e.first, e.second});
  }

  DegreeSignature sig = degree_signature(g);
  if (sig.v3 != p.v3 || sig.v2 != p.v2)
    fail(Errc::PreconditionUnmet, "internal: realisation signature mismatch");
  return {std::move(g), std::move(x), std::move(trace)};
}

}  // namespace nutforge
