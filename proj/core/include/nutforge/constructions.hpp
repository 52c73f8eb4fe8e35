#pragma once

#include <string>
#include <vector>

#include "nutforge/graph.hpp"
#include "nutforge/kernel.hpp"

namespace nutforge {

enum class StepKind { Bridge, Subdivide4, Fowler };

const char* step_kind_name(StepKind k);

struct ConstructionStep {
  StepKind kind;
  // Bridge/Subdivide4 carry an edge in (site_u, site_v); Fowler carries a
  // vertex in site_u with site_v = -1.
  int site_u = -1;
  int site_v = -1;

  bool operator==(const ConstructionStep&) const = default;
};

struct ConstructionTrace {
  std::string seed_id;
  std::vector<ConstructionStep> steps;
};

// Splices two vertices x, y into a bridge uv: u-x-y-v. New vertices are
// appended as indices n, n+1 with x adjacent to u. Signature change (0, +2).
Graph bridge_insert(const Graph& g, Edge uv);

// Kernel vector of bridge_insert(g, uv) given the kernel vector of g: the
// component of u is negated, x gets -x[v], y gets x[u], the component of v
// is retained. Result is renormalised to primitive sign form.
KernelVector bridge_kernel(const Graph& g, Edge uv, const KernelVector& x);

// Replaces an edge uv by the path u-w-x-y-z-v. New vertices are appended as
// n..n+3 with w adjacent to u. Signature change (0, +4).
Graph subdivide4(const Graph& g, Edge uv);

// Kernel propagation for subdivide4: w,x,y,z receive b, -a, -b, a where
// a = x[u], b = x[v]; all old entries are retained.
KernelVector subdivide4_kernel(const Graph& g, Edge uv, const KernelVector& x);

// Expansion about a vertex v of degree d >= 2: removes the star at v, adds
// q_1..q_d (indices n..n+d-1) joined to v, p_1..p_d (indices n+d..n+2d-1)
// joined to every q_j with j != i and to the i-th old neighbour (neighbours
// taken in increasing order). Signature change (+6, 0) at degree 3 and
// (0, +4) at degree 2.
Graph fowler_expand(const Graph& g, int v);

// Kernel propagation for fowler_expand: v maps to (1-d)*x[v], q_i to x[u_i],
// p_i to x[v]; everything else is retained.
KernelVector fowler_kernel(const Graph& g, int v, const KernelVector& x);

Graph apply_step(const Graph& g, const ConstructionStep& step);
KernelVector apply_step_kernel(const Graph& g, const ConstructionStep& step, const KernelVector& x);

struct SeedRecord;  // seeds.hpp

// Replays a trace from a seed, propagating the kernel vector step by step.
// Site errors are rethrown as StepSiteInvalid with the step index.
std::pair<Graph, KernelVector> apply_trace(const SeedRecord& seed, const ConstructionTrace& trace);

std::string write_trace(const ConstructionTrace& trace);
ConstructionTrace parse_trace(const std::string& text);

}  // namespace nutforge
