#include "nutforge/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "nutforge/seeds.hpp"

namespace nutforge {

namespace {

void require_edge(const Graph& g, Edge uv) {
  if (!g.has_edge(uv.first, uv.second))
    fail(Errc::NoSuchEdge, "(" + std::to_string(uv.first) + "," + std::to_string(uv.second) + ") is not an edge");
}

bool edge_is_bridge(const Graph& g, Edge uv) {
  auto bs = bridges(g);
  Edge norm{std::min(uv.first, uv.second), std::max(uv.first, uv.second)};
  return std::binary_search(bs.begin(), bs.end(), norm);
}

void require_kernel(const Graph& g, const KernelVector& x) {
  if (!check_kernel_vector(g, x)) fail(Errc::NotAKernelVector, "vector is not a kernel vector of the graph");
}

// Vertices on u's side of the bridge uv (u included, v's side excluded).
std::vector<bool> bridge_side_of(const Graph& g, Edge uv) {
  std::vector<bool> side(g.order(), false);
  std::vector<int> stack{uv.first};
  side[uv.first] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : g.neighbors(a)) {
      if (a == uv.first && b == uv.second) continue;
      if (!side[b]) {
        side[b] = true;
        stack.push_back(b);
      }
    }
  }
  return side;
}

std::vector<Edge> edges_without(const Graph& g, Edge uv) {
  Edge norm{std::min(uv.first, uv.second), std::max(uv.first, uv.second)};
  std::vector<Edge> out;
  out.reserve(g.size() - 1);
  for (const auto& e : g.edges())
    if (e != norm) out.push_back(e);
  return out;
}

}  // namespace

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Bridge: return "bridge";
    case StepKind::Subdivide4: return "subdivide";
    case StepKind::Fowler: return "fowler";
  }
  return "?";
}

Graph bridge_insert(const Graph& g, Edge uv) {
  require_edge(g, uv);
  if (!edge_is_bridge(g, uv))
    fail(Errc::NotABridge, "(" + std::to_string(uv.first) + "," + std::to_string(uv.second) + ") lies on a cycle");
  const int n = g.order();
  auto edges = edges_without(g, uv);
  edges.emplace_back(uv.first, n);
  edges.emplace_back(n, n + 1);
  edges.emplace_back(n + 1, uv.second);
  return Graph(n + 2, edges);
}

KernelVector bridge_kernel(const Graph& g, Edge uv, const KernelVector& x) {
  require_edge(g, uv);
  if (!edge_is_bridge(g, uv)) fail(Errc::NotABridge, "kernel propagation requires a bridge");
  require_kernel(g, x);
  const int n = g.order();
  auto side_u = bridge_side_of(g, uv);
  std::vector<BigInt> w(n + 2);
  for (int t = 0; t < n; ++t) w[t] = side_u[t] ? -x.entries[t] : x.entries[t];
  w[n] = -x.entries[uv.second];   // new vertex adjacent to u
  w[n + 1] = x.entries[uv.first];  // new vertex adjacent to v
  return normalize_kernel_vector(std::move(w));
}

Graph subdivide4(const Graph& g, Edge uv) {
  require_edge(g, uv);
  const int n = g.order();
  auto edges = edges_without(g, uv);
  edges.emplace_back(uv.first, n);
  edges.emplace_back(n, n + 1);
  edges.emplace_back(n + 1, n + 2);
  edges.emplace_back(n + 2, n + 3);
  edges.emplace_back(n + 3, uv.second);
  return Graph(n + 4, edges);
}

KernelVector subdivide4_kernel(const Graph& g, Edge uv, const KernelVector& x) {
  require_edge(g, uv);
  require_kernel(g, x);
  const int n = g.order();
  const BigInt& a = x.entries[uv.first];
  const BigInt& b = x.entries[uv.second];
  std::vector<BigInt> w(x.entries);
  w.resize(n + 4);
  w[n] = b;
  w[n + 1] = -a;
  w[n + 2] = -b;
  w[n + 3] = a;
  return normalize_kernel_vector(std::move(w));
}

Graph fowler_expand(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) fail(Errc::StepSiteInvalid, "vertex " + std::to_string(v) + " out of range");
  const int d = g.degree(v);
  if (d < 2) fail(Errc::DegreeTooLow, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  const int n = g.order();
  const auto nb = g.neighbors(v);  // sorted
  std::vector<Edge> edges;
  edges.reserve(g.size() + 2 * d + d * (d - 1) / 2);
  for (const auto& e : g.edges())
    if (e.first != v && e.second != v) edges.push_back(e);
  for (int i = 0; i < d; ++i) {
    edges.emplace_back(v, n + i);          // v - q_i
    edges.emplace_back(n + d + i, nb[i]);  // p_i - u_i
    for (int j = 0; j < d; ++j)
      if (i != j) edges.emplace_back(n + d + i, n + j);  // p_i - q_j
  }
  return Graph(n + 2 * d, edges);
}

KernelVector fowler_kernel(const Graph& g, int v, const KernelVector& x) {
  if (v < 0 || v >= g.order()) fail(Errc::StepSiteInvalid, "vertex " + std::to_string(v) + " out of range");
  const int d = g.degree(v);
  if (d < 2) fail(Errc::DegreeTooLow, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  require_kernel(g, x);
  const int n = g.order();
  const auto nb = g.neighbors(v);
  std::vector<BigInt> w(x.entries);
  w.resize(n + 2 * d);
  w[v] = BigInt(1 - d) * x.entries[v];
  for (int i = 0; i < d; ++i) {
    w[n + i] = x.entries[nb[i]];  // q_i
    w[n + d + i] = x.entries[v];  // p_i
  }
  return normalize_kernel_vector(std::move(w));
}

Graph apply_step(const Graph& g, const ConstructionStep& step) {
  switch (step.kind) {
    case StepKind::Bridge: return bridge_insert(g, {step.site_u, step.site_v});
    case StepKind::Subdivide4: return subdivide4(g, {step.site_u, step.site_v});
    case StepKind::Fowler: return fowler_expand(g, step.site_u);
  }
  fail(Errc::StepSiteInvalid, "unknown step kind");
}

KernelVector apply_step_kernel(const Graph& g, const ConstructionStep& step, const KernelVector& x) {
  switch (step.kind) {
    case StepKind::Bridge: return bridge_kernel(g, {step.site_u, step.site_v}, x);
    case StepKind::Subdivide4: return subdivide4_kernel(g, {step.site_u, step.site_v}, x);
    case StepKind::Fowler: return fowler_kernel(g, step.site_u, x);
  }
  fail(Errc::StepSiteInvalid, "unknown step kind");
}

std::pair<Graph, KernelVector> apply_trace(const SeedRecord& seed, const ConstructionTrace& trace) {
  Graph g = seed.graph;
  KernelVector x = seed.kernel;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    try {
      KernelVector nx = apply_step_kernel(g, step, x);
      g = apply_step(g, step);
      x = std::move(nx);
    } catch (const Error& e) {
      fail(Errc::StepSiteInvalid, "step " + std::to_string(i) + " (" + step_kind_name(step.kind) + "): " + e.what());
    }
  }
  return {std::move(g), std::move(x)};
}

std::string write_trace(const ConstructionTrace& trace) {
  std::ostringstream out;
  out << "seed: " << trace.seed_id << '\n';
  for (const auto& s : trace.steps) {
    out << step_kind_name(s.kind) << ' ' << s.site_u;
    if (s.kind != StepKind::Fowler) out << ' ' << s.site_v;
    out << '\n';
  }
  return out.str();
}

ConstructionTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ConstructionTrace trace;
  int lineno = 0;
  bool have_seed = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "seed:") {
      if (!(ls >> trace.seed_id)) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": missing seed id");
      have_seed = true;
    } else if (head == "bridge" || head == "subdivide") {
      ConstructionStep s{head == "bridge" ? StepKind::Bridge : StepKind::Subdivide4};
      if (!(ls >> s.site_u >> s.site_v))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected two vertex indices");
      trace.steps.push_back(s);
    } else if (head == "fowler") {
      ConstructionStep s{StepKind::Fowler};
      if (!(ls >> s.site_u)) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected a vertex index");
      trace.steps.push_back(s);
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown step '" + head + "'");
    }
  }
  if (!have_seed) fail(Errc::ParseError, "trace has no 'seed:' line");
  return trace;
}

}  // namespace nutforge
