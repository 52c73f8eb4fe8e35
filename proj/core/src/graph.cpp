#include "nutforge/graph.hpp"

#include <algorithm>
#include <functional>

namespace nutforge {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotConnected: return "NotConnected";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NotABridge: return "NotABridge";
    case Errc::NotAKernelVector: return "NotAKernelVector";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::StepSiteInvalid: return "StepSiteInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::OddV3: return "OddV3";
    case Errc::NotRealisable: return "NotRealisable";
    case Errc::NotPlanarRealisable: return "NotPlanarRealisable";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::NoSuchSeed: return "NoSuchSeed";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

Graph::Graph(int order, const std::vector<Edge>& edges) : order_(order) {
  if (order < 0) fail(Errc::InvalidGraph, "negative order");
  adj_.resize(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      fail(Errc::InvalidGraph, "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) fail(Errc::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < order; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      fail(Errc::InvalidGraph, "duplicate edge at vertex " + std::to_string(v));
  }
  size_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u < order_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (order_ == 0) return 0;
  int d = degree(0);
  for (int v = 1; v < order_; ++v) d = std::min(d, degree(v));
  return d;
}

DegreeSignature degree_signature(const Graph& g) {
  DegreeSignature s;
  for (int v = 0; v < g.order(); ++v) {
    switch (g.degree(v)) {
      case 0: ++s.v0; break;
      case 1: ++s.v1; break;
      case 2: ++s.v2; break;
      case 3: ++s.v3; break;
      default:
        fail(Errc::DegreeTooHigh, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  return s;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto comp = component_labels(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_chemical(const Graph& g) { return g.order() > 0 && g.max_degree() <= 3 && is_connected(g); }

bool is_leafless(const Graph& g) { return g.min_degree() >= 2; }

namespace {

// Iterative Tarjan lowpoint DFS shared by bridges() and articulation_vertices().
struct LowlinkDfs {
  const Graph& g;
  std::vector<int> disc, low, parent;
  std::vector<Edge> bridge_edges;
  std::vector<bool> articulation;
  int timer = 0;

  explicit LowlinkDfs(const Graph& g)
      : g(g), disc(g.order(), -1), low(g.order(), 0), parent(g.order(), -1), articulation(g.order(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t next_child = 0;
    };
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      if (f.next_child < g.neighbors(v).size()) {
        int w = g.neighbors(v)[f.next_child++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back({w});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridge_edges.emplace_back(std::min(p, v), std::max(p, v));
          if (p != root && low[v] >= disc[p]) articulation[p] = true;
        }
      }
    }
    if (root_children > 1) articulation[root] = true;
  }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  if (!is_connected(g)) fail(Errc::NotConnected, "bridges requires a connected graph");
  LowlinkDfs dfs(g);
  dfs.run(0);
  std::sort(dfs.bridge_edges.begin(), dfs.bridge_edges.end());
  return dfs.bridge_edges;
}

std::vector<int> articulation_vertices(const Graph& g) {
  std::vector<int> out;
  if (g.order() == 0) return out;
  LowlinkDfs dfs(g);
  for (int v = 0; v < g.order(); ++v)
    if (dfs.disc[v] == -1) dfs.run(v);
  for (int v = 0; v < g.order(); ++v)
    if (dfs.articulation[v]) out.push_back(v);
  return out;
}

namespace {

bool connected_after_removal(const Graph& g, const std::vector<int>& removed) {
  const int n = g.order();
  std::vector<bool> skip(n, false);
  for (int v : removed) skip[v] = true;
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!skip[v]) {
      ++alive;
      if (start == -1) start = v;
    }
  }
  if (alive == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!skip[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == alive;
}

}  // namespace

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return 0;
  if (n == 1) return 0;
  // Complete graphs have no separating set; kappa = n - 1.
  if (g.size() == n * (n - 1) / 2) return std::min(n - 1, 3);
  if (!articulation_vertices(g).empty()) return 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!connected_after_removal(g, {a, b})) return 2;
  return 3;
}

}  // namespace nutforge
