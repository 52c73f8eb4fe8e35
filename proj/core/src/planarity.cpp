// Planarity testing via Demoucron-Malgrange-Pertuiset path addition, run per
// biconnected block and merged at cut vertices. Quadratic-ish, which is fine
// at desk scale; the payoff is that both outcomes carry a checkable witness:
// a rotation system when planar, and an edge-minimal non-planar subgraph
// (necessarily a Kuratowski subdivision) otherwise.

#include "nutforge/planarity.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace nutforge {

namespace {

// Biconnected components as edge lists (Tarjan edge-stack DFS).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<Edge> estack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    size_t next = 0;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      if (f.next < g.neighbors(v).size()) {
        int w = g.neighbors(v)[f.next++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          estack.emplace_back(v, w);
          stack.push_back({w});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          // Pop the block rooted at edge (p, v).
          std::vector<Edge> block;
          for (;;) {
            Edge e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if ((e.first == p && e.second == v)) break;
          }
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

struct EdgeSet {
  std::set<Edge> edges;

  static Edge norm(int a, int b) { return {std::min(a, b), std::max(a, b)}; }
  void insert(int a, int b) { edges.insert(norm(a, b)); }
  bool contains(int a, int b) const { return edges.count(norm(a, b)) > 0; }
  size_t size() const { return edges.size(); }
};

// DMP embedding of one 2-connected block with >= 3 vertices.
// Returns faces as directed vertex cycles, or nullopt when non-planar.
class DmpBlock {
 public:
  DmpBlock(int n, const std::vector<Edge>& block_edges) : n_(n), adj_(n) {
    for (auto [a, b] : block_edges) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
      in_block_[a] = true;
      in_block_[b] = true;
      total_edges_++;
    }
  }

  std::optional<std::vector<std::vector<int>>> embed() {
    embed_initial_cycle();
    while (embedded_edges_.size() < total_edges_) {
      auto fragments = compute_fragments();
      // Every unembedded edge lies in a fragment, so fragments is non-empty here.
      int chosen = -1;
      for (size_t i = 0; i < fragments.size(); ++i) {
        if (fragments[i].admissible.empty()) return std::nullopt;
        if (fragments[i].admissible.size() == 1) {
          chosen = static_cast<int>(i);
          break;
        }
      }
      if (chosen == -1) chosen = 0;
      embed_fragment_path(fragments[chosen]);
    }
    return faces_;
  }

 private:
  struct Fragment {
    std::vector<int> attachments;        // embedded vertices touching the fragment
    std::vector<int> component;          // unembedded interior vertices (may be empty)
    std::optional<Edge> chord;           // set when the fragment is one embedded-embedded edge
    std::vector<size_t> admissible;      // face indices containing all attachments
  };

  int n_;
  std::vector<std::vector<int>> adj_;
  std::map<int, bool> in_block_;
  size_t total_edges_ = 0;

  std::vector<std::vector<int>> faces_;
  std::vector<bool> embedded_vertex_ = std::vector<bool>(n_, false);
  EdgeSet embedded_edges_;

  void embed_initial_cycle() {
    // DFS until a back edge closes a cycle.
    int start = -1;
    for (auto& [v, yes] : in_block_)
      if (yes) {
        start = v;
        break;
      }
    std::vector<int> path{start};
    std::vector<int> pos(n_, -1);
    pos[start] = 0;
    std::vector<bool> visited(n_, false);
    visited[start] = true;
    std::vector<int> cycle;
    // 2-connected block with >= 3 vertices: walking to the first unvisited
    // neighbour must eventually close a cycle.
    for (;;) {
      int v = path.back();
      int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
      int next = -1;
      for (int w : adj_[v]) {
        if (w == prev) continue;
        if (pos[w] != -1) {
          cycle.assign(path.begin() + pos[w], path.end());
          break;
        }
        if (!visited[w]) {
          next = w;
          break;
        }
      }
      if (!cycle.empty()) break;
      visited[next] = true;
      pos[next] = static_cast<int>(path.size());
      path.push_back(next);
    }
    faces_.push_back(cycle);
    faces_.emplace_back(cycle.rbegin(), cycle.rend());
    for (size_t i = 0; i < cycle.size(); ++i) {
      embedded_vertex_[cycle[i]] = true;
      embedded_edges_.insert(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
  }

  bool face_contains_all(const std::vector<int>& face, const std::vector<int>& vs) const {
    for (int v : vs)
      if (std::find(face.begin(), face.end(), v) == face.end()) return false;
    return true;
  }

  std::vector<Fragment> compute_fragments() {
    std::vector<Fragment> out;
    // Chord fragments: unembedded edges between embedded vertices.
    for (auto& [v, yes] : in_block_) {
      if (!yes || !embedded_vertex_[v]) continue;
      for (int w : adj_[v]) {
        if (v < w && embedded_vertex_[w] && !embedded_edges_.contains(v, w)) {
          Fragment f;
          f.attachments = {v, w};
          f.chord = Edge{v, w};
          out.push_back(std::move(f));
        }
      }
    }
    // Component fragments: connected pieces of unembedded vertices.
    std::vector<bool> seen(n_, false);
    for (auto& [s, yes] : in_block_) {
      if (!yes || embedded_vertex_[s] || seen[s]) continue;
      Fragment f;
      std::set<int> attach;
      std::vector<int> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        f.component.push_back(v);
        for (int w : adj_[v]) {
          if (embedded_vertex_[w])
            attach.insert(w);
          else if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      f.attachments.assign(attach.begin(), attach.end());
      out.push_back(std::move(f));
    }
    for (auto& f : out)
      for (size_t i = 0; i < faces_.size(); ++i)
        if (face_contains_all(faces_[i], f.attachments)) f.admissible.push_back(i);
    return out;
  }

  // Path between two attachments through the fragment interior.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.chord) return {f.chord->first, f.chord->second};
    const int a1 = f.attachments[0];
    std::vector<char> inside(n_, 0);
    for (int v : f.component) inside[v] = 1;
    std::vector<int> pred(n_, -2);
    std::vector<int> queue;
    // Seed with interior neighbours of a1.
    for (int w : adj_[a1]) {
      if (inside[w] && pred[w] == -2) {
        pred[w] = a1;
        queue.push_back(w);
      }
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : adj_[v]) {
        if (inside[w]) {
          if (pred[w] == -2) {
            pred[w] = v;
            queue.push_back(w);
          }
        } else if (w != a1 && embedded_vertex_[w]) {
          // Reached another attachment; reconstruct.
          std::vector<int> rev{w, v};
          int cur = v;
          while (pred[cur] != a1) {
            cur = pred[cur];
            rev.push_back(cur);
          }
          rev.push_back(a1);
          std::reverse(rev.begin(), rev.end());
          return rev;
        }
      }
    }
    // 2-connected blocks always admit such a path.
    fail(Errc::InvalidGraph, "internal: fragment with a single attachment in a 2-connected block");
  }

  void embed_fragment_path(const Fragment& f) {
    auto path = fragment_path(f);
    const int a1 = path.front(), a2 = path.back();
    const size_t fi = f.admissible.front();
    std::vector<int> face = faces_[fi];
    const int L = static_cast<int>(face.size());
    int i = -1, j = -1;
    for (int t = 0; t < L; ++t) {
      if (face[t] == a1) i = t;
      if (face[t] == a2) j = t;
    }
    std::vector<int> face_a(path.begin(), path.end());  // a1 .. a2
    for (int t = (j + 1) % L; t != i; t = (t + 1) % L) face_a.push_back(face[t]);
    std::vector<int> face_b(path.rbegin(), path.rend());  // a2 .. a1
    for (int t = (i + 1) % L; t != j; t = (t + 1) % L) face_b.push_back(face[t]);
    faces_[fi] = std::move(face_a);
    faces_.push_back(std::move(face_b));
    for (size_t t = 0; t + 1 < path.size(); ++t) embedded_edges_.insert(path[t], path[t + 1]);
    for (int v : path) embedded_vertex_[v] = true;
  }
};

// Rotation lists for one block, derived from its face set, appended into rot.
void faces_to_rotation(const std::vector<std::vector<int>>& faces, RotationSystem& rot) {
  std::map<int, std::map<int, int>> succ;  // succ[v][u] = w for consecutive (u,v),(v,w)
  for (const auto& face : faces) {
    const int L = static_cast<int>(face.size());
    for (int t = 0; t < L; ++t) {
      int u = face[t], v = face[(t + 1) % L], w = face[(t + 2) % L];
      succ[v][u] = w;
    }
  }
  for (auto& [v, m] : succ) {
    const size_t base = rot[v].size();
    int u0 = m.begin()->first;
    int u = u0;
    do {
      rot[v].push_back(m.at(u));
      u = m.at(u);
    } while (u != u0);
    if (rot[v].size() - base != m.size())
      fail(Errc::InvalidGraph, "internal: face successor map at a vertex is not a single cycle");
  }
}

std::optional<RotationSystem> try_embed(const Graph& g) {
  RotationSystem rot(g.order());
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() == 1) {
      auto [a, b] = block[0];
      rot[a].push_back(b);
      rot[b].push_back(a);
      continue;
    }
    int maxv = 0;
    for (auto [a, b] : block) maxv = std::max({maxv, a, b});
    DmpBlock dmp(maxv + 1, block);
    auto faces = dmp.embed();
    if (!faces) return std::nullopt;
    faces_to_rotation(*faces, rot);
  }
  return rot;
}

bool is_planar_edges(int order, const std::vector<Edge>& edges) {
  Graph g(order, edges);
  // Quick Euler bound per component is subsumed by DMP; just embed.
  return try_embed(g).has_value();
}

std::vector<Edge> minimize_nonplanar(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (size_t i = 0; i < edges.size();) {
    std::vector<Edge> trial;
    trial.reserve(edges.size() - 1);
    for (size_t k = 0; k < edges.size(); ++k)
      if (k != i) trial.push_back(edges[k]);
    if (!is_planar_edges(g.order(), trial)) {
      edges = std::move(trial);
    } else {
      ++i;
    }
  }
  return edges;
}

}  // namespace

PlanarityVerdict test_planarity(const Graph& g) {
  if (!is_connected(g)) fail(Errc::NotConnected, "planarity test requires a connected graph");
  PlanarityVerdict verdict;
  auto rot = try_embed(g);
  if (rot) {
    verdict.planar = true;
    verdict.rotation = std::move(*rot);
  } else {
    verdict.planar = false;
    verdict.kuratowski = minimize_nonplanar(g);
  }
  return verdict;
}

bool is_planar(const Graph& g) { return try_embed(g).has_value(); }

int count_faces(const Graph& g, const RotationSystem& rot) {
  const int n = g.order();
  if (static_cast<int>(rot.size()) != n) fail(Errc::DimensionMismatch, "rotation size != order");
  for (int v = 0; v < n; ++v) {
    auto sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) fail(Errc::InvalidGraph, "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
  }
  // next[(u,v)] = (v, w) with w following u in rot[v]
  std::map<Edge, int> next_out;
  for (int v = 0; v < n; ++v) {
    const auto& r = rot[v];
    for (size_t i = 0; i < r.size(); ++i) next_out[{r[i], v}] = r[(i + 1) % r.size()];
  }
  std::set<Edge> visited;
  int faces = 0;
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) {
      Edge d{v, w};
      if (visited.count(d)) continue;
      ++faces;
      Edge cur = d;
      do {
        visited.insert(cur);
        cur = Edge{cur.second, next_out.at(cur)};
      } while (cur != d);
    }
  }
  return faces;
}

bool check_planar_rotation(const Graph& g, const RotationSystem& rot) {
  if (!is_connected(g)) return false;
  return count_faces(g, rot) == 2 - g.order() + g.size();
}

bool is_kuratowski_witness(const Graph& g, const std::vector<Edge>& witness) {
  for (auto [a, b] : witness)
    if (!g.has_edge(a, b)) return false;
  Graph w(g.order(), witness);
  std::vector<int> branch;
  for (int v = 0; v < w.order(); ++v) {
    int d = w.degree(v);
    if (d == 0 || d == 2) continue;
    if (d == 3 || d == 4)
      branch.push_back(v);
    else
      return false;
  }
  const bool want_k5 = branch.size() == 5;
  const bool want_k33 = branch.size() == 6;
  if (!want_k5 && !want_k33) return false;
  for (int v : branch)
    if (w.degree(v) != (want_k5 ? 4 : 3)) return false;

  // Suppress degree-2 chains: walk from each branch vertex along each edge.
  std::set<Edge> base;
  for (int b : branch) {
    for (int start : w.neighbors(b)) {
      int prev = b, cur = start;
      while (w.degree(cur) == 2) {
        int nxt = w.neighbors(cur)[0] == prev ? w.neighbors(cur)[1] : w.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      if (cur == b) return false;  // path loops back: not a subdivision
      base.insert({std::min(b, cur), std::max(b, cur)});
    }
  }
  if (want_k5) {
    if (base.size() != 10) return false;
    for (size_t i = 0; i < branch.size(); ++i)
      for (size_t j = i + 1; j < branch.size(); ++j)
        if (!base.count({std::min(branch[i], branch[j]), std::max(branch[i], branch[j])})) return false;
    return true;
  }
  // K3,3: 9 path edges forming a complete bipartite 3+3 structure.
  if (base.size() != 9) return false;
  std::map<int, int> color;
  color[branch[0]] = 0;
  std::vector<int> queue{branch[0]};
  std::map<int, std::vector<int>> badj;
  for (auto [a, b] : base) {
    badj[a].push_back(b);
    badj[b].push_back(a);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int u : badj[v]) {
      if (!color.count(u)) {
        color[u] = 1 - color[v];
        queue.push_back(u);
      } else if (color[u] == color[v]) {
        return false;
      }
    }
  }
  int zeros = 0;
  for (int b : branch) zeros += color.count(b) && color[b] == 0 ? 1 : 0;
  if (zeros != 3) return false;
  for (int a : branch)
    for (int b : branch)
      if (color[a] == 0 && color[b] == 1 && !base.count({std::min(a, b), std::max(a, b)})) return false;
  return true;
}

}  // namespace nutforge
