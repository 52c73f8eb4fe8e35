#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nutforge/errors.hpp"

namespace nutforge {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..order-1 with sorted adjacency lists.
// Immutable after construction; the constructor rejects loops, duplicate
// edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return order_; }
  int size() const { return size_; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  int max_degree() const;
  int min_degree() const;

  bool operator==(const Graph& other) const { return order_ == other.order_ && adj_ == other.adj_; }

 private:
  int order_ = 0;
  int size_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct DegreeSignature {
  int v3 = 0;
  int v2 = 0;
  int v1 = 0;
  int v0 = 0;

  bool operator==(const DegreeSignature&) const = default;
};

// Counts vertices per degree; degrees above 3 are an error (every consumer
// is chemical-graph specific).
DegreeSignature degree_signature(const Graph& g);

bool is_connected(const Graph& g);

// Connected and maximum degree <= 3.
bool is_chemical(const Graph& g);

// Minimum degree >= 2.
bool is_leafless(const Graph& g);

// Cut edges of a connected graph, sorted lexicographically. Throws
// NotConnected on disconnected input.
std::vector<Edge> bridges(const Graph& g);

std::vector<int> articulation_vertices(const Graph& g);

// Vertex connectivity capped at 3 (0 for disconnected or trivial graphs).
int connectivity(const Graph& g);

// Component id per vertex, ids dense from 0 in order of first appearance.
std::vector<int> component_labels(const Graph& g);

}  // namespace nutforge
