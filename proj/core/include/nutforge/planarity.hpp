#pragma once

#include <vector>

#include "nutforge/graph.hpp"

namespace nutforge {

// Cyclic neighbour order per vertex; a combinatorial embedding.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityVerdict {
  bool planar = false;
  RotationSystem rotation;       // populated when planar
  std::vector<Edge> kuratowski;  // populated when non-planar: a K5 or K3,3 subdivision
};

// Demoucron-style path addition per biconnected block; witness either way.
// Throws NotConnected on disconnected input.
PlanarityVerdict test_planarity(const Graph& g);

// Boolean-only test, defined for any graph (a graph is planar iff all its
// components are).
bool is_planar(const Graph& g);

// Face count of the rotation system's traversal; validates that rot lists
// every neighbour exactly once per vertex. Euler: planar iff f = 2 - n + m
// for connected g.
int count_faces(const Graph& g, const RotationSystem& rot);
bool check_planar_rotation(const Graph& g, const RotationSystem& rot);

// Checks that the witness edges form a subgraph of g homeomorphic to K5 or
// K3,3 (suppressing degree-2 witness vertices).
bool is_kuratowski_witness(const Graph& g, const std::vector<Edge>& witness);

}  // namespace nutforge
