#pragma once

#include <set>
#include <string>

#include "nutforge/constructions.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/kernel.hpp"

namespace nutforge {

// Degree-signature grid coordinate: v3 must be even and non-negative.
struct ParameterPair {
  int v3 = 0;
  int v2 = 0;

  ParameterPair(int v3, int v2) : v3(v3), v2(v2) {
    if (v3 < 0 || v2 < 0) fail(Errc::PreconditionUnmet, "negative signature entry");
    if (v3 % 2 != 0) fail(Errc::OddV3, "v3 = " + std::to_string(v3) + " is odd");
  }

  int order() const { return v3 + v2; }
  int size() const { return v2 + 3 * v3 / 2; }

  bool operator==(const ParameterPair&) const = default;
};

struct RealisabilityVerdict {
  bool realisable = false;
  bool planar_realisable = false;
  std::string reason;
};

// Closed-form decision: which (v3, v2) admit a chemical nut graph. A planar
// witness exists for every realisable pair except (20, 0).
RealisabilityVerdict is_realisable(ParameterPair p);

// Cubic polyhedral decision: v2 = 0 and v3 in {12, 18} or v3 >= 24 (even).
bool is_polyhedral_realisable(ParameterPair p);

// Toroidal cubic decision on the order: n even and n >= 20.
bool is_toroidal_cubic_realisable(int n);

// Achievable edge counts m over all realisable signatures with v3 + v2 = n.
std::set<int> betti_spectrum(int n);

// Consistency probe of the oracle against the subdivision-reduction theorem:
// for v2 >= (9/2) v3 + 1, realisability of (v3, v2) and (v3, v2-4) must
// coincide. Returns that equality; throws PreconditionUnmet outside the
// theorem's range.
bool check_reduction_recurrence(ParameterPair p);

struct Realisation {
  Graph graph;
  KernelVector kernel;
  ConstructionTrace trace;
};

// Constructs a chemical nut graph with exactly signature p from a seed via
// Fowler, bridge and subdivision steps. Deterministic: seeds are chosen by
// residue class, minimal step count, then smallest id; Fowler steps come
// first. With require_planar the route is restricted to planar seeds and the
// pair (20, 0) is refused.
Realisation realise(ParameterPair p, bool require_planar = false);

}  // namespace nutforge
