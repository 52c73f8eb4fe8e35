#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nutforge/graph.hpp"
#include "nutforge/realisability.hpp"

namespace nutforge {

// Connected cubic multigraph on v3 vertices; loops stored as (v, v), parallel
// edges repeated. Internal generator type for the leafless enumeration.
struct SkeletonMultigraph {
  int order = 0;
  std::vector<Edge> edges;  // sorted multiset

  // Subdivision vertices needed to make the skeleton simple: 2 per loop plus
  // multiplicity-1 per parallel class.
  int min_subdivisions() const;
};

// Order bound for enumeration (default 14, NUTFORGE_MAX_ORDER overrides).
int default_order_bound();

struct EnumerationOptions {
  int order_bound = default_order_bound();
};

// All connected cubic multigraphs on v3 vertices up to isomorphism, skipping
// skeletons whose min_subdivisions exceeds max_required_subdivisions.
void enumerate_skeletons(int v3, const std::function<void(const SkeletonMultigraph&)>& emit,
                         int max_required_subdivisions = -1, const EnumerationOptions& opts = {});
std::vector<SkeletonMultigraph> list_skeletons(int v3, int max_required_subdivisions = -1,
                                               const EnumerationOptions& opts = {});

// Every connected leafless simple graph with signature exactly p, one
// representative per isomorphism class. v3 = 0 yields the single cycle.
void enumerate_leafless(ParameterPair p, const std::function<void(const Graph&)>& emit,
                        const EnumerationOptions& opts = {});
std::vector<Graph> list_leafless(ParameterPair p, const EnumerationOptions& opts = {});

// Number of isomorphism classes with is_chemical_nut = true at signature p.
long long count_nuts(ParameterPair p, const EnumerationOptions& opts = {});

struct CensusCell {
  long long nut_count = 0;
  long long leafless_count = 0;

  bool operator==(const CensusCell&) const = default;
};

struct CensusTable {
  int max_n = 0;
  std::map<std::pair<int, int>, CensusCell> cells;  // keyed by (v3, v2), complete incl. zero cells
};

struct CensusOptions {
  int jobs = 1;
  int order_bound = default_order_bound();
};

CensusTable census(int max_n, const CensusOptions& opts = {});

// CSV with header v3,v2,count,leafless (leafless kept alongside so the
// "no graphs at all" and "graphs but no nuts" cases stay distinguishable).
std::string census_to_csv(const CensusTable& table);

struct CensusMismatch {
  int v3 = 0;
  int v2 = 0;
  long long expected = 0;  // reference nut count (-1: reference says no graph exists)
  long long actual = 0;
};

// Diff against the embedded published slice; empty result means exact match.
std::vector<CensusMismatch> compare_with_reference(const CensusTable& table);

}  // namespace nutforge
