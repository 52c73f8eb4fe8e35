#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nutforge/graph.hpp"

namespace nutforge {

// Total-order key identifying an isomorphism class: equal keys iff isomorphic.
struct CanonicalForm {
  std::string bytes;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

struct CanonicalFormHash {
  size_t operator()(const CanonicalForm& c) const { return std::hash<std::string>{}(c.bytes); }
};

inline constexpr int kCanonicalOrderLimit = 64;

// Canonical key via colour refinement with individualization backtracking.
// Throws OrderTooLarge above kCanonicalOrderLimit.
CanonicalForm canonical_form(const Graph& g);

// Key plus a witness labelling: order[i] = vertex placed at canonical position i.
struct CanonicalLabelling {
  CanonicalForm form;
  std::vector<int> order;
};
CanonicalLabelling canonical_labelling(const Graph& g);

// Variant for vertex-coloured multigraphs (used by the skeleton machinery).
// mult is a symmetric n*n multiplicity matrix, diagonal = loop count.
CanonicalLabelling canonical_colored_multigraph(int n, const std::vector<std::uint8_t>& mult,
                                                const std::vector<int>& colors);

}  // namespace nutforge
