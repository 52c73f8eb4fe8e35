#pragma once

#include <optional>

namespace nutforge {

// Published census slice for chemical nut graphs with v3 + v2 <= 22,
// embedded as reference constants. graph_exists distinguishes signatures
// admitting no leafless chemical graph at all from signatures whose graphs
// are simply never nuts.
struct ReferenceCell {
  bool graph_exists = false;
  long long nut_count = 0;
};

inline constexpr int kReferenceMaxOrder = 22;

// nullopt outside the published range (v3 + v2 > 22, odd v3, negatives).
std::optional<ReferenceCell> reference_census_cell(int v3, int v2);

}  // namespace nutforge
