#include "nutforge/reference_census.hpp"

#include <array>
#include <vector>

namespace nutforge {

namespace {

// Nut-graph counts per column v3, indexed by v2 from 0 upwards; rows stop at
// v3 + v2 = 22. A count of -1 marks signatures where no leafless chemical
// graph exists at all.
struct Column {
  int v3;
  std::vector<long long> by_v2;
};

const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {0, {-1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {2, {-1, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 3, 0, 3, 0, 6, 0, 6, 0, 10, 0}},
      {4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 11, 0, 13, 0, 38}},
      {6, {0, 0, 0, 0, 0, 0, 0, 8, 5, 36, 13, 189, 50, 601, 118, 1881, 309}},
      {8, {0, 0, 0, 7, 0, 7, 4, 212, 22, 718, 176, 4427, 786, 14153, 3415}},
      {10, {0, 0, 0, 9, 10, 82, 127, 1368, 620, 9603, 5457, 60792, 25535}},
      {12, {9, 0, 2, 71, 225, 596, 1186, 23127, 12035, 211501, 106013}},
      {14, {0, 10, 0, 5042, 388, 16497, 15801, 575614, 181009}},
      {16, {0, 22, 37, 13474, 14022, 280798, 545237}},
      {18, {5541, 235, 3600, 168178, 480051}},
      {20, {5, 13602, 30760}},
      {22, {71}},
  };
  return cols;
}

}  // namespace

std::optional<ReferenceCell> reference_census_cell(int v3, int v2) {
  if (v3 < 0 || v2 < 0 || v3 % 2 != 0 || v3 + v2 > kReferenceMaxOrder) return std::nullopt;
  for (const auto& col : columns()) {
    if (col.v3 != v3) continue;
    if (v2 >= static_cast<int>(col.by_v2.size())) return std::nullopt;
    long long c = col.by_v2[v2];
    if (c < 0) return ReferenceCell{false, 0};
    return ReferenceCell{true, c};
  }
  return std::nullopt;
}

}  // namespace nutforge
