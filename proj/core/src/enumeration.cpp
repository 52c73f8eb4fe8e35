// Exhaustive enumeration of connected leafless chemical graphs by signature.
//
// Strategy: a leafless chemical graph with v3 > 0 is a subdivision of a
// unique connected cubic multigraph on its degree-3 vertices (suppress the
// degree-2 vertices). So we generate skeleton multigraphs up to isomorphism,
// distribute the v2 subdivision vertices over the skeleton edges (loops need
// >= 2, and at most one member of each parallel class may stay unsubdivided),
// and deduplicate the resulting simple graphs by canonical form. Distinct
// skeletons never produce isomorphic graphs, so deduplication is local to a
// (skeleton, v2) task and the census parallelises without shared state.
//
// Skeletons are generated by completing one vertex at a time. The vertex to
// complete is chosen by canonical position, which makes the child set a
// function of the isomorphism class; a certificate set then keeps one
// representative per class. Fresh (degree-0) vertices are interchangeable,
// so completions only ever target the lowest-indexed fresh vertices with
// non-increasing multiplicities.

#include "nutforge/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "nutforge/canonical.hpp"
#include "nutforge/kernel.hpp"
#include "nutforge/reference_census.hpp"

namespace nutforge {

int SkeletonMultigraph::min_subdivisions() const {
  int need = 0;
  for (size_t i = 0; i < edges.size();) {
    size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    const int mu = static_cast<int>(j - i);
    if (edges[i].first == edges[i].second)
      need += 2 * mu;  // loops (mu is 1 at degree 3)
    else
      need += mu - 1;
    i = j;
  }
  return need;
}

int default_order_bound() {
  if (const char* env = std::getenv("NUTFORGE_MAX_ORDER"); env && *env) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 14;
}

namespace {

struct SkeletonState {
  std::vector<std::uint8_t> mult;  // n*n symmetric, diagonal = loops
};

std::vector<int> state_degrees(const SkeletonState& s, int n) {
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      deg[v] += s.mult[static_cast<size_t>(v) * n + u];
    }
    deg[v] += 2 * s.mult[static_cast<size_t>(v) * n + v];
  }
  return deg;
}

int state_defect(const SkeletonState& s, int n) {
  int defect = 0;
  for (int v = 0; v < n; ++v) defect += 2 * s.mult[static_cast<size_t>(v) * n + v];
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u) {
      int m = s.mult[static_cast<size_t>(v) * n + u];
      if (m >= 2) defect += m - 1;
    }
  return defect;
}

// A component whose vertices are all complete can never absorb the rest.
bool state_viable(const SkeletonState& s, const std::vector<int>& deg, int n) {
  std::vector<int> comp(n, -1);
  for (int start = 0; start < n; ++start) {
    if (deg[start] == 0 || comp[start] != -1) continue;
    std::vector<int> stack{start};
    comp[start] = start;
    bool all_complete = deg[start] == 3;
    int size = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (u == v || s.mult[static_cast<size_t>(v) * n + u] == 0 || comp[u] != -1) continue;
        comp[u] = start;
        all_complete = all_complete && deg[u] == 3;
        ++size;
        stack.push_back(u);
      }
      all_complete = all_complete && deg[v] == 3;
    }
    if (all_complete && size < n) return false;
  }
  return true;
}

bool state_connected_complete(const SkeletonState& s, int n) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (u != v && s.mult[static_cast<size_t>(v) * n + u] > 0 && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

// All ways to fill vertex u to degree 3: an optional loop plus a target
// multiset over incomplete vertices. Fresh vertices are used lowest-index
// first with non-increasing multiplicities.
void complete_vertex(const SkeletonState& s, int n, int u, const std::vector<int>& deg, int defect_cap,
                     const std::function<void(SkeletonState&&)>& child_sink) {
  const int free = 3 - deg[u];
  const int cur_defect = state_defect(s, n);
  for (int loops = 0; 2 * loops <= free && loops <= 1; ++loops) {
    if (defect_cap >= 0 && cur_defect + 2 * loops > defect_cap) continue;
    const int rem = free - 2 * loops;
    std::vector<int> touched, fresh;
    for (int w = 0; w < n; ++w) {
      if (w == u || deg[w] >= 3) continue;
      if (deg[w] > 0)
        touched.push_back(w);
      else if (static_cast<int>(fresh.size()) < rem)
        fresh.push_back(w);
    }
    std::vector<std::pair<int, int>> assign;  // (target, multiplicity)
    auto emit_child = [&] {
      SkeletonState child = s;
      if (loops) child.mult[static_cast<size_t>(u) * n + u] += 1;
      for (auto [w, k] : assign) {
        child.mult[static_cast<size_t>(u) * n + w] += static_cast<std::uint8_t>(k);
        child.mult[static_cast<size_t>(w) * n + u] += static_cast<std::uint8_t>(k);
      }
      if (defect_cap >= 0 && state_defect(child, n) > defect_cap) return;
      child_sink(std::move(child));
    };
    // DFS over touched targets, then the fresh tail.
    std::function<void(size_t, int)> dfs_fresh = [&](size_t fi, int left) {
      if (left == 0) {
        emit_child();
        return;
      }
      if (fi == fresh.size()) return;
      int prev = fi == 0 ? 3 : assign.back().second;
      // assign.back() is the previous fresh entry only when fi > 0 and it was pushed last
      int cap = std::min({3, left, prev});
      for (int k = cap; k >= 1; --k) {
        assign.emplace_back(fresh[fi], k);
        dfs_fresh(fi + 1, left - k);
        assign.pop_back();
      }
    };
    std::function<void(size_t, int)> dfs_touched = [&](size_t ti, int left) {
      if (ti == touched.size()) {
        dfs_fresh(0, left);
        return;
      }
      int w = touched[ti];
      int cap = std::min(3 - deg[w], left);
      for (int k = 0; k <= cap; ++k) {
        if (k > 0) assign.emplace_back(w, k);
        dfs_touched(ti + 1, left - k);
        if (k > 0) assign.pop_back();
      }
    };
    dfs_touched(0, rem);
  }
}

// Certificate and canonical order of the touched (degree > 0) part only.
// Fresh vertices are mutually interchangeable, so including them would only
// blow up the canonical search with equivalent branches; their count is
// implied by n and the touched count.
struct ReducedCanon {
  std::string cert;
  std::vector<int> order;  // canonical positions -> original vertex labels
};

ReducedCanon skeleton_canon(const SkeletonState& s, int n, const std::vector<int>& deg) {
  std::vector<int> touched;
  for (int v = 0; v < n; ++v)
    if (deg[v] > 0) touched.push_back(v);
  const int k = static_cast<int>(touched.size());
  std::vector<std::uint8_t> mult(static_cast<size_t>(k) * k, 0);
  std::vector<int> colors(k);
  for (int i = 0; i < k; ++i) {
    colors[i] = deg[touched[i]];
    for (int j = 0; j < k; ++j) mult[static_cast<size_t>(i) * k + j] = s.mult[static_cast<size_t>(touched[i]) * n + touched[j]];
  }
  auto canon = canonical_colored_multigraph(k, mult, colors);
  ReducedCanon out;
  out.cert = std::string(1, static_cast<char>(n - k)) + canon.form.bytes;
  out.order.reserve(k);
  for (int pos = 0; pos < k; ++pos) out.order.push_back(touched[canon.order[pos]]);
  return out;
}

}  // namespace

void enumerate_skeletons(int v3, const std::function<void(const SkeletonMultigraph&)>& emit,
                         int max_required_subdivisions, const EnumerationOptions& opts) {
  if (v3 < 0) fail(Errc::PreconditionUnmet, "negative order");
  if (v3 % 2 != 0) fail(Errc::OddV3, "cubic multigraphs need an even order");
  if (v3 > opts.order_bound)
    fail(Errc::OrderBoundExceeded,
         "skeleton order " + std::to_string(v3) + " exceeds bound " + std::to_string(opts.order_bound));
  if (v3 == 0) return;
  const int n = v3;
  const int cap = max_required_subdivisions;

  std::unordered_set<std::string> seen;
  std::deque<SkeletonState> queue;
  SkeletonState start{std::vector<std::uint8_t>(static_cast<size_t>(n) * n, 0)};
  seen.insert(skeleton_canon(start, n, std::vector<int>(n, 0)).cert);
  queue.push_back(std::move(start));

  std::vector<SkeletonMultigraph> out;
  while (!queue.empty()) {
    SkeletonState s = std::move(queue.front());
    queue.pop_front();
    auto deg = state_degrees(s, n);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; })) {
      if (!state_connected_complete(s, n)) continue;
      SkeletonMultigraph sk;
      sk.order = n;
      for (int v = 0; v < n; ++v) {
        for (int k = 0; k < s.mult[static_cast<size_t>(v) * n + v]; ++k) sk.edges.emplace_back(v, v);
        for (int u = v + 1; u < n; ++u)
          for (int k = 0; k < s.mult[static_cast<size_t>(v) * n + u]; ++k) sk.edges.emplace_back(v, u);
      }
      std::sort(sk.edges.begin(), sk.edges.end());
      out.push_back(std::move(sk));
      continue;
    }
    // Complete a touched vertex when one exists: the built part then grows as
    // one connected blob, which keeps the set of reachable partial states
    // small. Connected targets remain reachable, and only those are emitted.
    auto canon = skeleton_canon(s, n, deg);
    int u = -1;
    for (size_t pos = 0; pos < canon.order.size() && u == -1; ++pos) {
      int v = canon.order[pos];
      if (deg[v] < 3) u = v;
    }
    if (u == -1) {
      for (int v = 0; v < n && u == -1; ++v)
        if (deg[v] == 0) u = v;  // all-fresh start state
    }
    complete_vertex(s, n, u, deg, cap, [&](SkeletonState&& child) {
      auto cdeg = state_degrees(child, n);
      if (!state_viable(child, cdeg, n)) return;
      auto cert = skeleton_canon(child, n, cdeg).cert;
      if (seen.insert(std::move(cert)).second) queue.push_back(std::move(child));
    });
  }
  // Deterministic emission order independent of queue dynamics.
  std::sort(out.begin(), out.end(),
            [](const SkeletonMultigraph& a, const SkeletonMultigraph& b) { return a.edges < b.edges; });
  for (const auto& sk : out)
    if (cap < 0 || sk.min_subdivisions() <= cap) emit(sk);
}

std::vector<SkeletonMultigraph> list_skeletons(int v3, int max_required_subdivisions,
                                               const EnumerationOptions& opts) {
  std::vector<SkeletonMultigraph> out;
  enumerate_skeletons(v3, [&](const SkeletonMultigraph& sk) { out.push_back(sk); }, max_required_subdivisions,
                      opts);
  return out;
}

namespace {

struct EdgeGroup {
  int u = 0, w = 0;  // u == w: loop
  int mu = 1;        // parallel multiplicity (1 for loops)
  int min_total() const { return u == w ? 2 * mu : mu - 1; }
};

std::vector<EdgeGroup> edge_groups(const SkeletonMultigraph& sk) {
  std::vector<EdgeGroup> groups;
  for (size_t i = 0; i < sk.edges.size();) {
    size_t j = i;
    while (j < sk.edges.size() && sk.edges[j] == sk.edges[i]) ++j;
    groups.push_back({sk.edges[i].first, sk.edges[i].second, static_cast<int>(j - i)});
    i = j;
  }
  return groups;
}

// Distributes exactly v2 subdivision vertices over the skeleton edges and
// hands each resulting simple graph to sink (duplicates across compositions
// of one skeleton possible; the caller deduplicates).
void for_each_subdivision(const SkeletonMultigraph& sk, int v2, const std::function<void(const Graph&)>& sink) {
  auto groups = edge_groups(sk);
  std::vector<int> suffix_min(groups.size() + 1, 0);
  for (size_t i = groups.size(); i-- > 0;) suffix_min[i] = suffix_min[i + 1] + groups[i].min_total();
  std::vector<std::vector<int>> counts(groups.size());

  auto build = [&] {
    std::vector<Edge> edges;
    int next = sk.order;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& g = groups[gi];
      for (int c : counts[gi]) {
        if (c == 0) {
          edges.emplace_back(g.u, g.w);
          continue;
        }
        int prev = g.u;
        for (int k = 0; k < c; ++k) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        edges.emplace_back(prev, g.w);
      }
    }
    sink(Graph(sk.order + v2, edges));
  };

  std::function<void(size_t, int)> dfs_group = [&](size_t gi, int rem) {
    if (gi == groups.size()) {
      if (rem == 0) build();
      return;
    }
    const auto& g = groups[gi];
    const int rest = suffix_min[gi + 1];
    auto& cs = counts[gi];
    if (g.u == g.w) {
      // A loop turns into a cycle through its vertex: >= 2 interior points.
      for (int c = 2; c <= rem - rest; ++c) {
        cs.assign(1, c);
        dfs_group(gi + 1, rem - c);
      }
      cs.clear();
      return;
    }
    // Parallel class: non-increasing tuple, at most one zero (the last slot).
    cs.assign(g.mu, 0);
    std::function<void(int, int, int)> dfs_slot = [&](int si, int left, int prev) {
      if (si == g.mu) {
        dfs_group(gi + 1, left);
        return;
      }
      const int lo = si == g.mu - 1 ? 0 : 1;
      const int slots_after = g.mu - si - 1;
      const int reserve = rest + std::max(0, slots_after - 1);  // remaining slots need >= 1 except one
      for (int c = std::min(prev, left - reserve); c >= lo; --c) {
        cs[si] = c;
        dfs_slot(si + 1, left - c, c);
      }
      cs[si] = 0;
    };
    dfs_slot(0, rem, rem);
    cs.clear();
  };
  dfs_group(0, v2);
}

void check_pair_bound(ParameterPair p, int bound) {
  if (p.order() > bound)
    fail(Errc::OrderBoundExceeded,
         "order " + std::to_string(p.order()) + " exceeds bound " + std::to_string(bound) +
             " (set NUTFORGE_MAX_ORDER to raise it)");
}

}  // namespace

void enumerate_leafless(ParameterPair p, const std::function<void(const Graph&)>& emit,
                        const EnumerationOptions& opts) {
  check_pair_bound(p, opts.order_bound);
  if (p.v3 == 0) {
    if (p.v2 >= 3) {
      std::vector<Edge> edges;
      for (int i = 0; i < p.v2; ++i) edges.emplace_back(i, (i + 1) % p.v2);
      emit(Graph(p.v2, edges));
    }
    return;
  }
  enumerate_skeletons(
      p.v3,
      [&](const SkeletonMultigraph& sk) {
        std::unordered_set<std::string> seen;
        for_each_subdivision(sk, p.v2, [&](const Graph& g) {
          if (seen.insert(canonical_form(g).bytes).second) emit(g);
        });
      },
      p.v2, opts);
}

std::vector<Graph> list_leafless(ParameterPair p, const EnumerationOptions& opts) {
  std::vector<Graph> out;
  enumerate_leafless(p, [&](const Graph& g) { out.push_back(g); }, opts);
  return out;
}

long long count_nuts(ParameterPair p, const EnumerationOptions& opts) {
  long long nuts = 0;
  enumerate_leafless(p, [&](const Graph& g) { nuts += is_nut_graph(g) ? 1 : 0; }, opts);
  return nuts;
}

namespace {

struct CellCounter {
  std::atomic<long long> nuts{0};
  std::atomic<long long> leafless{0};
};

}  // namespace

CensusTable census(int max_n, const CensusOptions& opts) {
  if (max_n < 1) fail(Errc::PreconditionUnmet, "census bound must be positive");
  if (max_n > opts.order_bound)
    fail(Errc::OrderBoundExceeded, "census bound " + std::to_string(max_n) + " exceeds order bound " +
                                       std::to_string(opts.order_bound) + " (set NUTFORGE_MAX_ORDER to raise it)");
  CensusTable table;
  table.max_n = max_n;

  std::map<std::pair<int, int>, CellCounter> counters;
  for (int v3 = 0; v3 <= max_n; v3 += 2)
    for (int v2 = 0; v2 + v3 <= max_n; ++v2) counters[{v3, v2}];

  // v3 = 0: the cycle column.
  for (int v2 = 3; v2 <= max_n; ++v2) {
    std::vector<Edge> edges;
    for (int i = 0; i < v2; ++i) edges.emplace_back(i, (i + 1) % v2);
    Graph cyc(v2, edges);
    counters[{0, v2}].leafless = 1;
    counters[{0, v2}].nuts = is_nut_graph(cyc) ? 1 : 0;
  }

  struct Task {
    int v3;
    int v2;
    const SkeletonMultigraph* skeleton;
  };
  std::vector<std::vector<SkeletonMultigraph>> per_v3;
  per_v3.reserve(max_n / 2 + 1);
  std::vector<Task> tasks;
  for (int v3 = 2; v3 <= max_n; v3 += 2) {
    EnumerationOptions eopts;
    eopts.order_bound = opts.order_bound;
    per_v3.push_back(list_skeletons(v3, max_n - v3, eopts));
    for (const auto& sk : per_v3.back())
      for (int v2 = sk.min_subdivisions(); v2 + v3 <= max_n; ++v2) tasks.push_back({v3, v2, &sk});
  }

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      std::unordered_set<std::string> seen;
      long long nuts = 0, leafless = 0;
      for_each_subdivision(*t.skeleton, t.v2, [&](const Graph& g) {
        if (!seen.insert(canonical_form(g).bytes).second) return;
        ++leafless;
        if (is_nut_graph(g)) ++nuts;
      });
      auto& cell = counters.at({t.v3, t.v2});
      cell.nuts += nuts;
      cell.leafless += leafless;
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& [key, counter] : counters)
    table.cells[key] = CensusCell{counter.nuts.load(), counter.leafless.load()};
  return table;
}

std::string census_to_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "v3,v2,count,leafless\n";
  for (const auto& [key, cell] : table.cells)
    out << key.first << ',' << key.second << ',' << cell.nut_count << ',' << cell.leafless_count << '\n';
  return out.str();
}

std::vector<CensusMismatch> compare_with_reference(const CensusTable& table) {
  std::vector<CensusMismatch> out;
  for (const auto& [key, cell] : table.cells) {
    auto ref = reference_census_cell(key.first, key.second);
    if (!ref) continue;
    if (!ref->graph_exists) {
      if (cell.leafless_count != 0 || cell.nut_count != 0) out.push_back({key.first, key.second, -1, cell.nut_count});
      continue;
    }
    if (cell.nut_count != ref->nut_count) out.push_back({key.first, key.second, ref->nut_count, cell.nut_count});
  }
  return out;
}

}  // namespace nutforge
