// Canonical labelling by iterated colour refinement (1-WL) plus
// individualization of the first non-singleton cell, taking the
// lexicographically smallest certificate over all branches. No automorphism
// pruning; at desk scale (n <= 64, degrees <= 3 in practice) the branch
// factor stays small.

#include "nutforge/canonical.hpp"

#include <algorithm>
#include <utility>

namespace nutforge {

namespace {

struct CanonInput {
  int n = 0;
  bool colored = false;   // include input colours in the certificate
  bool weighted = false;  // 2-bit multiplicities + loop diagonal in the certificate
  std::vector<std::vector<std::pair<int, int>>> nbr;  // (vertex, multiplicity)
  std::vector<int> init_color;
};

// Refines the colouring to a stable partition. Colour ids are dense and
// ordered by signature value, which keeps them isomorphism-invariant.
void refine(const CanonInput& in, std::vector<int>& col) {
  const int n = in.n;
  int classes = 0;
  for (int v = 0; v < n; ++v) classes = std::max(classes, col[v] + 1);
  std::vector<std::vector<long long>> sig(n);
  std::vector<int> order(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(col[v]);
      for (auto [u, w] : in.nbr[v]) s.push_back(static_cast<long long>(col[u]) * 4 + w);
      std::sort(s.begin() + 1, s.end());
    }
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    std::vector<int> ncol(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      ncol[order[i]] = next;
    }
    ++next;
    col.swap(ncol);
    if (next == classes) return;  // refinement of a partition with equal size is the same partition
    classes = next;
    if (classes == n) return;
  }
}

std::string certificate(const CanonInput& in, const std::vector<int>& col) {
  const int n = in.n;
  std::vector<int> at(n);  // at[position] = vertex
  for (int v = 0; v < n; ++v) at[col[v]] = v;
  std::string out;
  out.push_back(in.weighted ? 'M' : 'S');
  out.push_back(static_cast<char>(n));
  if (in.colored)
    for (int i = 0; i < n; ++i) out.push_back(static_cast<char>(in.init_color[at[i]]));
  if (in.weighted) {
    // 2-bit multiplicities over i <= j (diagonal carries loops).
    int bitpos = 0;
    char cur = 0;
    auto emit = [&](int w) {
      cur |= static_cast<char>((w & 3) << bitpos);
      bitpos += 2;
      if (bitpos == 8) {
        out.push_back(cur);
        cur = 0;
        bitpos = 0;
      }
    };
    std::vector<std::uint8_t> row(n);
    for (int i = 0; i < n; ++i) {
      std::fill(row.begin(), row.end(), 0);
      for (auto [u, w] : in.nbr[at[i]]) row[col[u]] = static_cast<std::uint8_t>(w);
      for (int j = i; j < n; ++j) emit(row[j]);
    }
    if (bitpos > 0) out.push_back(cur);
  } else {
    int bitpos = 0;
    char cur = 0;
    auto emit = [&](bool b) {
      if (b) cur |= static_cast<char>(1 << bitpos);
      if (++bitpos == 8) {
        out.push_back(cur);
        cur = 0;
        bitpos = 0;
      }
    };
    std::vector<bool> row(n);
    for (int i = 0; i < n; ++i) {
      std::fill(row.begin(), row.end(), false);
      for (auto [u, w] : in.nbr[at[i]]) row[col[u]] = true;
      for (int j = i + 1; j < n; ++j) emit(row[j]);
    }
    if (bitpos > 0) out.push_back(cur);
  }
  return out;
}

struct Searcher {
  const CanonInput& in;
  std::string best;
  std::vector<int> best_col;

  void search(std::vector<int> col) {
    refine(in, col);
    int target = -1;  // smallest colour id with a non-singleton cell
    std::vector<int> count(in.n, 0);
    for (int v = 0; v < in.n; ++v) ++count[col[v]];
    for (int c = 0; c < in.n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == -1) {
      std::string cert = certificate(in, col);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_col = std::move(col);
      }
      return;
    }
    for (int v = 0; v < in.n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> child = col;
      child[v] = in.n;  // individualize; refine() re-densifies
      search(std::move(child));
    }
  }
};

CanonicalLabelling run_canon(const CanonInput& in) {
  if (in.n == 0) return {CanonicalForm{std::string(1, in.weighted ? 'M' : 'S') + std::string(1, '\0')}, {}};
  Searcher s{in};
  s.search(in.init_color);
  std::vector<int> at(in.n);
  for (int v = 0; v < in.n; ++v) at[s.best_col[v]] = v;
  return {CanonicalForm{std::move(s.best)}, std::move(at)};
}

CanonInput input_from_graph(const Graph& g) {
  if (g.order() > kCanonicalOrderLimit)
    fail(Errc::OrderTooLarge, "canonical form supports order <= " + std::to_string(kCanonicalOrderLimit));
  CanonInput in;
  in.n = g.order();
  in.nbr.resize(in.n);
  for (int v = 0; v < in.n; ++v) {
    in.nbr[v].reserve(g.neighbors(v).size());
    for (int u : g.neighbors(v)) in.nbr[v].emplace_back(u, 1);
  }
  in.init_color.assign(in.n, 0);
  return in;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return run_canon(input_from_graph(g)).form; }

CanonicalLabelling canonical_labelling(const Graph& g) { return run_canon(input_from_graph(g)); }

CanonicalLabelling canonical_colored_multigraph(int n, const std::vector<std::uint8_t>& mult,
                                                const std::vector<int>& colors) {
  if (n > 32) fail(Errc::OrderTooLarge, "multigraph canonical form supports order <= 32");
  CanonInput in;
  in.n = n;
  in.colored = true;
  in.weighted = true;
  in.nbr.resize(n);
  in.init_color.resize(n);
  for (int v = 0; v < n; ++v) {
    // Loops are folded into the vertex colour; they never compare against
    // off-diagonal multiplicities during refinement.
    in.init_color[v] = colors[v] * 4 + mult[static_cast<size_t>(v) * n + v];
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      int w = mult[static_cast<size_t>(v) * n + u];
      if (w > 0) in.nbr[v].emplace_back(u, w);
    }
  }
  auto res = run_canon(in);
  return res;
}

}  // namespace nutforge
