// Exact kernel computation for adjacency matrices. Forward elimination is
// fraction-free (Bareiss): every intermediate entry is a minor of the input
// matrix, so a Hadamard bound on the degrees decides when plain int64
// arithmetic cannot overflow; larger orders fall back to cpp_int.

#include "nutforge/kernel.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <nlohmann/json.hpp>

namespace nutforge {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;

namespace {

template <class T>
struct EchelonForm {
  std::vector<std::vector<T>> rows;
  std::vector<int> pivot_cols;
  int n = 0;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

template <class T>
EchelonForm<T> bareiss_echelon(const Graph& g) {
  const int n = g.order();
  EchelonForm<T> e;
  e.n = n;
  e.rows.assign(n, std::vector<T>(n, T(0)));
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) e.rows[v][u] = T(1);

  T prev(1);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (e.rows[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == -1) continue;
    std::swap(e.rows[r], e.rows[piv]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j)
        e.rows[i][j] = (e.rows[r][col] * e.rows[i][j] - e.rows[i][col] * e.rows[r][j]) / prev;
      e.rows[i][col] = T(0);
    }
    prev = e.rows[r][col];
    e.pivot_cols.push_back(col);
    ++r;
  }
  return e;
}

// True when every minor of the adjacency matrix provably fits in int64
// (product of column norms, with margin for the Bareiss cross-products).
bool int64_safe(const Graph& g) {
  double bits = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d > 0) bits += 0.5 * std::log2(static_cast<double>(d));
  }
  return bits <= 60.0;
}

std::vector<KernelVector> kernel_from_echelon(const EchelonForm<BigInt>& e) {
  const int n = e.n;
  const int r = e.rank();
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<KernelVector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (int i = r - 1; i >= 0; --i) {
      const int p = e.pivot_cols[i];
      Rational s(0);
      for (int j = p + 1; j < n; ++j)
        if (x[j] != 0) s += Rational(e.rows[i][j]) * x[j];
      x[p] = -s / Rational(e.rows[i][p]);
    }
    BigInt scale(1);
    for (int j = 0; j < n; ++j) scale = mp::lcm(scale, mp::denominator(x[j]));
    std::vector<BigInt> v(n);
    for (int j = 0; j < n; ++j) v[j] = mp::numerator(x[j] * Rational(scale));
    basis.push_back(normalize_kernel_vector(std::move(v)));
  }
  return basis;
}

}  // namespace

bool KernelVector::zero_free() const {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (e == 0) return false;
  return true;
}

bool KernelVector::equal_up_to_sign(const KernelVector& other) const {
  if (entries == other.entries) return true;
  if (entries.size() != other.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != -other.entries[i]) return false;
  return true;
}

KernelVector normalize_kernel_vector(std::vector<BigInt> entries) {
  BigInt g(0);
  for (const auto& e : entries) g = mp::gcd(g, e);
  if (g > 1)
    for (auto& e : entries) e /= g;
  for (const auto& e : entries) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& x : entries) x = -x;
    break;
  }
  return KernelVector{std::move(entries)};
}

int nullity(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  int rank;
  if (int64_safe(g))
    rank = bareiss_echelon<long long>(g).rank();
  else
    rank = bareiss_echelon<BigInt>(g).rank();
  return n - rank;
}

std::vector<KernelVector> kernel_basis(const Graph& g) {
  if (g.order() == 0) return {};
  return kernel_from_echelon(bareiss_echelon<BigInt>(g));
}

NutCertificate verify_nut(const Graph& g) {
  NutCertificate cert;
  cert.graph = g;
  if (g.order() == 0) return cert;
  auto echelon = bareiss_echelon<BigInt>(g);
  cert.nullity = g.order() - echelon.rank();
  if (cert.nullity == 1) {
    auto basis = kernel_from_echelon(echelon);
    cert.kernel = std::move(basis.front());
  }
  cert.is_nut = cert.nullity == 1 && g.order() >= 2 && cert.kernel && cert.kernel->zero_free();
  cert.is_chemical_nut = cert.is_nut && is_chemical(g);
  return cert;
}

namespace {

struct Rat64Overflow {};

long long checked_narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Rat64Overflow{};
  return static_cast<long long>(v);
}

// Minimal exact rational on int64 with overflow signalling.
struct Rat64 {
  long long num = 0;
  long long den = 1;

  static Rat64 make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    return {checked_narrow(n), checked_narrow(d)};
  }

  Rat64 operator+(const Rat64& o) const {
    return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Rat64 operator*(long long k) const { return make(static_cast<__int128>(num) * k, den); }
  Rat64 divided_by(long long k) const { return make(num, static_cast<__int128>(den) * k); }
};

// Nullity plus zero-freeness of a single kernel vector, all in machine words.
bool small_nut_check(const Graph& g) {
  auto echelon = bareiss_echelon<long long>(g);
  const int n = g.order();
  if (n - echelon.rank() != 1) return false;
  std::vector<bool> is_pivot(n, false);
  for (int c : echelon.pivot_cols) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;
  std::vector<Rat64> x(n);
  x[free_col] = {1, 1};
  for (int i = echelon.rank() - 1; i >= 0; --i) {
    const int p = echelon.pivot_cols[i];
    Rat64 s{0, 1};
    for (int j = p + 1; j < n; ++j)
      if (x[j].num != 0 && echelon.rows[i][j] != 0) s = s + x[j] * echelon.rows[i][j];
    x[p] = Rat64{-s.num, s.den}.divided_by(echelon.rows[i][p]);
  }
  for (int v = 0; v < n; ++v)
    if (x[v].num == 0) return false;
  return true;
}

}  // namespace

bool is_nut_graph(const Graph& g) {
  if (g.order() < 2) return false;
  if (int64_safe(g)) {
    try {
      return small_nut_check(g);
    } catch (const Rat64Overflow&) {
      // fall through to the arbitrary-precision path
    }
  }
  return verify_nut(g).is_nut;
}

bool check_kernel_vector(const Graph& g, const KernelVector& x) {
  if (static_cast<int>(x.entries.size()) != g.order())
    fail(Errc::DimensionMismatch, "kernel vector has " + std::to_string(x.entries.size()) +
                                      " entries, graph has order " + std::to_string(g.order()));
  bool nonzero = false;
  for (int v = 0; v < g.order(); ++v) {
    BigInt s(0);
    for (int u : g.neighbors(v)) s += x.entries[u];
    if (s != 0) return false;
    if (x.entries[v] != 0) nonzero = true;
  }
  return nonzero;
}

std::string certificate_to_json(const NutCertificate& cert) {
  nlohmann::json j;
  j["order"] = cert.graph.order();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : cert.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["nullity"] = cert.nullity;
  j["is_nut"] = cert.is_nut;
  j["is_chemical_nut"] = cert.is_chemical_nut;
  if (cert.kernel) {
    auto k = nlohmann::json::array();
    for (const auto& e : cert.kernel->entries) k.push_back(e.str());
    j["kernel"] = std::move(k);
  } else {
    j["kernel"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace nutforge
