#include "nutforge/seeds.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nutforge/planarity.hpp"

#ifndef NUTFORGE_SEED_DIR_DEFAULT
#define NUTFORGE_SEED_DIR_DEFAULT "data/seeds"
#endif

namespace nutforge {

namespace fs = std::filesystem;

const char* seed_flag_name(SeedFlag f) {
  switch (f) {
    case SeedFlag::B: return "B";
    case SeedFlag::P: return "P";
    case SeedFlag::Pi: return "Pi";
    case SeedFlag::N: return "N";
  }
  return "?";
}

const char* seed_role_name(SeedRole r) {
  switch (r) {
    case SeedRole::S: return "S";
    case SeedRole::Pi: return "Pi";
    case SeedRole::N: return "N";
  }
  return "?";
}

namespace {

SeedFlag flag_from_name(const std::string& s, int lineno) {
  if (s == "B") return SeedFlag::B;
  if (s == "P") return SeedFlag::P;
  if (s == "Pi") return SeedFlag::Pi;
  if (s == "N") return SeedFlag::N;
  fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown flag '" + s + "'");
}

SeedRole role_from_name(const std::string& s, int lineno) {
  if (s == "S") return SeedRole::S;
  if (s == "Pi") return SeedRole::Pi;
  if (s == "N") return SeedRole::N;
  fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown role '" + s + "'");
}

std::string seed_dir() {
  if (const char* env = std::getenv("NUTFORGE_SEED_DIR"); env && *env) return env;
  return NUTFORGE_SEED_DIR_DEFAULT;
}

}  // namespace

std::vector<SeedRecord> parse_seed_records(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<BigInt> kernel;
  bool have_kernel = false;
  SeedFlag flag = SeedFlag::B;
  bool have_flag = false;
  std::vector<SeedRole> roles;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    if (line.find(':') != std::string::npos) {
      ls >> head;
      if (head == "kernel:") {
        long long x;
        while (ls >> x) kernel.emplace_back(x);
        have_kernel = true;
      } else if (head == "flag:") {
        std::string f;
        if (!(ls >> f)) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": missing flag value");
        flag = flag_from_name(f, lineno);
        have_flag = true;
      } else if (head == "roles:") {
        std::string r;
        while (ls >> r) roles.push_back(role_from_name(r, lineno));
      } else {
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown field '" + head + "'");
      }
      continue;
    }
    if (n < 0) {
      if (!(ls >> n >> m) || n <= 0 || m < 0) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'n m' header");
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected edge 'u v'");
    edges.emplace_back(u, v);
  }
  if (n < 0) fail(Errc::ParseError, "missing 'n m' header");
  if (static_cast<int>(edges.size()) != m)
    fail(Errc::CountMismatch, "header lists " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  if (!have_kernel) fail(Errc::ParseError, "missing 'kernel:' line");
  if (static_cast<int>(kernel.size()) != n)
    fail(Errc::ParseError,
         "kernel has " + std::to_string(kernel.size()) + " entries for " + std::to_string(n) + " vertices");
  if (!have_flag) fail(Errc::ParseError, "missing 'flag:' line");
  if (roles.empty()) fail(Errc::ParseError, "missing 'roles:' line");

  Graph g(n, edges);
  DegreeSignature sig = degree_signature(g);
  KernelVector kv = normalize_kernel_vector(std::move(kernel));

  std::vector<SeedRecord> out;
  for (SeedRole role : roles) {
    SeedRecord rec;
    rec.role = role;
    rec.flag = flag;
    rec.v3 = sig.v3;
    rec.v2 = sig.v2;
    rec.n = n;
    rec.m = m;
    rec.graph = g;
    rec.kernel = kv;
    rec.id = std::string(seed_role_name(role)) + "-" + std::to_string(sig.v3) + "-" + std::to_string(sig.v2);
    out.push_back(std::move(rec));
  }
  return out;
}

SeedRecord parse_seed(const std::string& text) { return parse_seed_records(text).front(); }

const std::vector<SeedRecord>& all_seeds() {
  static const std::vector<SeedRecord> records = [] {
    const std::string dir = seed_dir();
    if (!fs::is_directory(dir)) fail(Errc::IoError, "seed data directory not found: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<SeedRecord> out;
    for (const auto& path : files) {
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        auto recs = parse_seed_records(buf.str());
        out.insert(out.end(), recs.begin(), recs.end());
      } catch (const Error& e) {
        fail(Errc::ParseError, path + ": " + e.what());
      }
    }
    std::sort(out.begin(), out.end(), [](const SeedRecord& a, const SeedRecord& b) { return a.id < b.id; });
    return out;
  }();
  return records;
}

const SeedRecord& seed_by_id(const std::string& id) {
  for (const auto& rec : all_seeds())
    if (rec.id == id) return rec;
  fail(Errc::NoSuchSeed, id);
}

namespace {

// Flag certification: N non-planar; Pi planar 3-connected; B planar with a
// bridge; P planar 2-connected without bridges.
std::string certify_flag(const SeedRecord& rec) {
  bool planar = is_planar(rec.graph);
  int kappa = connectivity(rec.graph);
  bool bridged = !bridges(rec.graph).empty();
  switch (rec.flag) {
    case SeedFlag::N:
      if (planar) return "flagged N but graph is planar";
      return "";
    case SeedFlag::Pi:
      if (!planar) return "flagged Pi but graph is non-planar";
      if (kappa < 3) return "flagged Pi but connectivity is " + std::to_string(kappa);
      return "";
    case SeedFlag::B:
      if (!planar) return "flagged B but graph is non-planar";
      if (!bridged) return "flagged B but graph has no bridge";
      return "";
    case SeedFlag::P:
      if (!planar) return "flagged P but graph is non-planar";
      if (bridged) return "flagged P but graph has a bridge";
      if (kappa != 2) return "flagged P but connectivity is " + std::to_string(kappa);
      return "";
  }
  return "unknown flag";
}

}  // namespace

SeedVerificationReport verify_all_seeds() {
  SeedVerificationReport report;
  for (const auto& rec : all_seeds()) {
    SeedCheck check;
    check.id = rec.id;
    std::vector<std::string> problems;

    if (rec.n != rec.v3 + rec.v2) problems.push_back("n != v3+v2");
    if (2 * rec.m != 2 * rec.v2 + 3 * rec.v3) problems.push_back("m != v2+3*v3/2");
    if (rec.graph.order() != rec.n || rec.graph.size() != rec.m) problems.push_back("graph order/size mismatch");

    NutCertificate cert = verify_nut(rec.graph);
    if (!cert.is_chemical_nut) problems.push_back("not a chemical nut graph (nullity " + std::to_string(cert.nullity) + ")");
    if (cert.kernel) {
      if (!cert.kernel->equal_up_to_sign(rec.kernel)) problems.push_back("stored kernel differs from computed kernel");
    } else {
      problems.push_back("no kernel vector");
    }
    if (!check_kernel_vector(rec.graph, rec.kernel)) problems.push_back("stored kernel fails neighbour sums");

    std::string flag_problem = certify_flag(rec);
    if (!flag_problem.empty()) problems.push_back(flag_problem);

    check.passed = problems.empty();
    if (check.passed) {
      check.detail = "(" + std::to_string(rec.v3) + "," + std::to_string(rec.v2) + ") n=" + std::to_string(rec.n) +
                     " m=" + std::to_string(rec.m) + " flag=" + seed_flag_name(rec.flag) + " ok";
    } else {
      std::string joined;
      for (const auto& p : problems) joined += (joined.empty() ? "" : "; ") + p;
      check.detail = joined;
      ++report.failures;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace nutforge
