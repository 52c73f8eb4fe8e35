// nutforge: verify, construct, enumerate and realise chemical nut graphs.
//
// Exit codes: 0 = positive result / success, 1 = negative result (not a nut,
// not realisable, invalid construction site, census mismatch), 2 = usage or
// parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "nutforge/canonical.hpp"
#include "nutforge/constructions.hpp"
#include "nutforge/enumeration.hpp"
#include "nutforge/formats.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/kernel.hpp"
#include "nutforge/planarity.hpp"
#include "nutforge/realisability.hpp"
#include "nutforge/reference_census.hpp"
#include "nutforge/seeds.hpp"

using namespace nutforge;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::CountMismatch:
    case Errc::IoError:
    case Errc::OddV3:
    case Errc::OrderBoundExceeded:
    case Errc::OrderTooLarge:
    case Errc::PreconditionUnmet:
    case Errc::NoSuchSeed:
      return kExitUsage;
    default:
      return kExitNo;
  }
}

Graph read_input(const std::string& path, const std::string& format) {
  if (format == "edgelist") return read_graph_file(path, GraphFormat::EdgeList);
  if (format == "graph6") return read_graph_file(path, GraphFormat::Graph6);
  return read_graph_file_auto(path);
}

std::string kernel_line(const KernelVector& k) {
  std::string out = "kernel:";
  for (const auto& e : k.entries) out += " " + e.str();
  return out;
}

void print_graph(const Graph& g, const std::string& format, const KernelVector* kernel) {
  if (format == "graph6") {
    std::cout << write_graph6(g) << '\n';
    if (kernel) std::cout << kernel_line(*kernel) << '\n';
  } else {
    // edge-list output stays parseable: extras ride along as comments
    std::cout << write_edge_list(g);
    if (kernel) std::cout << "# " << kernel_line(*kernel) << '\n';
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"order", g.order()}, {"edges", std::move(edges)}};
}

json kernel_to_json(const KernelVector& k) {
  json out = json::array();
  for (const auto& e : k.entries) out.push_back(e.str());
  return out;
}

int cmd_verify(const std::string& path, const std::string& format, bool as_json) {
  Graph g = read_input(path, format);
  NutCertificate cert = verify_nut(g);
  DegreeSignature sig{};
  bool sig_ok = true;
  try {
    sig = degree_signature(g);
  } catch (const Error&) {
    sig_ok = false;
  }
  auto bs = is_connected(g) ? bridges(g) : std::vector<Edge>{};
  bool planar = is_planar(g);
  int kappa = connectivity(g);

  if (as_json) {
    json j = json::parse(certificate_to_json(cert));
    if (sig_ok) j["signature"] = {{"v3", sig.v3}, {"v2", sig.v2}, {"v1", sig.v1}, {"v0", sig.v0}};
    json jb = json::array();
    for (auto [u, v] : bs) jb.push_back({u, v});
    j["bridges"] = std::move(jb);
    j["planar"] = planar;
    j["connectivity"] = kappa;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "order: " << g.order() << "  size: " << g.size() << '\n';
    if (sig_ok)
      std::cout << "signature: v3=" << sig.v3 << " v2=" << sig.v2 << " v1=" << sig.v1 << " v0=" << sig.v0 << '\n';
    std::cout << "chemical: " << (is_chemical(g) ? "yes" : "no") << '\n';
    std::cout << "nullity: " << cert.nullity << '\n';
    std::cout << "nut: " << (cert.is_nut ? "yes" : "no") << '\n';
    std::cout << "chemical nut: " << (cert.is_chemical_nut ? "yes" : "no") << '\n';
    if (cert.kernel) std::cout << kernel_line(*cert.kernel) << '\n';
    std::cout << "bridges:";
    for (auto [u, v] : bs) std::cout << " (" << u << ',' << v << ')';
    std::cout << '\n';
    std::cout << "connectivity: " << kappa << '\n';
    std::cout << "planar: " << (planar ? "yes" : "no") << '\n';
  }
  return cert.is_chemical_nut ? kExitYes : kExitNo;
}

struct SiteSpec {
  int u = -1;
  int v = -1;
};

SiteSpec parse_edge_flag(const std::string& s) {
  SiteSpec out;
  auto comma = s.find(',');
  if (comma == std::string::npos) fail(Errc::ParseError, "--edge expects 'u,v'");
  try {
    out.u = std::stoi(s.substr(0, comma));
    out.v = std::stoi(s.substr(comma + 1));
  } catch (const std::exception&) {
    fail(Errc::ParseError, "--edge expects integer endpoints");
  }
  return out;
}

int run_construct_step(const Graph& g, const ConstructionStep& step, bool with_kernel,
                       const std::string& format) {
  Graph out = apply_step(g, step);
  if (with_kernel) {
    NutCertificate cert = verify_nut(g);
    if (!cert.is_nut) {
      std::cerr << "--kernel requires a nut graph input (nullity " << cert.nullity << ")\n";
      return kExitNo;
    }
    KernelVector k = apply_step_kernel(g, step, *cert.kernel);
    print_graph(out, format, &k);
  } else {
    print_graph(out, format, nullptr);
  }
  return kExitYes;
}

int cmd_census(int max_n, bool compare_paper, int jobs, const std::string& out_path) {
  CensusOptions opts;
  opts.jobs = jobs;
  CensusTable table = census(max_n, opts);
  std::string csv = census_to_csv(table);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail(Errc::IoError, "cannot write " + out_path);
    out << csv;
    std::cerr << "wrote " << out_path << '\n';
  } else {
    std::cout << csv;
  }
  if (compare_paper) {
    auto diffs = compare_with_reference(table);
    if (diffs.empty()) {
      std::cerr << "census matches the published table on all " << table.cells.size() << " cells\n";
    } else {
      for (const auto& d : diffs) {
        std::cerr << "mismatch at (" << d.v3 << "," << d.v2 << "): expected ";
        if (d.expected < 0)
          std::cerr << "no graphs at all";
        else
          std::cerr << d.expected;
        std::cerr << ", computed " << d.actual << '\n';
      }
      return kExitNo;
    }
  }
  return kExitYes;
}

int cmd_betti(int n, bool as_json) {
  auto sizes = betti_spectrum(n);
  const int max_betti = (n + 2) / 2;  // ceil((n+1)/2)
  std::vector<int> missing;
  for (int b = 2; b <= max_betti; ++b)
    if (!sizes.count(n + b - 1)) missing.push_back(b);
  if (as_json) {
    json j;
    j["n"] = n;
    j["sizes"] = sizes;
    json betti = json::array();
    for (int m : sizes) betti.push_back(m - n + 1);
    j["betti"] = std::move(betti);
    j["missing_betti"] = missing;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n = " << n << ": achievable m:";
    for (int m : sizes) std::cout << ' ' << m;
    std::cout << '\n';
    std::cout << "cycle-space range: 2.." << max_betti << "; missing m-n+1 values:";
    for (int b : missing) std::cout << ' ' << b;
    if (missing.empty()) std::cout << " none";
    std::cout << '\n';
  }
  return sizes.empty() ? kExitNo : kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chemical nut graph toolkit"};
  app.require_subcommand(1);

  // verify
  std::string v_path, v_format = "auto";
  bool v_json = false;
  auto* verify = app.add_subcommand("verify", "certify a graph file as a chemical nut graph");
  verify->add_option("file", v_path, "graph file")->required();
  verify->add_option("--format", v_format, "edgelist|graph6|auto")->check(CLI::IsMember({"edgelist", "graph6", "auto"}));
  verify->add_flag("--json", v_json, "machine-readable certificate");

  // construct
  auto* construct = app.add_subcommand("construct", "apply a nut-preserving expansion");
  std::string c_path, c_format = "edgelist", c_edge, c_trace_path;
  int c_vertex = -1;
  bool c_kernel = false;
  auto* c_bridge = construct->add_subcommand("bridge", "insert two vertices on a bridge");
  auto* c_subdiv = construct->add_subcommand("subdivide", "insert four vertices on an edge");
  auto* c_fowler = construct->add_subcommand("fowler", "expand about a vertex of degree >= 2");
  auto* c_replay = construct->add_subcommand("replay", "replay a construction trace from its seed");
  for (auto* sc : {c_bridge, c_subdiv, c_fowler}) {
    sc->add_option("file", c_path, "input graph file")->required();
    sc->add_option("--format", c_format, "edgelist|graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    sc->add_flag("--kernel", c_kernel, "append the propagated kernel vector");
  }
  c_bridge->add_option("--edge", c_edge, "bridge endpoints 'u,v'")->required();
  c_subdiv->add_option("--edge", c_edge, "edge endpoints 'u,v'")->required();
  c_fowler->add_option("--vertex", c_vertex, "expansion vertex")->required();
  c_replay->add_option("--trace", c_trace_path, "trace file (seed: line plus steps)")->required();
  c_replay->add_option("--format", c_format, "edgelist|graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  c_replay->add_flag("--kernel", c_kernel, "append the propagated kernel vector");

  // realise
  int r_v3 = 0, r_v2 = 0;
  bool r_planar = false, r_kernel = false;
  std::string r_format = "edgelist", r_trace_out;
  auto* realise_cmd = app.add_subcommand("realise", "construct a chemical nut graph with a given signature");
  realise_cmd->add_option("v3", r_v3, "number of degree-3 vertices")->required();
  realise_cmd->add_option("v2", r_v2, "number of degree-2 vertices")->required();
  realise_cmd->add_flag("--planar", r_planar, "require a planar realisation");
  realise_cmd->add_flag("--kernel", r_kernel, "append the kernel vector");
  realise_cmd->add_option("--format", r_format, "edgelist|graph6|json")
      ->check(CLI::IsMember({"edgelist", "graph6", "json"}));
  realise_cmd->add_option("--emit-trace", r_trace_out, "write the construction trace to a file");

  // realisable
  int q_v3 = 0, q_v2 = 0;
  bool q_json = false;
  auto* realisable_cmd = app.add_subcommand("realisable", "decide whether a signature admits a chemical nut graph");
  realisable_cmd->add_option("v3", q_v3)->required();
  realisable_cmd->add_option("v2", q_v2)->required();
  realisable_cmd->add_flag("--json", q_json);

  // census
  int n_max = 14, n_jobs = 1;
  bool n_compare = false;
  std::string n_out;
  auto* census_cmd = app.add_subcommand("census", "enumerate chemical nut graph counts by signature");
  census_cmd->add_option("--max-n", n_max, "order bound (default 14)");
  census_cmd->add_flag("--compare-paper", n_compare, "diff against the published table");
  census_cmd->add_option("--jobs", n_jobs, "worker threads");
  census_cmd->add_option("--out", n_out, "write CSV here instead of stdout");

  // seeds
  auto* seeds_cmd = app.add_subcommand("seeds", "embedded seed database");
  auto* seeds_list = seeds_cmd->add_subcommand("list", "list all records");
  (void)seeds_list;
  std::string s_id, s_format = "edgelist";
  auto* seeds_show = seeds_cmd->add_subcommand("show", "print one seed record");
  seeds_show->add_option("id", s_id, "record id, e.g. S-2-7")->required();
  seeds_show->add_option("--format", s_format, "edgelist|graph6|json")
      ->check(CLI::IsMember({"edgelist", "graph6", "json"}));
  auto* seeds_verify = seeds_cmd->add_subcommand("verify", "re-certify every record");
  (void)seeds_verify;
  seeds_cmd->require_subcommand(1);

  // betti
  int b_n = 0;
  bool b_json = false;
  auto* betti_cmd = app.add_subcommand("betti", "achievable edge counts for a given order");
  betti_cmd->add_option("n", b_n, "graph order")->required();
  betti_cmd->add_flag("--json", b_json);

  // polyhedral / toroidal
  int p_v3 = 0, t_n = 0;
  auto* poly_cmd = app.add_subcommand("polyhedral", "decide cubic polyhedral realisability for v3");
  poly_cmd->add_option("v3", p_v3)->required();
  auto* toro_cmd = app.add_subcommand("toroidal", "decide toroidal cubic realisability for order n");
  toro_cmd->add_option("n", t_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(v_path, v_format, v_json);

    if (*construct) {
      if (*c_replay) {
        std::ifstream in(c_trace_path);
        if (!in) fail(Errc::IoError, "cannot open " + c_trace_path);
        std::stringstream buf;
        buf << in.rdbuf();
        ConstructionTrace trace = parse_trace(buf.str());
        auto [g, k] = apply_trace(seed_by_id(trace.seed_id), trace);
        print_graph(g, c_format, c_kernel ? &k : nullptr);
        return kExitYes;
      }
      Graph g = read_input(c_path, "auto");
      ConstructionStep step{};
      if (*c_bridge) {
        auto site = parse_edge_flag(c_edge);
        step = {StepKind::Bridge, site.u, site.v};
      } else if (*c_subdiv) {
        auto site = parse_edge_flag(c_edge);
        step = {StepKind::Subdivide4, site.u, site.v};
      } else {
        step = {StepKind::Fowler, c_vertex, -1};
      }
      return run_construct_step(g, step, c_kernel, c_format);
    }

    if (*realise_cmd) {
      Realisation real = realise(ParameterPair(r_v3, r_v2), r_planar);
      if (!r_trace_out.empty()) {
        std::ofstream out(r_trace_out);
        if (!out) fail(Errc::IoError, "cannot write " + r_trace_out);
        out << write_trace(real.trace);
      }
      if (r_format == "json") {
        json j = graph_to_json(real.graph);
        j["kernel"] = kernel_to_json(real.kernel);
        j["trace"] = json::parse("{}");
        j["trace"]["seed"] = real.trace.seed_id;
        json steps = json::array();
        for (const auto& s : real.trace.steps) {
          json step{{"kind", step_kind_name(s.kind)}, {"site", json::array({s.site_u})}};
          if (s.kind != StepKind::Fowler) step["site"].push_back(s.site_v);
          steps.push_back(std::move(step));
        }
        j["trace"]["steps"] = std::move(steps);
        std::cout << j.dump(2) << '\n';
      } else {
        print_graph(real.graph, r_format, r_kernel ? &real.kernel : nullptr);
        std::cerr << "seed " << real.trace.seed_id << " + " << real.trace.steps.size() << " steps\n";
      }
      return kExitYes;
    }

    if (*realisable_cmd) {
      RealisabilityVerdict v = is_realisable(ParameterPair(q_v3, q_v2));
      if (q_json) {
        json j{{"v3", q_v3},
               {"v2", q_v2},
               {"realisable", v.realisable},
               {"planar_realisable", v.planar_realisable},
               {"reason", v.reason}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (v.realisable ? "realisable" : "not realisable") << " (planar: " << (v.planar_realisable ? "yes" : "no")
                  << "): " << v.reason << '\n';
      }
      return v.realisable ? kExitYes : kExitNo;
    }

    if (*census_cmd) return cmd_census(n_max, n_compare, n_jobs, n_out);

    if (*seeds_cmd) {
      if (*seeds_show) {
        const SeedRecord& rec = seed_by_id(s_id);
        if (s_format == "json") {
          json j = graph_to_json(rec.graph);
          j["id"] = rec.id;
          j["v3"] = rec.v3;
          j["v2"] = rec.v2;
          j["flag"] = seed_flag_name(rec.flag);
          j["kernel"] = kernel_to_json(rec.kernel);
          std::cout << j.dump(2) << '\n';
        } else {
          print_graph(rec.graph, s_format, &rec.kernel);
          if (s_format != "graph6") std::cout << "# flag: " << seed_flag_name(rec.flag) << '\n';
          std::cerr << rec.id << " (" << rec.v3 << "," << rec.v2 << ") flag=" << seed_flag_name(rec.flag) << '\n';
        }
        return kExitYes;
      }
      if (*seeds_verify) {
        SeedVerificationReport report = verify_all_seeds();
        for (const auto& check : report.checks)
          std::cout << (check.passed ? "ok   " : "FAIL ") << check.id << ": " << check.detail << '\n';
        std::cerr << report.checks.size() << " records, " << report.failures << " failures\n";
        return report.ok() ? kExitYes : kExitNo;
      }
      for (const auto& rec : all_seeds())
        std::cout << rec.id << " (" << rec.v3 << "," << rec.v2 << ") n=" << rec.n << " m=" << rec.m
                  << " flag=" << seed_flag_name(rec.flag) << '\n';
      return kExitYes;
    }

    if (*betti_cmd) return cmd_betti(b_n, b_json);
    if (*poly_cmd) {
      bool yes = is_polyhedral_realisable(ParameterPair(p_v3, 0));
      std::cout << (yes ? "realisable" : "not realisable") << '\n';
      return yes ? kExitYes : kExitNo;
    }
    if (*toro_cmd) {
      bool yes = is_toroidal_cubic_realisable(t_n);
      std::cout << (yes ? "realisable" : "not realisable") << '\n';
      return yes ? kExitYes : kExitNo;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
