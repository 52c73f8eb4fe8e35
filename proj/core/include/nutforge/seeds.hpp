#pragma once

#include <string>
#include <vector>

#include "nutforge/graph.hpp"
#include "nutforge/kernel.hpp"

namespace nutforge {

// Certified class of a seed graph: planar with a bridge, planar 2-connected,
// polyhedral (planar 3-connected), or non-planar.
enum class SeedFlag { B, P, Pi, N };
enum class SeedRole { S, Pi, N };

const char* seed_flag_name(SeedFlag f);
const char* seed_role_name(SeedRole r);

struct SeedRecord {
  std::string id;  // role-qualified key, e.g. "S-2-7", "Pi-12-0"
  SeedRole role;
  SeedFlag flag;
  int v3 = 0;
  int v2 = 0;
  int n = 0;
  int m = 0;
  Graph graph;
  KernelVector kernel;  // primitive sign-normalised form of the stored vector
};

// One record per appendix role; graphs shared between appendices appear once
// per role under distinct ids. Loaded once from the data directory
// (NUTFORGE_SEED_DIR overrides the compiled-in default).
const std::vector<SeedRecord>& all_seeds();

const SeedRecord& seed_by_id(const std::string& id);

// Parses one data file: edge list header, "kernel:", "flag:" and "roles:"
// lines. Returns one record per declared role.
std::vector<SeedRecord> parse_seed_records(const std::string& text);
SeedRecord parse_seed(const std::string& text);

struct SeedCheck {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct SeedVerificationReport {
  std::vector<SeedCheck> checks;  // one line per record
  int failures = 0;

  bool ok() const { return failures == 0; }
};

// Re-certifies every record: signature arithmetic, chemical nut certificate,
// stored kernel against the computed one (up to sign), and the class flag
// (B: bridge + planar, P: 2-connected planar bridgeless, Pi: planar
// 3-connected, N: non-planar).
SeedVerificationReport verify_all_seeds();

}  // namespace nutforge
