#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "percolab/lattice.hpp"

namespace percolab {

// Flat key = value run configuration. '#' lines and blank lines are skipped;
// unknown keys are rejected so typos cannot silently fall back to defaults.
// A manifest written by write_manifest is itself a loadable config, which is
// what makes a rerun bit-reproducible.
struct RunConfig {
  int width = 510;
  int height = 510;
  double p = 0.5927463;
  int anchor1_col = 192;
  int anchor2_col = 320;
  uint64_t samples = 1000;
  std::optional<uint64_t> seed;  // unset: PERCOLAB_SEED env, then 1
  int threads = 1;
  int batches = 50;
  int mask_radius = 8;
  int alt_mask_radius = -1;  // <0 means mask_radius + 4
  double sigma_threshold = 3.0;
  double abs_tolerance = 0.003;
  BoundaryMode boundary_mode = BoundaryMode::kFullPerimeter;
  std::string out_dir = "out";

  LatticeSpec lattice() const;
};

// Throws std::invalid_argument naming the offending line on bad syntax, an
// unknown key, or an unparsable value. Range violations surface later via
// lattice spec validation.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);  // runtime_error when unreadable

// Seed precedence: explicit config value, then PERCOLAB_SEED from the
// environment, then 1.
uint64_t resolved_seed(const RunConfig& config);

// Writes every key explicitly with the seed that was actually used, so
// loading the manifest reproduces the run regardless of the environment.
void write_manifest(std::ostream& out, const RunConfig& config, uint64_t seed_used);
void write_manifest(const std::string& path, const RunConfig& config, uint64_t seed_used);

}  // namespace percolab
