// Command-line front end: predict analytic correlator values, run sampling
// experiments, verify checkpoints against the predicted constants, export
// ratio maps and profiles. Exit status: 0 success (verify: all ratios pass),
// 1 statistical fail, 2 usage or data error.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "percolab/analysis.hpp"
#include "percolab/checkpoint.hpp"
#include "percolab/config.hpp"
#include "percolab/correlators.hpp"
#include "percolab/estimator.hpp"
#include "percolab/exports.hpp"
#include "percolab/geometry.hpp"
#include "percolab/version.hpp"

namespace {

using namespace percolab;

// "x+yi" with an optional real part and an optional 'i' coefficient sign,
// e.g. "0+1i", "-2.5+3e-2i", "4i".
BulkPoint parse_bulk_point(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.size() < 2 || (s.back() != 'i' && s.back() != 'j')) {
    throw std::invalid_argument("bulk point must look like x+yi, got '" + text + "'");
  }
  s.pop_back();
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_text = "0";
  std::string im_text = s;
  if (split != std::string::npos) {
    re_text = s.substr(0, split);
    im_text = s.substr(split);
  }
  if (im_text == "+" || im_text.empty()) im_text = "1";
  if (im_text == "-") im_text = "-1";
  auto parse = [&text](const std::string& part) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bulk point must look like x+yi, got '" + text + "'");
    }
    if (used != part.size()) {
      throw std::invalid_argument("bulk point must look like x+yi, got '" + text + "'");
    }
    return v;
  };
  return {parse(re_text), parse(im_text)};
}

void print_constants() {
  const UniversalConstants c = universal_constants();
  std::printf("universal constants:\n");
  std::printf("  c1 = %.16g\n", c.c1);
  std::printf("  c2 = %.16g\n", c.c2);
  std::printf("  c3 = %.16g\n", c.c3);
  std::printf("  c4 = %.16g\n", c.c4);
}

int run_predict(std::optional<double> x1, std::optional<double> x2,
                const std::string& z_text, bool constants_only) {
  if (constants_only && !x1 && !x2 && z_text.empty()) {
    print_constants();
    return 0;
  }
  if (!x1 || !x2 || z_text.empty()) {
    throw std::invalid_argument("predict needs --x1, --x2 and --z (or --constants alone)");
  }
  AnchorGeometry g{{*x1}, {*x2}, parse_bulk_point(z_text)};
  validate(g);
  const double zeta = subtended_angle(g);
  const FactorizationResiduals r = residuals(g);
  std::printf("geometry: x1 = %.16g, x2 = %.16g, z = %.16g + %.16gi\n", g.x1.x, g.x2.x, g.z.x,
              g.z.y);
  std::printf("zeta      = %.16g\n", zeta);
  std::printf("sin(zeta) = %.16g\n", sin_subtended_angle(g));
  std::printf("densities (unit normalization):\n");
  std::printf("  pair(x1,x2)          = %.16g\n", p_boundary_pair(g.x1, g.x2));
  std::printf("  bulk(z)              = %.16g\n", p_bulk(g.z));
  std::printf("  anchor1-bulk(x1,z)   = %.16g\n", p_anchor_bulk(g.x1, g.z));
  std::printf("  anchor2-bulk(x2,z)   = %.16g\n", p_anchor_bulk(g.x2, g.z));
  std::printf("  pair-bulk(x1,x2,z)   = %.16g\n", p_pair_bulk(g));
  std::printf("  interval-bulk(I,z)   = %.16g\n", p_interval_bulk(g));
  std::printf("  complement-bulk(^I,z)= %.16g\n", p_complement_bulk(g));
  std::printf("residuals: r1 = %.16g  r2 = %.16g  r3 = %.16g  r4 = %.16g\n", r.r1, r.r2, r.r3,
              r.r4);
  print_constants();
  return 0;
}

AnalysisOptions analysis_options(const RunConfig& config) {
  AnalysisOptions options;
  options.mask_radius = config.mask_radius;
  options.alt_mask_radius = config.alt_mask_radius;
  options.sigma_threshold = config.sigma_threshold;
  options.abs_tolerance = config.abs_tolerance;
  return options;
}

int run_simulate(const RunConfig& config) {
  const LatticeSpec spec = config.lattice();
  const uint64_t seed = resolved_seed(config);
  RunOptions options;
  options.threads = config.threads;
  options.batches = config.batches;
  options.mode = config.boundary_mode;

  const std::filesystem::path out_dir(config.out_dir);
  std::filesystem::create_directories(out_dir);

  std::printf("simulate: %d x %d at p = %.7f, anchors %d/%d, %llu samples, seed %llu, %d thread%s\n",
              spec.width, spec.height, spec.p, spec.anchor1_col, spec.anchor2_col,
              static_cast<unsigned long long>(config.samples),
              static_cast<unsigned long long>(seed), config.threads,
              config.threads == 1 ? "" : "s");
  const BatchedCounts counts = run_experiment_batched(spec, config.samples, seed, options);
  const ProbabilityEstimates est = estimate(counts.total());

  save_checkpoint((out_dir / "checkpoint.bin").string(), counts);
  write_manifest((out_dir / "manifest.txt").string(), config, seed);
  write_estimates_csv((out_dir / "estimates.csv").string(), est);
  write_summary_kv((out_dir / "summary.kv").string(), est, seed);

  std::printf("pair estimate: %.7f +- %.7f\n", est.pair_probability, est.pair_error);
  std::printf("wrote %s, manifest.txt, estimates.csv, summary.kv\n",
              (out_dir / "checkpoint.bin").string().c_str());
  return 0;
}

int run_verify(const std::string& checkpoint_path, const RunConfig& config,
               const std::string& out_flag) {
  const BatchedCounts counts = load_checkpoint(checkpoint_path);
  const VerificationReport report = masked_average(counts, analysis_options(config));

  std::filesystem::path out_dir = out_flag.empty()
                                      ? std::filesystem::path(checkpoint_path).parent_path()
                                      : std::filesystem::path(out_flag);
  if (out_dir.empty()) out_dir = ".";
  std::filesystem::create_directories(out_dir);
  write_report_text((out_dir / "report.txt").string(), report);
  write_report_kv((out_dir / "report.kv").string(), report);
  write_report_text(std::cout, report);
  std::printf("wrote %s and report.kv\n", (out_dir / "report.txt").string().c_str());
  return report.all_pass ? 0 : 1;
}

int run_export(const std::string& checkpoint_path, const RunConfig& config,
               const std::string& out_flag, const std::vector<int>& extra_columns) {
  const BatchedCounts counts = load_checkpoint(checkpoint_path);
  RatioMaps maps = ratio_maps(estimate(counts.total()));
  apply_anchor_mask(maps, config.mask_radius);

  std::filesystem::path out_dir = out_flag.empty()
                                      ? std::filesystem::path(checkpoint_path).parent_path()
                                      : std::filesystem::path(out_flag);
  if (out_dir.empty()) out_dir = ".";
  std::filesystem::create_directories(out_dir);

  static const char* map_names[4] = {"map_r1.csv", "map_r2.csv", "map_r3.csv", "map_r4.csv"};
  for (int k = 0; k < 4; ++k) {
    write_ratio_map_csv((out_dir / map_names[k]).string(), maps, k);
  }
  std::vector<int> columns = {maps.spec.anchor1_col, maps.spec.width / 2};
  columns.insert(columns.end(), extra_columns.begin(), extra_columns.end());
  for (int col : columns) {
    const std::string name = "profile_r1_col" + std::to_string(col) + ".csv";
    write_profile_csv((out_dir / name).string(), line_profile(maps, 0, col));
  }
  std::printf("wrote 4 ratio maps and %zu profiles to %s\n", columns.size(),
              out_dir.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical percolation correlation laboratory"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // predict
  auto* predict = app.add_subcommand("predict", "print analytic correlator values");
  std::optional<double> x1, x2;
  std::string z_text;
  bool constants_only = false;
  predict->add_option("--x1", x1, "first boundary anchor coordinate");
  predict->add_option("--x2", x2, "second boundary anchor coordinate");
  predict->add_option("--z", z_text, "bulk point as x+yi with y > 0");
  predict->add_flag("--constants", constants_only, "print only the universal constants");

  // shared run options
  std::string config_path, out_flag, checkpoint_path, boundary_text;
  std::optional<uint64_t> seed_flag, samples_flag;
  std::optional<int> threads_flag, mask_flag, alt_mask_flag;
  std::optional<double> sigma_flag, abs_tol_flag;
  auto add_run_flags = [&](CLI::App* cmd, bool with_sampling) {
    cmd->add_option("--config", config_path, "key = value config file");
    cmd->add_option("--mask-radius", mask_flag, "anchor exclusion radius (Chebyshev)");
    cmd->add_option("--out", out_flag, "output directory");
    if (with_sampling) {
      cmd->add_option("--seed", seed_flag, "master seed (overrides config and environment)");
      cmd->add_option("--samples", samples_flag, "number of samples");
      cmd->add_option("--threads", threads_flag, "worker threads");
      cmd->add_option("--boundary-mode", boundary_text, "full-perimeter or bottom-edge")
          ->check(CLI::IsMember({"full-perimeter", "full", "bottom-edge", "bottom"}));
    }
  };

  auto* simulate = app.add_subcommand("simulate", "run a sampling experiment");
  add_run_flags(simulate, true);

  auto* verify = app.add_subcommand("verify", "check a checkpoint against the constants");
  verify->add_option("--checkpoint", checkpoint_path, "checkpoint file")->required();
  add_run_flags(verify, false);
  verify->add_option("--alt-mask-radius", alt_mask_flag, "sensitivity-check mask radius");
  verify->add_option("--sigma-threshold", sigma_flag, "pass threshold in jackknife sigmas");
  verify->add_option("--abs-tolerance", abs_tol_flag, "absolute tolerance floor");

  std::vector<int> extra_columns;
  auto* exporter = app.add_subcommand("export", "write ratio maps and profiles as CSV");
  exporter->add_option("--checkpoint", checkpoint_path, "checkpoint file")->required();
  add_run_flags(exporter, false);
  exporter->add_option("--column", extra_columns, "extra profile column (repeatable)");

  try {
    app.parse(argc, argv);

    RunConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (seed_flag) config.seed = *seed_flag;
    if (samples_flag) config.samples = *samples_flag;
    if (threads_flag) config.threads = *threads_flag;
    if (mask_flag) config.mask_radius = *mask_flag;
    if (alt_mask_flag) config.alt_mask_radius = *alt_mask_flag;
    if (sigma_flag) config.sigma_threshold = *sigma_flag;
    if (abs_tol_flag) config.abs_tolerance = *abs_tol_flag;
    if (!out_flag.empty()) config.out_dir = out_flag;
    if (!boundary_text.empty()) {
      config.boundary_mode = (boundary_text == "bottom-edge" || boundary_text == "bottom")
                                 ? BoundaryMode::kBottomEdge
                                 : BoundaryMode::kFullPerimeter;
    }

    if (predict->parsed()) return run_predict(x1, x2, z_text, constants_only);
    if (simulate->parsed()) return run_simulate(config);
    if (verify->parsed()) return run_verify(checkpoint_path, config, out_flag);
    if (exporter->parsed()) return run_export(checkpoint_path, config, out_flag, extra_columns);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
