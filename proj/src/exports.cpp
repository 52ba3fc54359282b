#include "percolab/exports.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "double_text.hpp"
#include "percolab/version.hpp"

namespace percolab {

namespace {

std::string fmt(double v) { return double_text(v); }

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

const char* mode_name(BoundaryMode mode) {
  return mode == BoundaryMode::kBottomEdge ? "bottom-edge" : "full-perimeter";
}

void check_ratio_index(int ratio_index) {
  if (ratio_index < 0 || ratio_index >= 4) {
    throw std::invalid_argument("ratio index must be in 0..3");
  }
}

}  // namespace

void write_estimates_csv(std::ostream& out, const ProbabilityEstimates& est) {
  out << "row,col,to_boundary,to_boundary_err,to_anchor1,to_anchor1_err,"
         "to_anchor2,to_anchor2_err,to_both_anchors,to_both_anchors_err,"
         "to_interval,to_interval_err,to_complement,to_complement_err\n";
  for (int row = 0; row < est.spec.height; ++row) {
    for (int col = 0; col < est.spec.width; ++col) {
      const size_t i = static_cast<size_t>(est.spec.site_index(col, row));
      out << row << ',' << col << ',' << fmt(est.to_boundary[i]) << ','
          << fmt(est.to_boundary_err[i]) << ',' << fmt(est.to_anchor1[i]) << ','
          << fmt(est.to_anchor1_err[i]) << ',' << fmt(est.to_anchor2[i]) << ','
          << fmt(est.to_anchor2_err[i]) << ',' << fmt(est.to_both_anchors[i]) << ','
          << fmt(est.to_both_anchors_err[i]) << ',' << fmt(est.to_interval[i]) << ','
          << fmt(est.to_interval_err[i]) << ',' << fmt(est.to_complement[i]) << ','
          << fmt(est.to_complement_err[i]) << '\n';
    }
  }
}

void write_estimates_csv(const std::string& path, const ProbabilityEstimates& est) {
  auto out = open_or_throw(path);
  write_estimates_csv(out, est);
}

void write_ratio_map_csv(std::ostream& out, const RatioMaps& maps, int ratio_index) {
  check_ratio_index(ratio_index);
  const RatioMap& map = maps.ratio[static_cast<size_t>(ratio_index)];
  out << "row,col,value,defined\n";
  for (int row = 0; row < maps.spec.height; ++row) {
    for (int col = 0; col < maps.spec.width; ++col) {
      const size_t i = static_cast<size_t>(maps.spec.site_index(col, row));
      out << row << ',' << col << ',' << (map.defined[i] ? fmt(map.value[i]) : "nan") << ','
          << int(map.defined[i]) << '\n';
    }
  }
}

void write_ratio_map_csv(const std::string& path, const RatioMaps& maps, int ratio_index) {
  auto out = open_or_throw(path);
  write_ratio_map_csv(out, maps, ratio_index);
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& profile) {
  out << "row,value,defined\n";
  for (const ProfilePoint& p : profile) {
    out << p.row << ',' << (p.defined ? fmt(p.value) : "nan") << ',' << int(p.defined) << '\n';
  }
}

void write_profile_csv(const std::string& path, const std::vector<ProfilePoint>& profile) {
  auto out = open_or_throw(path);
  write_profile_csv(out, profile);
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  static const char* names[4] = {"R1", "R2", "R3", "R4"};
  out << "factorization ratio verification\n";
  out << "lattice      : " << report.spec.width << " x " << report.spec.height
      << "  p = " << fmt(report.spec.p) << '\n';
  out << "anchors      : bottom-row columns " << report.spec.anchor1_col << ", "
      << report.spec.anchor2_col << '\n';
  out << "boundary     : " << mode_name(report.mode) << '\n';
  out << "samples      : " << report.n_samples << " in " << report.batch_count
      << " batches, master seed " << report.master_seed << '\n';
  out << "mask radius  : " << report.mask_radius << " (sensitivity mean at radius "
      << report.alt_mask_radius << ")\n";
  out << "pass rule    : |mean - predicted| <= max(" << fmt(report.sigma_threshold)
      << " * error, " << fmt(report.abs_tolerance) << ")\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-5s %-12s %-12s %-12s %-9s %-12s %-8s %s\n", "ratio",
                "mean", "error", "predicted", "dev/sig", "alt-mask", "sites", "status");
  out << line;
  for (int k = 0; k < 4; ++k) {
    const RatioVerification& v = report.ratios[static_cast<size_t>(k)];
    std::snprintf(line, sizeof line, "%-5s %-12.7f %-12.3e %-12.7f %-9.2f %-12.7f %-8" PRId64 " %s\n",
                  names[k], v.mean, v.jackknife_error, v.predicted, v.deviation_sigmas,
                  v.alt_mask_mean, v.sites_used, v.pass ? "pass" : "FAIL");
    out << line;
  }
  out << '\n';
  if (!report.sufficient_statistics) {
    out << "insufficient statistics: need >= 2 batches and defined sites for every ratio\n";
  }
  out << "overall: " << (report.all_pass ? "PASS" : "FAIL") << '\n';
}

void write_report_text(const std::string& path, const VerificationReport& report) {
  auto out = open_or_throw(path);
  write_report_text(out, report);
}

void write_report_kv(std::ostream& out, const VerificationReport& report) {
  out << "version=" << kVersion << '\n';
  out << "width=" << report.spec.width << '\n';
  out << "height=" << report.spec.height << '\n';
  out << "p=" << fmt(report.spec.p) << '\n';
  out << "anchor1_col=" << report.spec.anchor1_col << '\n';
  out << "anchor2_col=" << report.spec.anchor2_col << '\n';
  out << "boundary_mode=" << mode_name(report.mode) << '\n';
  out << "n_samples=" << report.n_samples << '\n';
  out << "master_seed=" << report.master_seed << '\n';
  out << "batch_count=" << report.batch_count << '\n';
  out << "mask_radius=" << report.mask_radius << '\n';
  out << "alt_mask_radius=" << report.alt_mask_radius << '\n';
  out << "sigma_threshold=" << fmt(report.sigma_threshold) << '\n';
  out << "abs_tolerance=" << fmt(report.abs_tolerance) << '\n';
  static const char* keys[4] = {"r1", "r2", "r3", "r4"};
  for (int k = 0; k < 4; ++k) {
    const RatioVerification& v = report.ratios[static_cast<size_t>(k)];
    out << keys[k] << "_mean=" << fmt(v.mean) << '\n';
    out << keys[k] << "_error=" << fmt(v.jackknife_error) << '\n';
    out << keys[k] << "_predicted=" << fmt(v.predicted) << '\n';
    out << keys[k] << "_deviation_sigmas=" << fmt(v.deviation_sigmas) << '\n';
    out << keys[k] << "_alt_mask_mean=" << fmt(v.alt_mask_mean) << '\n';
    out << keys[k] << "_sites=" << v.sites_used << '\n';
    out << keys[k] << "_pass=" << int(v.pass) << '\n';
  }
  out << "sufficient_statistics=" << int(report.sufficient_statistics) << '\n';
  out << "all_pass=" << int(report.all_pass) << '\n';
}

void write_report_kv(const std::string& path, const VerificationReport& report) {
  auto out = open_or_throw(path);
  write_report_kv(out, report);
}

void write_summary_kv(std::ostream& out, const ProbabilityEstimates& est, uint64_t master_seed) {
  out << "version=" << kVersion << '\n';
  out << "width=" << est.spec.width << '\n';
  out << "height=" << est.spec.height << '\n';
  out << "p=" << fmt(est.spec.p) << '\n';
  out << "anchor1_col=" << est.spec.anchor1_col << '\n';
  out << "anchor2_col=" << est.spec.anchor2_col << '\n';
  out << "boundary_mode=" << mode_name(est.mode) << '\n';
  out << "n_samples=" << est.n_samples << '\n';
  out << "master_seed=" << master_seed << '\n';
  out << "pair_probability=" << fmt(est.pair_probability) << '\n';
  out << "pair_error=" << fmt(est.pair_error) << '\n';
}

void write_summary_kv(const std::string& path, const ProbabilityEstimates& est,
                      uint64_t master_seed) {
  auto out = open_or_throw(path);
  write_summary_kv(out, est, master_seed);
}

}  // namespace percolab
