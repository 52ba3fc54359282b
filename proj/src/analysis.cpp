#include "percolab/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "percolab/correlators.hpp"

namespace percolab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void set_entry(RatioMap& map, size_t i, double numerator, double denominator) {
  if (numerator > 0.0 && denominator > 0.0) {
    map.value[i] = numerator / denominator;
    map.defined[i] = 1;
  } else {
    map.value[i] = kNaN;
    map.defined[i] = 0;
  }
}

}  // namespace

RatioMaps ratio_maps(const ProbabilityEstimates& est) {
  const size_t n = est.to_boundary.size();
  RatioMaps maps;
  maps.spec = est.spec;
  maps.masked.assign(n, 0);
  for (RatioMap& m : maps.ratio) {
    m.value.assign(n, kNaN);
    m.defined.assign(n, 0);
  }
  const double pair = est.pair_probability;
  for (size_t i = 0; i < n; ++i) {
    const double both = est.to_both_anchors[i];
    const double a1 = est.to_anchor1[i];
    const double a2 = est.to_anchor2[i];
    const double bnd = est.to_boundary[i];
    const double in = est.to_interval[i];
    const double out = est.to_complement[i];
    set_entry(maps.ratio[0], i, both, std::sqrt(pair * a1 * a2));
    set_entry(maps.ratio[1], i, both * bnd, pair * in * out);
    set_entry(maps.ratio[2], i, in * out * std::sqrt(pair), bnd * std::sqrt(a1 * a2));
    set_entry(maps.ratio[3], i, in * out * both, bnd * a1 * a2);
  }
  return maps;
}

void apply_anchor_mask(RatioMaps& maps, int mask_radius) {
  if (mask_radius < 0) {
    throw std::invalid_argument("mask radius must be >= 0");
  }
  const LatticeSpec& spec = maps.spec;
  for (int row = 0; row < spec.height; ++row) {
    for (int col = 0; col < spec.width; ++col) {
      const int d1 = std::max(std::abs(col - spec.anchor1_col), row);
      const int d2 = std::max(std::abs(col - spec.anchor2_col), row);
      if (std::min(d1, d2) <= mask_radius) {
        maps.masked[static_cast<size_t>(spec.site_index(col, row))] = 1;
      }
    }
  }
}

double masked_mean(const RatioMaps& maps, int ratio_index) {
  if (ratio_index < 0 || ratio_index >= 4) {
    throw std::invalid_argument("ratio index must be in 0..3");
  }
  size_t unmasked = 0;
  for (uint8_t m : maps.masked) unmasked += m ? 0 : 1;
  if (unmasked == 0) {
    throw std::invalid_argument("mask excludes every lattice site");
  }
  const RatioMap& map = maps.ratio[static_cast<size_t>(ratio_index)];
  double sum = 0.0;
  int64_t used = 0;
  for (size_t i = 0; i < map.value.size(); ++i) {
    if (maps.masked[i] || !map.defined[i]) continue;
    sum += map.value[i];
    ++used;
  }
  return used > 0 ? sum / static_cast<double>(used) : kNaN;
}

std::vector<ProfilePoint> line_profile(const RatioMaps& maps, int ratio_index, int column) {
  if (ratio_index < 0 || ratio_index >= 4) {
    throw std::invalid_argument("ratio index must be in 0..3");
  }
  if (column < 0 || column >= maps.spec.width) {
    throw std::invalid_argument("profile column out of range");
  }
  const RatioMap& map = maps.ratio[static_cast<size_t>(ratio_index)];
  std::vector<ProfilePoint> profile;
  profile.reserve(static_cast<size_t>(maps.spec.height));
  for (int row = 0; row < maps.spec.height; ++row) {
    const size_t i = static_cast<size_t>(maps.spec.site_index(column, row));
    profile.push_back({row, map.value[i], map.defined[i] != 0});
  }
  return profile;
}

ProbabilityEstimates leave_one_out_estimate(const BatchedCounts& counts, size_t batch_index) {
  if (batch_index >= counts.batches.size()) {
    throw std::invalid_argument("batch index out of range");
  }
  EventCounts rest = EventCounts::zero(counts.spec, counts.mode);
  for (size_t b = 0; b < counts.batches.size(); ++b) {
    if (b != batch_index) rest.merge(counts.batches[b]);
  }
  return estimate(rest);
}

VerificationReport masked_average(const BatchedCounts& counts, const AnalysisOptions& options) {
  const EventCounts total = counts.total();
  if (total.n_samples == 0) {
    throw std::invalid_argument("masked_average: no samples");
  }
  const int alt_radius =
      options.alt_mask_radius >= 0 ? options.alt_mask_radius : options.mask_radius + 4;

  VerificationReport report;
  report.spec = counts.spec;
  report.mode = counts.mode;
  report.n_samples = total.n_samples;
  report.master_seed = counts.master_seed;
  report.batch_count = static_cast<int>(counts.batches.size());
  report.mask_radius = options.mask_radius;
  report.alt_mask_radius = alt_radius;
  report.sigma_threshold = options.sigma_threshold;
  report.abs_tolerance = options.abs_tolerance;

  RatioMaps maps = ratio_maps(estimate(total));
  apply_anchor_mask(maps, options.mask_radius);
  RatioMaps alt_maps = maps;
  for (uint8_t& m : alt_maps.masked) m = 0;
  apply_anchor_mask(alt_maps, alt_radius);
  // The sensitivity mask is advisory; swallowing the lattice only blanks it.
  bool alt_usable = false;
  for (uint8_t m : alt_maps.masked) alt_usable = alt_usable || m == 0;

  const UniversalConstants constants = universal_constants();
  const double predicted[4] = {constants.c1, constants.c2, constants.c3, constants.c4};

  const size_t n_batches = counts.batches.size();
  // Jackknife replicate means; replicate r excludes batch r.
  std::vector<std::array<double, 4>> replicate_means;
  if (n_batches >= 2) {
    replicate_means.reserve(n_batches);
    for (size_t b = 0; b < n_batches; ++b) {
      RatioMaps rep = ratio_maps(leave_one_out_estimate(counts, b));
      rep.masked = maps.masked;
      std::array<double, 4> means{};
      for (int k = 0; k < 4; ++k) means[static_cast<size_t>(k)] = masked_mean(rep, k);
      replicate_means.push_back(means);
    }
  }

  report.sufficient_statistics = n_batches >= 2;
  report.all_pass = true;
  for (int k = 0; k < 4; ++k) {
    RatioVerification& v = report.ratios[static_cast<size_t>(k)];
    v.predicted = predicted[k];
    v.mean = masked_mean(maps, k);
    v.alt_mask_mean = alt_usable ? masked_mean(alt_maps, k) : kNaN;
    const RatioMap& map = maps.ratio[static_cast<size_t>(k)];
    for (size_t i = 0; i < map.value.size(); ++i) {
      if (!maps.masked[i] && map.defined[i]) ++v.sites_used;
    }
    v.defined = v.sites_used > 0 && std::isfinite(v.mean);
    if (!v.defined || n_batches < 2) {
      v.jackknife_error = kNaN;
      v.deviation_sigmas = kNaN;
      v.pass = false;
      report.sufficient_statistics = false;
      report.all_pass = false;
      continue;
    }
    double rep_sum = 0.0;
    size_t rep_used = 0;
    for (const auto& means : replicate_means) {
      if (std::isfinite(means[static_cast<size_t>(k)])) {
        rep_sum += means[static_cast<size_t>(k)];
        ++rep_used;
      }
    }
    if (rep_used < n_batches) {
      // Some replicate lost all its defined sites: too little data to quote
      // a jackknife error.
      v.jackknife_error = kNaN;
      v.deviation_sigmas = kNaN;
      v.pass = false;
      report.sufficient_statistics = false;
      report.all_pass = false;
      continue;
    }
    const double rep_mean = rep_sum / static_cast<double>(rep_used);
    double ss = 0.0;
    for (const auto& means : replicate_means) {
      const double d = means[static_cast<size_t>(k)] - rep_mean;
      ss += d * d;
    }
    const double nb = static_cast<double>(n_batches);
    v.jackknife_error = std::sqrt((nb - 1.0) / nb * ss);
    const double deviation = std::fabs(v.mean - v.predicted);
    v.deviation_sigmas = v.jackknife_error > 0.0
                             ? deviation / v.jackknife_error
                             : (deviation == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    const double tolerance =
        std::max(options.sigma_threshold * v.jackknife_error, options.abs_tolerance);
    v.pass = deviation <= tolerance;
    report.all_pass = report.all_pass && v.pass;
  }
  return report;
}

}  // namespace percolab
