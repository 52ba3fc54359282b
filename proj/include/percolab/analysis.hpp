#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "percolab/estimator.hpp"

namespace percolab {

// One per-site factorization ratio estimate. A site is defined only when
// every probability estimate entering the ratio is positive, so defined
// entries are positive finite reals; undefined entries hold NaN.
struct RatioMap {
  std::vector<double> value;
  std::vector<uint8_t> defined;
};

// The four measured ratios, predicted to be flat at the universal constants
// c1..c4 away from the anchors:
//   R1 = P(x1,x2,z) / sqrt(P(x1,x2) P(x1,z) P(x2,z))
//   R2 = P(x1,x2,z) P(z) / (P(x1,x2) P(I,z) P(Ic,z))
//   R3 = P(I,z) P(Ic,z) sqrt(P(x1,x2)) / (P(z) sqrt(P(x1,z) P(x2,z)))
//   R4 = P(I,z) P(Ic,z) P(x1,x2,z) / (P(z) P(x1,z) P(x2,z))
// with I the boundary interval and Ic its complement.
struct RatioMaps {
  LatticeSpec spec;
  std::array<RatioMap, 4> ratio;
  std::vector<uint8_t> masked;  // 1 = excluded from averages
};

RatioMaps ratio_maps(const ProbabilityEstimates& est);

// Marks every site within Chebyshev distance mask_radius of either anchor.
void apply_anchor_mask(RatioMaps& maps, int mask_radius);

// Mean over defined, unmasked sites. Throws std::invalid_argument when the
// mask leaves no sites at all; returns NaN when sites remain but none is
// defined for this ratio.
double masked_mean(const RatioMaps& maps, int ratio_index);

struct ProfilePoint {
  int row;
  double value;
  bool defined;
};

// One column of one ratio map, bottom row first. Throws
// std::invalid_argument for an out-of-range column or ratio index.
std::vector<ProfilePoint> line_profile(const RatioMaps& maps, int ratio_index, int column);

// Probability estimates with sample batch `batch_index` removed; the
// resampling step behind every jackknife error here.
ProbabilityEstimates leave_one_out_estimate(const BatchedCounts& counts, size_t batch_index);

struct AnalysisOptions {
  int mask_radius = 8;
  int alt_mask_radius = -1;  // <0 means mask_radius + 4
  double sigma_threshold = 3.0;
  double abs_tolerance = 0.003;
};

struct RatioVerification {
  double mean = 0.0;
  double jackknife_error = 0.0;
  double predicted = 0.0;
  double deviation_sigmas = 0.0;
  double alt_mask_mean = 0.0;  // mean at the alternate mask radius
  int64_t sites_used = 0;
  bool defined = false;  // at least one usable site
  bool pass = false;
};

struct VerificationReport {
  LatticeSpec spec;
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  uint64_t n_samples = 0;
  uint64_t master_seed = 0;
  int batch_count = 0;
  int mask_radius = 0;
  int alt_mask_radius = 0;
  double sigma_threshold = 0.0;
  double abs_tolerance = 0.0;
  std::array<RatioVerification, 4> ratios;
  bool sufficient_statistics = false;
  bool all_pass = false;
};

// Masked averages of the four ratio maps with jackknife errors over the
// sample batches, compared against the predicted universal constants. A
// ratio passes when |mean - predicted| <= max(sigma_threshold * error,
// abs_tolerance). Fewer than two batches or a ratio with no usable sites
// flags insufficient statistics and fails instead of erroring; a mask that
// swallows the whole lattice is a usage error.
VerificationReport masked_average(const BatchedCounts& counts,
                                  const AnalysisOptions& options = {});

}  // namespace percolab
