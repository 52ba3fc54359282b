#pragma once

#include <cstdint>
#include <vector>

#include "percolab/lattice.hpp"

namespace percolab {

// Per-sample seed for sample number `index` under `master_seed`. Counter
// based (splitmix) so samples are reproducible independently of the order
// in which they are processed.
uint64_t sample_seed(uint64_t master_seed, uint64_t index);

// Mergeable counters for the seven connectivity event classes over
// n_samples percolation samples. 64-bit so runs of 1e7+ samples cannot
// overflow.
struct EventCounts {
  LatticeSpec spec;
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  uint64_t n_samples = 0;
  uint64_t pair_connected = 0;  // both anchor sites occupied and co-clustered
  std::vector<uint64_t> to_boundary;
  std::vector<uint64_t> to_anchor1;
  std::vector<uint64_t> to_anchor2;
  std::vector<uint64_t> to_both_anchors;
  std::vector<uint64_t> to_interval;
  std::vector<uint64_t> to_complement;

  static EventCounts zero(const LatticeSpec& spec,
                          BoundaryMode mode = BoundaryMode::kFullPerimeter);

  // Adds one labeled sample. Throws std::invalid_argument when the labels
  // were produced for a different spec or boundary mode.
  void accumulate(const ClusterLabels& labels);

  // Componentwise sum; associative and commutative. Same spec required.
  void merge(const EventCounts& other);
};

EventCounts merge(EventCounts a, const EventCounts& b);

// Counts divided by n_samples, with binomial standard errors
// sqrt(p*(1-p)/n) attached.
struct ProbabilityEstimates {
  LatticeSpec spec;
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  uint64_t n_samples = 0;
  double pair_probability = 0.0;
  double pair_error = 0.0;
  std::vector<double> to_boundary, to_boundary_err;
  std::vector<double> to_anchor1, to_anchor1_err;
  std::vector<double> to_anchor2, to_anchor2_err;
  std::vector<double> to_both_anchors, to_both_anchors_err;
  std::vector<double> to_interval, to_interval_err;
  std::vector<double> to_complement, to_complement_err;
};

// Throws std::invalid_argument when counts.n_samples == 0.
ProbabilityEstimates estimate(const EventCounts& counts);

struct RunOptions {
  int threads = 1;
  int batches = 1;  // contiguous sample batches, kept for jackknife resampling
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  uint64_t first_sample_index = 0;
};

// Counts split into contiguous sample-index batches. Batch b of n covers
// sample indices [b*n/B, (b+1)*n/B).
struct BatchedCounts {
  LatticeSpec spec;
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  uint64_t master_seed = 0;
  std::vector<EventCounts> batches;

  uint64_t n_samples() const;
  EventCounts total() const;
};

// Runs n independent samples. The result is bit-identical for a given
// (spec, n, master_seed, batches) regardless of thread count: workers own
// private accumulators that are merged in index order.
BatchedCounts run_experiment_batched(const LatticeSpec& spec, uint64_t n_samples,
                                     uint64_t master_seed, const RunOptions& options = {});
EventCounts run_experiment(const LatticeSpec& spec, uint64_t n_samples,
                           uint64_t master_seed, const RunOptions& options = {});

}  // namespace percolab
