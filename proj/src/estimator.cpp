#include "percolab/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace percolab {

uint64_t sample_seed(uint64_t master_seed, uint64_t index) {
  // splitmix64 finalizer on a counter stream offset by the master seed.
  uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

EventCounts EventCounts::zero(const LatticeSpec& spec, BoundaryMode mode) {
  validate(spec);
  EventCounts c;
  c.spec = spec;
  c.mode = mode;
  const size_t n = static_cast<size_t>(spec.site_count());
  c.to_boundary.assign(n, 0);
  c.to_anchor1.assign(n, 0);
  c.to_anchor2.assign(n, 0);
  c.to_both_anchors.assign(n, 0);
  c.to_interval.assign(n, 0);
  c.to_complement.assign(n, 0);
  return c;
}

void EventCounts::accumulate(const ClusterLabels& labels) {
  if (labels.spec != spec || labels.mode != mode) {
    throw std::invalid_argument("accumulate: labels do not match the counts spec");
  }
  const int n = spec.site_count();
  const int32_t a1 = labels.label[spec.site_index(spec.anchor1_col, 0)];
  const int32_t a2 = labels.label[spec.site_index(spec.anchor2_col, 0)];
  ++n_samples;
  pair_connected += (a1 != ClusterLabels::kVacant && a1 == a2) ? 1 : 0;
  const int32_t* label = labels.label.data();
  const uint8_t* flags = labels.flags.data();
  for (int i = 0; i < n; ++i) {
    const int32_t l = label[i];
    if (l == ClusterLabels::kVacant) continue;
    const uint8_t f = flags[l];
    to_boundary[i] += (f >> 4) & 1u;
    to_anchor1[i] += f & 1u;
    to_anchor2[i] += (f >> 1) & 1u;
    to_both_anchors[i] += ((f & 3u) == 3u) ? 1 : 0;
    to_interval[i] += (f >> 2) & 1u;
    to_complement[i] += (f >> 3) & 1u;
  }
}

void EventCounts::merge(const EventCounts& other) {
  if (other.spec != spec || other.mode != mode) {
    throw std::invalid_argument("merge: mismatched event-count specs");
  }
  n_samples += other.n_samples;
  pair_connected += other.pair_connected;
  auto add = [](std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  };
  add(to_boundary, other.to_boundary);
  add(to_anchor1, other.to_anchor1);
  add(to_anchor2, other.to_anchor2);
  add(to_both_anchors, other.to_both_anchors);
  add(to_interval, other.to_interval);
  add(to_complement, other.to_complement);
}

EventCounts merge(EventCounts a, const EventCounts& b) {
  a.merge(b);
  return a;
}

ProbabilityEstimates estimate(const EventCounts& counts) {
  if (counts.n_samples == 0) {
    throw std::invalid_argument("estimate: no samples accumulated");
  }
  const double n = static_cast<double>(counts.n_samples);
  auto rate = [n](uint64_t k) { return static_cast<double>(k) / n; };
  auto err = [n](double p) { return std::sqrt(p * (1.0 - p) / n); };

  ProbabilityEstimates est;
  est.spec = counts.spec;
  est.mode = counts.mode;
  est.n_samples = counts.n_samples;
  est.pair_probability = rate(counts.pair_connected);
  est.pair_error = err(est.pair_probability);

  auto fill = [&](const std::vector<uint64_t>& src, std::vector<double>& p,
                  std::vector<double>& e) {
    p.resize(src.size());
    e.resize(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
      p[i] = rate(src[i]);
      e[i] = err(p[i]);
    }
  };
  fill(counts.to_boundary, est.to_boundary, est.to_boundary_err);
  fill(counts.to_anchor1, est.to_anchor1, est.to_anchor1_err);
  fill(counts.to_anchor2, est.to_anchor2, est.to_anchor2_err);
  fill(counts.to_both_anchors, est.to_both_anchors, est.to_both_anchors_err);
  fill(counts.to_interval, est.to_interval, est.to_interval_err);
  fill(counts.to_complement, est.to_complement, est.to_complement_err);
  return est;
}

uint64_t BatchedCounts::n_samples() const {
  uint64_t n = 0;
  for (const EventCounts& b : batches) n += b.n_samples;
  return n;
}

EventCounts BatchedCounts::total() const {
  EventCounts out = EventCounts::zero(spec, mode);
  for (const EventCounts& b : batches) out.merge(b);
  return out;
}

namespace {

// Accumulates samples with indices [first, last) into one counter set.
EventCounts run_range(const LatticeSpec& spec, const BoundaryPartition& boundary,
                      uint64_t master_seed, uint64_t first, uint64_t last) {
  EventCounts counts = EventCounts::zero(spec, boundary.mode);
  OccupancyGrid grid;
  ClusterLabels labels;
  LabelScratch scratch;
  for (uint64_t i = first; i < last; ++i) {
    sample_occupancy(spec, sample_seed(master_seed, i), grid);
    label_clusters(grid, boundary, labels, scratch);
    counts.accumulate(labels);
  }
  return counts;
}

}  // namespace

BatchedCounts run_experiment_batched(const LatticeSpec& spec, uint64_t n_samples,
                                     uint64_t master_seed, const RunOptions& options) {
  validate(spec);
  if (n_samples < 1) {
    throw std::invalid_argument("run_experiment: requires n_samples >= 1");
  }
  if (options.threads < 1) {
    throw std::invalid_argument("run_experiment: requires threads >= 1");
  }
  const uint64_t n_batches =
      std::clamp<uint64_t>(static_cast<uint64_t>(options.batches), 1, n_samples);

  BatchedCounts out;
  out.spec = spec;
  out.mode = options.mode;
  out.master_seed = master_seed;
  out.batches.reserve(n_batches);

  const BoundaryPartition boundary = boundary_partition(spec, options.mode);
  for (uint64_t b = 0; b < n_batches; ++b) {
    const uint64_t first = options.first_sample_index + b * n_samples / n_batches;
    const uint64_t last = options.first_sample_index + (b + 1) * n_samples / n_batches;
    const uint64_t batch_n = last - first;
    const uint64_t workers =
        std::min<uint64_t>(static_cast<uint64_t>(options.threads), batch_n);
    if (workers <= 1) {
      out.batches.push_back(run_range(spec, boundary, master_seed, first, last));
      continue;
    }
    std::vector<EventCounts> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint64_t w = 0; w < workers; ++w) {
      const uint64_t lo = first + w * batch_n / workers;
      const uint64_t hi = first + (w + 1) * batch_n / workers;
      pool.emplace_back([&, w, lo, hi] {
        partial[w] = run_range(spec, boundary, master_seed, lo, hi);
      });
    }
    for (std::thread& t : pool) t.join();
    EventCounts batch = std::move(partial[0]);
    for (uint64_t w = 1; w < workers; ++w) batch.merge(partial[w]);
    out.batches.push_back(std::move(batch));
  }
  return out;
}

EventCounts run_experiment(const LatticeSpec& spec, uint64_t n_samples,
                           uint64_t master_seed, const RunOptions& options) {
  return run_experiment_batched(spec, n_samples, master_seed, options).total();
}

}  // namespace percolab
