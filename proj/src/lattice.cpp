#include "percolab/lattice.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace percolab {

void validate(const LatticeSpec& spec) {
  if (spec.width < 2 || spec.height < 2) {
    throw std::invalid_argument("lattice spec: width and height must be >= 2");
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw std::invalid_argument("lattice spec: p must lie in [0, 1]");
  }
  if (spec.anchor1_col < 0 || spec.anchor2_col >= spec.width ||
      spec.anchor1_col >= spec.anchor2_col) {
    throw std::invalid_argument(
        "lattice spec: requires 0 <= anchor1_col < anchor2_col < width");
  }
}

BoundaryPartition boundary_partition(const LatticeSpec& spec, BoundaryMode mode) {
  validate(spec);
  BoundaryPartition out;
  out.mode = mode;
  out.anchor1.push_back(spec.site_index(spec.anchor1_col, 0));
  out.anchor2.push_back(spec.site_index(spec.anchor2_col, 0));
  for (int col = spec.anchor1_col + 1; col < spec.anchor2_col; ++col) {
    out.interval.push_back(spec.site_index(col, 0));
  }
  // Bottom-row sites outside the anchors.
  for (int col = 0; col < spec.anchor1_col; ++col) {
    out.complement.push_back(spec.site_index(col, 0));
  }
  for (int col = spec.anchor2_col + 1; col < spec.width; ++col) {
    out.complement.push_back(spec.site_index(col, 0));
  }
  if (mode == BoundaryMode::kFullPerimeter) {
    for (int row = 1; row < spec.height - 1; ++row) {
      out.complement.push_back(spec.site_index(0, row));
      out.complement.push_back(spec.site_index(spec.width - 1, row));
    }
    for (int col = 0; col < spec.width; ++col) {
      out.complement.push_back(spec.site_index(col, spec.height - 1));
    }
  }
  return out;
}

void sample_occupancy(const LatticeSpec& spec, uint64_t seed, OccupancyGrid& out) {
  validate(spec);
  const size_t n = static_cast<size_t>(spec.site_count());
  out.spec = spec;
  out.seed = seed;
  out.occupied.resize(n);
  if (spec.p <= 0.0) {
    std::fill(out.occupied.begin(), out.occupied.end(), uint8_t{0});
    return;
  }
  if (spec.p >= 1.0) {
    std::fill(out.occupied.begin(), out.occupied.end(), uint8_t{1});
    return;
  }
  // Raw engine words against a fixed threshold keep the draw bit-identical
  // across standard library implementations; distributions would not.
  const uint64_t threshold = static_cast<uint64_t>(std::ldexp(spec.p, 64));
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < n; ++i) {
    out.occupied[i] = rng() < threshold ? 1 : 0;
  }
}

OccupancyGrid sample_occupancy(const LatticeSpec& spec, uint64_t seed) {
  OccupancyGrid grid;
  sample_occupancy(spec, seed, grid);
  return grid;
}

void label_clusters(const OccupancyGrid& grid, const BoundaryPartition& boundary,
                    ClusterLabels& out, LabelScratch& scratch) {
  const LatticeSpec& spec = grid.spec;
  const int width = spec.width;
  const int n = spec.site_count();
  if (grid.occupied.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("occupancy grid does not match its spec");
  }
  const uint8_t* occ = grid.occupied.data();

  scratch.sets.reset(n);
  DisjointSets& sets = scratch.sets;
  for (int row = 0; row < spec.height; ++row) {
    const int base = row * width;
    for (int col = 0; col < width; ++col) {
      const int i = base + col;
      if (!occ[i]) continue;
      if (col > 0 && occ[i - 1]) sets.unite(i, i - 1);
      if (row > 0 && occ[i - width]) sets.unite(i, i - width);
    }
  }

  out.spec = spec;
  out.mode = boundary.mode;
  out.label.assign(static_cast<size_t>(n), ClusterLabels::kVacant);
  scratch.root_label.assign(static_cast<size_t>(n), -1);
  int32_t next = 0;
  for (int i = 0; i < n; ++i) {
    if (!occ[i]) continue;
    const int32_t root = sets.find(i);
    int32_t& id = scratch.root_label[root];
    if (id < 0) id = next++;
    out.label[i] = id;
  }
  out.cluster_count = next;

  out.flags.assign(static_cast<size_t>(next), 0);
  auto mark = [&](const std::vector<int32_t>& sites, uint8_t bit) {
    for (int32_t s : sites) {
      if (occ[s]) out.flags[out.label[s]] |= bit | kTouchesBoundary;
    }
  };
  mark(boundary.anchor1, kTouchesAnchor1);
  mark(boundary.anchor2, kTouchesAnchor2);
  mark(boundary.interval, kTouchesInterval);
  mark(boundary.complement, kTouchesComplement);
}

ClusterLabels label_clusters(const OccupancyGrid& grid, const BoundaryPartition& boundary) {
  ClusterLabels out;
  LabelScratch scratch;
  label_clusters(grid, boundary, out, scratch);
  return out;
}

ClusterLabels label_clusters(const OccupancyGrid& grid) {
  return label_clusters(grid, boundary_partition(grid.spec));
}

}  // namespace percolab
