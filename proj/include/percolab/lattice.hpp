#pragma once

#include <cstdint>
#include <vector>

#include "percolab/disjoint_sets.hpp"

namespace percolab {

// Which perimeter sites count as "the boundary". The full perimeter is the
// default: the square with its whole perimeter is the simply connected
// domain on which the factorization ratios are exactly constant. The
// bottom-edge reading is kept as an alternative for empirical comparison.
enum class BoundaryMode : uint32_t {
  kFullPerimeter = 0,
  kBottomEdge = 1,
};

// Site percolation experiment geometry. Sites are indexed row-major with
// row 0 the bottom (boundary) row; anchors sit on the bottom row.
struct LatticeSpec {
  int width = 0;
  int height = 0;
  double p = 0.0;
  int anchor1_col = 0;
  int anchor2_col = 0;

  int site_count() const { return width * height; }
  int site_index(int col, int row) const { return row * width + col; }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

// Throws std::invalid_argument on out-of-range dimensions, probability or
// anchor columns.
void validate(const LatticeSpec& spec);

// The lattice perimeter split into the four boundary classes. Anchor sites
// belong to their anchor class only; the interval holds the bottom-row sites
// strictly between the anchors; the complement holds every remaining
// boundary site.
struct BoundaryPartition {
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  std::vector<int32_t> anchor1;
  std::vector<int32_t> anchor2;
  std::vector<int32_t> interval;
  std::vector<int32_t> complement;
};

BoundaryPartition boundary_partition(const LatticeSpec& spec,
                                     BoundaryMode mode = BoundaryMode::kFullPerimeter);

struct OccupancyGrid {
  LatticeSpec spec;
  uint64_t seed = 0;
  std::vector<uint8_t> occupied;  // row-major, 0 or 1
};

// Each site independently occupied with probability spec.p. Bit-for-bit
// deterministic in (spec, seed).
OccupancyGrid sample_occupancy(const LatticeSpec& spec, uint64_t seed);
void sample_occupancy(const LatticeSpec& spec, uint64_t seed, OccupancyGrid& out);

enum ClusterFlag : uint8_t {
  kTouchesAnchor1 = 1u << 0,
  kTouchesAnchor2 = 1u << 1,
  kTouchesInterval = 1u << 2,
  kTouchesComplement = 1u << 3,
  kTouchesBoundary = 1u << 4,
};

// Connected components of occupied sites under 4-neighbor adjacency, with a
// boundary-contact flag set per cluster. Labels are compacted to
// 0..cluster_count-1 in scan order; vacant sites carry kVacant.
struct ClusterLabels {
  static constexpr int32_t kVacant = -1;

  LatticeSpec spec;
  BoundaryMode mode = BoundaryMode::kFullPerimeter;
  int32_t cluster_count = 0;
  std::vector<int32_t> label;
  std::vector<uint8_t> flags;  // indexed by cluster label
};

// Reusable buffers for the hot per-sample labeling path.
struct LabelScratch {
  DisjointSets sets;
  std::vector<int32_t> root_label;
};

void label_clusters(const OccupancyGrid& grid, const BoundaryPartition& boundary,
                    ClusterLabels& out, LabelScratch& scratch);
ClusterLabels label_clusters(const OccupancyGrid& grid, const BoundaryPartition& boundary);
// Convenience overload using the grid's own spec with the full-perimeter boundary.
ClusterLabels label_clusters(const OccupancyGrid& grid);

}  // namespace percolab
