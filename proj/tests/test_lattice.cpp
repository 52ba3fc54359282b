#include "percolab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "flood_fill.hpp"

using namespace percolab;
using percolab::testing::flood_fill_labels;
using percolab::testing::same_partition;

namespace {

constexpr double kPc = 0.5927463;

LatticeSpec small_spec() { return {16, 16, kPc, 5, 10}; }

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(LatticeSpec{1, 16, 0.5, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 1, 0.5, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 16, -0.1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 16, 1.1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 16, 0.5, -1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 16, 0.5, 5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 16, 0.5, 10, 5}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LatticeSpec{16, 16, 0.5, 5, 16}), std::invalid_argument);
  CHECK_NOTHROW(validate(small_spec()));
}

TEST_CASE("boundary partition covers the perimeter exactly once") {
  const LatticeSpec spec{510, 510, kPc, 192, 320};
  const BoundaryPartition parts = boundary_partition(spec);
  CHECK(parts.anchor1.size() == 1);
  CHECK(parts.anchor2.size() == 1);
  CHECK(parts.anchor1[0] == spec.site_index(192, 0));
  CHECK(parts.anchor2[0] == spec.site_index(320, 0));
  CHECK(parts.interval.size() == 127);  // columns 193..319
  CHECK(parts.complement.size() == 1907);

  // the four classes tile the perimeter with no overlap
  std::set<int32_t> seen;
  size_t total = 0;
  for (const auto* v : {&parts.anchor1, &parts.anchor2, &parts.interval, &parts.complement}) {
    total += v->size();
    seen.insert(v->begin(), v->end());
  }
  const size_t perimeter = 2 * 510 + 2 * 508;
  CHECK(total == perimeter);
  CHECK(seen.size() == perimeter);
  for (int32_t s : seen) {
    const int col = s % spec.width;
    const int row = s / spec.width;
    const bool on_perimeter =
        row == 0 || row == spec.height - 1 || col == 0 || col == spec.width - 1;
    CHECK(on_perimeter);
  }
}

TEST_CASE("bottom-edge mode restricts the complement to the bottom row") {
  const LatticeSpec spec{510, 510, kPc, 192, 320};
  const BoundaryPartition parts = boundary_partition(spec, BoundaryMode::kBottomEdge);
  CHECK(parts.interval.size() == 127);
  CHECK(parts.complement.size() == 510 - 2 - 127);
  for (int32_t s : parts.complement) CHECK(s / spec.width == 0);
}

TEST_CASE("adjacent anchors give an empty interval") {
  const BoundaryPartition parts = boundary_partition(LatticeSpec{16, 16, kPc, 7, 8});
  CHECK(parts.interval.empty());
}

TEST_CASE("degenerate occupation probabilities") {
  LatticeSpec spec = small_spec();
  spec.p = 0.0;
  const OccupancyGrid empty = sample_occupancy(spec, 3);
  CHECK(std::count(empty.occupied.begin(), empty.occupied.end(), 1) == 0);
  spec.p = 1.0;
  const OccupancyGrid full = sample_occupancy(spec, 3);
  CHECK(std::count(full.occupied.begin(), full.occupied.end(), 0) == 0);
}

TEST_CASE("occupancy sampling is deterministic in the seed") {
  const LatticeSpec spec = small_spec();
  const OccupancyGrid a = sample_occupancy(spec, 42);
  const OccupancyGrid b = sample_occupancy(spec, 42);
  const OccupancyGrid c = sample_occupancy(spec, 43);
  CHECK(a.occupied == b.occupied);
  CHECK(a.occupied != c.occupied);
}

TEST_CASE("occupancy rate concentrates near p") {
  const LatticeSpec spec{64, 64, kPc, 5, 10};
  int64_t occupied = 0;
  const int n_grids = 50;
  for (int s = 0; s < n_grids; ++s) {
    const OccupancyGrid g = sample_occupancy(spec, 1000 + static_cast<uint64_t>(s));
    occupied += std::count(g.occupied.begin(), g.occupied.end(), 1);
  }
  const double rate = static_cast<double>(occupied) / (n_grids * spec.site_count());
  // 5 sigma on 204800 draws
  CHECK(std::fabs(rate - kPc) < 5.0 * std::sqrt(kPc * (1 - kPc) / (n_grids * 4096.0)));
}

TEST_CASE("full occupancy labels one all-touching cluster") {
  LatticeSpec spec = small_spec();
  spec.p = 1.0;
  const ClusterLabels labels = label_clusters(sample_occupancy(spec, 1));
  CHECK(labels.cluster_count == 1);
  CHECK(labels.flags[0] == (kTouchesAnchor1 | kTouchesAnchor2 | kTouchesInterval |
                            kTouchesComplement | kTouchesBoundary));
  for (int32_t l : labels.label) CHECK(l == 0);
}

TEST_CASE("checkerboard occupancy labels every occupied site separately") {
  LatticeSpec spec = small_spec();
  OccupancyGrid grid;
  grid.spec = spec;
  grid.occupied.assign(static_cast<size_t>(spec.site_count()), 0);
  for (int row = 0; row < spec.height; ++row) {
    for (int col = 0; col < spec.width; ++col) {
      if ((row + col) % 2 == 0) {
        grid.occupied[static_cast<size_t>(spec.site_index(col, row))] = 1;
      }
    }
  }
  const ClusterLabels labels = label_clusters(grid);
  CHECK(labels.cluster_count == spec.site_count() / 2);
  std::set<int32_t> distinct;
  for (int32_t l : labels.label) {
    if (l != ClusterLabels::kVacant) distinct.insert(l);
  }
  CHECK(static_cast<int32_t>(distinct.size()) == labels.cluster_count);
}

TEST_CASE("union-find partition matches the flood-fill oracle") {
  const LatticeSpec spec = small_spec();
  const BoundaryPartition parts = boundary_partition(spec);
  LabelScratch scratch;
  ClusterLabels labels;
  OccupancyGrid grid;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    sample_occupancy(spec, seed, grid);
    label_clusters(grid, parts, labels, scratch);
    CHECK(same_partition(labels.label, flood_fill_labels(grid)));
  }
}

TEST_CASE("cluster flags match a direct boundary scan") {
  const LatticeSpec spec = small_spec();
  const BoundaryPartition parts = boundary_partition(spec);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const OccupancyGrid grid = sample_occupancy(spec, 5000 + seed);
    const ClusterLabels labels = label_clusters(grid, parts);
    std::vector<uint8_t> expect(static_cast<size_t>(labels.cluster_count), 0);
    const auto scan = [&](const std::vector<int32_t>& sites, uint8_t bit) {
      for (int32_t s : sites) {
        if (grid.occupied[static_cast<size_t>(s)]) {
          expect[static_cast<size_t>(labels.label[static_cast<size_t>(s)])] |=
              bit | kTouchesBoundary;
        }
      }
    };
    scan(parts.anchor1, kTouchesAnchor1);
    scan(parts.anchor2, kTouchesAnchor2);
    scan(parts.interval, kTouchesInterval);
    scan(parts.complement, kTouchesComplement);
    CHECK(labels.flags == expect);
    for (uint8_t f : labels.flags) {
      if (f != 0) CHECK((f & kTouchesBoundary) != 0);
    }
  }
}

TEST_CASE("occupying one more site only coarsens the partition") {
  const LatticeSpec spec = small_spec();
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    OccupancyGrid grid = sample_occupancy(spec, 9000 + static_cast<uint64_t>(trial));
    std::vector<int> vacant;
    for (int i = 0; i < spec.site_count(); ++i) {
      if (!grid.occupied[static_cast<size_t>(i)]) vacant.push_back(i);
    }
    if (vacant.empty()) continue;
    const std::vector<int32_t> before = flood_fill_labels(grid);
    grid.occupied[static_cast<size_t>(
        vacant[std::uniform_int_distribution<size_t>(0, vacant.size() - 1)(rng)])] = 1;
    const std::vector<int32_t> after = flood_fill_labels(grid);
    // previously co-clustered sites stay co-clustered
    std::vector<int32_t> rep(static_cast<size_t>(spec.site_count()), -1);
    for (size_t i = 0; i < before.size(); ++i) {
      if (before[i] == -1) continue;
      int32_t& r = rep[static_cast<size_t>(before[i])];
      if (r == -1) {
        r = after[i];
      } else {
        CHECK(r == after[i]);
      }
    }
  }
}

TEST_CASE("labeling is deterministic") {
  const LatticeSpec spec = small_spec();
  const ClusterLabels a = label_clusters(sample_occupancy(spec, 31));
  const ClusterLabels b = label_clusters(sample_occupancy(spec, 31));
  CHECK(a.cluster_count == b.cluster_count);
  CHECK(a.label == b.label);
  CHECK(a.flags == b.flags);
}
