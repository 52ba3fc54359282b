#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace percolab {

// Union-find with union by size and path halving.
struct DisjointSets {
  std::vector<int32_t> parent;
  std::vector<int32_t> set_size;

  DisjointSets() = default;
  explicit DisjointSets(int32_t n) { reset(n); }

  void reset(int32_t n) {
    parent.resize(static_cast<size_t>(n));
    set_size.assign(static_cast<size_t>(n), 1);
    for (int32_t i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }

  int32_t find(int32_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  bool same_set(int32_t a, int32_t b) { return find(a) == find(b); }

  // Returns the surviving root.
  int32_t unite(int32_t a, int32_t b) {
    int32_t ra = find(a);
    int32_t rb = find(b);
    if (ra == rb) return ra;
    if (set_size[ra] < set_size[rb]) std::swap(ra, rb);
    parent[rb] = ra;
    set_size[ra] += set_size[rb];
    return ra;
  }
};

}  // namespace percolab
