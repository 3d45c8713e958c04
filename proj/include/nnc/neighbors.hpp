#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "nnc/dataset.hpp"

namespace nnc {

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

/// Per-point nearest enemy and nearest neighbor (any class, excluding self).
/// All ties are broken toward the smallest dataset index.
struct NeighborTable {
  struct Entry {
    std::size_t neIndex = kNoIndex;
    Real neDist = 0;
    std::size_t nnIndex = kNoIndex;
    Real nnDist = 0;
  };
  std::vector<Entry> entries;

  const Entry& operator[](std::size_t i) const { return entries[i]; }
  std::size_t size() const { return entries.size(); }
  Real minNeDistance() const;
};

/// O(n^2) pairwise scan. Throws InvalidInput on fewer than 2 classes or on a
/// zero NE distance (cross-label coordinate duplicates).
NeighborTable build_neighbor_table(const TrainingSet& P);

/// Same output as build_neighbor_table via per-class kd-trees.
NeighborTable build_neighbor_table_accelerated(const TrainingSet& P);

/// Index in R minimizing distance to q (smallest index on ties). An empty R
/// yields {kNoIndex, +inf}, which compares greater than every finite
/// distance, matching the d_nn(p, emptyset) = +inf convention.
std::pair<std::size_t, Real> nearest_in_subset(
    std::span<const Real> q, std::span<const std::size_t> R,
    const TrainingSet& P);

/// Label of the nearest point of R to q. Throws InvalidInput on empty R.
int classify_nn(std::span<const Real> q, std::span<const std::size_t> R,
                const TrainingSet& P);

}  // namespace nnc
