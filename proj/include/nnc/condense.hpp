#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nnc/dataset.hpp"
#include "nnc/neighbors.hpp"

namespace nnc {

enum class Algorithm { Mss, Rss, Vss, Fcnn, Net, Optimal };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

/// Result of a condensation run: dataset indices in selection order plus the
/// deterministic work counters used by the scaling benchmarks.
struct Subset {
  Algorithm algorithm;
  std::vector<std::size_t> indices;
  std::size_t sourceSize = 0;
  struct Stats {
    std::uint64_t comparisons = 0;  // distance evaluations in the main loop
    std::size_t iterations = 0;     // FCNN outer rounds
  } stats;
};

/// Per-iteration attribution of FCNN additions: which already-selected point
/// each representative was chosen for. Seed centroids carry no attribution.
struct FcnnTrace {
  struct Attribution {
    std::size_t parent;          // member of the subset
    std::size_t representative;  // point added on its behalf
    std::size_t iteration;
  };
  std::vector<Attribution> attributions;
};

/// Modified Selective Subset. Scans points by ascending NE distance and
/// selects p_i iff it evicts at least one survivor p_j (later in the order)
/// with dist(p_j, p_i) < d_ne(p_j). Selective.
Subset mss(const TrainingSet& P, const NeighborTable& T);

/// Relaxed Selective Subset. Same scan order; selects p_i iff no previously
/// selected point lies strictly inside p_i's NE ball. Selective and
/// order-independent for tie-free NE distances.
Subset rss(const TrainingSet& P, const NeighborTable& T);

/// Voronoi Selective Subset. RSS's trigger, but the added point is the one
/// inside p_i's NE ball minimizing the tangent-ball radius
/// r = (v.v)/(2 u.v), a border point. Selective; at most k points.
Subset vss(const TrainingSet& P, const NeighborTable& T);

/// Fast Condensed Nearest-Neighbor, seeded with the member nearest to each
/// class's coordinate mean. Consistent.
Subset fcnn(const TrainingSet& P, const NeighborTable& T,
            FcnnTrace* trace = nullptr);

/// Greedy gamma-net baseline with gamma = min NE distance: index-order scan,
/// keeping points with no selected point at distance < gamma. Consistent.
Subset net(const TrainingSet& P, const NeighborTable& T);

Subset condense(Algorithm a, const TrainingSet& P, const NeighborTable& T);

}  // namespace nnc
