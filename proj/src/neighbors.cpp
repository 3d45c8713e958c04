#include "nnc/neighbors.hpp"

#include <cmath>

#include "nnc/kdtree.hpp"

namespace nnc {

Real NeighborTable::minNeDistance() const {
  Real best = std::numeric_limits<Real>::infinity();
  for (const auto& e : entries) best = std::min(best, e.neDist);
  return best;
}

namespace {

void requireMulticlass(const TrainingSet& P) {
  if (P.numClasses() < 2)
    throw InvalidInput("neighbor table requires at least 2 classes");
  // numClasses counts interned names; make sure two classes actually occur.
  int first = P.size() ? P.label(0) : -1;
  for (std::size_t i = 1; i < P.size(); ++i)
    if (P.label(i) != first) return;
  throw InvalidInput("neighbor table requires at least 2 classes");
}

void checkPositiveNeDistances(const NeighborTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!(table[i].neDist > 0))
      throw InvalidInput(
          "zero NE distance at point " + std::to_string(i) +
          " (cross-label coordinate duplicate)");
}

}  // namespace

NeighborTable build_neighbor_table(const TrainingSet& P) {
  requireMulticlass(P);
  const std::size_t n = P.size();
  NeighborTable table;
  table.entries.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& e = table.entries[i];
    Real bestNe = std::numeric_limits<Real>::infinity();
    Real bestNn = std::numeric_limits<Real>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Real sq = squaredDistance(P.point(i), P.point(j));
      if (P.label(j) != P.label(i) && sq < bestNe) {
        bestNe = sq;
        e.neIndex = j;
      }
      if (sq < bestNn) {
        bestNn = sq;
        e.nnIndex = j;
      }
    }
    e.neDist = std::sqrt(bestNe);
    e.nnDist = std::sqrt(bestNn);
  }
  checkPositiveNeDistances(table);
  return table;
}

NeighborTable build_neighbor_table_accelerated(const TrainingSet& P) {
  requireMulticlass(P);
  const std::size_t n = P.size();

  std::vector<std::vector<std::size_t>> byClass(P.numClasses());
  for (std::size_t i = 0; i < n; ++i) byClass[P.label(i)].push_back(i);
  std::vector<KdTree> trees;
  trees.reserve(byClass.size());
  for (auto& indices : byClass) trees.emplace_back(P, std::move(indices));

  NeighborTable table;
  table.entries.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& e = table.entries[i];
    KdTree::Result ne, nn;
    for (int c = 0; c < P.numClasses(); ++c) {
      if (trees[c].empty()) continue;
      const auto r = trees[c].nearest(P.point(i), i);
      if (c != P.label(i) &&
          (r.sqDist < ne.sqDist ||
           (r.sqDist == ne.sqDist && r.index < ne.index)))
        ne = r;
      if (r.sqDist < nn.sqDist ||
          (r.sqDist == nn.sqDist && r.index < nn.index))
        nn = r;
    }
    e.neIndex = ne.index;
    e.neDist = std::sqrt(ne.sqDist);
    e.nnIndex = nn.index;
    e.nnDist = std::sqrt(nn.sqDist);
  }
  checkPositiveNeDistances(table);
  return table;
}

std::pair<std::size_t, Real> nearest_in_subset(std::span<const Real> q,
                                               std::span<const std::size_t> R,
                                               const TrainingSet& P) {
  std::size_t bestIdx = kNoIndex;
  Real bestSq = std::numeric_limits<Real>::infinity();
  for (std::size_t idx : R) {
    const Real sq = squaredDistance(q, P.point(idx));
    if (sq < bestSq || (sq == bestSq && idx < bestIdx)) {
      bestSq = sq;
      bestIdx = idx;
    }
  }
  return {bestIdx, std::sqrt(bestSq)};
}

int classify_nn(std::span<const Real> q, std::span<const std::size_t> R,
                const TrainingSet& P) {
  if (R.empty()) throw InvalidInput("classify_nn: empty subset");
  return P.label(nearest_in_subset(q, R, P).first);
}

}  // namespace nnc
