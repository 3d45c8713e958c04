#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "nnc/dataset.hpp"

namespace nnc {

/// Exact kd-tree over a subset of TrainingSet indices. Queries reproduce the
/// brute-force result bit for bit, including the smallest-index rule on
/// distance ties, so it can stand in for the reference scan anywhere.
class KdTree {
 public:
  KdTree(const TrainingSet& P, std::vector<std::size_t> indices)
      : P_(&P), idx_(std::move(indices)) {
    if (!idx_.empty()) root_ = build(0, idx_.size(), 0);
  }

  struct Result {
    std::size_t index = static_cast<std::size_t>(-1);
    Real sqDist = std::numeric_limits<Real>::infinity();
  };

  /// Nearest member to q; `exclude` skips one dataset index (self-queries).
  Result nearest(std::span<const Real> q,
                 std::size_t exclude = static_cast<std::size_t>(-1)) const {
    Result best;
    if (root_ >= 0) search(root_, q, exclude, best);
    return best;
  }

  bool empty() const { return idx_.empty(); }

 private:
  struct Node {
    std::size_t point;  // dataset index stored at this node
    std::size_t axis;
    int left = -1, right = -1;
  };

  int build(std::size_t lo, std::size_t hi, std::size_t depth) {
    if (lo >= hi) return -1;
    const std::size_t axis = depth % P_->dim();
    const std::size_t mid = (lo + hi) / 2;
    std::nth_element(idx_.begin() + lo, idx_.begin() + mid, idx_.begin() + hi,
                     [&](std::size_t a, std::size_t b) {
                       const Real xa = P_->point(a)[axis];
                       const Real xb = P_->point(b)[axis];
                       return xa < xb || (xa == xb && a < b);
                     });
    Node node;
    node.point = idx_[mid];
    node.axis = axis;
    const int self = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    const int left = build(lo, mid, depth + 1);
    const int right = build(mid + 1, hi, depth + 1);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
  }

  // Better means strictly closer, or equally close with a smaller index.
  static bool better(Real sqDist, std::size_t index, const Result& best) {
    return sqDist < best.sqDist ||
           (sqDist == best.sqDist && index < best.index);
  }

  void search(int nodeId, std::span<const Real> q, std::size_t exclude,
              Result& best) const {
    const Node& node = nodes_[nodeId];
    if (node.point != exclude) {
      const Real sq = squaredDistance(q, P_->point(node.point));
      if (better(sq, node.point, best)) best = {node.point, sq};
    }
    const Real delta = q[node.axis] - P_->point(node.point)[node.axis];
    const int near = delta < 0 ? node.left : node.right;
    const int far = delta < 0 ? node.right : node.left;
    if (near >= 0) search(near, q, exclude, best);
    // The far side may still hold an equal-distance smaller index, so only
    // prune on a strict excess.
    if (far >= 0 && delta * delta <= best.sqDist) search(far, q, exclude, best);
  }

  const TrainingSet* P_;
  std::vector<std::size_t> idx_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace nnc
