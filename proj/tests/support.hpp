// Shared helpers for the test suites: deterministic random training sets and
// an independently coded border-point oracle used to cross-check the library
// implementation.
#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "nnc/dataset.hpp"

namespace nnc::testing {

inline Real uniform01(std::mt19937_64& rng) {
  return static_cast<Real>(rng() >> 11) * 0x1.0p-53;
}

/// Random set with coordinates uniform in [0,1)^d. The first `classes`
/// points get one label each so every class is populated.
inline TrainingSet make_random_set(std::size_t n, std::size_t d, int classes,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Real> coords;
  std::vector<int> labels;
  std::vector<std::string> names;
  for (int c = 0; c < classes; ++c) names.push_back("c" + std::to_string(c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) coords.push_back(uniform01(rng));
    labels.push_back(i < static_cast<std::size_t>(classes)
                         ? static_cast<int>(i)
                         : static_cast<int>(rng() % classes));
  }
  return TrainingSet::create(d, std::move(names), std::move(coords),
                             std::move(labels));
}

/// Border points via a different route than the library's disk enumeration:
/// centers of circles through a pair (a, b) form a line; each third point
/// forbids an open half-line of centers whose circle would strictly contain
/// it. The pair is a Delaunay edge iff the forbidden half-lines leave some
/// center free. Everything reduces to a 1-D interval feasibility check.
inline std::vector<std::size_t> border_points_2d_oracle(const TrainingSet& P) {
  const std::size_t n = P.size();
  const Real tol = 1e-9;
  std::vector<char> border(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || P.label(a) == P.label(b)) continue;
      auto pa = P.point(a);
      auto pb = P.point(b);
      const Real mx = (pa[0] + pb[0]) / 2, my = (pa[1] + pb[1]) / 2;
      // unit normal of segment ab = direction of the bisector line
      Real wx = -(pb[1] - pa[1]), wy = pb[0] - pa[0];
      const Real wn = std::sqrt(wx * wx + wy * wy);
      wx /= wn;
      wy /= wn;
      const Real halfSq = squaredDistance(pa, pb) / 4;
      Real lo = -std::numeric_limits<Real>::infinity();
      Real hi = std::numeric_limits<Real>::infinity();
      bool feasible = true;
      for (std::size_t r = 0; r < n && feasible; ++r) {
        if (r == a || r == b) continue;
        auto pr = P.point(r);
        const Real rx = pr[0] - mx, ry = pr[1] - my;
        // center c = m + t w is bad for r when |c-r|^2 < |c-pa|^2, i.e.
        // coef_a + t coef_b < 0 (w is orthogonal to m - pa).
        const Real coefA = rx * rx + ry * ry - halfSq;
        const Real coefB = -2 * (wx * rx + wy * ry);
        const Real slack = tol * halfSq;
        if (std::abs(coefB) < 1e-300) {
          feasible = coefA >= -slack;
        } else if (coefB > 0) {
          lo = std::max(lo, (-slack - coefA) / coefB);
        } else {
          hi = std::min(hi, (-slack - coefA) / coefB);
        }
        feasible = feasible && lo <= hi;
      }
      if (feasible) border[a] = border[b] = 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (border[i]) out.push_back(i);
  return out;
}

}  // namespace nnc::testing
