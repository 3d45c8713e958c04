#include "nnc/condense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nnc {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Mss: return "mss";
    case Algorithm::Rss: return "rss";
    case Algorithm::Vss: return "vss";
    case Algorithm::Fcnn: return "fcnn";
    case Algorithm::Net: return "net";
    case Algorithm::Optimal: return "optimal";
  }
  return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "mss") return Algorithm::Mss;
  if (name == "rss") return Algorithm::Rss;
  if (name == "vss") return Algorithm::Vss;
  if (name == "fcnn") return Algorithm::Fcnn;
  if (name == "net") return Algorithm::Net;
  throw InvalidInput("unknown algorithm '" + name + "'");
}

namespace {

void validate(const TrainingSet& P, const NeighborTable& T) {
  if (P.size() == 0) throw InvalidInput("empty training set");
  if (T.size() != P.size())
    throw InvalidInput("neighbor table does not match training set");
}

// Scan order shared by MSS/RSS/VSS: ascending NE distance, ties by index.
std::vector<std::size_t> byAscendingNeDistance(const NeighborTable& T) {
  std::vector<std::size_t> order(T.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return T[a].neDist < T[b].neDist ||
           (T[a].neDist == T[b].neDist && a < b);
  });
  return order;
}

}  // namespace

Subset mss(const TrainingSet& P, const NeighborTable& T) {
  validate(P, T);
  const auto order = byAscendingNeDistance(T);
  const std::size_t n = P.size();
  std::vector<char> survives(n, 1);
  Subset out{Algorithm::Mss, {}, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pi = order[i];
    bool add = false;
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t pj = order[j];
      if (!survives[pj]) continue;
      ++out.stats.comparisons;
      if (distance(P, pj, pi) < T[pj].neDist) {
        survives[pj] = 0;
        add = true;
      }
    }
    if (add) out.indices.push_back(pi);
  }
  return out;
}

Subset rss(const TrainingSet& P, const NeighborTable& T) {
  validate(P, T);
  const auto order = byAscendingNeDistance(T);
  Subset out{Algorithm::Rss, {}, P.size(), {}};
  for (const std::size_t pi : order) {
    bool suppressed = false;
    for (const std::size_t s : out.indices) {
      ++out.stats.comparisons;
      if (distance(P, s, pi) < T[pi].neDist) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) out.indices.push_back(pi);
  }
  return out;
}

Subset vss(const TrainingSet& P, const NeighborTable& T) {
  validate(P, T);
  const auto order = byAscendingNeDistance(T);
  const std::size_t n = P.size();
  Subset out{Algorithm::Vss, {}, n, {}};
  std::vector<char> selected(n, 0);
  for (const std::size_t pi : order) {
    bool suppressed = false;
    for (const std::size_t s : out.indices) {
      ++out.stats.comparisons;
      if (distance(P, s, pi) < T[pi].neDist) {
        suppressed = true;
        break;
      }
    }
    if (suppressed) continue;

    // Among points strictly inside p_i's NE ball (necessarily of p_i's
    // class), pick the one minimizing the radius of the ball tangent to
    // ne(p_i) with center on the segment [p_i, ne(p_i)]. That minimizer's
    // tangent ball is empty, so the pick is a border point.
    const std::size_t ne = T[pi].neIndex;
    const Real dne = T[pi].neDist;
    const auto p = P.point(pi);
    const auto e = P.point(ne);
    const std::size_t d = P.dim();
    std::size_t best = pi;
    Real bestRadius = dne / 2;  // p' = p_i gives u.v = dne, v.v = dne^2
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (cand == pi) continue;
      ++out.stats.comparisons;
      if (!(distance(P, cand, pi) < dne)) continue;
      const auto c = P.point(cand);
      Real uv = 0, vv = 0;
      for (std::size_t j = 0; j < d; ++j) {
        const Real u = (p[j] - e[j]) / dne;
        const Real v = c[j] - e[j];
        uv += u * v;
        vv += v * v;
      }
      if (uv <= 0) continue;  // no tangent ball centered on the segment
      const Real radius = vv / (2 * uv);
      if (radius < bestRadius || (radius == bestRadius && cand < best)) {
        bestRadius = radius;
        best = cand;
      }
    }
    if (!selected[best]) {
      selected[best] = 1;
      out.indices.push_back(best);
    }
  }
  return out;
}

Subset fcnn(const TrainingSet& P, const NeighborTable& T, FcnnTrace* trace) {
  validate(P, T);
  const std::size_t n = P.size();
  const std::size_t d = P.dim();
  const int classes = P.numClasses();
  Subset out{Algorithm::Fcnn, {}, n, {}};
  if (trace) trace->attributions.clear();

  // Seed: per class, the member nearest to the class's coordinate mean.
  std::vector<std::vector<Real>> mean(classes, std::vector<Real>(d, 0.0));
  std::vector<std::size_t> count(classes, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto x = P.point(i);
    auto& m = mean[P.label(i)];
    for (std::size_t j = 0; j < d; ++j) m[j] += x[j];
    ++count[P.label(i)];
  }
  std::vector<std::size_t> batch;
  for (int c = 0; c < classes; ++c) {
    if (count[c] == 0) continue;
    for (auto& v : mean[c]) v /= static_cast<Real>(count[c]);
    std::size_t best = kNoIndex;
    Real bestSq = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (P.label(i) != c) continue;
      const Real sq = squaredDistance(P.point(i), mean[c]);
      if (sq < bestSq || (sq == bestSq && i < best)) {
        bestSq = sq;
        best = i;
      }
    }
    batch.push_back(best);
  }

  std::vector<char> inSubset(n, 0);
  // Nearest member of the growing subset for every point, maintained
  // incrementally; ties toward the smaller dataset index.
  std::vector<std::size_t> nearestIdx(n, kNoIndex);
  std::vector<Real> nearestSq(n, std::numeric_limits<Real>::infinity());

  std::vector<std::size_t> repFor(n);    // best representative per member
  std::vector<Real> repSq(n);

  while (!batch.empty()) {
    ++out.stats.iterations;
    for (std::size_t s : batch) {
      inSubset[s] = 1;
      out.indices.push_back(s);
    }
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t s : batch) {
        ++out.stats.comparisons;
        const Real sq = squaredDistance(P.point(q), P.point(s));
        if (sq < nearestSq[q] ||
            (sq == nearestSq[q] && s < nearestIdx[q])) {
          nearestSq[q] = sq;
          nearestIdx[q] = s;
        }
      }
    }
    // voren(p) = enemies whose nearest subset member is p; keep only the
    // member of each voren closest to p.
    for (std::size_t s : out.indices) {
      repFor[s] = kNoIndex;
      repSq[s] = std::numeric_limits<Real>::infinity();
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (inSubset[q]) continue;
      const std::size_t p = nearestIdx[q];
      if (P.label(q) == P.label(p)) continue;
      if (nearestSq[q] < repSq[p] ||
          (nearestSq[q] == repSq[p] && q < repFor[p])) {
        repSq[p] = nearestSq[q];
        repFor[p] = q;
      }
    }
    batch.clear();
    for (std::size_t p : out.indices) {
      const std::size_t rep = repFor[p];
      if (rep == kNoIndex) continue;
      batch.push_back(rep);
      if (trace)
        trace->attributions.push_back({p, rep, out.stats.iterations});
    }
  }
  return out;
}

Subset net(const TrainingSet& P, const NeighborTable& T) {
  validate(P, T);
  const Real gamma = T.minNeDistance();
  Subset out{Algorithm::Net, {}, P.size(), {}};
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool covered = false;
    for (const std::size_t s : out.indices) {
      ++out.stats.comparisons;
      if (distance(P, s, i) < gamma) {
        covered = true;
        break;
      }
    }
    if (!covered) out.indices.push_back(i);
  }
  return out;
}

Subset condense(Algorithm a, const TrainingSet& P, const NeighborTable& T) {
  switch (a) {
    case Algorithm::Mss: return mss(P, T);
    case Algorithm::Rss: return rss(P, T);
    case Algorithm::Vss: return vss(P, T);
    case Algorithm::Fcnn: return fcnn(P, T);
    case Algorithm::Net: return net(P, T);
    case Algorithm::Optimal: break;  // exhaustive search has its own entry point
  }
  throw InvalidInput("algorithm is not dispatchable here");
}

}  // namespace nnc
