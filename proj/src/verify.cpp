#include "nnc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace nnc {

namespace {

constexpr Real kAngleTolerance = 1e-9;
constexpr Real kEmptyDiskRelTolerance = 1e-9;

Real angleAt(std::span<const Real> apex, std::span<const Real> a,
             std::span<const Real> b) {
  Real dot = 0, na = 0, nb = 0;
  for (std::size_t j = 0; j < apex.size(); ++j) {
    const Real va = a[j] - apex[j];
    const Real vb = b[j] - apex[j];
    dot += va * vb;
    na += va * va;
    nb += vb * vb;
  }
  const Real denom = std::sqrt(na * nb);
  if (denom == 0) return 0;
  return std::acos(std::clamp(dot / denom, Real{-1}, Real{1}));
}

// Minimum pairwise angle audit shared by the RSS charging and FCNN
// representative checks. Groups are (apex point, member points).
VerificationReport angleAudit(
    const TrainingSet& P, std::string property,
    const std::vector<std::pair<std::size_t, std::vector<std::size_t>>>&
        groups) {
  VerificationReport report;
  report.property = std::move(property);
  report.holds = true;
  Real minAngle = std::numeric_limits<Real>::infinity();
  std::size_t maxGroup = 0;
  const Real bound = M_PI / 3 - kAngleTolerance;
  for (const auto& [apex, members] : groups) {
    maxGroup = std::max(maxGroup, members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Real angle =
            angleAt(P.point(apex), P.point(members[a]), P.point(members[b]));
        minAngle = std::min(minAngle, angle);
        if (angle < bound && report.holds) {
          report.holds = false;
          report.witness = {{apex, members[a], members[b]},
                            {angle},
                            "pair subtends less than pi/3 at its NE point"};
        }
      }
    }
    if (P.dim() == 2 && members.size() > 6 && report.holds) {
      report.holds = false;
      report.witness = {{apex},
                        {static_cast<Real>(members.size())},
                        "group exceeds the d=2 packing bound of 6"};
    }
  }
  report.metrics["minPairwiseAngle"] =
      std::isfinite(minAngle) ? minAngle : 0.0;
  report.metrics["maxGroupSize"] = static_cast<Real>(maxGroup);
  report.metrics["numGroups"] = static_cast<Real>(groups.size());
  return report;
}

}  // namespace

VerificationReport is_consistent(const TrainingSet& P, const Subset& R) {
  if (R.indices.empty()) throw InvalidInput("is_consistent: empty subset");
  VerificationReport report;
  report.property = "consistent";
  report.holds = true;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto [nn, dist] = nearest_in_subset(P.point(i), R.indices, P);
    if (P.label(nn) != P.label(i)) {
      report.holds = false;
      report.witness = {{i, nn}, {dist}, "misclassified by subset NN"};
      break;
    }
  }
  return report;
}

VerificationReport is_selective(const TrainingSet& P, const Subset& R,
                                const NeighborTable& T) {
  if (R.indices.empty()) throw InvalidInput("is_selective: empty subset");
  VerificationReport report;
  report.property = "selective";
  report.holds = true;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto [nn, dist] = nearest_in_subset(P.point(i), R.indices, P);
    if (!(dist < T[i].neDist)) {
      report.holds = false;
      report.witness = {
          {i, nn}, {dist, T[i].neDist}, "no subset point inside NE ball"};
      break;
    }
  }
  return report;
}

namespace {

struct Disk {
  Real cx, cy, r;
};

// Circumdisk of three points; false when (near-)collinear.
bool circumdisk(std::span<const Real> a, std::span<const Real> b,
                std::span<const Real> c, Disk& out) {
  const Real abx = b[0] - a[0], aby = b[1] - a[1];
  const Real acx = c[0] - a[0], acy = c[1] - a[1];
  const Real det = 2 * (abx * acy - aby * acx);
  const Real scale = std::sqrt((abx * abx + aby * aby) * (acx * acx + acy * acy));
  if (std::abs(det) <= 1e-14 * scale) return false;
  const Real ab2 = abx * abx + aby * aby;
  const Real ac2 = acx * acx + acy * acy;
  const Real ux = (acy * ab2 - aby * ac2) / det;
  const Real uy = (abx * ac2 - acx * ab2) / det;
  out = {a[0] + ux, a[1] + uy, std::sqrt(ux * ux + uy * uy)};
  return true;
}

bool diskEmpty(const TrainingSet& P, const Disk& disk, std::size_t skipA,
               std::size_t skipB, std::size_t skipC) {
  const Real limit = disk.r * (1 - kEmptyDiskRelTolerance);
  const Real limitSq = limit * limit;
  for (std::size_t s = 0; s < P.size(); ++s) {
    if (s == skipA || s == skipB || s == skipC) continue;
    auto x = P.point(s);
    const Real dx = x[0] - disk.cx, dy = x[1] - disk.cy;
    if (dx * dx + dy * dy < limitSq) return false;
  }
  return true;
}

// Delaunay-edge witness: some disk through a and b is empty. Checking the
// diameter disk plus every circumdisk with a third point is exhaustive for
// boundary-inclusive emptiness.
bool hasEmptyDisk(const TrainingSet& P, std::size_t a, std::size_t b) {
  auto pa = P.point(a);
  auto pb = P.point(b);
  Disk disk{(pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2,
            distance(pa, pb) / 2};
  if (diskEmpty(P, disk, a, b, kNoIndex)) return true;
  for (std::size_t r = 0; r < P.size(); ++r) {
    if (r == a || r == b) continue;
    if (!circumdisk(pa, pb, P.point(r), disk)) continue;
    if (diskEmpty(P, disk, a, b, r)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> border_points_2d(const TrainingSet& P) {
  if (P.dim() != 2)
    throw UnsupportedDimension("border_points_2d requires d == 2");
  const std::size_t n = P.size();
  std::vector<char> border(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (P.label(a) == P.label(b)) continue;
      if (border[a] && border[b]) continue;
      if (hasEmptyDisk(P, a, b)) border[a] = border[b] = 1;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (border[i]) out.push_back(i);
  return out;
}

std::size_t count_ne_points(const TrainingSet& P, const NeighborTable& T) {
  std::vector<char> isNe(P.size(), 0);
  for (std::size_t i = 0; i < T.size(); ++i) isNe[T[i].neIndex] = 1;
  return static_cast<std::size_t>(
      std::count(isNe.begin(), isNe.end(), char{1}));
}

VerificationReport audit_ne_charging(const TrainingSet& P, const Subset& R,
                                     const NeighborTable& T) {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> groups;
  std::vector<int> groupOf(P.size(), -1);
  for (std::size_t s : R.indices) {
    const std::size_t ne = T[s].neIndex;
    if (groupOf[ne] < 0) {
      groupOf[ne] = static_cast<int>(groups.size());
      groups.push_back({ne, {}});
    }
    groups[groupOf[ne]].second.push_back(s);
  }
  auto report = angleAudit(P, "ne-charging", groups);
  report.metrics["kappa"] = static_cast<Real>(count_ne_points(P, T));
  return report;
}

VerificationReport audit_fcnn_representatives(const TrainingSet& P,
                                              const FcnnTrace& trace) {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> groups;
  std::vector<int> groupOf(P.size(), -1);
  for (const auto& att : trace.attributions) {
    if (groupOf[att.parent] < 0) {
      groupOf[att.parent] = static_cast<int>(groups.size());
      groups.push_back({att.parent, {}});
    }
    groups[groupOf[att.parent]].second.push_back(att.representative);
  }
  return angleAudit(P, "fcnn-representatives", groups);
}

Subset min_consistent_subset_bruteforce(const TrainingSet& P) {
  const std::size_t n = P.size();
  if (n == 0) throw InvalidInput("empty training set");
  if (n > 20)
    throw InvalidInput("min_consistent_subset_bruteforce refuses n > 20");

  Subset out{Algorithm::Optimal, {}, n, {}};
  std::vector<std::size_t> combo;
  auto consistent = [&](const std::vector<std::size_t>& R) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto [nn, dist] = nearest_in_subset(P.point(i), R, P);
      (void)dist;
      if (P.label(nn) != P.label(i)) return false;
    }
    return true;
  };
  // Size-ascending, lexicographic within each size.
  for (std::size_t size = 1; size <= n; ++size) {
    combo.resize(size);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    while (true) {
      if (consistent(combo)) {
        out.indices = combo;
        return out;
      }
      // next lexicographic combination of {0..n-1}
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  out.indices.clear();  // unreachable: R = P is always consistent
  return out;
}

}  // namespace nnc
