#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nnc/condense.hpp"
#include "nnc/dataset.hpp"
#include "nnc/neighbors.hpp"

namespace nnc {

/// Outcome of one executable property check. `witness` is present exactly
/// when the property fails and names the offending points.
struct VerificationReport {
  std::string property;
  bool holds = false;
  struct Witness {
    std::vector<std::size_t> indices;
    std::vector<Real> values;
    std::string note;
  };
  std::optional<Witness> witness;
  std::map<std::string, Real> metrics;
};

/// Every p in P is NN-classified correctly by R (ties toward the smallest
/// index). Throws InvalidInput on empty R.
VerificationReport is_consistent(const TrainingSet& P, const Subset& R);

/// Every p in P has a point of R strictly closer than d_ne(p).
VerificationReport is_selective(const TrainingSet& P, const Subset& R,
                                const NeighborTable& T);

/// Indices of the 2-D border points: p such that some enemy q shares an
/// empty disk boundary with p (the Delaunay-edge witness). Brute force over
/// the diameter disk of each enemy pair and all circumdisks with a third
/// point. A disk counts as empty when no point is inside by more than 1e-9
/// relative to the radius. Throws UnsupportedDimension unless d == 2.
std::vector<std::size_t> border_points_2d(const TrainingSet& P);

/// kappa: number of distinct points serving as someone's nearest enemy.
std::size_t count_ne_points(const TrainingSet& P, const NeighborTable& T);

/// Charging audit for RSS output: members of R grouped by shared NE point
/// must pairwise subtend an angle of at least pi/3 - 1e-9 there, and in
/// d = 2 no group may exceed 6 members.
VerificationReport audit_ne_charging(const TrainingSet& P, const Subset& R,
                                     const NeighborTable& T);

/// Same angular audit for the representatives FCNN attributed to each
/// selected point.
VerificationReport audit_fcnn_representatives(const TrainingSet& P,
                                              const FcnnTrace& trace);

/// Smallest consistent subset by exhaustive enumeration (size, then
/// lexicographic). Refuses n > 20.
Subset min_consistent_subset_bruteforce(const TrainingSet& P);

}  // namespace nnc
