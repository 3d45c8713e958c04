#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nnc/error.hpp"

namespace nnc {

using Real = double;

/// What to do with rows whose coordinates collide with an earlier row of a
/// different class. Such pairs have a nearest-enemy distance of zero, which
/// no condensation algorithm tolerates.
enum class DuplicatePolicy {
  Reject,         ///< throw InvalidInput (default)
  DropConflicts,  ///< keep the first occurrence, drop later conflicting rows
};

/// Immutable set of labeled points in R^d. Class ids are contiguous
/// 0..numClasses()-1 in order of first appearance. Point indices equal
/// storage positions. Duplicate coordinates within the same class are kept
/// but counted (see duplicateSameLabelCount).
class TrainingSet {
 public:
  static TrainingSet create(std::size_t dim, std::vector<std::string> classNames,
                            std::vector<Real> coords, std::vector<int> labels,
                            DuplicatePolicy policy = DuplicatePolicy::Reject);

  std::size_t size() const { return labels_.size(); }
  std::size_t dim() const { return dim_; }
  int numClasses() const { return static_cast<int>(classNames_.size()); }
  const std::vector<std::string>& classNames() const { return classNames_; }

  std::span<const Real> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  int label(std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }

  std::size_t duplicateSameLabelCount() const { return sameLabelDuplicates_; }
  std::size_t droppedConflictCount() const { return droppedConflicts_; }

  /// FNV-1a over dimension, coordinate bytes, labels and class names; used
  /// as the provenance hash embedded in subset artifacts.
  std::uint64_t contentHash() const;

 private:
  TrainingSet() = default;
  std::size_t dim_ = 0;
  std::vector<Real> coords_;
  std::vector<int> labels_;
  std::vector<std::string> classNames_;
  std::size_t sameLabelDuplicates_ = 0;
  std::size_t droppedConflicts_ = 0;
};

/// Euclidean l2 distance. Throws InvalidInput on dimension mismatch.
Real distance(std::span<const Real> a, std::span<const Real> b);
Real squaredDistance(std::span<const Real> a, std::span<const Real> b);

inline Real distance(const TrainingSet& P, std::size_t i, std::size_t j) {
  return distance(P.point(i), P.point(j));
}

struct CsvOptions {
  char delimiter = ',';
  DuplicatePolicy duplicates = DuplicatePolicy::Reject;
};

/// Parses d numeric columns followed by one label column; d is inferred from
/// the first data row. A non-numeric first row is treated as a header.
/// Labels are interned in first-appearance order.
TrainingSet load_csv(std::istream& in, const CsvOptions& options = {});
TrainingSet load_csv_file(const std::filesystem::path& path,
                          const CsvOptions& options = {});

/// Writes coordinates with round-trip precision; load_csv(save_csv(P)) == P.
void save_csv(const TrainingSet& P, std::ostream& out);

/// n points uniform in the unit square; class "red" strictly inside the disk
/// of radius 0.25 centered at (0.5, 0.5), "blue" outside. Deterministic in
/// (n, seed), bit-identical across runs.
TrainingSet gen_circle(std::size_t n, std::uint64_t seed);

/// Collinear construction with two red points at distance 1 and
/// floor(3/eps) blue points at i*eps/4 along the segment, zero-padded into
/// R^d. Has exactly 4 distinct NE points and 4 border points.
TrainingSet gen_mss_adversarial(Real eps, std::size_t d);

/// kappa/2 arrangements of one red center plus m blue points on its unit
/// sphere, centers `separation` apart along the first axis. d == 2 uses
/// equally spaced angles; d > 2 uses seeded uniform sphere sampling.
TrainingSet gen_sphere_lowerbound(std::size_t kappa, std::size_t m,
                                  std::size_t d, Real separation);

}  // namespace nnc
