#pragma once

#include <functional>
#include <vector>

#include "nnc/condense.hpp"

namespace nnc {

struct BenchRecord {
  Algorithm algorithm;
  std::size_t n;
  double elapsedSeconds;  // median over `repeats` runs
  std::uint64_t comparisons;
  std::size_t subsetSize;
};

/// Runs one condenser over a deterministic family of growing datasets and
/// reports the comparison counters the complexity assertions are made on
/// (wall clock is recorded for context only).
std::vector<BenchRecord> run_scaling(
    Algorithm algorithm,
    const std::function<TrainingSet(std::size_t n)>& generator,
    const std::vector<std::size_t>& sizes, int repeats = 5);

/// Least-squares slope of log(comparisons) against log(n).
double loglog_slope(const std::vector<BenchRecord>& records);

void write_bench_csv(const std::vector<BenchRecord>& records,
                     std::ostream& out);

}  // namespace nnc
