#include "nnc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

namespace nnc {

std::vector<BenchRecord> run_scaling(
    Algorithm algorithm,
    const std::function<TrainingSet(std::size_t n)>& generator,
    const std::vector<std::size_t>& sizes, int repeats) {
  if (!std::is_sorted(sizes.begin(), sizes.end()))
    throw InvalidInput("run_scaling: sizes must be ascending");
  if (repeats < 1) throw InvalidInput("run_scaling: repeats must be >= 1");

  std::vector<BenchRecord> records;
  for (const std::size_t n : sizes) {
    const TrainingSet P = generator(n);
    const NeighborTable T = build_neighbor_table_accelerated(P);
    std::vector<double> times;
    Subset subset;
    for (int r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      subset = condense(algorithm, P, T);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    records.push_back({algorithm, n, times[times.size() / 2],
                       subset.stats.comparisons, subset.indices.size()});
  }
  return records;
}

double loglog_slope(const std::vector<BenchRecord>& records) {
  if (records.size() < 2) throw InvalidInput("loglog_slope: need >= 2 records");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(records.size());
  for (const auto& r : records) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(static_cast<double>(r.comparisons));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_bench_csv(const std::vector<BenchRecord>& records,
                     std::ostream& out) {
  out << "algorithm,n,elapsed,comparisons,subsetSize\n";
  for (const auto& r : records)
    out << algorithm_name(r.algorithm) << ',' << r.n << ',' << r.elapsedSeconds
        << ',' << r.comparisons << ',' << r.subsetSize << '\n';
}

}  // namespace nnc
