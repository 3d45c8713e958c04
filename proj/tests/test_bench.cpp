#include <doctest.h>

#include <sstream>

#include "nnc/bench.hpp"

using namespace nnc;

TEST_CASE("run_scaling records deterministic counters") {
  auto gen = [](std::size_t n) { return gen_circle(n, 7); };
  const std::vector<std::size_t> sizes{100, 200, 400};
  const auto records = run_scaling(Algorithm::Rss, gen, sizes, 1);
  REQUIRE(records.size() == 3);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].n == sizes[i]);
    CHECK(records[i].comparisons > 0);
    CHECK(records[i].subsetSize > 0);
    if (i > 0) CHECK(records[i].comparisons >= records[i - 1].comparisons);
  }
  const auto again = run_scaling(Algorithm::Rss, gen, sizes, 1);
  for (std::size_t i = 0; i < records.size(); ++i)
    CHECK(records[i].comparisons == again[i].comparisons);
}

TEST_CASE("run_scaling validates arguments") {
  auto gen = [](std::size_t n) { return gen_circle(n, 7); };
  CHECK_THROWS_AS(run_scaling(Algorithm::Rss, gen, {400, 100}, 1),
                  InvalidInput);
  CHECK_THROWS_AS(run_scaling(Algorithm::Rss, gen, {100, 400}, 0),
                  InvalidInput);
}

TEST_CASE("loglog_slope of an exact quadratic is 2") {
  std::vector<BenchRecord> records;
  for (std::size_t n : {1000u, 2000u, 4000u})
    records.push_back({Algorithm::Mss, n, 0.1, n * n, 10});
  CHECK(loglog_slope(records) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("bench csv layout") {
  std::vector<BenchRecord> records{{Algorithm::Net, 100, 0.5, 42, 7}};
  std::ostringstream out;
  write_bench_csv(records, out);
  CHECK(out.str() ==
        "algorithm,n,elapsed,comparisons,subsetSize\nnet,100,0.5,42,7\n");
}
