// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nnc/bench.hpp"
#include "nnc/condense.hpp"
#include "nnc/dataset.hpp"
#include "nnc/neighbors.hpp"
#include "nnc/verify.hpp"
#include "support.hpp"

using namespace nnc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("[%s] %d. %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

// The shared random-set suite for criteria 1 and 5.
std::vector<TrainingSet> randomSuite() {
  std::vector<TrainingSet> suite;
  std::mt19937_64 rng(4242);
  const std::size_t dims[] = {1, 2, 3, 5};
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 10 + rng() % 191;
    const std::size_t d = dims[rng() % 4];
    const int classes = 2 + int(rng() % 3);
    suite.push_back(testing::make_random_set(n, d, classes, rng()));
  }
  return suite;
}

bool within(double value, double reference, double relTol, std::string& out) {
  if (std::abs(value - reference) <= relTol * reference) return true;
  std::ostringstream msg;
  msg << value << " not within " << relTol * 100 << "% of " << reference;
  out += msg.str();
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string bananaPath =
      argc > 1 ? argv[1] : std::string(NNC_DATA_DIR) + "/banana.csv";

  criterion(1, "selectivity/consistency on 200 random sets", [](std::string&) {
    for (const auto& P : randomSuite()) {
      const auto T = build_neighbor_table(P);
      for (auto a : {Algorithm::Mss, Algorithm::Rss, Algorithm::Vss})
        if (!is_selective(P, condense(a, P, T), T).holds) return false;
      for (auto a : {Algorithm::Fcnn, Algorithm::Net})
        if (!is_consistent(P, condense(a, P, T)).holds) return false;
    }
    return true;
  });

  criterion(2, "Banana subset sizes vs published values",
            [&](std::string& detail) {
    CsvOptions options;
    options.duplicates = DuplicatePolicy::DropConflicts;
    const auto P = load_csv_file(bananaPath, options);
    const auto T = build_neighbor_table_accelerated(P);
    const std::size_t sizeFcnn = fcnn(P, T).indices.size();
    const std::size_t sizeMss = mss(P, T).indices.size();
    const std::size_t sizeRss = rss(P, T).indices.size();
    const std::size_t sizeVss = vss(P, T).indices.size();
    std::ostringstream msg;
    msg << "fcnn=" << sizeFcnn << " mss=" << sizeMss << " rss=" << sizeRss
        << " vss=" << sizeVss << " ";
    detail += msg.str();
    bool ok = true;
    ok &= within(double(sizeFcnn), 1046, 0.10, detail);
    ok &= within(double(sizeMss), 1136, 0.10, detail);
    ok &= within(double(sizeRss), 1025, 0.10, detail);
    ok &= within(double(sizeVss), 1027, 0.10, detail);
    if (sizeRss > sizeMss) {
      detail += " |RSS| > |MSS|";
      ok = false;
    }
    return ok;
  });

  criterion(3, "circle(1e4) condenses below 5%, net above 50%",
            [](std::string& detail) {
    const auto P = gen_circle(10000, 42);
    const auto T = build_neighbor_table_accelerated(P);
    bool ok = true;
    std::ostringstream msg;
    for (auto a : {Algorithm::Fcnn, Algorithm::Mss, Algorithm::Rss,
                   Algorithm::Vss}) {
      const std::size_t size = condense(a, P, T).indices.size();
      msg << algorithm_name(a) << "=" << size << " ";
      ok = ok && size <= P.size() / 20;
    }
    const std::size_t netSize = net(P, T).indices.size();
    msg << "net=" << netSize;
    detail += msg.str();
    return ok && netSize > P.size() / 2;
  });

  criterion(4, "MSS adversarial lower bound, RSS/VSS stay constant",
            [](std::string& detail) {
    bool ok = true;
    std::ostringstream msg;
    for (const double eps : {0.1, 0.05, 0.025}) {
      const auto P = gen_mss_adversarial(eps, 2);
      const auto T = build_neighbor_table(P);
      const std::size_t sizeMss = mss(P, T).indices.size();
      const std::size_t sizeRss = rss(P, T).indices.size();
      const std::size_t sizeVss = vss(P, T).indices.size();
      msg << "eps=" << eps << ": mss=" << sizeMss << " rss=" << sizeRss
          << " vss=" << sizeVss << "  ";
      ok = ok && sizeMss >= std::size_t(std::ceil(1.0 / (2 * eps)));
      ok = ok && sizeRss <= 4 && sizeVss <= 4;
    }
    detail += msg.str();
    return ok;
  });

  criterion(5, "pi/3 charging audits for RSS and FCNN", [&](std::string&) {
    auto checkBoth = [](const TrainingSet& P, const NeighborTable& T) {
      const auto subsetRss = rss(P, T);
      const auto charging = audit_ne_charging(P, subsetRss, T);
      if (!charging.holds) return false;
      if (P.dim() == 2) {
        const std::size_t kappa = count_ne_points(P, T);
        if (charging.metrics.at("maxGroupSize") > 6) return false;
        if (subsetRss.indices.size() > 6 * kappa) return false;
      }
      FcnnTrace trace;
      fcnn(P, T, &trace);
      return audit_fcnn_representatives(P, trace).holds;
    };
    for (const auto& P : randomSuite())
      if (!checkBoth(P, build_neighbor_table(P))) return false;
    const auto circle = gen_circle(10000, 42);
    if (!checkBoth(circle, build_neighbor_table_accelerated(circle)))
      return false;
    CsvOptions options;
    options.duplicates = DuplicatePolicy::DropConflicts;
    const auto banana = load_csv_file(bananaPath, options);
    return checkBoth(banana, build_neighbor_table_accelerated(banana));
  });

  criterion(6, "2-D border-point structure", [](std::string&) {
    std::mt19937_64 rng(6060);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 10 + rng() % 51;
      const auto P = testing::make_random_set(n, 2, 2 + int(rng() % 2), rng());
      const auto T = build_neighbor_table(P);
      const auto border = border_points_2d(P);
      if (count_ne_points(P, T) > border.size()) return false;
      for (std::size_t i = 0; i < P.size(); ++i)
        if (!std::binary_search(border.begin(), border.end(), T[i].neIndex))
          return false;
      const auto subsetVss = vss(P, T);
      if (subsetVss.indices.size() > border.size()) return false;
      for (std::size_t i : subsetVss.indices)
        if (!std::binary_search(border.begin(), border.end(), i)) return false;
    }
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 8 + rng() % 13;
      const auto P = testing::make_random_set(n, 2, 2, rng());
      if (border_points_2d(P) != testing::border_points_2d_oracle(P))
        return false;
    }
    return true;
  });

  criterion(7, "brute-force optimum sandwiches the heuristics",
            [](std::string&) {
    std::mt19937_64 rng(7070);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 6 + rng() % 9;
      const auto P = testing::make_random_set(n, 2, 2, rng());
      const auto T = build_neighbor_table(P);
      const std::size_t minSize =
          min_consistent_subset_bruteforce(P).indices.size();
      for (auto a : {Algorithm::Mss, Algorithm::Rss, Algorithm::Vss,
                     Algorithm::Fcnn, Algorithm::Net})
        if (condense(a, P, T).indices.size() < minSize) return false;
    }
    const auto sphere = gen_sphere_lowerbound(2, 8, 2, 10);
    return min_consistent_subset_bruteforce(sphere).indices.size() >= 4;
  });

  criterion(8, "comparison counters scale at most quadratically",
            [](std::string& detail) {
    const std::vector<std::size_t> sizes{1000, 2000, 4000, 8000};
    auto gen = [](std::size_t n) { return gen_circle(n, 42); };
    bool ok = true;
    std::ostringstream msg;
    for (auto a : {Algorithm::Mss, Algorithm::Rss, Algorithm::Vss,
                   Algorithm::Fcnn}) {
      const auto records = run_scaling(a, gen, sizes, 1);
      const double slope = loglog_slope(records);
      msg << algorithm_name(a) << " slope=" << slope << " ";
      ok = ok && slope <= 2.2;
    }
    detail += msg.str();
    return ok;
  });

  std::printf("%s: %d criterion(s) failed\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures);
  return failures;
}
