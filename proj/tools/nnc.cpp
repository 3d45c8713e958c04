// Command-line front end: dataset generation and ingestion, condensation,
// verification, evaluation, benchmarking, and plot-data emission.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "nnc/bench.hpp"
#include "nnc/condense.hpp"
#include "nnc/dataset.hpp"
#include "nnc/io.hpp"
#include "nnc/neighbors.hpp"
#include "nnc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitInvalidDataset = 3;
constexpr int kExitProvenanceMismatch = 4;
constexpr int kExitUnsupportedDimension = 5;

struct DatasetArgs {
  std::string input;
  std::string gen;
  std::size_t n = 10000;
  std::uint64_t seed = 42;
  double eps = 0.1;
  std::size_t dim = 2;
  std::size_t kappa = 2;
  std::size_t m = 8;
  double separation = 10.0;
  bool dropConflicts = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input, "dataset CSV path");
    cmd->add_option("--gen", gen,
                    "generator: circle | mss-adversarial | sphere-lowerbound")
        ->check(CLI::IsMember({"circle", "mss-adversarial",
                               "sphere-lowerbound"}));
    cmd->add_option("--n", n, "circle: number of points");
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--eps", eps, "mss-adversarial: epsilon in (0,1)");
    cmd->add_option("--d", dim, "generator dimension");
    cmd->add_option("--kappa", kappa, "sphere-lowerbound: NE point count");
    cmd->add_option("--m", m, "sphere-lowerbound: points per sphere");
    cmd->add_option("--separation", separation,
                    "sphere-lowerbound: center spacing");
    cmd->add_flag("--drop-conflicts", dropConflicts,
                  "drop later rows duplicating earlier coordinates under a "
                  "different label");
  }

  nnc::TrainingSet load() const {
    if (!input.empty()) {
      nnc::CsvOptions options;
      options.duplicates = dropConflicts ? nnc::DuplicatePolicy::DropConflicts
                                         : nnc::DuplicatePolicy::Reject;
      return nnc::load_csv_file(input, options);
    }
    if (gen == "circle") return nnc::gen_circle(n, seed);
    if (gen == "mss-adversarial") return nnc::gen_mss_adversarial(eps, dim);
    if (gen == "sphere-lowerbound")
      return nnc::gen_sphere_lowerbound(kappa, m, dim, separation);
    throw nnc::Error("provide --input or --gen");
  }
};

std::ofstream openOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw nnc::Error("cannot write " + path);
  return out;
}

int threadBudget() {
  if (const char* env = std::getenv("NNC_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::vector<nnc::Algorithm> parseAlgoList(const std::string& algo) {
  if (algo == "all")
    return {nnc::Algorithm::Mss, nnc::Algorithm::Rss, nnc::Algorithm::Vss,
            nnc::Algorithm::Fcnn, nnc::Algorithm::Net};
  return {nnc::algorithm_from_name(algo)};
}

int cmdGenerate(const DatasetArgs& dataset, const std::string& outPath) {
  const auto P = dataset.load();
  auto out = openOut(outPath);
  nnc::save_csv(P, out);
  std::cerr << "wrote " << P.size() << " points (d=" << P.dim() << ", "
            << P.numClasses() << " classes) to " << outPath << "\n";
  return kExitOk;
}

int cmdCondense(const DatasetArgs& dataset, const std::string& algo,
                const std::string& outDir) {
  const auto P = dataset.load();
  const auto T = nnc::build_neighbor_table_accelerated(P);
  const auto algorithms = parseAlgoList(algo);

  std::vector<nnc::Subset> results(algorithms.size());
  const int threads = threadBudget();
  if (threads > 1 && algorithms.size() > 1) {
    std::vector<std::future<nnc::Subset>> futures;
    for (auto a : algorithms)
      futures.push_back(std::async(std::launch::async, [&, a] {
        return nnc::condense(a, P, T);
      }));
    for (std::size_t i = 0; i < futures.size(); ++i)
      results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < algorithms.size(); ++i)
      results[i] = nnc::condense(algorithms[i], P, T);
  }

  std::printf("%-6s %8s %8s\n", "algo", "size", "% of n");
  for (const auto& subset : results) {
    const std::string base =
        outDir + "/" + nnc::algorithm_name(subset.algorithm);
    openOut(base + ".subset.json") << nnc::subset_to_json(subset, P);
    auto csv = openOut(base + ".subset.csv");
    nnc::subset_to_csv(subset, P, csv);
    std::printf("%-6s %8zu %7.1f%%\n", nnc::algorithm_name(subset.algorithm),
                subset.indices.size(),
                100.0 * subset.indices.size() / subset.sourceSize);
  }
  return kExitOk;
}

int cmdVerify(const DatasetArgs& dataset, const std::string& check,
              const std::string& subsetPath) {
  const auto P = dataset.load();

  if (check == "border") {
    const auto border = nnc::border_points_2d(P);
    nnc::VerificationReport report;
    report.property = "border-points";
    report.holds = true;
    report.metrics["k"] = static_cast<double>(border.size());
    std::cout << nnc::report_to_json(report) << "\n";
    return kExitOk;
  }

  const auto T = nnc::build_neighbor_table_accelerated(P);
  if (check == "kappa") {
    nnc::VerificationReport report;
    report.property = "kappa";
    report.holds = true;
    report.metrics["kappa"] =
        static_cast<double>(nnc::count_ne_points(P, T));
    std::cout << nnc::report_to_json(report) << "\n";
    return kExitOk;
  }
  if (check == "fcnn-reps") {
    nnc::FcnnTrace trace;
    nnc::fcnn(P, T, &trace);
    const auto report = nnc::audit_fcnn_representatives(P, trace);
    std::cout << nnc::report_to_json(report) << "\n";
    return report.holds ? kExitOk : 1;
  }

  if (subsetPath.empty()) throw nnc::Error("--subset is required");
  std::ifstream in(subsetPath);
  if (!in) throw nnc::Error("cannot open " + subsetPath);
  std::string hash;
  const auto subset = nnc::subset_from_json(in, &hash);
  if (!hash.empty() && hash != nnc::to_hex(P.contentHash())) {
    std::cerr << "subset was produced from a different dataset\n";
    return kExitProvenanceMismatch;
  }

  nnc::VerificationReport report;
  if (check == "consistent") report = nnc::is_consistent(P, subset);
  else if (check == "selective") report = nnc::is_selective(P, subset, T);
  else if (check == "charging") report = nnc::audit_ne_charging(P, subset, T);
  else throw nnc::Error("unknown check '" + check + "'");
  std::cout << nnc::report_to_json(report) << "\n";
  return report.holds ? kExitOk : 1;
}

int cmdEvaluate(const DatasetArgs& dataset, const std::string& subsetPath,
                const std::string& queriesPath) {
  const auto P = dataset.load();
  std::ifstream in(subsetPath);
  if (!in) throw nnc::Error("cannot open " + subsetPath);
  std::string hash;
  const auto subset = nnc::subset_from_json(in, &hash);
  if (!hash.empty() && hash != nnc::to_hex(P.contentHash())) {
    std::cerr << "subset was produced from a different dataset\n";
    return kExitProvenanceMismatch;
  }

  std::optional<nnc::TrainingSet> queries;
  if (!queriesPath.empty()) queries = nnc::load_csv_file(queriesPath);
  const nnc::TrainingSet& Q = queries ? *queries : P;
  if (Q.dim() != P.dim())
    throw nnc::InvalidInput("query dimension does not match dataset");

  std::vector<std::size_t> full(P.size());
  for (std::size_t i = 0; i < full.size(); ++i) full[i] = i;
  std::size_t okSubset = 0, okFull = 0;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const auto q = Q.point(i);
    if (nnc::classify_nn(q, subset.indices, P) == Q.label(i)) ++okSubset;
    if (nnc::classify_nn(q, full, P) == Q.label(i)) ++okFull;
  }
  std::printf(
      "{\n  \"algorithm\": \"%s\",\n  \"subsetSize\": %zu,\n"
      "  \"queries\": %zu,\n  \"accuracySubset\": %.6f,\n"
      "  \"accuracyFull\": %.6f\n}\n",
      nnc::algorithm_name(subset.algorithm), subset.indices.size(), Q.size(),
      double(okSubset) / Q.size(), double(okFull) / Q.size());
  return kExitOk;
}

int cmdBench(const std::string& algo, std::vector<std::size_t> sizes,
             std::uint64_t seed, const std::string& outPath) {
  std::vector<nnc::BenchRecord> all;
  for (auto a : parseAlgoList(algo)) {
    auto records = nnc::run_scaling(
        a, [seed](std::size_t n) { return nnc::gen_circle(n, seed); }, sizes);
    all.insert(all.end(), records.begin(), records.end());
  }
  if (outPath.empty()) {
    nnc::write_bench_csv(all, std::cout);
  } else {
    auto out = openOut(outPath);
    nnc::write_bench_csv(all, out);
  }
  return kExitOk;
}

int cmdPlot(const DatasetArgs& dataset, const std::string& subsetPath,
            const std::string& prefix) {
  const auto P = dataset.load();
  if (P.dim() != 2)
    throw nnc::UnsupportedDimension("plots are 2-D only");
  std::vector<std::size_t> selected;
  if (!subsetPath.empty()) {
    std::ifstream in(subsetPath);
    if (!in) throw nnc::Error("cannot open " + subsetPath);
    std::string hash;
    const auto subset = nnc::subset_from_json(in, &hash);
    if (!hash.empty() && hash != nnc::to_hex(P.contentHash())) {
      std::cerr << "subset was produced from a different dataset\n";
      return kExitProvenanceMismatch;
    }
    selected = subset.indices;
  }
  auto csv = openOut(prefix + ".csv");
  nnc::plot_csv(P, selected, csv);
  auto svg = openOut(prefix + ".svg");
  nnc::plot_svg(P, selected, svg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nearest-neighbor condensation toolkit"};
  app.require_subcommand(1);

  DatasetArgs dsGenerate, dsCondense, dsVerify, dsEvaluate, dsPlot;
  std::string outPath = "dataset.csv";
  std::string algo = "all";
  std::string outDir = ".";
  std::string check = "consistent";
  std::string subsetPath;
  std::string queriesPath;
  std::string benchAlgo = "all";
  std::vector<std::size_t> benchSizes = {1000, 2000, 4000, 8000};
  std::uint64_t benchSeed = 42;
  std::string benchOut;
  std::string plotPrefix = "plot";

  auto* generate = app.add_subcommand("generate", "write a generated dataset");
  dsGenerate.attach(generate);
  generate->add_option("--out", outPath, "output CSV path");

  auto* condense = app.add_subcommand("condense", "run condensation");
  dsCondense.attach(condense);
  condense->add_option("--algo", algo, "mss|rss|vss|fcnn|net|all");
  condense->add_option("--out-dir", outDir, "artifact directory");

  auto* verify = app.add_subcommand("verify", "run a property check");
  dsVerify.attach(verify);
  verify->add_option("--check", check,
                     "consistent|selective|charging|fcnn-reps|border|kappa");
  verify->add_option("--subset", subsetPath, "subset JSON artifact");

  auto* evaluate = app.add_subcommand("evaluate", "NN accuracy of a subset");
  dsEvaluate.attach(evaluate);
  evaluate->add_option("--subset", subsetPath, "subset JSON artifact")
      ->required();
  evaluate->add_option("--queries", queriesPath,
                       "held-out query CSV (default: the training set)");

  auto* bench = app.add_subcommand("bench", "comparison-count scaling runs");
  bench->add_option("--algo", benchAlgo, "mss|rss|vss|fcnn|net|all");
  bench->add_option("--sizes", benchSizes, "ascending dataset sizes");
  bench->add_option("--seed", benchSeed, "circle generator seed");
  bench->add_option("--out", benchOut, "CSV path (default stdout)");

  auto* plot = app.add_subcommand("plot", "emit plot CSV and SVG");
  dsPlot.attach(plot);
  plot->add_option("--subset", subsetPath, "subset JSON artifact");
  plot->add_option("--out-prefix", plotPrefix, "output file prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmdGenerate(dsGenerate, outPath);
    if (condense->parsed()) return cmdCondense(dsCondense, algo, outDir);
    if (verify->parsed()) return cmdVerify(dsVerify, check, subsetPath);
    if (evaluate->parsed())
      return cmdEvaluate(dsEvaluate, subsetPath, queriesPath);
    if (bench->parsed())
      return cmdBench(benchAlgo, benchSizes, benchSeed, benchOut);
    if (plot->parsed()) return cmdPlot(dsPlot, subsetPath, plotPrefix);
  } catch (const nnc::UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedDimension;
  } catch (const nnc::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidDataset;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
