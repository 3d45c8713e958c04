#include "nnc/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace nnc {

using nlohmann::json;

std::string to_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string subset_to_json(const Subset& subset, const TrainingSet& P) {
  json j;
  j["algorithm"] = algorithm_name(subset.algorithm);
  j["sourceSize"] = subset.sourceSize;
  j["indices"] = subset.indices;
  j["stats"] = {{"comparisons", subset.stats.comparisons},
                {"iterations", subset.stats.iterations}};
  j["datasetHash"] = to_hex(P.contentHash());
  return j.dump(2);
}

Subset subset_from_json(std::istream& in, std::string* datasetHash) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid subset JSON: ") + e.what());
  }
  Subset subset;
  subset.algorithm = algorithm_from_name(j.at("algorithm").get<std::string>());
  subset.sourceSize = j.at("sourceSize").get<std::size_t>();
  subset.indices = j.at("indices").get<std::vector<std::size_t>>();
  if (j.contains("stats")) {
    subset.stats.comparisons = j["stats"].value("comparisons", 0ull);
    subset.stats.iterations = j["stats"].value("iterations", std::size_t{0});
  }
  if (datasetHash) *datasetHash = j.value("datasetHash", "");
  return subset;
}

void subset_to_csv(const Subset& subset, const TrainingSet& P,
                   std::ostream& out) {
  for (std::size_t idx : subset.indices) {
    out << idx;
    for (Real v : P.point(idx)) out << ',' << v;
    out << ',' << P.classNames()[P.label(idx)] << '\n';
  }
}

std::string report_to_json(const VerificationReport& report) {
  json j;
  j["property"] = report.property;
  j["holds"] = report.holds;
  if (report.witness) {
    j["witness"] = {{"indices", report.witness->indices},
                    {"values", report.witness->values},
                    {"note", report.witness->note}};
  }
  j["metrics"] = report.metrics;
  return j.dump(2);
}

void plot_csv(const TrainingSet& P, const std::vector<std::size_t>& selected,
              std::ostream& out) {
  std::vector<char> flag(P.size(), 0);
  for (std::size_t idx : selected) flag[idx] = 1;
  out << "x,y,label,selected\n";
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto x = P.point(i);
    out << x[0] << ',' << x[1] << ',' << P.classNames()[P.label(i)] << ','
        << int(flag[i]) << '\n';
  }
}

void plot_svg(const TrainingSet& P, const std::vector<std::size_t>& selected,
              std::ostream& out) {
  constexpr double kSize = 800, kMargin = 20;
  static const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c",
                                   "#ff7f0e", "#9467bd", "#8c564b"};
  Real minX = P.point(0)[0], maxX = minX, minY = P.point(0)[1], maxY = minY;
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto x = P.point(i);
    minX = std::min(minX, x[0]);
    maxX = std::max(maxX, x[0]);
    minY = std::min(minY, x[1]);
    maxY = std::max(maxY, x[1]);
  }
  const Real spanX = maxX > minX ? maxX - minX : 1;
  const Real spanY = maxY > minY ? maxY - minY : 1;
  auto sx = [&](Real x) {
    return kMargin + (x - minX) / spanX * (kSize - 2 * kMargin);
  };
  auto sy = [&](Real y) {  // flip: SVG y grows downward
    return kSize - kMargin - (y - minY) / spanY * (kSize - 2 * kMargin);
  };
  std::vector<char> flag(P.size(), 0);
  for (std::size_t idx : selected) flag[idx] = 1;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' '
      << kSize << "\">\n";
  // Faded layer first so selected points render on top.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (int(flag[i]) != pass) continue;
      auto x = P.point(i);
      out << "<circle cx=\"" << sx(x[0]) << "\" cy=\"" << sy(x[1])
          << "\" r=\"" << (pass ? 3.0 : 1.8) << "\" fill=\""
          << kPalette[P.label(i) % 6] << "\" fill-opacity=\""
          << (pass ? "1.0" : "0.15") << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace nnc
