#include "nnc/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace nnc {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string coordKey(std::span<const Real> x) {
  std::string key(x.size() * sizeof(Real), '\0');
  std::memcpy(key.data(), x.data(), key.size());
  return key;
}

// Uniform double in [0, 1) with an explicit bit mapping, so the stream is
// fixed by the mt19937_64 sequence alone (uniform_real_distribution is
// implementation-defined).
Real uniform01(std::mt19937_64& rng) {
  return static_cast<Real>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TrainingSet TrainingSet::create(std::size_t dim,
                                std::vector<std::string> classNames,
                                std::vector<Real> coords,
                                std::vector<int> labels,
                                DuplicatePolicy policy) {
  if (dim < 1) throw InvalidInput("dimension must be >= 1");
  if (coords.size() != labels.size() * dim)
    throw InvalidInput("coords/labels size mismatch");
  const int numClasses = static_cast<int>(classNames.size());
  for (int l : labels)
    if (l < 0 || l >= numClasses) throw InvalidInput("label id out of range");
  for (Real v : coords)
    if (!std::isfinite(v)) throw InvalidInput("non-finite coordinate");

  TrainingSet P;
  P.dim_ = dim;
  P.classNames_ = std::move(classNames);

  std::unordered_map<std::string, int> seen;  // coord bytes -> first label
  seen.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::span<const Real> x{coords.data() + i * dim, dim};
    auto [it, inserted] = seen.emplace(coordKey(x), labels[i]);
    if (!inserted) {
      if (it->second != labels[i]) {
        if (policy == DuplicatePolicy::Reject)
          throw InvalidInput(
              "duplicate coordinates with different labels at point " +
              std::to_string(i));
        ++P.droppedConflicts_;
        continue;
      }
      ++P.sameLabelDuplicates_;
    }
    P.coords_.insert(P.coords_.end(), x.begin(), x.end());
    P.labels_.push_back(labels[i]);
  }
  return P;
}

std::uint64_t TrainingSet::contentHash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  std::uint64_t d = dim_;
  h = fnv1a(h, &d, sizeof d);
  h = fnv1a(h, coords_.data(), coords_.size() * sizeof(Real));
  h = fnv1a(h, labels_.data(), labels_.size() * sizeof(int));
  for (const auto& name : classNames_) h = fnv1a(h, name.data(), name.size());
  return h;
}

Real squaredDistance(std::span<const Real> a, std::span<const Real> b) {
  if (a.size() != b.size())
    throw InvalidInput("distance: dimension mismatch");
  Real s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Real diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

Real distance(std::span<const Real> a, std::span<const Real> b) {
  return std::sqrt(squaredDistance(a, b));
}

namespace {

bool parseReal(std::string_view field, Real& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> splitLine(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  for (auto& f : fields) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t'))
      f.remove_prefix(1);
    while (!f.empty() &&
           (f.back() == ' ' || f.back() == '\t' || f.back() == '\r'))
      f.remove_suffix(1);
  }
  return fields;
}

}  // namespace

TrainingSet load_csv(std::istream& in, const CsvOptions& options) {
  std::string line;
  std::size_t lineNo = 0;
  std::size_t dim = 0;
  std::vector<Real> coords;
  std::vector<int> labels;
  std::vector<std::string> classNames;
  std::unordered_map<std::string, int> classIds;
  bool sawFirstRow = false;

  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line == "\r") continue;
    auto fields = splitLine(line, options.delimiter);
    if (!sawFirstRow) {
      if (fields.size() < 2)
        throw ParseError(lineNo, "expected at least one coordinate and a label");
      // Header detection: any non-numeric coordinate column in the first row.
      bool numeric = true;
      Real tmp;
      for (std::size_t i = 0; i + 1 < fields.size(); ++i)
        numeric = numeric && parseReal(fields[i], tmp);
      sawFirstRow = true;
      if (!numeric) continue;  // header row, skip
      dim = fields.size() - 1;
    }
    if (dim == 0) {
      if (fields.size() < 2)
        throw ParseError(lineNo, "expected at least one coordinate and a label");
      dim = fields.size() - 1;
    }
    if (fields.size() != dim + 1)
      throw ParseError(lineNo, "expected " + std::to_string(dim + 1) +
                                   " fields, got " +
                                   std::to_string(fields.size()));
    for (std::size_t i = 0; i < dim; ++i) {
      Real v;
      if (!parseReal(fields[i], v))
        throw ParseError(lineNo, "non-numeric coordinate '" +
                                     std::string(fields[i]) + "'");
      coords.push_back(v);
    }
    std::string name(fields[dim]);
    auto [it, inserted] =
        classIds.emplace(name, static_cast<int>(classNames.size()));
    if (inserted) classNames.push_back(name);
    labels.push_back(it->second);
  }
  if (labels.size() < 2)
    throw ParseError(lineNo, "fewer than 2 data rows");
  return TrainingSet::create(dim, std::move(classNames), std::move(coords),
                             std::move(labels), options.duplicates);
}

TrainingSet load_csv_file(const std::filesystem::path& path,
                          const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_csv(in, options);
}

void save_csv(const TrainingSet& P, std::ostream& out) {
  char buf[64];
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto x = P.point(i);
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x[j]);
      out.write(buf, ptr - buf);
      out.put(',');
    }
    out << P.classNames()[P.label(i)] << '\n';
  }
}

TrainingSet gen_circle(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("gen_circle: n must be >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Real> coords;
  std::vector<int> labels;
  coords.reserve(2 * n);
  labels.reserve(n);
  constexpr Real cx = 0.5, cy = 0.5, radius = 0.25;
  for (std::size_t i = 0; i < n; ++i) {
    const Real x = uniform01(rng);
    const Real y = uniform01(rng);
    coords.push_back(x);
    coords.push_back(y);
    const Real dx = x - cx, dy = y - cy;
    labels.push_back(dx * dx + dy * dy < radius * radius ? 0 : 1);
  }
  return TrainingSet::create(2, {"red", "blue"}, std::move(coords),
                             std::move(labels));
}

TrainingSet gen_mss_adversarial(Real eps, std::size_t d) {
  if (!(eps > 0 && eps < 1))
    throw InvalidInput("gen_mss_adversarial: eps must be in (0,1)");
  if (d < 1) throw InvalidInput("gen_mss_adversarial: d must be >= 1");
  const std::size_t m = static_cast<std::size_t>(std::floor(3.0 / eps));
  std::vector<Real> coords;
  std::vector<int> labels;
  auto push = [&](Real x, int label) {
    coords.push_back(x);
    for (std::size_t j = 1; j < d; ++j) coords.push_back(0.0);
    labels.push_back(label);
  };
  push(0.0, 0);  // r1
  push(1.0, 0);  // r2
  for (std::size_t i = 1; i <= m; ++i)
    push(static_cast<Real>(i) * eps / 4.0, 1);  // b_i
  return TrainingSet::create(d, {"red", "blue"}, std::move(coords),
                             std::move(labels));
}

TrainingSet gen_sphere_lowerbound(std::size_t kappa, std::size_t m,
                                  std::size_t d, Real separation) {
  if (kappa < 2 || kappa % 2 != 0)
    throw InvalidInput("gen_sphere_lowerbound: kappa must be even and >= 2");
  if (d < 2) throw InvalidInput("gen_sphere_lowerbound: d must be >= 2");
  if (m < d + 1) throw InvalidInput("gen_sphere_lowerbound: m must be >= d+1");
  if (!(separation > 4))
    throw InvalidInput("gen_sphere_lowerbound: separation must be > 4");

  std::mt19937_64 rng(0x5be9c0de ^ (kappa * 1000003 + m * 101 + d));
  std::vector<Real> coords;
  std::vector<int> labels;
  auto pushPoint = [&](const std::vector<Real>& x, int label) {
    coords.insert(coords.end(), x.begin(), x.end());
    labels.push_back(label);
  };

  for (std::size_t a = 0; a < kappa / 2; ++a) {
    const Real offset = static_cast<Real>(a) * separation;
    std::vector<Real> center(d, 0.0);
    center[0] = offset;
    pushPoint(center, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Real> x(d, 0.0);
      if (d == 2) {
        const Real theta = 2.0 * M_PI * static_cast<Real>(i) / m;
        x[0] = std::cos(theta);
        x[1] = std::sin(theta);
      } else {
        Real norm = 0;
        do {
          norm = 0;
          for (std::size_t j = 0; j < d; ++j) {
            // Box-Muller on explicit uniforms keeps the stream fixed.
            const Real u1 = std::max(uniform01(rng),
                                     std::numeric_limits<Real>::min());
            const Real u2 = uniform01(rng);
            x[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
            norm += x[j] * x[j];
          }
        } while (norm < 1e-12);
        norm = std::sqrt(norm);
        for (std::size_t j = 0; j < d; ++j) x[j] /= norm;
      }
      x[0] += offset;
      pushPoint(x, 1);
    }
  }
  return TrainingSet::create(d, {"red", "blue"}, std::move(coords),
                             std::move(labels));
}

}  // namespace nnc
