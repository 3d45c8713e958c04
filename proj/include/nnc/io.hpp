#pragma once

#include <iosfwd>
#include <string>

#include "nnc/condense.hpp"
#include "nnc/verify.hpp"

namespace nnc {

std::string to_hex(std::uint64_t h);

/// {algorithm, sourceSize, indices[], stats{}, datasetHash}
std::string subset_to_json(const Subset& subset, const TrainingSet& P);
Subset subset_from_json(std::istream& in, std::string* datasetHash = nullptr);

/// One selected point per row: index, coordinates, label name.
void subset_to_csv(const Subset& subset, const TrainingSet& P,
                   std::ostream& out);

std::string report_to_json(const VerificationReport& report);

/// x, y, label, selected rows for 2-D plot tooling.
void plot_csv(const TrainingSet& P, const std::vector<std::size_t>& selected,
              std::ostream& out);

/// Minimal scatter SVG: selected points fully colored, the rest faded.
void plot_svg(const TrainingSet& P, const std::vector<std::size_t>& selected,
              std::ostream& out);

}  // namespace nnc
