#pragma once

#include <string>

#include "report.hpp"

namespace qbio::cli {

// Static polyline plot of a report's series: column 0 is x, the rest are
// curves. Returns false (with a message in *error) instead of throwing, so
// plotting can never fail a run.
bool write_svg_plot(const Report& report, const std::string& path,
                    std::string* error);

}  // namespace qbio::cli
