#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qdx/cli/sweep.hpp"

namespace qdx::cli {

// Line plot of the selected measures against gamma_t for one
// (channel, n, theta) slice. `rows` must all belong to that slice.
std::string render_slice_svg(const std::vector<SweepRow>& rows,
                             const std::vector<Measure>& measures);

// Writes one SVG per slice into `dir` (created if missing) and returns the
// paths in slice order. Names look like `phase_flip_n12_theta3.14159265359e-01.svg`.
std::vector<std::filesystem::path> write_slice_plots(const std::filesystem::path& dir,
                                                     const std::vector<SweepRow>& rows,
                                                     const std::vector<Measure>& measures);

}  // namespace qdx::cli
