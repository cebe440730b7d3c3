#pragma once

#include <filesystem>
#include <vector>

#include "neyman/experiment.hpp"

namespace neyman {

/// Grid of variance-vs-T subplots, one per instance, one polyline per
/// strategy, log-scaled y. Hand-rolled SVG: no plotting toolchain needed to
/// reproduce the figures.
void write_variance_grid_svg(const ExperimentResult& result,
                             const std::filesystem::path& path);

/// Single ratio-vs-alpha plot, one polyline per instance, log-scaled y with a
/// reference line at ratio = 1. Invalid rows (NaN ratio) are skipped.
void write_clip_ratio_svg(const ExperimentResult& result,
                          const std::filesystem::path& path);

/// Writes whichever figures the result supports under `dir`
/// (comparison_variance.svg, clip_ratio.svg); returns the files written.
std::vector<std::filesystem::path> emit_plots(const ExperimentResult& result,
                                              const std::filesystem::path& dir);

}  // namespace neyman
