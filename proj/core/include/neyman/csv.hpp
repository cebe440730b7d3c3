#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "neyman/experiment.hpp"

namespace neyman {

/// "%.17g" rendering; NaN is always the literal "nan" so files stay
/// byte-stable across platforms.
std::string format_real(double x);

/// Schema: instance,strategy,T,variance,mean_estimate,mean_regret,
///         regret_q05,regret_q50,regret_q95
void emit_comparison_csv(const ExperimentResult& result,
                         const std::filesystem::path& path);

/// Schema: instance,alpha,empirical_q95,predicted,ratio,valid
void emit_clip_csv(const ExperimentResult& result,
                   const std::filesystem::path& path);

/// Schema: instance,t_lower,t_upper,t_clip,valid
void emit_prediction_csv(const std::vector<ClipPrediction>& rows,
                         std::ostream& os);

/// Writes comparison.csv and/or clip.csv under `dir` for whichever sections
/// of the result are populated; returns the files written.
std::vector<std::filesystem::path> emit_csv(const ExperimentResult& result,
                                            const std::filesystem::path& dir);

}  // namespace neyman
