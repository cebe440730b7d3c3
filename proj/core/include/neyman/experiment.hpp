#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "neyman/distributions.hpp"
#include "neyman/simulate.hpp"

namespace neyman {

struct NamedInstance {
    std::string id;
    ProblemInstance instance;
};

struct ExperimentConfig {
    std::vector<NamedInstance> instances;
    std::vector<StrategySpec> strategies;
    std::vector<std::int64_t> horizons;
    std::int64_t replications = 1000;
    std::uint64_t seed = 0;
    double delta = 0.05;
    std::string output_dir = "out";
};

/// Throws ConfigError on empty lists, non-increasing horizons,
/// replications < 1, or delta outside (0,1).
void validate(const ExperimentConfig& config);

/// One (instance, strategy, horizon) aggregate of the comparison experiment.
struct ComparisonCell {
    std::string instance;
    std::string strategy;
    std::int64_t horizon = 0;
    double variance = 0.0;       // across-replication Var(tau_hat), or Eq-form
    double mean_estimate = 0.0;  // mean tau_hat
    double mean_regret = 0.0;
    double regret_q05 = 0.0;
    double regret_q50 = 0.0;
    double regret_q95 = 0.0;
};

/// One (instance, alpha) row of the clipping-time experiment.
struct ClipRow {
    std::string instance;
    double alpha = 0.0;
    double empirical_q95 = 0.0;  // 0.95 quantile of the last clipped round
    double predicted = 0.0;      // theoretical t_clip
    double ratio = 0.0;          // predicted / max(empirical_q95, 1); NaN if invalid
    bool valid = false;
};

struct ExperimentResult {
    std::vector<ComparisonCell> cells;
    std::vector<ClipRow> clip_rows;
};

/// Run `fn(i)` for i in [0, count) on `workers` threads. Work items are
/// claimed from a shared counter; outputs must go to disjoint slots so the
/// result is schedule-independent.
void parallel_for_index(std::int64_t count, int workers,
                        const std::function<void(std::int64_t)>& fn);

/// Resolve the worker count: an explicit request wins, then the
/// NEYMAN_LAB_WORKERS environment variable, then hardware concurrency.
int resolve_workers(int requested);

/// Variance of the ATE estimate per (instance, strategy, horizon).
/// Adaptive designs are simulated `replications` times and aggregated over
/// the aHT estimate; neyman-oracle/balanced/fixed cells carry the closed-form
/// HT variance with no simulation. Requires at least one adaptive strategy
/// plus the neyman-oracle and balanced reference designs.
ExperimentResult variance_comparison(const ExperimentConfig& config,
                                     int workers = 0);

/// Clipping-phase experiment: per (instance, alpha in (0, 0.5)), the 0.95
/// quantile of the last clipped round of a ClipSMT run at the largest
/// configured horizon, the predicted t_clip, and their ratio.
ExperimentResult clip_time_experiment(const ExperimentConfig& config,
                                      const std::vector<double>& alphas,
                                      int workers = 0);

/// Theory-only predictions, one row per (instance, alpha).
struct ClipPrediction {
    std::string instance;
    double t_lower = 0.0;
    double t_upper = 0.0;
    double t_clip = 0.0;
    bool valid = false;
};
std::vector<ClipPrediction> predict_clip_rows(const ExperimentConfig& config,
                                              double alpha);

/// The default 3x3 Bernoulli grid: rows sweep the Neyman allocation over
/// {0.2, 0.35, 0.5}, columns raise the treatment mean within each row.
std::vector<NamedInstance> default_instance_grid();

/// Strategy line-up used by the shipped configs: clipsmt, clipogd, etc,
/// neyman-oracle, balanced.
std::vector<StrategySpec> default_strategies();

}  // namespace neyman
