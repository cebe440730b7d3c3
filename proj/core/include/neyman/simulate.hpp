#pragma once

#include <cstdint>
#include <string>

#include "neyman/distributions.hpp"
#include "neyman/regret.hpp"
#include "neyman/rng.hpp"
#include "neyman/strategies.hpp"
#include "neyman/trace.hpp"

namespace neyman {

enum class StrategyKind { ClipSmt, ClipOgd, Etc, Fixed, NeymanOracle, Balanced };

/// Declarative strategy choice plus hyperparameters, as read from a config.
struct StrategySpec {
    StrategyKind kind = StrategyKind::ClipSmt;
    std::string id;                  // CSV label; defaults to the kind name
    double alpha = 1.0 / 3.0;        // clipsmt clipping exponent
    double eta0 = 1.0;               // clipogd step-size scale
    double ogd_clip_exponent = 0.2;  // clipogd guard decay
    double pi = 0.5;                 // fixed allocation
};

const char* strategy_kind_name(StrategyKind kind);

/// Fixed designs are evaluated with the closed-form variance rather than by
/// simulation in the comparison experiment.
bool is_fixed_design(const StrategySpec& spec);

/// Allocation used by a fixed design on the given instance (resolves
/// neyman-oracle and balanced).
double resolve_fixed_pi(const StrategySpec& spec, const ProblemInstance& inst);

StrategyState make_strategy_state(const StrategySpec& spec,
                                  std::int64_t horizon,
                                  const ProblemInstance& inst);

struct ReplicationResult {
    TrialTrace trace;
    RegretLedger ledger;
    /// Last round at which the emitted allocation differed from the strategy's
    /// unguarded value (0 if that never happened).
    std::int64_t clip_exit_round = 0;
};

/// One full T-round interaction: each round emits pi_t, assigns
/// A_t ~ Bernoulli(pi_t), observes Y_t, and updates the strategy.
/// Deterministic in the stream: equal (seed, stream_id) -> equal result.
ReplicationResult run_replication(const ProblemInstance& inst,
                                  const StrategySpec& spec, std::int64_t horizon,
                                  RngStream rng);

}  // namespace neyman
