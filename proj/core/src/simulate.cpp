#include "neyman/simulate.hpp"

#include <stdexcept>
#include <utility>

#include "neyman/errors.hpp"

namespace neyman {

const char* strategy_kind_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::ClipSmt: return "clipsmt";
        case StrategyKind::ClipOgd: return "clipogd";
        case StrategyKind::Etc: return "etc";
        case StrategyKind::Fixed: return "fixed";
        case StrategyKind::NeymanOracle: return "neyman-oracle";
        case StrategyKind::Balanced: return "balanced";
    }
    return "?";
}

bool is_fixed_design(const StrategySpec& spec) {
    return spec.kind == StrategyKind::Fixed ||
           spec.kind == StrategyKind::NeymanOracle ||
           spec.kind == StrategyKind::Balanced;
}

double resolve_fixed_pi(const StrategySpec& spec, const ProblemInstance& inst) {
    switch (spec.kind) {
        case StrategyKind::Fixed: return spec.pi;
        case StrategyKind::NeymanOracle: return inst.pi_star();
        case StrategyKind::Balanced: return 0.5;
        default:
            throw std::invalid_argument("resolve_fixed_pi: not a fixed design");
    }
}

StrategyState make_strategy_state(const StrategySpec& spec,
                                  std::int64_t horizon,
                                  const ProblemInstance& inst) {
    switch (spec.kind) {
        case StrategyKind::ClipSmt: {
            ClipSmtState s;
            s.alpha = spec.alpha;
            return s;
        }
        case StrategyKind::ClipOgd:
            return make_clipogd_state(spec.eta0, spec.ogd_clip_exponent, horizon);
        case StrategyKind::Etc:
            return make_etc_state(horizon);
        case StrategyKind::Fixed:
        case StrategyKind::NeymanOracle:
        case StrategyKind::Balanced:
            return FixedState{resolve_fixed_pi(spec, inst)};
    }
    throw std::invalid_argument("make_strategy_state: unknown kind");
}

namespace {

// Shared interaction loop. emit(t) yields the allocation to play plus the
// strategy's unguarded value (for clip-exit tracking); apply(arm, y) folds
// the observation into the strategy state.
template <class EmitFn, class UpdateFn>
ReplicationResult simulate(const ProblemInstance& inst, std::int64_t horizon,
                           RngStream& rng, EmitFn emit, UpdateFn apply) {
    ReplicationResult out;
    out.trace.reserve(static_cast<std::size_t>(horizon));
    for (std::int64_t t = 1; t <= horizon; ++t) {
        const auto [pi_t, natural_t] = emit(t);
        if (pi_t != natural_t) out.clip_exit_round = t;
        const int arm = rng.bernoulli(pi_t) ? 1 : 0;
        const double y = sample_outcome(inst, arm, rng);
        out.trace.push_round(pi_t, arm, y);
        apply(arm, y);
    }
    out.ledger = neyman_regret(out.trace, inst);
    return out;
}

ReplicationResult run_clipsmt(const ProblemInstance& inst, double alpha,
                              std::int64_t horizon, RngStream& rng) {
    ClipSmtState state;
    state.alpha = alpha;
    return simulate(
        inst, horizon, rng,
        [&](std::int64_t t) {
            const double delta = clipping_sequence(t, alpha);
            const double natural = unclipped_allocation(state.stats);
            return std::pair(clip(natural, delta, 1.0 - delta), natural);
        },
        [&](int arm, double y) { update(state, arm, y); });
}

ReplicationResult run_clipogd(const ProblemInstance& inst,
                              const StrategySpec& spec, std::int64_t horizon,
                              RngStream& rng) {
    ClipOgdState state =
        make_clipogd_state(spec.eta0, spec.ogd_clip_exponent, horizon);
    return simulate(
        inst, horizon, rng,
        [&](std::int64_t) { return std::pair(state.pi, state.unprojected); },
        [&](int arm, double y) { update(state, arm, y); });
}

ReplicationResult run_etc(const ProblemInstance& inst, std::int64_t horizon,
                          RngStream& rng) {
    EtcState state = make_etc_state(horizon);
    double committed_raw = 0.5;
    return simulate(
        inst, horizon, rng,
        [&](std::int64_t) {
            if (state.committed) return std::pair(*state.committed, committed_raw);
            return std::pair(0.5, 0.5);
        },
        [&](int arm, double y) {
            const bool was_committed = state.committed.has_value();
            update(state, arm, y);
            if (!was_committed && state.committed) {
                committed_raw = unclipped_allocation(state.stats);
            }
        });
}

ReplicationResult run_fixed(const ProblemInstance& inst, double pi,
                            std::int64_t horizon, RngStream& rng) {
    return simulate(
        inst, horizon, rng,
        [&](std::int64_t) { return std::pair(pi, pi); }, [](int, double) {});
}

}  // namespace

ReplicationResult run_replication(const ProblemInstance& inst,
                                  const StrategySpec& spec,
                                  std::int64_t horizon, RngStream rng) {
    if (horizon < 1) {
        throw std::invalid_argument("run_replication: horizon must be >= 1");
    }
    switch (spec.kind) {
        case StrategyKind::ClipSmt:
            return run_clipsmt(inst, spec.alpha, horizon, rng);
        case StrategyKind::ClipOgd:
            return run_clipogd(inst, spec, horizon, rng);
        case StrategyKind::Etc:
            return run_etc(inst, horizon, rng);
        case StrategyKind::Fixed:
        case StrategyKind::NeymanOracle:
        case StrategyKind::Balanced:
            return run_fixed(inst, resolve_fixed_pi(spec, inst), horizon, rng);
    }
    throw std::invalid_argument("run_replication: unknown strategy kind");
}

}  // namespace neyman
