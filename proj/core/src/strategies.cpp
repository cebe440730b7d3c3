#include "neyman/strategies.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "neyman/errors.hpp"

namespace neyman {

double clip(double x, double lo, double hi) {
    if (lo > hi) {
        throw InvertedBounds("clip: lo=" + std::to_string(lo) + " > hi=" +
                             std::to_string(hi));
    }
    return std::min(hi, std::max(x, lo));
}

double clipping_sequence(std::int64_t t, double alpha) {
    assert(t >= 1);
    return 0.5 * std::pow(static_cast<double>(t), -alpha);
}

double unclipped_allocation(const SufficientStats& stats) {
    if (stats.n[0] == 0 || stats.n[1] == 0) return 0.5;
    const double s0 = stats.empirical_second_moment(0);
    const double s1 = stats.empirical_second_moment(1);
    if (s0 <= 0.0 && s1 <= 0.0) return 0.5;
    const double r0 = std::sqrt(s0);
    const double r1 = std::sqrt(s1);
    return r1 / (r0 + r1);
}

double next_allocation(const ClipSmtState& state) {
    const double delta = clipping_sequence(state.t, state.alpha);
    return clip(unclipped_allocation(state.stats), delta, 1.0 - delta);
}

void update(ClipSmtState& state, int arm, double y) {
    state.stats.add(arm, y);
    ++state.t;
}

ClipOgdState make_clipogd_state(double eta0, double clip_exponent,
                                std::int64_t horizon) {
    ClipOgdState state;
    state.eta0 = eta0;
    state.clip_exponent = clip_exponent;
    state.horizon = horizon < 1 ? 1 : horizon;
    state.pi = 0.5;
    state.unprojected = 0.5;
    state.t = 1;
    return state;
}

double next_allocation(const ClipOgdState& state) { return state.pi; }

void update(ClipOgdState& state, int arm, double y) {
    const double eta = state.eta0 / std::sqrt(static_cast<double>(state.horizon));
    const double g = clipogd_gradient(state.pi, arm, y);
    ++state.t;
    const double delta = clipping_sequence(state.t, state.clip_exponent);
    state.unprojected = state.pi - eta * g;
    state.pi = clip(state.unprojected, delta, 1.0 - delta);
}

double clipogd_gradient(double pi, int arm, double y) {
    assert(pi > 0.0 && pi < 1.0);
    const double y2 = y * y;
    if (arm == 1) return -y2 / (pi * pi * pi);
    const double q = 1.0 - pi;
    return y2 / (q * q * q);
}

std::int64_t etc_explore_length(std::int64_t horizon) {
    assert(horizon >= 1);
    std::int64_t m = static_cast<std::int64_t>(
        std::llround(std::cbrt(static_cast<double>(horizon))));
    if (m < 1) m = 1;
    while (m * m * m < horizon) ++m;
    while (m > 1 && (m - 1) * (m - 1) * (m - 1) >= horizon) --m;
    return m;
}

EtcState make_etc_state(std::int64_t horizon) {
    EtcState state;
    state.explore_len = etc_explore_length(horizon);
    return state;
}

double next_allocation(const EtcState& state) {
    return state.committed ? *state.committed : 0.5;
}

void update(EtcState& state, int arm, double y) {
    state.stats.add(arm, y);
    if (state.t == state.explore_len) {
        state.committed = clip(unclipped_allocation(state.stats),
                               kEtcCommitGuard, 1.0 - kEtcCommitGuard);
    }
    ++state.t;
}

double next_allocation(const FixedState& state) { return state.pi; }

void update(FixedState&, int, double) {}

double next_allocation(const StrategyState& state) {
    return std::visit([](const auto& s) { return next_allocation(s); }, state);
}

void update(StrategyState& state, int arm, double y) {
    std::visit([&](auto& s) { update(s, arm, y); }, state);
}

}  // namespace neyman
