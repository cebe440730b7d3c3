#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>

namespace neyman {

/// Per-arm pull counts and sums of squared outcomes: the entire state a
/// second-moment-tracking allocation needs.
struct SufficientStats {
    std::array<std::int64_t, 2> n{0, 0};
    std::array<double, 2> ssq{0.0, 0.0};

    void add(int arm, double y) {
        ++n[arm];
        ssq[arm] += y * y;
    }

    /// Empirical second moment ssq(a)/n(a); requires n(a) > 0.
    double empirical_second_moment(int arm) const {
        return ssq[arm] / static_cast<double>(n[arm]);
    }

    std::int64_t total() const { return n[0] + n[1]; }
};

/// clip(x, lo, hi) = min(hi, max(x, lo)). Throws InvertedBounds if lo > hi.
double clip(double x, double lo, double hi);

/// Guard sequence delta_t = (1/2) t^(-alpha); keeps allocations inside
/// [delta_t, 1 - delta_t].
double clipping_sequence(std::int64_t t, double alpha);

/// Plug-in Neyman allocation sqrt(Shat1)/(sqrt(Shat0)+sqrt(Shat1)).
/// Falls back to 0.5 when either arm is unseen or both empirical moments are
/// zero; a one-sided zero moment yields a boundary value by design (the
/// caller's clipping handles it).
double unclipped_allocation(const SufficientStats& stats);

/// Clipped second-moment tracking: allocate the clipped plug-in Neyman
/// allocation, clip(pi_tilde_t, delta_t, 1 - delta_t).
struct ClipSmtState {
    SufficientStats stats;
    double alpha = 1.0 / 3.0;  // clipping exponent, in (0,1)
    std::int64_t t = 1;        // current round
};

double next_allocation(const ClipSmtState& state);
void update(ClipSmtState& state, int arm, double y);

/// Projected-gradient baseline on the Neyman loss. The iterate steps against
/// an unbiased loss gradient and is re-projected onto
/// [delta_t, 1 - delta_t] with delta_t = (1/2) t^(-clip_exponent).
struct ClipOgdState {
    double pi = 0.5;            // current (projected) iterate
    double eta0 = 1.0;          // step-size scale; eta = eta0 / sqrt(T)
    double clip_exponent = 0.2; // guard decay, in (0,1)
    std::int64_t horizon = 1;
    std::int64_t t = 1;
    double unprojected = 0.5;   // iterate before the last projection
};

ClipOgdState make_clipogd_state(double eta0, double clip_exponent,
                                std::int64_t horizon);
double next_allocation(const ClipOgdState& state);
void update(ClipOgdState& state, int arm, double y);

/// Unbiased one-sample gradient of the Neyman loss at pi given (arm, y)
/// with arm ~ Bernoulli(pi):
///   -y^2 1[a=1]/pi^3 + y^2 1[a=0]/(1-pi)^3.
double clipogd_gradient(double pi, int arm, double y);

/// Explore-then-Commit: balanced allocation for ceil(T^(1/3)) rounds, then
/// the empirical Neyman allocation for the rest. The committed value is
/// clamped to [1e-3, 1-1e-3] so importance weights stay finite when an
/// explore arm saw only zero outcomes.
struct EtcState {
    std::int64_t explore_len = 1;
    SufficientStats stats;
    std::optional<double> committed;
    std::int64_t t = 1;
};

inline constexpr double kEtcCommitGuard = 1e-3;

/// ceil(T^(1/3)) computed exactly in integer arithmetic.
std::int64_t etc_explore_length(std::int64_t horizon);
EtcState make_etc_state(std::int64_t horizon);
double next_allocation(const EtcState& state);
void update(EtcState& state, int arm, double y);

struct FixedState {
    double pi = 0.5;
};

double next_allocation(const FixedState& state);
void update(FixedState& state, int arm, double y);

using StrategyState =
    std::variant<ClipSmtState, ClipOgdState, EtcState, FixedState>;

double next_allocation(const StrategyState& state);
void update(StrategyState& state, int arm, double y);

}  // namespace neyman
