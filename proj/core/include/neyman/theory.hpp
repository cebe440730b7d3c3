#pragma once

#include <cstdint>
#include <string>

#include "neyman/distributions.hpp"

namespace neyman {

/// Error-probability budget: delta/3 for the count sequence and 2*delta/3
/// shared by the two second-moment sequences.
struct ConfidenceParams {
    double delta = 0.05;

    double delta_count() const { return delta / 3.0; }
    double delta_moment() const { return 2.0 * delta / 3.0; }
};

/// Bracket of the time-uniform widths:
///   log log(max(t,3)) + 0.72 log(5.2/delta).
/// The max(.,3) guard keeps the double log defined and nonnegative at
/// t in {1,2}; it only loosens the bound.
double loglog_term(std::int64_t t, double delta);

/// Time-uniform width for Bernoulli counts:
///   u(t,delta) = 0.85 sqrt(t * loglog_term(t,delta)),
/// covering |N_t - sum_s pi_s| for all t simultaneously w.p. >= 1-delta.
double count_width(std::int64_t t, double delta);

/// Time-uniform width for the square root of an empirical second moment:
///   v(t,delta) = 0.85 sqrt(loglog_term(t,delta) / (S t)),
/// covering |sqrt(Shat_t) - sqrt(S)| for all t simultaneously.
/// Throws DegenerateInstance when S = 0.
double moment_width(std::int64_t t, double delta, double second_moment);

/// Preconditions of the closed-form inversion bound: c1 > e, log(c1) > p,
/// and c1 log(c1) > c2. Returns false and fills |why| when one fails.
bool loglog_inversion_ok(double c1, double c2, double p,
                         std::string* why = nullptr);

/// Closed-form upper bound on min{ t : t^p >= c1 + c2 log log t }:
///   ( c1 + c2 log(log c1) * [(loglog c1 - log p)/loglog c1]
///                         * [c1 log c1 / (c1 log c1 - c2)] )^(1/p).
/// Throws PreconditionViolated naming the failed inequality.
double loglog_inversion(double c1, double c2, double p);

/// Predicted end of the clipping phase. Both branches evaluate
/// loglog_inversion(K1, K2, 2*beta_bar) with
///   K1 = 2/pi_dir^2 + (4/S_dir)(1/sqrt(S0)+1/sqrt(S1)) log(5.2/delta_S),
///   K2 = (4/S_dir)(1/sqrt(S0)+1/sqrt(S1)),
/// where the lower branch uses (pi_dir, S_dir) = (pi*, S1) and the upper
/// branch (1-pi*, S0); delta_S = 2*delta/3 and
/// beta_bar = min(alpha, (1-alpha)/2).
struct ClipPhasePrediction {
    double t_lower = 0.0;
    double t_upper = 0.0;
    double t_clip = 0.0;   // max of the two branches
    double beta_bar = 0.0;
    bool valid = false;
    std::string reason;    // set when valid is false
};

/// Invalid predictions are returned flagged (NaN rounds), never thrown: the
/// harness still emits a row for every instance.
ClipPhasePrediction predict_clip_phase(const ProblemInstance& inst,
                                       double alpha, double delta);
ClipPhasePrediction predict_clip_phase(double s0, double s1, double alpha,
                                       double delta);

}  // namespace neyman
