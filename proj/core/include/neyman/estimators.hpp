#pragma once

#include <cstdint>

#include "neyman/distributions.hpp"
#include "neyman/trace.hpp"

namespace neyman {

/// Horvitz-Thompson ATE estimate under a fixed allocation pi:
///   (1/T) * sum_t Y_t * (1[A_t=1]/pi - 1[A_t=0]/(1-pi)).
/// Summation runs in round order through one extended-precision accumulator
/// so outputs are bit-reproducible.
double ht_estimate(const TrialTrace& trace, double pi);

/// Adaptive Horvitz-Thompson estimate: the fixed pi above is replaced by the
/// per-round allocation pi_t recorded in the trace. Equals ht_estimate
/// bit-for-bit when every pi_t is the same value.
double aht_estimate(const TrialTrace& trace);

/// Closed-form variance of the fixed-allocation HT estimator:
///   (S1/pi + S0/(1-pi) - tau^2) / T.
double ht_fixed_variance(const ProblemInstance& inst, double pi,
                         std::int64_t horizon);

}  // namespace neyman
