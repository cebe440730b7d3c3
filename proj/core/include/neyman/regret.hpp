#pragma once

#include <vector>

#include "neyman/distributions.hpp"
#include "neyman/trace.hpp"

namespace neyman {

/// Per-round excess Neyman losses against the Neyman allocation, plus their
/// running total R_T = sum_t [L(pi_t) - L(pi*)].
struct RegretLedger {
    std::vector<double> instantaneous;  // L(pi_t) - L(pi*), each >= 0
    double optimal_loss = 0.0;          // L(pi*)
    double cumulative = 0.0;            // R_T
};

/// Neyman loss L(pi) = S1/pi + S0/(1-pi). Throws BoundaryAllocation for
/// pi outside (0,1).
double neyman_loss(double pi, double s0, double s1);

/// Regret ledger for a full trace, computed from the instance's true moments
/// (the simulator knows the instance). Tiny negative rounding residuals are
/// clamped to zero so every instantaneous term is nonnegative.
RegretLedger neyman_regret(const TrialTrace& trace, const ProblemInstance& inst);

/// Leading quadratic coefficient of the excess loss at the optimum:
///   (1/2) L''(pi*) = (sqrt(S0)+sqrt(S1))^3 (1/sqrt(S0) + 1/sqrt(S1)),
/// so L(pi* + d) - L(pi*) = regret_curvature * d^2 + O(d^3).
double regret_curvature(const ProblemInstance& inst);
double regret_curvature(double s0, double s1);

}  // namespace neyman
