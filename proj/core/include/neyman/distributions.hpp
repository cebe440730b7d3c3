#pragma once

#include <string>

#include "neyman/rng.hpp"

namespace neyman {

enum class DistKind { Bernoulli, ScaledBeta, PointMass };

/// An outcome distribution supported on [0,1] with closed-form first and
/// second moments. Samples are guaranteed to lie in [0,1].
class OutcomeDistribution {
public:
    static OutcomeDistribution bernoulli(double p);
    static OutcomeDistribution scaled_beta(double a, double b);
    static OutcomeDistribution point_mass(double v);

    DistKind kind() const { return kind_; }
    double mean() const;
    /// Exact uncentered second moment E[Y^2].
    double second_moment() const;
    /// Draws one outcome; always advances the stream.
    double sample(RngStream& rng) const;

    /// First/second raw parameter (p, v, or the Beta shape pair).
    double param_a() const { return a_; }
    double param_b() const { return b_; }

    std::string describe() const;

private:
    OutcomeDistribution(DistKind kind, double a, double b)
        : kind_(kind), a_(a), b_(b) {}

    DistKind kind_;
    double a_;
    double b_;
};

/// Two-arm problem instance: arm 0 is control, arm 1 is treatment.
struct ProblemInstance {
    OutcomeDistribution control;
    OutcomeDistribution treatment;

    double s0() const { return control.second_moment(); }
    double s1() const { return treatment.second_moment(); }
    double tau() const { return treatment.mean() - control.mean(); }
    /// Variance-minimizing treatment allocation. Throws DegenerateInstance
    /// when either second moment is zero.
    double pi_star() const;
};

/// sqrt(S1) / (sqrt(S0) + sqrt(S1)), strictly inside (0,1).
/// Throws DegenerateInstance unless both moments are positive.
double neyman_allocation(double s0, double s1);

/// Draw a potential outcome for the given arm (0 = control, 1 = treatment).
double sample_outcome(const ProblemInstance& inst, int arm, RngStream& rng);

}  // namespace neyman
