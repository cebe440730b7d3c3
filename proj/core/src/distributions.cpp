#include "neyman/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "neyman/errors.hpp"

namespace neyman {

namespace {

// Marsaglia-Tsang. Scale-free: only used for Beta ratios.
double sample_gamma(RngStream& rng, double shape) {
    if (shape < 1.0) {
        const double g = sample_gamma(rng, shape + 1.0);
        double u = rng.next_unit();
        if (u <= 0.0) u = 0x1.0p-53;
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_unit();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 &&
            std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double sample_beta(RngStream& rng, double a, double b) {
    const double g1 = sample_gamma(rng, a);
    const double g2 = sample_gamma(rng, b);
    const double sum = g1 + g2;
    if (sum <= 0.0) return 0.5;
    return std::clamp(g1 / sum, 0.0, 1.0);
}

}  // namespace

OutcomeDistribution OutcomeDistribution::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("bernoulli: p must lie in [0,1]");
    }
    return OutcomeDistribution(DistKind::Bernoulli, p, 0.0);
}

OutcomeDistribution OutcomeDistribution::scaled_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("scaled_beta: shapes must be positive");
    }
    return OutcomeDistribution(DistKind::ScaledBeta, a, b);
}

OutcomeDistribution OutcomeDistribution::point_mass(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("point_mass: v must lie in [0,1]");
    }
    return OutcomeDistribution(DistKind::PointMass, v, 0.0);
}

double OutcomeDistribution::mean() const {
    switch (kind_) {
        case DistKind::Bernoulli: return a_;
        case DistKind::ScaledBeta: return a_ / (a_ + b_);
        case DistKind::PointMass: return a_;
    }
    return 0.0;
}

double OutcomeDistribution::second_moment() const {
    switch (kind_) {
        case DistKind::Bernoulli:
            return a_;
        case DistKind::ScaledBeta:
            return a_ * (a_ + 1.0) / ((a_ + b_) * (a_ + b_ + 1.0));
        case DistKind::PointMass:
            return a_ * a_;
    }
    return 0.0;
}

double OutcomeDistribution::sample(RngStream& rng) const {
    switch (kind_) {
        case DistKind::Bernoulli:
            return rng.bernoulli(a_) ? 1.0 : 0.0;
        case DistKind::ScaledBeta:
            return sample_beta(rng, a_, b_);
        case DistKind::PointMass:
            rng.next_u64();  // contract: sampling always advances the stream
            return a_;
    }
    return 0.0;
}

std::string OutcomeDistribution::describe() const {
    switch (kind_) {
        case DistKind::Bernoulli:
            return "bernoulli(" + std::to_string(a_) + ")";
        case DistKind::ScaledBeta:
            return "scaled-beta(" + std::to_string(a_) + "," +
                   std::to_string(b_) + ")";
        case DistKind::PointMass:
            return "point-mass(" + std::to_string(a_) + ")";
    }
    return "?";
}

double ProblemInstance::pi_star() const { return neyman_allocation(s0(), s1()); }

double neyman_allocation(double s0, double s1) {
    if (!(s0 > 0.0) || !(s1 > 0.0)) {
        throw DegenerateInstance(
            "neyman_allocation: both second moments must be positive, got "
            "S0=" + std::to_string(s0) + " S1=" + std::to_string(s1));
    }
    const double r0 = std::sqrt(s0);
    const double r1 = std::sqrt(s1);
    return r1 / (r0 + r1);
}

double sample_outcome(const ProblemInstance& inst, int arm, RngStream& rng) {
    if (arm != 0 && arm != 1) {
        throw std::invalid_argument("sample_outcome: arm must be 0 or 1");
    }
    return arm == 1 ? inst.treatment.sample(rng) : inst.control.sample(rng);
}

}  // namespace neyman
