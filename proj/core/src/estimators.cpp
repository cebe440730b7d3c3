#include "neyman/estimators.hpp"

#include <stdexcept>
#include <string>

#include "neyman/errors.hpp"

namespace neyman {

namespace {

void require_interior(double pi) {
    if (!(pi > 0.0 && pi < 1.0)) {
        throw NonpositivePropensity("allocation must lie strictly in (0,1), got " +
                                    std::to_string(pi));
    }
}

}  // namespace

double ht_estimate(const TrialTrace& trace, double pi) {
    if (trace.empty()) throw EmptyTrace("ht_estimate: empty trace");
    require_interior(pi);
    long double acc = 0.0L;
    const std::size_t n = trace.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (trace.arm[i] == 1) {
            acc += static_cast<long double>(trace.y[i]) / pi;
        } else {
            acc -= static_cast<long double>(trace.y[i]) / (1.0 - pi);
        }
    }
    return static_cast<double>(acc / static_cast<long double>(n));
}

double aht_estimate(const TrialTrace& trace) {
    if (trace.empty()) throw EmptyTrace("aht_estimate: empty trace");
    long double acc = 0.0L;
    const std::size_t n = trace.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double pi_t = trace.pi[i];
        require_interior(pi_t);
        if (trace.arm[i] == 1) {
            acc += static_cast<long double>(trace.y[i]) / pi_t;
        } else {
            acc -= static_cast<long double>(trace.y[i]) / (1.0 - pi_t);
        }
    }
    return static_cast<double>(acc / static_cast<long double>(n));
}

double ht_fixed_variance(const ProblemInstance& inst, double pi,
                         std::int64_t horizon) {
    require_interior(pi);
    if (horizon < 1) {
        throw std::invalid_argument("ht_fixed_variance: horizon must be >= 1");
    }
    const double tau = inst.tau();
    return (inst.s1() / pi + inst.s0() / (1.0 - pi) - tau * tau) /
           static_cast<double>(horizon);
}

}  // namespace neyman
