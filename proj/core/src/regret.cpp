#include "neyman/regret.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "neyman/errors.hpp"

namespace neyman {

double neyman_loss(double pi, double s0, double s1) {
    if (!(pi > 0.0 && pi < 1.0)) {
        throw BoundaryAllocation("neyman_loss: pi must lie strictly in (0,1), got " +
                                 std::to_string(pi));
    }
    return s1 / pi + s0 / (1.0 - pi);
}

RegretLedger neyman_regret(const TrialTrace& trace, const ProblemInstance& inst) {
    const double s0 = inst.s0();
    const double s1 = inst.s1();
    const double pi_star = neyman_allocation(s0, s1);
    RegretLedger ledger;
    ledger.optimal_loss = neyman_loss(pi_star, s0, s1);
    ledger.instantaneous.reserve(trace.size());
    long double acc = 0.0L;
    for (double pi_t : trace.pi) {
        const double excess =
            std::max(0.0, neyman_loss(pi_t, s0, s1) - ledger.optimal_loss);
        ledger.instantaneous.push_back(excess);
        acc += excess;
    }
    ledger.cumulative = static_cast<double>(acc);
    return ledger;
}

double regret_curvature(double s0, double s1) {
    if (!(s0 > 0.0) || !(s1 > 0.0)) {
        throw DegenerateInstance("regret_curvature: moments must be positive");
    }
    const double r0 = std::sqrt(s0);
    const double r1 = std::sqrt(s1);
    const double sum = r0 + r1;
    return sum * sum * sum * (1.0 / r0 + 1.0 / r1);
}

double regret_curvature(const ProblemInstance& inst) {
    return regret_curvature(inst.s0(), inst.s1());
}

}  // namespace neyman
