#include <doctest.h>

#include <cmath>
#include <vector>

#include "neyman/distributions.hpp"
#include "neyman/errors.hpp"
#include "neyman/regret.hpp"
#include "neyman/rng.hpp"

using namespace neyman;

namespace {

ProblemInstance bern(double p0, double p1) {
    return ProblemInstance{OutcomeDistribution::bernoulli(p0),
                           OutcomeDistribution::bernoulli(p1)};
}

// The shipped 3x3 grid's moment pairs (S = p for Bernoulli outcomes).
std::vector<std::pair<double, double>> grid_moments() {
    std::vector<std::pair<double, double>> ms;
    for (double p1 : {0.02, 0.04, 0.06}) ms.emplace_back(16.0 * p1, p1);
    const double r35 = (0.65 / 0.35) * (0.65 / 0.35);
    for (double p1 : {0.08, 0.17, 0.26}) ms.emplace_back(r35 * p1, p1);
    for (double p1 : {0.3, 0.5, 0.7}) ms.emplace_back(p1, p1);
    return ms;
}

}  // namespace

TEST_CASE("neyman loss") {
    CHECK(neyman_loss(0.5, 0.25, 0.25) == 1.0);
    // At the Neyman allocation the loss is (sqrt(S0)+sqrt(S1))^2.
    CHECK(neyman_loss(neyman_allocation(0.01, 0.04), 0.01, 0.04) ==
          doctest::Approx(0.09).epsilon(1e-15));
    CHECK_THROWS_AS(neyman_loss(0.0, 0.1, 0.1), BoundaryAllocation);
    CHECK_THROWS_AS(neyman_loss(1.0, 0.1, 0.1), BoundaryAllocation);

    RngStream rng(17, 0);
    const double optimal = neyman_loss(neyman_allocation(0.07, 0.4), 0.07, 0.4);
    for (int i = 0; i < 1000; ++i) {
        const double pi = 1e-6 + (1.0 - 2e-6) * rng.next_unit();
        CHECK(neyman_loss(pi, 0.07, 0.4) >= optimal - 1e-12);
    }
}

TEST_CASE("regret ledger") {
    const ProblemInstance inst = bern(0.01, 0.04);
    const double pi_star = inst.pi_star();

    TrialTrace at_optimum;
    for (int t = 0; t < 50; ++t) at_optimum.push_round(pi_star, t % 2, 0.0);
    const RegretLedger zero = neyman_regret(at_optimum, inst);
    CHECK(zero.cumulative == 0.0);
    for (double r : zero.instantaneous) CHECK(r == 0.0);
    CHECK(zero.optimal_loss == doctest::Approx(0.09).epsilon(1e-15));

    TrialTrace one_round;
    one_round.push_round(0.5, 1, 0.0);
    const RegretLedger single = neyman_regret(one_round, inst);
    CHECK(single.cumulative == doctest::Approx(0.01).epsilon(1e-12));

    // Nonnegative terms make the running regret nondecreasing.
    RngStream rng(18, 0);
    TrialTrace random_trace;
    for (int t = 0; t < 400; ++t) {
        random_trace.push_round(0.05 + 0.9 * rng.next_unit(), 0, 0.0);
    }
    const RegretLedger ledger = neyman_regret(random_trace, inst);
    double running = 0.0;
    for (double r : ledger.instantaneous) {
        CHECK(r >= 0.0);
        running += r;
    }
    CHECK(running == doctest::Approx(ledger.cumulative).epsilon(1e-12));
}

TEST_CASE("ledger additivity over concatenated traces") {
    const ProblemInstance inst = bern(0.3, 0.6);
    RngStream rng(19, 0);
    TrialTrace first, second, both;
    for (int t = 0; t < 300; ++t) {
        const double pi = 0.1 + 0.8 * rng.next_unit();
        (t < 120 ? first : second).push_round(pi, 0, 0.0);
        both.push_round(pi, 0, 0.0);
    }
    const double sum = neyman_regret(first, inst).cumulative +
                       neyman_regret(second, inst).cumulative;
    CHECK(neyman_regret(both, inst).cumulative ==
          doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("regret curvature") {
    CHECK(regret_curvature(0.25, 0.25) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(regret_curvature(0.01, 0.04) ==
          doctest::Approx(0.405).epsilon(1e-12));
    for (const auto& [s0, s1] : grid_moments()) {
        CHECK(regret_curvature(s0, s1) ==
              doctest::Approx(regret_curvature(s1, s0)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(regret_curvature(0.0, 0.5), DegenerateInstance);
}

TEST_CASE("quadratic decomposition of the excess loss") {
    for (const auto& [s0, s1] : grid_moments()) {
        CAPTURE(s0);
        CAPTURE(s1);
        const double pi_star = neyman_allocation(s0, s1);
        const double optimal = neyman_loss(pi_star, s0, s1);
        const double curvature = regret_curvature(s0, s1);
        const double third_order_scale =
            0.1 * curvature *
            std::max(1.0 / std::sqrt(s0), 1.0 / std::sqrt(s1)) * 10.0;
        for (double delta : {1e-2, -1e-2, 1e-3, -1e-3}) {
            const double quotient =
                (neyman_loss(pi_star + delta, s0, s1) - optimal) /
                (delta * delta);
            CHECK(std::abs(quotient - curvature) <=
                  third_order_scale * std::abs(delta));
        }
    }
}

TEST_CASE("two-sided quadratic envelope of the excess loss") {
    // (1/2) L'' is convex in pi, so over an interval its max sits at an
    // endpoint and its min at the unique critical point
    // pi_c = 1/(1 + (S0/S1)^(1/4)) when that lies inside.
    const auto half_curvature = [](double pi, double s0, double s1) {
        const double q = 1.0 - pi;
        return s1 / (pi * pi * pi) + s0 / (q * q * q);
    };
    for (const auto& [s0, s1] : grid_moments()) {
        CAPTURE(s0);
        CAPTURE(s1);
        const double pi_star = neyman_allocation(s0, s1);
        const double optimal = neyman_loss(pi_star, s0, s1);
        const double d = std::min(pi_star, 1.0 - pi_star) / 2.0;
        const double lo = pi_star - d, hi = pi_star + d;
        const double c_hi =
            std::max(half_curvature(lo, s0, s1), half_curvature(hi, s0, s1));
        const double pi_c =
            1.0 / (1.0 + std::pow(s0 / s1, 0.25));
        double c_lo =
            std::min(half_curvature(lo, s0, s1), half_curvature(hi, s0, s1));
        if (pi_c > lo && pi_c < hi) {
            c_lo = std::min(c_lo, half_curvature(pi_c, s0, s1));
        }
        REQUIRE(c_lo > 0.0);
        for (int k = -100; k <= 100; ++k) {
            if (k == 0) continue;
            const double delta = d * k / 100.0;
            const double excess =
                neyman_loss(pi_star + delta, s0, s1) - optimal;
            CHECK(excess >= c_lo * delta * delta * (1.0 - 1e-9));
            CHECK(excess <= c_hi * delta * delta * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("alternative closed-form expansion disagrees at equal moments") {
    // The telescoped closed form
    //   d^2 (r0+r1)^3 [ 1/(r0 - (r0+r1) d) - 1/(r1 - (r0+r1) d) ]
    // vanishes whenever S0 = S1, while the direct difference is strictly
    // positive there. The ledger therefore always evaluates the loss
    // difference directly; this records the discrepancy.
    const double s0 = 0.25, s1 = 0.25, delta = 0.01;
    const double r0 = std::sqrt(s0), r1 = std::sqrt(s1);
    const double closed_form =
        delta * delta * std::pow(r0 + r1, 3.0) *
        (1.0 / (r0 - (r0 + r1) * delta) - 1.0 / (r1 - (r0 + r1) * delta));
    CHECK(closed_form == 0.0);

    const double pi_star = neyman_allocation(s0, s1);
    const double direct = neyman_loss(pi_star + delta, s0, s1) -
                          neyman_loss(pi_star, s0, s1);
    CHECK(direct > 0.0);
    CHECK(direct == doctest::Approx(regret_curvature(s0, s1) * delta * delta)
                        .epsilon(0.05));
    CHECK(closed_form != direct);
}
