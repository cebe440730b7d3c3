#include <doctest.h>

#include <cmath>
#include <vector>

#include "neyman/distributions.hpp"
#include "neyman/errors.hpp"
#include "neyman/rng.hpp"

using namespace neyman;

namespace {

// Independent oracle for E[Y^2] of a Beta(a,b): Simpson quadrature of
// y^2 * pdf over [0,1].
double beta_second_moment_quadrature(double a, double b) {
    const int n = 20000;  // even
    const double h = 1.0 / n;
    const double log_norm =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    auto f = [&](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;  // integrand vanishes for a,b>1
        return x * x *
               std::exp(log_norm + (a - 1.0) * std::log(x) +
                        (b - 1.0) * std::log(1.0 - x));
    };
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("second moment closed forms") {
    CHECK(OutcomeDistribution::bernoulli(0.5).second_moment() == 0.5);
    CHECK(OutcomeDistribution::bernoulli(0.3).second_moment() == 0.3);
    CHECK(OutcomeDistribution::point_mass(0.0).second_moment() == 0.0);
    CHECK(OutcomeDistribution::point_mass(0.7).second_moment() ==
          doctest::Approx(0.49).epsilon(1e-15));

    // Quadrature oracle first, closed form against it, frozen value last.
    const double oracle = beta_second_moment_quadrature(2.0, 2.0);
    CHECK(oracle == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(OutcomeDistribution::scaled_beta(2, 2).second_moment() ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK(OutcomeDistribution::scaled_beta(2, 5).second_moment() ==
          doctest::Approx(beta_second_moment_quadrature(2.0, 5.0))
              .epsilon(1e-8));
}

TEST_CASE("means") {
    CHECK(OutcomeDistribution::bernoulli(0.3).mean() == 0.3);
    CHECK(OutcomeDistribution::scaled_beta(2, 2).mean() == 0.5);
    CHECK(OutcomeDistribution::scaled_beta(2, 5).mean() ==
          doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK(OutcomeDistribution::point_mass(0.7).mean() == 0.7);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(OutcomeDistribution::bernoulli(1.2), std::invalid_argument);
    CHECK_THROWS_AS(OutcomeDistribution::bernoulli(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(OutcomeDistribution::scaled_beta(0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(OutcomeDistribution::point_mass(1.5), std::invalid_argument);
}

TEST_CASE("neyman allocation") {
    CHECK(neyman_allocation(0.25, 0.25) == 0.5);
    CHECK(neyman_allocation(0.01, 0.04) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(neyman_allocation(0.04, 0.01) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(neyman_allocation(0.0, 0.25), DegenerateInstance);
    CHECK_THROWS_AS(neyman_allocation(0.25, 0.0), DegenerateInstance);

    for (double s0 : {0.01, 0.2, 0.9}) {
        for (double s1 : {0.03, 0.5, 1.0}) {
            const double pi = neyman_allocation(s0, s1);
            CHECK(pi > 0.0);
            CHECK(pi < 1.0);
        }
    }
}

TEST_CASE("problem instance derived quantities") {
    const ProblemInstance inst{OutcomeDistribution::bernoulli(0.3),
                               OutcomeDistribution::bernoulli(0.6)};
    CHECK(inst.s0() == 0.3);
    CHECK(inst.s1() == 0.6);
    CHECK(inst.tau() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(inst.pi_star() ==
          doctest::Approx(std::sqrt(0.6) / (std::sqrt(0.3) + std::sqrt(0.6)))
              .epsilon(1e-15));

    const ProblemInstance degenerate{OutcomeDistribution::point_mass(0.0),
                                     OutcomeDistribution::bernoulli(0.5)};
    CHECK_THROWS_AS(degenerate.pi_star(), DegenerateInstance);
}

TEST_CASE("degenerate sampling") {
    const ProblemInstance inst{OutcomeDistribution::bernoulli(1.0),
                               OutcomeDistribution::point_mass(0.7)};
    RngStream rng(1, 1);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_outcome(inst, 1, rng) == 0.7);
        CHECK(sample_outcome(inst, 0, rng) == 1.0);
    }
}

TEST_CASE("samples stay in [0,1] for every kind") {
    const OutcomeDistribution dists[] = {
        OutcomeDistribution::bernoulli(0.37),
        OutcomeDistribution::scaled_beta(2, 5),
        OutcomeDistribution::scaled_beta(0.5, 0.5),  // shape < 1 path
        OutcomeDistribution::point_mass(0.42),
    };
    for (const auto& d : dists) {
        RngStream rng(7, 99);
        for (int i = 0; i < 100000; ++i) {
            const double y = d.sample(rng);
            REQUIRE(y >= 0.0);
            REQUIRE(y <= 1.0);
        }
    }
}

TEST_CASE("empirical moments match closed forms") {
    const int n = 1000000;

    SUBCASE("bernoulli mean within 3 sigma / sqrt(n)") {
        const auto d = OutcomeDistribution::bernoulli(0.3);
        RngStream rng(11, 0);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += d.sample(rng);
        const double sigma = std::sqrt(0.3 * 0.7);
        CHECK(std::abs(acc / n - 0.3) < 3.0 * sigma / std::sqrt(double(n)));
        CHECK(std::abs(acc / n - 0.3) < 0.002);
    }

    // |Shat - S| < 4 sqrt(Var(Y^2)/n), with Var(Y^2) from closed-form E[Y^4].
    struct Case {
        OutcomeDistribution d;
        double var_y2;
    };
    auto beta_fourth = [](double a, double b) {
        return a * (a + 1) * (a + 2) * (a + 3) /
               ((a + b) * (a + b + 1) * (a + b + 2) * (a + b + 3));
    };
    const Case cases[] = {
        {OutcomeDistribution::bernoulli(0.3), 0.3 * 0.7},
        {OutcomeDistribution::scaled_beta(2, 5),
         beta_fourth(2, 5) - 0.10714285714285714 * 0.10714285714285714},
        {OutcomeDistribution::scaled_beta(0.5, 0.5),
         beta_fourth(0.5, 0.5) - 0.375 * 0.375},
    };
    int stream = 1;
    for (const auto& c : cases) {
        CAPTURE(c.d.describe());
        RngStream rng(11, static_cast<std::uint64_t>(stream++));
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double y = c.d.sample(rng);
            acc += y * y;
        }
        const double tol = 4.0 * std::sqrt(c.var_y2 / n);
        CHECK(std::abs(acc / n - c.d.second_moment()) < tol);
    }
}

TEST_CASE("streams are reproducible and distinct") {
    const auto d = OutcomeDistribution::scaled_beta(2, 3);
    RngStream a(123, 7);
    RngStream b(123, 7);
    RngStream c(123, 8);
    std::vector<double> xs, ys, zs;
    for (int i = 0; i < 1000; ++i) {
        xs.push_back(d.sample(a));
        ys.push_back(d.sample(b));
        zs.push_back(d.sample(c));
    }
    CHECK(xs == ys);
    CHECK(xs != zs);

    RngStream other_seed(124, 7);
    std::vector<double> ws;
    for (int i = 0; i < 1000; ++i) ws.push_back(d.sample(other_seed));
    CHECK(xs != ws);
}

TEST_CASE("distinct streams look independent") {
    // Correlation of uniform draws across neighboring streams.
    const int n = 20000;
    RngStream a(5, 1000);
    RngStream b(5, 1001);
    double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = a.next_unit();
        const double y = b.next_unit();
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double corr = cov / std::sqrt((sxx / n - (sx / n) * (sx / n)) *
                                        (syy / n - (sy / n) * (sy / n)));
    CHECK(std::abs(corr) < 0.03);  // ~4 sigma for n = 20000
}
