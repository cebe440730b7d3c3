#include "neyman/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "neyman/errors.hpp"

namespace neyman {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

double loglog_term(std::int64_t t, double delta) {
    const double tg = static_cast<double>(std::max<std::int64_t>(t, 3));
    return std::log(std::log(tg)) + 0.72 * std::log(5.2 / delta);
}

double count_width(std::int64_t t, double delta) {
    return 0.85 * std::sqrt(static_cast<double>(t) * loglog_term(t, delta));
}

double moment_width(std::int64_t t, double delta, double second_moment) {
    if (!(second_moment > 0.0)) {
        throw DegenerateInstance("moment_width: second moment must be positive");
    }
    return 0.85 * std::sqrt(loglog_term(t, delta) /
                            (second_moment * static_cast<double>(t)));
}

bool loglog_inversion_ok(double c1, double c2, double p, std::string* why) {
    const double e = std::exp(1.0);
    if (!(p > 0.0)) {
        if (why) *why = "p must be positive";
        return false;
    }
    if (!(c2 >= 0.0)) {
        if (why) *why = "c2 must be nonnegative";
        return false;
    }
    if (!(c1 > e)) {
        if (why) *why = "c1 <= e: log log c1 not positive";
        return false;
    }
    if (!(std::log(c1) > p)) {
        if (why) *why = "log(c1) <= p";
        return false;
    }
    if (!(c1 * std::log(c1) > c2)) {
        if (why) *why = "c1 log(c1) <= c2";
        return false;
    }
    return true;
}

double loglog_inversion(double c1, double c2, double p) {
    std::string why;
    if (!loglog_inversion_ok(c1, c2, p, &why)) {
        throw PreconditionViolated("loglog_inversion: " + why);
    }
    const double lc = std::log(c1);
    const double llc = std::log(lc);
    const double a = (llc - std::log(p)) / llc * (c1 * lc / (c1 * lc - c2));
    const double base = c1 + c2 * a * llc;
    return std::pow(base, 1.0 / p);
}

ClipPhasePrediction predict_clip_phase(double s0, double s1, double alpha,
                                       double delta) {
    ClipPhasePrediction out;
    out.beta_bar = std::min(alpha, (1.0 - alpha) / 2.0);
    out.t_lower = out.t_upper = out.t_clip = kNaN;
    if (!(s0 > 0.0) || !(s1 > 0.0)) {
        out.reason = "degenerate instance: S0 and S1 must be positive";
        return out;
    }
    if (!(alpha > 0.0 && alpha < 1.0) || !(delta > 0.0 && delta < 1.0)) {
        out.reason = "alpha and delta must lie in (0,1)";
        return out;
    }
    const double delta_s = ConfidenceParams{delta}.delta_moment();
    const double pi_star = neyman_allocation(s0, s1);
    const double inv_roots = 1.0 / std::sqrt(s0) + 1.0 / std::sqrt(s1);
    const double p = 2.0 * out.beta_bar;

    const auto branch = [&](double pi_dir, double s_dir,
                            double* t_out) -> std::string {
        const double k2 = 4.0 / s_dir * inv_roots;
        const double k1 =
            2.0 / (pi_dir * pi_dir) + k2 * std::log(5.2 / delta_s);
        std::string why;
        if (!loglog_inversion_ok(k1, k2, p, &why)) {
            *t_out = kNaN;
            return why;
        }
        *t_out = loglog_inversion(k1, k2, p);
        return {};
    };

    const std::string lower_why = branch(pi_star, s1, &out.t_lower);
    const std::string upper_why = branch(1.0 - pi_star, s0, &out.t_upper);
    if (!lower_why.empty() || !upper_why.empty()) {
        out.reason = !lower_why.empty() ? "lower branch: " + lower_why
                                        : "upper branch: " + upper_why;
        out.t_clip = kNaN;
        return out;
    }
    out.t_clip = std::max(out.t_lower, out.t_upper);
    out.valid = true;
    return out;
}

ClipPhasePrediction predict_clip_phase(const ProblemInstance& inst,
                                       double alpha, double delta) {
    return predict_clip_phase(inst.s0(), inst.s1(), alpha, delta);
}

}  // namespace neyman
