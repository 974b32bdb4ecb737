#include "growthnet/meanfield.hpp"

#include <cmath>
#include <stdexcept>

namespace growthnet {

double mf_step(double r_prev, double r_prev2, double lambda, std::uint32_t n) {
    if (r_prev < 0.0 || r_prev2 < 0.0)
        throw std::invalid_argument("mf_step: ratios must be non-negative");
    return lambda * (static_cast<double>(n) / 2.0) *
           (1.0 / (1.0 + r_prev) + 1.0 / (1.0 + r_prev2)) * r_prev;
}

MFFixedPoint mf_fixed_point(const MFParams& p) {
    MFFixedPoint fp;
    const double ln = p.lambda * static_cast<double>(p.n);
    if (ln > 1.0) {
        fp.nontrivial = true;
        fp.r_star = ln - 1.0;
        fp.wage_ratio = 1.0 / p.alpha_prime;
        fp.unskilled = 1.0 / p.lambda;
        fp.skilled_seniors = static_cast<double>(p.n) / 2.0 - 1.0 / (2.0 * p.lambda);
        fp.growth = p.delta * fp.skilled_seniors;
    } else {
        fp.nontrivial = false;
        fp.r_star = 0.0;
        fp.unskilled = static_cast<double>(p.n);
        fp.skilled_seniors = 0.0;
        fp.growth = 0.0;
        fp.wage_ratio = p.delta * static_cast<double>(p.n);
    }
    return fp;
}

MFIteration mf_iterate(double r0, double lambda, std::uint32_t n, double tol,
                       std::uint64_t max_steps) {
    MFIteration it;
    double r2 = r0, r1 = r0;
    for (it.steps = 0; it.steps < max_steps; ++it.steps) {
        const double r = mf_step(r1, r2, lambda, n);
        if (std::abs(r - r1) < tol) {
            it.r = r;
            it.converged = true;
            return it;
        }
        r2 = r1;
        r1 = r;
    }
    it.r = r1;
    return it;
}

Calibration calibrate(double annual_growth, std::uint32_t years_per_period,
                      double u_star, std::uint32_t n) {
    if (u_star <= 0.0 || u_star >= static_cast<double>(n))
        throw std::invalid_argument("calibrate: require 0 < U* < N");
    Calibration c;
    c.growth_target =
        std::pow(1.0 + annual_growth, static_cast<double>(years_per_period)) - 1.0;
    if (c.growth_target <= 0.0)
        throw std::invalid_argument("calibrate: growth target must be positive");
    const double s_star = static_cast<double>(n) / 2.0 - u_star / 2.0;
    if (s_star <= 0.0)
        throw std::invalid_argument("calibrate: S_s* must be positive");
    c.lambda = 1.0 / u_star;
    c.delta = c.growth_target / s_star;
    c.alpha_prime = c.lambda / c.delta;
    return c;
}

} // namespace growthnet
