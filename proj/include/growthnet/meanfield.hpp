// Representative-agent recursion for the skilled/unskilled junior ratio
// R(t), its closed-form fixed point, and calibration of (delta, alpha')
// from macro targets.
#pragma once

#include <cstdint>

namespace growthnet {

struct MFParams {
    double lambda = 0.005; // delta * alpha' in the coupled model
    std::uint32_t n = 400;
    double delta = 0.011;
    double alpha_prime = 0.45;
};

// R(t) = lambda (N/2) (1/(1+R(t-1)) + 1/(1+R(t-2))) R(t-1)
double mf_step(double r_prev, double r_prev2, double lambda, std::uint32_t n);

struct MFFixedPoint {
    double r_star = 0.0;       // lambda N - 1 on the nontrivial branch
    double wage_ratio = 0.0;   // w* = 1/alpha'
    double unskilled = 0.0;    // U* = 1/lambda
    double skilled_seniors = 0.0; // S_s* = N/2 - 1/(2 lambda)
    double growth = 0.0;       // delta * S_s*
    bool nontrivial = false;   // lambda N > 1
};

// Closed forms. For lambda N <= 1 the R* = 0 branch is reported:
// everyone unskilled, U* = N, zero growth, wage ratio delta*N (the
// gamma = 0 wage ratio at U = N).
MFFixedPoint mf_fixed_point(const MFParams& p);

struct MFIteration {
    double r = 0.0;
    std::uint64_t steps = 0;
    bool converged = false;
};

// Iterates mf_step from R(0) = R(1) = r0 until |R(t)-R(t-1)| < tol.
MFIteration mf_iterate(double r0, double lambda, std::uint32_t n,
                       double tol = 1e-12, std::uint64_t max_steps = 100000);

struct Calibration {
    double delta = 0.0;
    double alpha_prime = 0.0;
    double lambda = 0.0;
    double growth_target = 0.0; // per-period growth implied by the inputs
};

// From an annual growth rate, the number of years per period, a target
// U* and N: lambda = 1/U*, S_s* = N/2 - U*/2, delta = ((1+g)^years - 1)/S_s*,
// alpha' = lambda/delta. Rejects non-positive growth targets and S_s* <= 0.
Calibration calibrate(double annual_growth, std::uint32_t years_per_period,
                      double u_star, std::uint32_t n);

} // namespace growthnet
