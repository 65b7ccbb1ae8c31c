#pragma once

#include <algorithm>
#include <cmath>

namespace adaflow {

// Two-parameter slope-ratio limiter family. theta in [1,2] controls
// sharpness; tau >= 0.5 is dissipative, tau < 0 overcompressive.
struct LimiterParams {
    double theta = 2.0;
    double tau = 0.5;
};

inline constexpr LimiterParams kMinmod2{2.0, 0.5};
inline constexpr LimiterParams kOvercompressive{2.0, -0.25};

// phi(r) = 0 for r <= 0, min(r*theta, 1 + tau*(r-1)) on (0,1], and the
// mirrored value r*phi(1/r) above one. The r -> 0 limit is 0 for tau <= 1,
// so zero is used at r = 0 as well.
inline double sbm(double r, LimiterParams lp) {
    if (r <= 0.0) return 0.0;
    if (r <= 1.0) return std::min(r * lp.theta, 1.0 + lp.tau * (r - 1.0));
    return r * sbm(1.0 / r, lp);
}

inline double sign_of(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

inline double minmod(double a, double b) {
    return 0.5 * (sign_of(a) + sign_of(b)) * std::min(std::fabs(a), std::fabs(b));
}

}  // namespace adaflow
