#pragma once

#include <algorithm>
#include <cmath>

#include "adaflow/euler.hpp"
#include "adaflow/limiter.hpp"

namespace adaflow {

// Below this (relative to the local magnitude) a backward difference is
// treated as zero and the slope collapses to the flat, non-oscillatory limit.
inline constexpr double kSlopeRatioGuard = 1e-14;

template <int N>
struct InterfaceStates {
    Vec<N> minus;  // left-sided point value
    Vec<N> plus;   // right-sided point value
};

// Limited slope of one characteristic component from (g_{j-1}, g_j, g_{j+1}),
// evaluated in ratio form: phi(forward/backward) * backward / dx.
inline double limited_slope(double gm, double g0, double gp, LimiterParams lp, double dx) {
    const double back = g0 - gm;
    const double scale = std::max({std::fabs(g0), std::fabs(gm), 1.0});
    if (std::fabs(back) < kSlopeRatioGuard * scale) return 0.0;
    return sbm((gp - g0) / back, lp) * back / dx;
}

// One-sided interface point values from four consecutive cell values
// (u0..u3; the interface sits between u1 and u2). All four cells are taken
// to the characteristic variables of `basis`, limited per component, then
// transformed back.
template <int N>
InterfaceStates<N> reconstruct_interface(const Vec<N>& u0, const Vec<N>& u1, const Vec<N>& u2,
                                         const Vec<N>& u3, const CharBasis<N>& basis,
                                         LimiterParams lp, double dx) {
    const Vec<N> g0 = basis.Rinv * u0;
    const Vec<N> g1 = basis.Rinv * u1;
    const Vec<N> g2 = basis.Rinv * u2;
    const Vec<N> g3 = basis.Rinv * u3;

    Vec<N> gm, gp;
    for (int m = 0; m < N; ++m) {
        const double sl = limited_slope(g0[m], g1[m], g2[m], lp, dx);
        const double sr = limited_slope(g1[m], g2[m], g3[m], lp, dx);
        gm[m] = g1[m] + 0.5 * dx * sl;
        gp[m] = g2[m] - 0.5 * dx * sr;
    }
    return {basis.R * gm, basis.R * gp};
}

}  // namespace adaflow
