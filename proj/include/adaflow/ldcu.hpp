#pragma once

#include <cmath>

#include "adaflow/euler.hpp"
#include "adaflow/limiter.hpp"

namespace adaflow {

// Below this gap the interface is wave-degenerate and the flux falls back to
// the arithmetic mean of the one-sided physical fluxes.
inline constexpr double kSpeedGap = 1e-12;

// Central-upwind numerical flux with the built-in anti-diffusion term.
// `axis` is the momentum slot of the transport direction. The upwind part
// weights F(U-) with a+ and F(U+) with -a-, matching its y-direction twin.
template <int N>
Vec<N> ldcu_flux(const Vec<N>& um, const Vec<N>& up, GasConfig gas, int axis) {
    const double pm = pressure(um, gas);
    const double pp = pressure(up, gas);
    if (!(um[0] > 0.0) || !(pm > 0.0) || !(up[0] > 0.0) || !(pp > 0.0))
        throw InvalidState("ldcu_flux: non-positive density or pressure at interface");

    const Vec<N> fm = physical_flux(um, pm, axis);
    const Vec<N> fp = physical_flux(up, pp, axis);
    const LocalSpeeds s = interface_speeds(um, up, gas, axis);
    const double ap = s.plus;
    const double am = s.minus;
    if (ap - am < kSpeedGap) return 0.5 * (fm + fp);

    const double inv = 1.0 / (ap - am);
    Vec<N> flux = inv * (ap * fm - am * fp) + (ap * am * inv) * (up - um);

    // intermediate state, transported with the starred velocity
    const Vec<N> ustar = inv * (ap * up - am * um - (fp - fm));
    const double rho_star = ustar[0];
    if (rho_star > 0.0) {
        const double un = ustar[axis] / rho_star;
        const double qrho =
            minmod((un - am) * (rho_star - um[0]), (ap - un) * (up[0] - rho_star));
        double alpha;
        if (un < 0.0)
            alpha = ap / (ap - un);
        else
            alpha = (am - un == 0.0) ? 0.0 : am / (am - un);

        Vec<N> w;
        w[0] = 1.0;
        double kin = 0.0;
        for (int m = 1; m <= N - 2; ++m) {
            w[m] = ustar[m] / rho_star;
            kin += w[m] * w[m];
        }
        w[N - 1] = 0.5 * kin;
        flux += (alpha * qrho) * w;
    }
    return flux;
}

inline Vec3 ldcu_flux_1d(const Vec3& um, const Vec3& up, GasConfig gas) {
    return ldcu_flux(um, up, gas, 1);
}
inline Vec4 ldcu_flux_2d_x(const Vec4& um, const Vec4& up, GasConfig gas) {
    return ldcu_flux(um, up, gas, 1);
}
inline Vec4 ldcu_flux_2d_y(const Vec4& um, const Vec4& up, GasConfig gas) {
    return ldcu_flux(um, up, gas, 2);
}

}  // namespace adaflow
