#pragma once

#include <array>
#include <stdexcept>

#include "adaflow/vec.hpp"

namespace adaflow {

// Linear fifth-order interface flux. Input holds the physical fluxes at
// cells j-2 .. j+3 around interface j+1/2, in ascending order.
template <int N>
Vec<N> l_flux(const std::array<Vec<N>, 6>& f) {
    return (1.0 / 60.0) *
           (f[0] - 8.0 * f[1] + 37.0 * f[2] + 37.0 * f[3] - 8.0 * f[4] + f[5]);
}

// Stage-three flux correction: a scaled fifth difference of the states at
// the start of the step (cells j-2 .. j+3, ascending).
template <int N>
Vec<N> omega_correction(const std::array<Vec<N>, 6>& u, double dx, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("omega_correction: dt must be positive");
    const double c = 3.0 * dx / (128.0 * dt);
    return c * (-1.0 * u[0] + 5.0 * u[1] - 10.0 * u[2] + 10.0 * u[3] - 5.0 * u[4] + u[5]);
}

}  // namespace adaflow
