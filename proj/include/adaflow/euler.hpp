#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "adaflow/vec.hpp"

namespace adaflow {

struct GasConfig {
    double gamma = 1.4;  // specific heat ratio, > 1
};

struct InvalidState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <int Dim>
struct Prim;

template <>
struct Prim<1> {
    double rho = 0.0, u = 0.0, p = 0.0;
};

template <>
struct Prim<2> {
    double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
};

// Ideal-gas EOS. A non-positive result is returned as-is; positivity
// enforcement is the integrator's concern.
inline double pressure(const Vec3& q, GasConfig gas) {
    return (gas.gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]);
}
inline double pressure(const Vec4& q, GasConfig gas) {
    return (gas.gamma - 1.0) * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0]);
}

inline Vec3 to_conserved(const Prim<1>& w, GasConfig gas) {
    return {w.rho, w.rho * w.u, w.p / (gas.gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}
inline Vec4 to_conserved(const Prim<2>& w, GasConfig gas) {
    return {w.rho, w.rho * w.u, w.rho * w.v,
            w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

inline Prim<1> to_primitive(const Vec3& q, GasConfig gas) {
    return {q[0], q[1] / q[0], pressure(q, gas)};
}
inline Prim<2> to_primitive(const Vec4& q, GasConfig gas) {
    return {q[0], q[1] / q[0], q[2] / q[0], pressure(q, gas)};
}

inline double sound_speed(double rho, double p, GasConfig gas) { return std::sqrt(gas.gamma * p / rho); }

// Physical flux along one direction; `axis` is the momentum slot of the
// transport direction (1 = x, 2 = y).
template <int N>
Vec<N> physical_flux(const Vec<N>& q, double p, int axis) {
    const double vn = q[axis] / q[0];
    Vec<N> f;
    f[0] = q[axis];
    for (int m = 1; m <= N - 2; ++m) f[m] = q[m] * vn;
    f[axis] += p;
    f[N - 1] = vn * (q[N - 1] + p);
    return f;
}

template <int N>
Vec<N> physical_flux(const Vec<N>& q, GasConfig gas, int axis) {
    return physical_flux(q, pressure(q, gas), axis);
}

inline Vec3 flux_x(const Vec3& q, GasConfig gas) { return physical_flux(q, gas, 1); }
inline Vec4 flux_x(const Vec4& q, GasConfig gas) { return physical_flux(q, gas, 1); }
inline Vec4 flux_y(const Vec4& q, GasConfig gas) { return physical_flux(q, gas, 2); }

struct LocalSpeeds {
    double minus = 0.0;  // <= 0
    double plus = 0.0;   // >= 0
};

// One-sided local speeds of propagation at an interface, clamped at zero.
template <int N>
LocalSpeeds interface_speeds(const Vec<N>& qm, const Vec<N>& qp, GasConfig gas, int axis) {
    const double pm = pressure(qm, gas);
    const double pp = pressure(qp, gas);
    if (!(qm[0] > 0.0) || !(pm > 0.0) || !(qp[0] > 0.0) || !(pp > 0.0))
        throw InvalidState("interface_speeds: non-positive density or pressure");
    const double um = qm[axis] / qm[0];
    const double up = qp[axis] / qp[0];
    const double cm = sound_speed(qm[0], pm, gas);
    const double cp = sound_speed(qp[0], pp, gas);
    LocalSpeeds s;
    s.plus = std::max({up + cp, um + cm, 0.0});
    s.minus = std::min({up - cp, um - cm, 0.0});
    return s;
}

template <int N>
struct CharBasis {
    Mat<N> R;     // right eigenvectors in columns
    Mat<N> Rinv;  // rows are the matching left eigenvectors
};

namespace detail {

template <int N>
void check_basis_state(double rho, double p) {
    if (!(rho > 0.0) || !(p > 0.0))
        throw InvalidState("char_basis: mean state has non-positive density or pressure");
}

template <int N>
void assert_basis_inverse(const CharBasis<N>& b) {
#ifndef NDEBUG
    const Mat<N> prod = b.R * b.Rinv;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) assert(std::fabs(prod(r, c) - (r == c ? 1.0 : 0.0)) < 1e-12);
#else
    (void)b;
#endif
}

}  // namespace detail

// Eigenbasis of the flux Jacobian at a mean state. Acoustic columns are
// scaled to unit density entry; any valid basis diagonalizes the Jacobian,
// which is the property the reconstruction relies on.
inline CharBasis<3> char_basis(const Vec3& mean, GasConfig gas, int /*axis*/ = 1) {
    const double rho = mean[0];
    const double u = mean[1] / rho;
    const double p = pressure(mean, gas);
    detail::check_basis_state<3>(rho, p);
    const double c = sound_speed(rho, p, gas);
    const double H = (mean[2] + p) / rho;
    const double b1 = (gas.gamma - 1.0) / (c * c);
    const double b2 = 0.5 * u * u * b1;

    CharBasis<3> b;
    auto& R = b.R;
    R(0, 0) = 1.0;       R(0, 1) = 1.0;         R(0, 2) = 1.0;
    R(1, 0) = u - c;     R(1, 1) = u;           R(1, 2) = u + c;
    R(2, 0) = H - u * c; R(2, 1) = 0.5 * u * u; R(2, 2) = H + u * c;

    auto& L = b.Rinv;
    L(0, 0) = 0.5 * (b2 + u / c); L(0, 1) = -0.5 * (b1 * u + 1.0 / c); L(0, 2) = 0.5 * b1;
    L(1, 0) = 1.0 - b2;           L(1, 1) = b1 * u;                    L(1, 2) = -b1;
    L(2, 0) = 0.5 * (b2 - u / c); L(2, 1) = -0.5 * (b1 * u - 1.0 / c); L(2, 2) = 0.5 * b1;

    detail::assert_basis_inverse(b);
    return b;
}

inline CharBasis<4> char_basis(const Vec4& mean, GasConfig gas, int axis) {
    const double rho = mean[0];
    const double u = mean[1] / rho;
    const double v = mean[2] / rho;
    const double p = pressure(mean, gas);
    detail::check_basis_state<4>(rho, p);
    const double c = sound_speed(rho, p, gas);
    const double H = (mean[3] + p) / rho;
    const double q2 = 0.5 * (u * u + v * v);
    const double b1 = (gas.gamma - 1.0) / (c * c);
    const double b2 = q2 * b1;

    const double vn = (axis == 1) ? u : v;  // normal velocity
    const double vt = (axis == 1) ? v : u;  // transverse velocity
    const int nrm = axis;
    const int tng = (axis == 1) ? 2 : 1;

    CharBasis<4> b;
    auto& R = b.R;
    // columns: acoustic-, entropy, shear, acoustic+
    R(0, 0) = 1.0;        R(0, 1) = 1.0; R(0, 2) = 0.0; R(0, 3) = 1.0;
    R(nrm, 0) = vn - c;   R(nrm, 1) = vn; R(nrm, 2) = 0.0; R(nrm, 3) = vn + c;
    R(tng, 0) = vt;       R(tng, 1) = vt; R(tng, 2) = 1.0; R(tng, 3) = vt;
    R(3, 0) = H - vn * c; R(3, 1) = q2;  R(3, 2) = vt;  R(3, 3) = H + vn * c;

    auto& L = b.Rinv;
    L(0, 0) = 0.5 * (b2 + vn / c);
    L(0, nrm) = -0.5 * (b1 * vn + 1.0 / c);
    L(0, tng) = -0.5 * b1 * vt;
    L(0, 3) = 0.5 * b1;
    L(1, 0) = 1.0 - b2;
    L(1, nrm) = b1 * vn;
    L(1, tng) = b1 * vt;
    L(1, 3) = -b1;
    L(2, 0) = -vt;
    L(2, nrm) = 0.0;
    L(2, tng) = 1.0;
    L(2, 3) = 0.0;
    L(3, 0) = 0.5 * (b2 - vn / c);
    L(3, nrm) = -0.5 * (b1 * vn - 1.0 / c);
    L(3, tng) = -0.5 * b1 * vt;
    L(3, 3) = 0.5 * b1;

    detail::assert_basis_inverse(b);
    return b;
}

// Gravitational source column for the buoyancy-driven runs: the y-momentum
// gains rho and the energy gains rho*v.
inline Vec4 gravity_source(const Vec4& q) { return {0.0, 0.0, q[0], q[2]}; }

}  // namespace adaflow
