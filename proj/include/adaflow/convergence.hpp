#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaflow/euler.hpp"
#include "adaflow/grid.hpp"

namespace adaflow {

struct ConvergenceRow {
    double dx = 0.0;
    std::vector<double> error;  // per variable; NaN when the estimate is undefined
    std::vector<double> rate;   // per variable; NaN on rows without a rate
};

struct ConvergenceReport {
    std::string method;  // "runge" or "exact"
    std::vector<std::string> variables;
    std::vector<ConvergenceRow> rows;
};

namespace detail {

// Lagrange weights on `pts` (distinct abscissae) evaluated at xq.
template <std::size_t M>
std::array<double, M> lagrange_weights(const std::array<double, M>& pts, double xq) {
    std::array<double, M> w{};
    for (std::size_t i = 0; i < M; ++i) {
        double num = 1.0, den = 1.0;
        for (std::size_t j = 0; j < M; ++j) {
            if (j == i) continue;
            num *= xq - pts[j];
            den *= pts[i] - pts[j];
        }
        w[i] = num / den;
    }
    return w;
}

}  // namespace detail

// Sixth-order midpoint weights: a coarse cell center falls halfway between
// two fine cell centers, so interior restriction uses the symmetric stencil
// (3,-25,150,150,-25,3)/256 on the six nearest fine values.
inline constexpr std::array<double, 6> kMidpointWeights = {
    3.0 / 256.0, -25.0 / 256.0, 150.0 / 256.0, 150.0 / 256.0, -25.0 / 256.0, 3.0 / 256.0};

// Restrict a fine solution onto the coarse mesh with half as many cells by
// interpolating at the coarse cell centers. Periodic domains wrap; otherwise
// the stencil shifts inward near the ends and one-sided weights are used.
inline Field<1> restrict_halved(const Field<1>& fine, bool periodic_x) {
    const int nf = fine.nx();
    if (nf % 2 != 0) throw std::invalid_argument("restrict_halved: fine mesh must be even");
    const int nc = nf / 2;
    Field<1> out(Grid<1>(0.0, 1.0, nc));
    for (int i = 0; i < nc; ++i) {
        const int base = 2 * i - 2;  // leftmost of the centered 6-point window
        Vec3 acc{};
        if (periodic_x) {
            for (int s = 0; s < 6; ++s) {
                int idx = base + s;
                idx = ((idx % nf) + nf) % nf;
                acc += kMidpointWeights[static_cast<std::size_t>(s)] * fine.at(idx);
            }
        } else {
            int lo = base;
            if (lo < 0) lo = 0;
            if (lo > nf - 6) lo = nf - 6;
            // coarse center sits at fine-index coordinate 2i + 0.5
            std::array<double, 6> pts{};
            for (int s = 0; s < 6; ++s) pts[static_cast<std::size_t>(s)] = lo + s;
            const auto w = detail::lagrange_weights(pts, 2.0 * i + 0.5);
            for (int s = 0; s < 6; ++s) acc += w[static_cast<std::size_t>(s)] * fine.at(lo + s);
        }
        out.at(i) = acc;
    }
    return out;
}

inline Field<2> restrict_halved(const Field<2>& fine, bool periodic_x, bool periodic_y) {
    const int nfx = fine.nx(), nfy = fine.ny();
    if (nfx % 2 != 0 || nfy % 2 != 0)
        throw std::invalid_argument("restrict_halved: fine mesh must be even");
    const int ncx = nfx / 2, ncy = nfy / 2;

    // horizontal pass, then vertical
    Field<2> half(Grid<2>(0.0, 1.0, ncx, 0.0, 1.0, nfy));
    auto wrap = [](int idx, int n) { return ((idx % n) + n) % n; };
    for (int k = 0; k < nfy; ++k)
        for (int i = 0; i < ncx; ++i) {
            const int base = 2 * i - 2;
            Vec4 acc{};
            if (periodic_x) {
                for (int s = 0; s < 6; ++s)
                    acc += kMidpointWeights[static_cast<std::size_t>(s)] * fine.at(wrap(base + s, nfx), k);
            } else {
                int lo = std::max(0, std::min(base, nfx - 6));
                std::array<double, 6> pts{};
                for (int s = 0; s < 6; ++s) pts[static_cast<std::size_t>(s)] = lo + s;
                const auto w = detail::lagrange_weights(pts, 2.0 * i + 0.5);
                for (int s = 0; s < 6; ++s) acc += w[static_cast<std::size_t>(s)] * fine.at(lo + s, k);
            }
            half.at(i, k) = acc;
        }

    Field<2> out(Grid<2>(0.0, 1.0, ncx, 0.0, 1.0, ncy));
    for (int k = 0; k < ncy; ++k)
        for (int i = 0; i < ncx; ++i) {
            const int base = 2 * k - 2;
            Vec4 acc{};
            if (periodic_y) {
                for (int s = 0; s < 6; ++s)
                    acc += kMidpointWeights[static_cast<std::size_t>(s)] * half.at(i, wrap(base + s, nfy));
            } else {
                int lo = std::max(0, std::min(base, nfy - 6));
                std::array<double, 6> pts{};
                for (int s = 0; s < 6; ++s) pts[static_cast<std::size_t>(s)] = lo + s;
                const auto w = detail::lagrange_weights(pts, 2.0 * k + 0.5);
                for (int s = 0; s < 6; ++s) acc += w[static_cast<std::size_t>(s)] * half.at(i, lo + s);
            }
            out.at(i, k) = acc;
        }
    return out;
}

// L1 distance per conserved component, weighted by the cell measure.
template <int Dim>
std::vector<double> l1_diff(const Field<Dim>& a, const Field<Dim>& b, double cell_measure) {
    constexpr int NC = Dim + 2;
    if (a.nx() != b.nx() || a.ny() != b.ny())
        throw std::invalid_argument("l1_diff: mismatched meshes");
    std::vector<double> out(NC, 0.0);
    if constexpr (Dim == 1) {
        for (int j = 0; j < a.nx(); ++j)
            for (int m = 0; m < NC; ++m) out[static_cast<std::size_t>(m)] += std::fabs(a.at(j)[m] - b.at(j)[m]);
    } else {
        for (int k = 0; k < a.ny(); ++k)
            for (int j = 0; j < a.nx(); ++j)
                for (int m = 0; m < NC; ++m)
                    out[static_cast<std::size_t>(m)] += std::fabs(a.at(j, k)[m] - b.at(j, k)[m]);
    }
    for (double& x : out) x *= cell_measure;
    return out;
}

// L1 error of the primitive variables against an exact solution sampled at
// cell centers.
inline std::vector<double> l1_error_vs_exact(const Field<2>& f, const Grid<2>& g,
                                             const std::function<Prim<2>(double, double, double)>& exact,
                                             double t, GasConfig gas) {
    std::vector<double> out(4, 0.0);
    for (int k = 0; k < g.ny; ++k)
        for (int j = 0; j < g.nx; ++j) {
            const Prim<2> w = to_primitive(f.at(j, k), gas);
            const Prim<2> e = exact(g.center_x(j), g.center_y(k), t);
            out[0] += std::fabs(w.rho - e.rho);
            out[1] += std::fabs(w.u - e.u);
            out[2] += std::fabs(w.v - e.v);
            out[3] += std::fabs(w.p - e.p);
        }
    const double m = g.dx * g.dy;
    for (double& x : out) x *= m;
    return out;
}

// Error and rate estimates from solution differences on three consecutive
// meshes: Error ~ d12^2 / |d12 - d24|, Rate ~ log2(d24 / d12), where d12 is
// the fine/mid difference and d24 the mid/coarse one. When d12 == d24 the
// error estimate is undefined and reported as NaN.
inline void runge_estimates(double d12, double d24, double& error, double& rate) {
    rate = std::log2(d24 / d12);
    const double den = std::fabs(d12 - d24);
    error = (den == 0.0) ? std::numeric_limits<double>::quiet_NaN() : d12 * d12 / den;
}

}  // namespace adaflow
