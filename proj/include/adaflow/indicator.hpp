#pragma once

#include <cmath>
#include <cstdlib>

#include "adaflow/euler.hpp"
#include "adaflow/grid.hpp"

namespace adaflow {

struct IndicatorConfig {
    double epsilon = 0.2;  // noise filter; keeps ripples from registering as roughness
    double c1 = 0.02;      // rough threshold on the smoothed density indicator, in (0,1)
    double c2 = 0.3;       // contact threshold on the smoothed pressure indicator, in (0,1)
};

// Region codes as exported in snapshots: smooth=0, rough=1, contact=2.
enum class Region : unsigned char { smooth = 0, rough = 1, contact = 2 };

template <int Dim>
using ScalarMap = GridArray<Dim, double>;
template <int Dim>
using RegionMap = GridArray<Dim, Region>;

// Normalized second difference of w. Defined on cells [-2, nx+1]; the two
// outermost ghost layers stay zero.
inline void indicator_raw(const ScalarMap<1>& w, double eps, ScalarMap<1>& e) {
    const int n = w.nx();
    for (int j = -2; j <= n + 1; ++j) {
        const double wm = w.at(j - 1), w0 = w.at(j), wp = w.at(j + 1);
        const double num = std::fabs(wp - 2.0 * w0 + wm);
        const double den = std::fabs(wp - w0) + std::fabs(w0 - wm) + eps * (wp + 2.0 * w0 + wm);
        e.at(j) = num / den;
    }
}

// Three-point smoothing (1,4,1)/6, defined on cells [-1, nx].
inline void indicator_smooth(const ScalarMap<1>& e, ScalarMap<1>& ebar) {
    const int n = e.nx();
    for (int j = -1; j <= n; ++j)
        ebar.at(j) = (e.at(j + 1) + 4.0 * e.at(j) + e.at(j - 1)) / 6.0;
}

// 2-D variant: square-summed second differences over guarded first
// differences, per direction, under a square root.
inline void indicator_raw(const ScalarMap<2>& w, double eps, ScalarMap<2>& e) {
    const int nx = w.nx(), ny = w.ny();
    for (int k = -2; k <= ny + 1; ++k)
        for (int j = -2; j <= nx + 1; ++j) {
            const double wc = w.at(j, k);
            const double wxm = w.at(j - 1, k), wxp = w.at(j + 1, k);
            const double wym = w.at(j, k - 1), wyp = w.at(j, k + 1);
            const double nx2 = wxp - 2.0 * wc + wxm;
            const double ny2 = wyp - 2.0 * wc + wym;
            const double e1 = nx2 * nx2 + ny2 * ny2;
            const double dx2 = std::fabs(wxp - wc) + std::fabs(wc - wxm) +
                               eps * (std::fabs(wxp) + 2.0 * std::fabs(wc) + std::fabs(wxm));
            const double dy2 = std::fabs(wyp - wc) + std::fabs(wc - wym) +
                               eps * (std::fabs(wyp) + 2.0 * std::fabs(wc) + std::fabs(wym));
            const double e2 = dx2 * dx2 + dy2 * dy2;
            e.at(j, k) = std::sqrt(e1 / e2);
        }
}

// Nine-point smoothing (1,4,16)/36, defined on cells [-1, nx] x [-1, ny].
inline void indicator_smooth(const ScalarMap<2>& e, ScalarMap<2>& ebar) {
    const int nx = e.nx(), ny = e.ny();
    for (int k = -1; k <= ny; ++k)
        for (int j = -1; j <= nx; ++j)
            ebar.at(j, k) =
                (e.at(j - 1, k - 1) + e.at(j - 1, k + 1) + e.at(j + 1, k - 1) + e.at(j + 1, k + 1) +
                 4.0 * (e.at(j - 1, k) + e.at(j, k - 1) + e.at(j, k + 1) + e.at(j + 1, k)) +
                 16.0 * e.at(j, k)) /
                36.0;
}

inline Region classify_cell(double rho_bar, double p_bar, const IndicatorConfig& cfg,
                            bool split_contacts) {
    if (!(rho_bar > cfg.c1)) return Region::smooth;
    if (split_contacts && p_bar < cfg.c2) return Region::contact;
    return Region::rough;
}

// Cells with a large smoothed density indicator are rough; rough cells with
// a small smoothed pressure indicator are contacts (the pressure stays flat
// across a contact while the density jumps). Raising c1 never adds rough
// cells. `p_bar` is ignored unless split_contacts is set.
inline RegionMap<1> classify(const ScalarMap<1>& rho_bar, const ScalarMap<1>& p_bar,
                             const IndicatorConfig& cfg, bool split_contacts) {
    RegionMap<1> m;
    const int n = rho_bar.nx();
    m = RegionMap<1>(Grid<1>(0.0, 1.0, n));
    for (int j = -1; j <= n; ++j)
        m.at(j) = classify_cell(rho_bar.at(j), split_contacts ? p_bar.at(j) : 0.0, cfg, split_contacts);
    return m;
}

inline RegionMap<2> classify(const ScalarMap<2>& rho_bar, const ScalarMap<2>& p_bar,
                             const IndicatorConfig& cfg, bool split_contacts) {
    const int nx = rho_bar.nx(), ny = rho_bar.ny();
    RegionMap<2> m(Grid<2>(0.0, 1.0, nx, 0.0, 1.0, ny));
    for (int k = -1; k <= ny; ++k)
        for (int j = -1; j <= nx; ++j)
            m.at(j, k) =
                classify_cell(rho_bar.at(j, k), split_contacts ? p_bar.at(j, k) : 0.0, cfg, split_contacts);
    return m;
}

// The classification exists on [-1, n]; interface dispatch looks up to three
// cells into the ghost region, so the outer layers are filled by wrapping
// (periodic sides) or by copying the outermost classified cell.
inline void extend_mask(RegionMap<1>& m, bool wrap_x) {
    const int n = m.nx();
    for (int g = 1; g <= kGhost; ++g) {
        m.at(-g) = wrap_x ? m.at(n - g) : m.at(-1);
        m.at(n - 1 + g) = wrap_x ? m.at(g - 1) : m.at(n);
    }
}

inline void extend_mask(RegionMap<2>& m, bool wrap_x, bool wrap_y) {
    const int nx = m.nx(), ny = m.ny();
    for (int k = -1; k <= ny; ++k)
        for (int g = 1; g <= kGhost; ++g) {
            m.at(-g, k) = wrap_x ? m.at(nx - g, k) : m.at(-1, k);
            m.at(nx - 1 + g, k) = wrap_x ? m.at(g - 1, k) : m.at(nx, k);
        }
    for (int j = -kGhost; j < nx + kGhost; ++j)
        for (int g = 1; g <= kGhost; ++g) {
            m.at(j, -g) = wrap_y ? m.at(j, ny - g) : m.at(j, -1);
            m.at(j, ny - 1 + g) = wrap_y ? m.at(j, g - 1) : m.at(j, ny);
        }
}

}  // namespace adaflow
