#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaflow/euler.hpp"
#include "adaflow/grid.hpp"
#include "adaflow/indicator.hpp"
#include "adaflow/ldcu.hpp"
#include "adaflow/quasilinear.hpp"
#include "adaflow/reconstruct.hpp"

namespace adaflow {

enum class SchemeMode {
    ldcu_minmod2,
    ldcu_sbm,
    quasi5,
    adaptive_old,
    adaptive_modified,
    adaptive_new,
};

inline bool mode_is_adaptive(SchemeMode m) {
    return m == SchemeMode::adaptive_old || m == SchemeMode::adaptive_modified ||
           m == SchemeMode::adaptive_new;
}
inline bool mode_uses_quasi5(SchemeMode m) {
    return m == SchemeMode::quasi5 || m == SchemeMode::adaptive_modified ||
           m == SchemeMode::adaptive_new;
}
inline bool mode_splits_contacts(SchemeMode m) { return m == SchemeMode::adaptive_new; }

inline const char* mode_name(SchemeMode m) {
    switch (m) {
        case SchemeMode::ldcu_minmod2: return "ldcu-minmod2";
        case SchemeMode::ldcu_sbm: return "ldcu-sbm";
        case SchemeMode::quasi5: return "quasi5";
        case SchemeMode::adaptive_old: return "adaptive-old";
        case SchemeMode::adaptive_modified: return "adaptive-modified";
        case SchemeMode::adaptive_new: return "adaptive-new";
    }
    return "?";
}

inline SchemeMode parse_mode(std::string s) {
    for (char& c : s) c = (c == '_') ? '-' : static_cast<char>(std::tolower(c));
    for (SchemeMode m : {SchemeMode::ldcu_minmod2, SchemeMode::ldcu_sbm, SchemeMode::quasi5,
                         SchemeMode::adaptive_old, SchemeMode::adaptive_modified,
                         SchemeMode::adaptive_new})
        if (s == mode_name(m)) return m;
    throw std::invalid_argument("unknown mode '" + s +
                                "' (ldcu-minmod2, ldcu-sbm, quasi5, adaptive-old, "
                                "adaptive-modified, adaptive-new)");
}

struct TimeStepPolicy {
    double cfl = 0.4;
    bool accuracy_mode = false;  // additionally caps dt at 0.4 * dx^(5/3)
};

struct SolverBlowup : std::runtime_error {
    int stage = 0;
    int j = 0, k = 0;
    double t = 0.0;
    SolverBlowup(const std::string& msg, int stage_, int j_, int k_, double t_)
        : std::runtime_error(msg), stage(stage_), j(j_), k(k_), t(t_) {}
};

struct StepRecord {
    double t = 0.0;   // time at the end of the step
    double dt = 0.0;
    double min_rho = 0.0;
    double min_p = 0.0;
    long n_contact = 0, n_rough = 0, n_smooth = 0;
};

enum class SchemeChoice : unsigned char { quasi5, ldcu_minmod2, ldcu_overcompressive };

// Per-interface scheme selection from the region codes of the six cells
// j-2..j+3 straddling the interface. The new scheme prefers the dissipative
// limiter whenever any stencil cell is rough, falls back to the
// overcompressive one near pure contacts, and uses the unlimited fifth-order
// flux only on all-smooth stencils. The older variants collapse contacts and
// roughness into a single class.
inline SchemeChoice dispatch_interface_flux(const std::array<Region, 6>& w, SchemeMode mode) {
    switch (mode) {
        case SchemeMode::ldcu_minmod2:
            return SchemeChoice::ldcu_minmod2;
        case SchemeMode::ldcu_sbm:
            return SchemeChoice::ldcu_overcompressive;
        case SchemeMode::quasi5:
            return SchemeChoice::quasi5;
        case SchemeMode::adaptive_old:
            // second-order everywhere; the limiter sharpens next to rough cells
            return (w[2] != Region::smooth || w[3] != Region::smooth)
                       ? SchemeChoice::ldcu_overcompressive
                       : SchemeChoice::ldcu_minmod2;
        case SchemeMode::adaptive_modified: {
            for (Region r : w)
                if (r != Region::smooth) return SchemeChoice::ldcu_overcompressive;
            return SchemeChoice::quasi5;
        }
        case SchemeMode::adaptive_new: {
            bool contact = false;
            for (Region r : w) {
                if (r == Region::rough) return SchemeChoice::ldcu_minmod2;
                contact = contact || (r == Region::contact);
            }
            return contact ? SchemeChoice::ldcu_overcompressive : SchemeChoice::quasi5;
        }
    }
    return SchemeChoice::ldcu_minmod2;
}

namespace detail {

template <int N>
double max_cell_signal(const Vec<N>& q, GasConfig gas, int axis) {
    const double p = pressure(q, gas);
    const double c = sound_speed(q[0], p, gas);
    const double vn = q[axis] / q[0];
    return std::max(vn + c, c - vn);  // = |vn| + c
}

}  // namespace detail

// CFL-limited time step: dt = cfl * dx / a with a the largest one-sided
// interface speed (equals max over cells of |u|+c). In accuracy mode dt is
// further capped at dx^(5/3), which keeps the third-order time error on the
// fifth-order spatial ladder. The result never overshoots `remaining`; a
// static field (a = 0) yields the full remaining time.
inline double compute_dt(const Field<1>& f, const Grid<1>& g, TimeStepPolicy pol, GasConfig gas,
                         double remaining) {
    double a = 0.0;
    for (int j = -1; j <= g.nx; ++j) a = std::max(a, detail::max_cell_signal(f.at(j), gas, 1));
    if (pol.accuracy_mode) return std::min(std::pow(g.dx, 5.0 / 3.0), remaining);
    const double dt = (a > 0.0) ? pol.cfl * g.dx / a : remaining;
    return std::min(dt, remaining);
}

inline double compute_dt(const Field<2>& f, const Grid<2>& g, TimeStepPolicy pol, GasConfig gas,
                         double remaining) {
    double a = 0.0, b = 0.0;
    for (int k = -1; k <= g.ny; ++k)
        for (int j = -1; j <= g.nx; ++j) {
            a = std::max(a, detail::max_cell_signal(f.at(j, k), gas, 1));
            b = std::max(b, detail::max_cell_signal(f.at(j, k), gas, 2));
        }
    double limit = remaining;
    if (a > 0.0) limit = std::min(limit, g.dx / a);
    if (b > 0.0) limit = std::min(limit, g.dy / b);
    if (pol.accuracy_mode) return std::min(std::pow(std::min(g.dx, g.dy), 5.0 / 3.0), remaining);
    const double dt = (a > 0.0 || b > 0.0) ? pol.cfl * limit : remaining;
    return std::min(dt, remaining);
}

// Three-stage strong-stability-preserving Runge-Kutta driver with
// per-interface scheme dispatch. Region masks are computed once per step
// from the state at the step start and frozen across all three stages; the
// fifth-order stage-three flux subtracts the omega correction built from the
// same start-of-step snapshot.
template <int Dim>
class Stepper {
  public:
    static constexpr int NC = Dim + 2;
    using State = Field<Dim>;

    struct Hooks {
        bool zero_physical_flux = false;          // test hook: every numerical flux is zero
        const RegionMap<Dim>* forced_mask = nullptr;  // test hook: overrides classification
        State* capture_stage2 = nullptr;          // test hook: receives the second stage state
    };

    Stepper(const Grid<Dim>& grid, const BoundarySpec<Dim>& bc, GasConfig gas, SchemeMode mode,
            IndicatorConfig ind = {}, bool gravity = false)
        : grid_(grid), bc_(bc), gas_(gas), mode_(mode), ind_(ind), gravity_(gravity) {
        bc_.validate();
        u_ = State(grid_);
        v1_ = State(grid_);
        v2_ = State(grid_);
        snap_ = State(grid_);
        rhs_ = State(grid_);
        if (mode_uses_quasi5(mode_)) {
            pfx_ = State(grid_);
            if constexpr (Dim == 2) pfy_ = State(grid_);
        }
        if constexpr (Dim == 1) {
            fx_.resize(static_cast<std::size_t>(grid_.nx) + 1);
        } else {
            fx_.resize(static_cast<std::size_t>(grid_.nx + 1) * grid_.ny);
            fy_.resize(static_cast<std::size_t>(grid_.nx) * (grid_.ny + 1));
        }
        if (mode_is_adaptive(mode_)) {
            rho_s_ = ScalarMap<Dim>(grid_);
            p_s_ = ScalarMap<Dim>(grid_);
            e_s_ = ScalarMap<Dim>(grid_);
            ebar_rho_ = ScalarMap<Dim>(grid_);
            ebar_p_ = ScalarMap<Dim>(grid_);
        }
        mask_ = RegionMap<Dim>(grid_);
    }

    State& field() { return u_; }
    const State& field() const { return u_; }
    const Grid<Dim>& grid() const { return grid_; }
    const RegionMap<Dim>& mask() const { return mask_; }
    GasConfig gas() const { return gas_; }
    SchemeMode mode() const { return mode_; }
    void set_hooks(const Hooks& h) { hooks_ = h; }

    double suggest_dt(TimeStepPolicy pol, double remaining) {
        fill_ghosts(u_, grid_, bc_);
        return compute_dt(u_, grid_, pol, gas_, remaining);
    }

    // Advance one step of size dt from time t; returns the step record.
    StepRecord step(double t, double dt) {
        fill_ghosts(u_, grid_, bc_);
        if (mode_is_adaptive(mode_)) update_mask();
        if (mode_uses_quasi5(mode_)) snap_ = u_;

        eval_rhs(u_, 0, dt);
        axpy_stage(u_, u_, 0.0, dt, v1_);
        check_state(v1_, 1, t);
        fill_ghosts(v1_, grid_, bc_);

        eval_rhs(v1_, 1, dt);
        axpy_stage(u_, v1_, 0.75, 0.25 * dt, v2_);
        check_state(v2_, 2, t);
        if (hooks_.capture_stage2) *hooks_.capture_stage2 = v2_;
        fill_ghosts(v2_, grid_, bc_);

        eval_rhs(v2_, 2, dt);
        axpy_stage(u_, v2_, 1.0 / 3.0, 2.0 / 3.0 * dt, u_);
        check_state(u_, 3, t);

        return make_record(t + dt, dt);
    }

  private:
    Grid<Dim> grid_;
    BoundarySpec<Dim> bc_;
    GasConfig gas_;
    SchemeMode mode_;
    IndicatorConfig ind_;
    bool gravity_ = false;
    Hooks hooks_{};

    State u_, v1_, v2_, snap_, rhs_, pfx_, pfy_;
    std::vector<Vec<NC>> fx_, fy_;
    ScalarMap<Dim> rho_s_, p_s_, e_s_, ebar_rho_, ebar_p_;
    RegionMap<Dim> mask_;

    void update_mask() {
        if (hooks_.forced_mask) {
            mask_ = *hooks_.forced_mask;
            return;
        }
        const bool split = mode_splits_contacts(mode_);
        extract_scalars();
        indicator_raw(rho_s_, ind_.epsilon, e_s_);
        indicator_smooth(e_s_, ebar_rho_);
        if (split) {
            indicator_raw(p_s_, ind_.epsilon, e_s_);
            indicator_smooth(e_s_, ebar_p_);
        }
        mask_ = classify(ebar_rho_, ebar_p_, ind_, split);
        if constexpr (Dim == 1)
            extend_mask(mask_, bc_.periodic_x());
        else
            extend_mask(mask_, bc_.periodic_x(), bc_.periodic_y());
    }

    void extract_scalars() {
        if constexpr (Dim == 1) {
            for (int j = -kGhost; j < grid_.nx + kGhost; ++j) {
                rho_s_.at(j) = u_.at(j)[0];
                p_s_.at(j) = pressure(u_.at(j), gas_);
            }
        } else {
            for (int k = -kGhost; k < grid_.ny + kGhost; ++k)
                for (int j = -kGhost; j < grid_.nx + kGhost; ++j) {
                    rho_s_.at(j, k) = u_.at(j, k)[0];
                    p_s_.at(j, k) = pressure(u_.at(j, k), gas_);
                }
        }
    }

    // SSP convex combination w*base + (1-w)*v + dts*rhs, evaluated
    // incrementally as v + w*(base - v) + dts*rhs so quiescent cells are
    // exact fixed points.
    void axpy_stage(const State& base, const State& v, double w, double dts, State& out) {
        if constexpr (Dim == 1) {
            for (int j = 0; j < grid_.nx; ++j)
                out.at(j) = v.at(j) + w * (base.at(j) - v.at(j)) + dts * rhs_.at(j);
        } else {
            for (int k = 0; k < grid_.ny; ++k)
                for (int j = 0; j < grid_.nx; ++j)
                    out.at(j, k) = v.at(j, k) + w * (base.at(j, k) - v.at(j, k)) + dts * rhs_.at(j, k);
        }
    }

    std::array<Region, 6> mask_window_x(int i, int k) const {
        std::array<Region, 6> w{};
        if (mode_is_adaptive(mode_)) {
            for (int s = 0; s < 6; ++s) {
                if constexpr (Dim == 1)
                    w[s] = mask_.at(i - 3 + s);
                else
                    w[s] = mask_.at(i - 3 + s, k);
            }
        }
        return w;
    }

    std::array<Region, 6> mask_window_y(int j, int i) const {
        std::array<Region, 6> w{};
        if (mode_is_adaptive(mode_))
            for (int s = 0; s < 6; ++s) w[s] = mask_.at(j, i - 3 + s);
        return w;
    }

    template <class CellAt, class SnapAt, class PfAt>
    Vec<NC> interface_flux(SchemeChoice choice, int i, CellAt&& cell, SnapAt&& snap_cell,
                           PfAt&& pf, int axis, double dh, int stage, double dt) const {
        if (choice == SchemeChoice::quasi5) {
            const std::array<Vec<NC>, 6> f{pf(i - 3), pf(i - 2), pf(i - 1), pf(i), pf(i + 1), pf(i + 2)};
            Vec<NC> val = l_flux(f);
            if (stage == 2 && !std::getenv("ADAFLOW_NO_OMEGA")) {
                const std::array<Vec<NC>, 6> s{snap_cell(i - 3), snap_cell(i - 2), snap_cell(i - 1),
                                               snap_cell(i),     snap_cell(i + 1), snap_cell(i + 2)};
                val -= omega_correction(s, dh, dt);
            }
            return val;
        }
        const LimiterParams lp =
            (choice == SchemeChoice::ldcu_minmod2) ? kMinmod2 : kOvercompressive;
        const Vec<NC> mean = 0.5 * (cell(i - 1) + cell(i));
        const CharBasis<NC> basis = char_basis(mean, gas_, axis);
        const InterfaceStates<NC> rec =
            reconstruct_interface(cell(i - 2), cell(i - 1), cell(i), cell(i + 1), basis, lp, dh);
        return ldcu_flux(rec.minus, rec.plus, gas_, axis);
    }

    void eval_rhs(const State& v, int stage, double dt) {
        const bool use5 = mode_uses_quasi5(mode_) && !hooks_.zero_physical_flux;
        if constexpr (Dim == 1) {
            const int n = grid_.nx;
            if (use5)
                for (int j = -kGhost; j < n + kGhost; ++j) pfx_.at(j) = flux_x(v.at(j), gas_);

            FluxError err;
#pragma omp parallel for schedule(static)
            for (int i = 0; i <= n; ++i) {
                try {
                    if (hooks_.zero_physical_flux) {
                        fx_[static_cast<std::size_t>(i)] = Vec<NC>{};
                        continue;
                    }
                    const SchemeChoice choice = dispatch_interface_flux(mask_window_x(i, 0), mode_);
                    fx_[static_cast<std::size_t>(i)] = interface_flux(
                        choice, i, [&](int j) { return v.at(j); }, [&](int j) { return snap_.at(j); },
                        [&](int j) { return pfx_.at(j); }, 1, grid_.dx, stage, dt);
                } catch (const std::exception& e) {
                    err.record(i, 0, e.what());
                }
            }
            err.rethrow(stage);

            const double ix = 1.0 / grid_.dx;
            for (int j = 0; j < n; ++j)
                rhs_.at(j) = ix * (fx_[static_cast<std::size_t>(j)] - fx_[static_cast<std::size_t>(j + 1)]);
        } else {
            const int nx = grid_.nx, ny = grid_.ny;
            if (use5) {
                for (int k = -kGhost; k < ny + kGhost; ++k)
                    for (int j = -kGhost; j < nx + kGhost; ++j) {
                        pfx_.at(j, k) = flux_x(v.at(j, k), gas_);
                        pfy_.at(j, k) = flux_y(v.at(j, k), gas_);
                    }
            }

            FluxError err;
#pragma omp parallel for schedule(static)
            for (int k = 0; k < ny; ++k) {
                for (int i = 0; i <= nx; ++i) {
                    try {
                        if (hooks_.zero_physical_flux) {
                            fx_[fxi(i, k)] = Vec<NC>{};
                            continue;
                        }
                        const SchemeChoice choice =
                            dispatch_interface_flux(mask_window_x(i, k), mode_);
                        fx_[fxi(i, k)] = interface_flux(
                            choice, i, [&](int j) { return v.at(j, k); },
                            [&](int j) { return snap_.at(j, k); }, [&](int j) { return pfx_.at(j, k); },
                            1, grid_.dx, stage, dt);
                    } catch (const std::exception& e) {
                        err.record(i, k, e.what());
                    }
                }
            }
            err.rethrow(stage);

#pragma omp parallel for schedule(static)
            for (int i = 0; i <= ny; ++i) {
                for (int j = 0; j < nx; ++j) {
                    try {
                        if (hooks_.zero_physical_flux) {
                            fy_[fyi(j, i)] = Vec<NC>{};
                            continue;
                        }
                        const SchemeChoice choice = dispatch_interface_flux(mask_window_y(j, i), mode_);
                        fy_[fyi(j, i)] = interface_flux(
                            choice, i, [&](int k) { return v.at(j, k); },
                            [&](int k) { return snap_.at(j, k); }, [&](int k) { return pfy_.at(j, k); },
                            2, grid_.dy, stage, dt);
                    } catch (const std::exception& e) {
                        err.record(j, i, e.what());
                    }
                }
            }
            err.rethrow(stage);

            const double ix = 1.0 / grid_.dx, iy = 1.0 / grid_.dy;
            for (int k = 0; k < ny; ++k)
                for (int j = 0; j < nx; ++j) {
                    Vec<NC> r = ix * (fx_[fxi(j, k)] - fx_[fxi(j + 1, k)]) +
                                iy * (fy_[fyi(j, k)] - fy_[fyi(j, k + 1)]);
                    if (gravity_) r += gravity_source(v.at(j, k));
                    rhs_.at(j, k) = r;
                }
        }
    }

    std::size_t fxi(int i, int k) const { return static_cast<std::size_t>(k) * (grid_.nx + 1) + i; }
    std::size_t fyi(int j, int i) const { return static_cast<std::size_t>(i) * grid_.nx + j; }

    struct FluxError {
        bool failed = false;
        int j = 0, k = 0;
        std::string msg;
        void record(int j_, int k_, const char* m) {
#pragma omp critical(adaflow_flux_error)
            if (!failed) {
                failed = true;
                j = j_;
                k = k_;
                msg = m;
            }
        }
        void rethrow(int stage) const {
            if (failed)
                throw SolverBlowup("flux failure at interface (" + std::to_string(j) + "," +
                                       std::to_string(k) + "), stage " + std::to_string(stage + 1) +
                                       ": " + msg,
                                   stage + 1, j, k, 0.0);
        }
    };

    void check_state(const State& s, int stage, double t) const {
        auto bad = [&](const Vec<NC>& q, int j, int k) {
            const double rho = q[0];
            const double p = pressure(q, gas_);
            if (!(rho > 0.0) || !(p > 0.0) || std::isnan(rho) || std::isnan(p)) {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "solution blew up: stage %d, cell (%d,%d), t=%.6g, rho=%.6g, p=%.6g",
                              stage, j, k, t, rho, p);
                throw SolverBlowup(buf, stage, j, k, t);
            }
        };
        if constexpr (Dim == 1) {
            for (int j = 0; j < grid_.nx; ++j) bad(s.at(j), j, 0);
        } else {
            for (int k = 0; k < grid_.ny; ++k)
                for (int j = 0; j < grid_.nx; ++j) bad(s.at(j, k), j, k);
        }
    }

    StepRecord make_record(double t_end, double dt) const {
        StepRecord r;
        r.t = t_end;
        r.dt = dt;
        double mr = std::numeric_limits<double>::max(), mp = mr;
        if constexpr (Dim == 1) {
            for (int j = 0; j < grid_.nx; ++j) {
                mr = std::min(mr, u_.at(j)[0]);
                mp = std::min(mp, pressure(u_.at(j), gas_));
            }
        } else {
            for (int k = 0; k < grid_.ny; ++k)
                for (int j = 0; j < grid_.nx; ++j) {
                    mr = std::min(mr, u_.at(j, k)[0]);
                    mp = std::min(mp, pressure(u_.at(j, k), gas_));
                }
        }
        r.min_rho = mr;
        r.min_p = mp;
        if (mode_is_adaptive(mode_)) {
            if constexpr (Dim == 1) {
                for (int j = 0; j < grid_.nx; ++j) tally(mask_.at(j), r);
            } else {
                for (int k = 0; k < grid_.ny; ++k)
                    for (int j = 0; j < grid_.nx; ++j) tally(mask_.at(j, k), r);
            }
        } else {
            r.n_smooth = cell_count(grid_);
        }
        return r;
    }

    static void tally(Region m, StepRecord& r) {
        if (m == Region::contact)
            ++r.n_contact;
        else if (m == Region::rough)
            ++r.n_rough;
        else
            ++r.n_smooth;
    }
};

}  // namespace adaflow
