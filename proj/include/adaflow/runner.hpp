#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "adaflow/convergence.hpp"
#include "adaflow/integrator.hpp"
#include "adaflow/problems.hpp"
#include "adaflow/snapshot.hpp"

namespace adaflow {

struct RunConfig {
    std::string problem;
    SchemeMode mode = SchemeMode::adaptive_new;
    int nx = 0, ny = 0;       // 0 = problem default
    double cfl = 0.4;
    bool accuracy_mode = false;
    double c1 = -1.0, c2 = -1.0;  // < 0 = problem default
    double t_final = -1.0;        // < 0 = problem default
    std::string out_dir;          // empty = no artifacts
    std::vector<double> snapshot_times;
    int repeats = 1;  // timing repeats; artifacts come from the last run
};

template <int Dim>
struct RunResult {
    Grid<Dim> grid;
    Field<Dim> field;
    RegionMap<Dim> mask;
    std::vector<StepRecord> log;
    long steps = 0;
    double wall_ms = 0.0;  // median over repeats
    double min_rho = std::numeric_limits<double>::max();
    double min_p = std::numeric_limits<double>::max();
    long n_contact = 0, n_rough = 0, n_smooth = 0;  // final-step mask tallies
};

inline IndicatorConfig indicator_for(const ProblemSpec& spec, const RunConfig& cfg) {
    IndicatorConfig ind;
    ind.c1 = (cfg.c1 >= 0.0) ? cfg.c1
                             : (cfg.mode == SchemeMode::adaptive_new ? spec.c1 : spec.c1_old);
    ind.c2 = (cfg.c2 >= 0.0) ? cfg.c2 : spec.c2;
    return ind;
}

namespace detail {

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace detail

// Execute one configured run. Writes snapshots at the requested times plus
// the final time, a per-step run log, and a summary when an output directory
// is given. The time stepper clips dt so snapshot times and t_final are hit
// exactly.
template <int Dim>
RunResult<Dim> run_problem(const RunConfig& cfg) {
    const ProblemSpec& spec = find_problem(cfg.problem);
    if (spec.dim != Dim) throw std::invalid_argument("problem '" + spec.name + "' is " +
                                                     std::to_string(spec.dim) + "-D");
    const GasConfig gas{spec.gamma};
    const Grid<Dim> grid = make_grid<Dim>(spec, cfg.nx, cfg.ny);
    const BoundarySpec<Dim> bc = make_boundary<Dim>(spec, gas);
    const IndicatorConfig ind = indicator_for(spec, cfg);
    const double t_end = (cfg.t_final >= 0.0) ? cfg.t_final : spec.t_final;
    const TimeStepPolicy pol{cfg.cfl, cfg.accuracy_mode};

    std::vector<double> events = cfg.snapshot_times;
    for (double t : events)
        if (t < 0.0 || t > t_end) throw std::invalid_argument("snapshot time outside [0, t_final]");
    std::sort(events.begin(), events.end());

    const bool write = !cfg.out_dir.empty();
    if (write) std::filesystem::create_directories(cfg.out_dir);

    RunResult<Dim> res;
    res.grid = grid;
    const int repeats = std::max(1, cfg.repeats);
    std::vector<double> walls;

    for (int rep = 0; rep < repeats; ++rep) {
        const bool last = (rep == repeats - 1);
        Stepper<Dim> stepper(grid, bc, gas, cfg.mode, ind, spec.gravity);
        stepper.field() = init_field(spec, grid, gas);

        std::vector<StepRecord> log;
        std::size_t next_event = 0;
        double t = 0.0;
        long steps = 0;
        int snap_id = 0;

        auto emit_snapshot = [&](double tt) {
            if (!write || !last) return;
            char name[64];
            std::snprintf(name, sizeof name, "snapshot_%03d.dat", snap_id++);
            SnapshotMeta meta;
            meta.problem = spec.name;
            meta.mode = mode_name(cfg.mode);
            meta.t = tt;
            meta.gamma = gas.gamma;
            write_snapshot(cfg.out_dir + "/" + name, meta, grid, stepper.field(),
                           mode_is_adaptive(cfg.mode) ? &stepper.mask() : nullptr, gas);
        };

        const auto t0 = std::chrono::steady_clock::now();
        while (t < t_end) {
            double limit = t_end - t;
            if (next_event < events.size()) limit = std::min(limit, events[next_event] - t);
            if (limit <= 0.0) {  // snapshot exactly here
                emit_snapshot(t);
                ++next_event;
                continue;
            }
            const double dt = stepper.suggest_dt(pol, limit);
            const StepRecord rec = stepper.step(t, dt);
            t = rec.t;
            ++steps;
            if (last) log.push_back(rec);
            while (next_event < events.size() && t >= events[next_event] - 1e-14 * t_end) {
                emit_snapshot(t);
                ++next_event;
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        walls.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());

        if (last) {
            emit_snapshot(t);
            res.field = stepper.field();
            res.mask = stepper.mask();
            res.log = std::move(log);
            res.steps = steps;
            for (const StepRecord& r : res.log) {
                res.min_rho = std::min(res.min_rho, r.min_rho);
                res.min_p = std::min(res.min_p, r.min_p);
            }
            if (!res.log.empty()) {
                res.n_contact = res.log.back().n_contact;
                res.n_rough = res.log.back().n_rough;
                res.n_smooth = res.log.back().n_smooth;
            }
        }
    }
    res.wall_ms = detail::median(walls);

    if (write) {
        std::ofstream log(cfg.out_dir + "/run.log");
        log << "# step t dt min_rho min_p n_contact n_rough n_smooth\n";
        long i = 0;
        for (const StepRecord& r : res.log)
            log << ++i << ' ' << r.t << ' ' << r.dt << ' ' << r.min_rho << ' ' << r.min_p << ' '
                << r.n_contact << ' ' << r.n_rough << ' ' << r.n_smooth << "\n";

        const long cells = cell_count(grid);
        std::ofstream sum(cfg.out_dir + "/summary.txt");
        sum << "problem " << spec.name << "\nmode " << mode_name(cfg.mode) << "\nnx " << grid.nx;
        if constexpr (Dim == 2) sum << "\nny " << grid.ny;
        sum << "\nt_final " << t_end << "\nsteps " << res.steps << "\nwall_ms " << res.wall_ms
            << "\nmin_rho " << res.min_rho << "\nmin_p " << res.min_p << "\npct_contact "
            << 100.0 * res.n_contact / cells << "\npct_rough " << 100.0 * res.n_rough / cells
            << "\npct_smooth " << 100.0 * res.n_smooth / cells << "\n";
    }
    return res;
}

// Convergence study against consecutive mesh halvings. Reports errors per
// conserved component via the three-mesh difference estimates; rates appear
// from the third mesh onward.
inline ConvergenceReport runge_convergence(const std::string& problem, SchemeMode mode,
                                           const std::vector<int>& meshes, bool accuracy_mode,
                                           double cfl = 0.4) {
    if (meshes.size() < 3) throw std::invalid_argument("runge_convergence: need at least 3 meshes");
    for (std::size_t i = 1; i < meshes.size(); ++i)
        if (meshes[i] != 2 * meshes[i - 1])
            throw std::invalid_argument("runge_convergence: meshes must double");

    const ProblemSpec& spec = find_problem(problem);
    const bool periodic = spec.bc_x == BcKind::periodic;

    std::vector<Field<1>> sols;
    std::vector<double> dxs;
    for (int n : meshes) {
        RunConfig cfg;
        cfg.problem = problem;
        cfg.mode = mode;
        cfg.nx = n;
        cfg.cfl = cfl;
        cfg.accuracy_mode = accuracy_mode;
        RunResult<1> r = run_problem<1>(cfg);
        sols.push_back(std::move(r.field));
        dxs.push_back(r.grid.dx);
    }

    // d[i]: L1 distance between mesh i and mesh i-1 (fine restricted down)
    std::vector<std::vector<double>> d(meshes.size());
    for (std::size_t i = 1; i < meshes.size(); ++i) {
        const Field<1> restr = restrict_halved(sols[i], periodic);
        d[i] = l1_diff<1>(restr, sols[i - 1], dxs[i - 1]);
    }

    ConvergenceReport rep;
    rep.method = "runge";
    rep.variables = {"rho", "rho*u", "E"};
    for (std::size_t i = 2; i < meshes.size(); ++i) {
        ConvergenceRow row;
        row.dx = dxs[i];
        row.error.resize(3);
        row.rate.resize(3);
        for (int m = 0; m < 3; ++m)
            runge_estimates(d[i][static_cast<std::size_t>(m)], d[i - 1][static_cast<std::size_t>(m)],
                            row.error[static_cast<std::size_t>(m)], row.rate[static_cast<std::size_t>(m)]);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// Convergence against a known exact solution (2-D): per-mesh primitive-
// variable L1 errors, rates from the second mesh onward.
inline ConvergenceReport exact_convergence(const std::string& problem, SchemeMode mode,
                                           const std::vector<int>& meshes, bool accuracy_mode,
                                           double cfl = 0.4) {
    const ProblemSpec& spec = find_problem(problem);
    if (!spec.has_exact())
        throw std::invalid_argument("problem '" + problem + "' has no exact solution");
    const GasConfig gas{spec.gamma};

    ConvergenceReport rep;
    rep.method = "exact";
    rep.variables = {"rho", "u", "v", "p"};
    std::vector<double> prev;
    for (int n : meshes) {
        RunConfig cfg;
        cfg.problem = problem;
        cfg.mode = mode;
        cfg.nx = n;
        cfg.ny = n;
        cfg.cfl = cfl;
        cfg.accuracy_mode = accuracy_mode;
        RunResult<2> r = run_problem<2>(cfg);
        const double t_end = spec.t_final;
        std::vector<double> err = l1_error_vs_exact(r.field, r.grid, spec.exact2, t_end, gas);

        ConvergenceRow row;
        row.dx = r.grid.dx;
        row.error = err;
        row.rate.assign(4, std::numeric_limits<double>::quiet_NaN());
        if (!prev.empty())
            for (std::size_t m = 0; m < 4; ++m) row.rate[m] = std::log2(prev[m] / err[m]);
        prev = std::move(err);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace adaflow
