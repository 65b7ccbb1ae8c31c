#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaflow/euler.hpp"
#include "adaflow/grid.hpp"

namespace adaflow {

// A benchmark configuration: domain, gas, final time, boundaries, initial
// state, and the adaption thresholds it is normally run with. `nx`/`ny` are
// the full-scale mesh sizes; coarser meshes are picked per run.
struct ProblemSpec {
    std::string name;
    int dim = 1;
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    double gamma = 1.4;
    double t_final = 1.0;
    BcKind bc_x = BcKind::free;
    BcKind bc_y = BcKind::free;
    Prim<2> dirichlet_y_lo{}, dirichlet_y_hi{};  // used when bc_y == dirichlet
    bool gravity = false;
    double c1 = 0.02, c2 = 0.3;  // thresholds for the three-area scheme
    double c1_old = 0.01;        // threshold for the two-area comparison runs
    int nx = 0, ny = 0;
    std::function<Prim<1>(double)> ic1;
    std::function<Prim<2>(double, double)> ic2;
    std::function<Prim<2>(double, double, double)> exact2;  // exact solution, when known

    bool has_exact() const { return static_cast<bool>(exact2); }
};

inline const std::vector<ProblemSpec>& catalog() {
    static const std::vector<ProblemSpec> list = [] {
        std::vector<ProblemSpec> v;

        {
            // smooth acoustic-type wave; the 1-D accuracy benchmark
            ProblemSpec s;
            s.name = "smooth1d";
            s.dim = 1;
            s.x_min = 0.0;
            s.x_max = 10.0;
            s.gamma = 1.4;
            s.t_final = 0.1;
            s.bc_x = BcKind::periodic;
            s.nx = 100;
            const double g = s.gamma;
            s.ic1 = [g](double x) {
                const double u = std::sin(M_PI * x / 5.0 + M_PI / 4.0);
                const double rho =
                    std::pow((g - 1.0) / (2.0 * std::sqrt(g)) * (u + 10.0), 2.0 / (g - 1.0));
                return Prim<1>{rho, u, std::pow(rho, g)};
            };
            v.push_back(std::move(s));
        }
        {
            // Mach-3 shock running into a sinusoidal density field
            ProblemSpec s;
            s.name = "shock_density";
            s.dim = 1;
            s.x_min = -5.0;
            s.x_max = 15.0;
            s.t_final = 5.0;
            s.bc_x = BcKind::free;
            s.c1 = 0.015;
            s.c2 = 0.15;
            s.c1_old = 0.01;
            s.nx = 800;
            s.ic1 = [](double x) {
                if (x < -4.0)
                    return Prim<1>{27.0 / 7.0, 4.0 * std::sqrt(35.0) / 9.0, 31.0 / 3.0};
                return Prim<1>{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
            };
            v.push_back(std::move(s));
        }
        {
            // Mach-1.1 shock into high-frequency density perturbations
            ProblemSpec s;
            s.name = "shock_entropy";
            s.dim = 1;
            s.x_min = -5.0;
            s.x_max = 5.0;
            s.t_final = 5.0;
            s.bc_x = BcKind::free;
            s.c1 = 0.02;
            s.c2 = 0.3;
            s.c1_old = 0.01;
            s.nx = 600;
            s.ic1 = [](double x) {
                if (x < -4.5) return Prim<1>{1.51695, 0.523346, 1.805};
                return Prim<1>{1.0 + 0.1 * std::sin(20.0 * x), 0.0, 1.0};
            };
            v.push_back(std::move(s));
        }
        {
            // interacting strong blast waves between solid walls
            ProblemSpec s;
            s.name = "blast";
            s.dim = 1;
            s.x_min = 0.0;
            s.x_max = 1.0;
            s.t_final = 0.038;
            s.bc_x = BcKind::solid_wall;
            s.c1 = 0.02;
            s.c2 = 0.3;
            s.c1_old = 0.01;
            s.nx = 400;
            s.ic1 = [](double x) {
                if (x < 0.1) return Prim<1>{1.0, 0.0, 1000.0};
                if (x > 0.9) return Prim<1>{1.0, 0.0, 100.0};
                return Prim<1>{1.0, 0.0, 0.01};
            };
            v.push_back(std::move(s));
        }
        {
            // isentropic vortex advected diagonally; the 2-D accuracy benchmark
            ProblemSpec s;
            s.name = "vortex2d";
            s.dim = 2;
            s.x_min = -10.0;
            s.x_max = 10.0;
            s.y_min = -10.0;
            s.y_max = 10.0;
            s.t_final = 0.1;
            s.bc_x = BcKind::periodic;
            s.bc_y = BcKind::periodic;
            s.nx = 200;
            s.ny = 200;
            const double g = s.gamma;
            auto state = [g](double x, double y) {
                const double kappa = 5.0 / (2.0 * M_PI) * std::exp(0.5 * (1.0 - x * x - y * y));
                const double rho =
                    std::pow(1.0 - (g - 1.0) * kappa * kappa / (2.0 * g), 1.0 / (g - 1.0));
                return Prim<2>{rho, 1.0 - kappa * y, 1.0 + kappa * x, std::pow(rho, g)};
            };
            s.ic2 = state;
            s.exact2 = [state](double x, double y, double t) { return state(x - t, y - t); };
            v.push_back(std::move(s));
        }
        {
            ProblemSpec s;
            s.name = "rp3";  // four-quadrant Riemann data, configuration 3
            s.dim = 2;
            s.x_min = 0.0;
            s.x_max = 1.2;
            s.y_min = 0.0;
            s.y_max = 1.2;
            s.t_final = 1.0;
            s.c1 = 0.08;
            s.c2 = 0.2;
            s.c1_old = 0.08;
            s.nx = 1000;
            s.ny = 1000;
            s.ic2 = [](double x, double y) {
                if (x > 1.0 && y > 1.0) return Prim<2>{1.5, 0.0, 0.0, 1.5};
                if (x < 1.0 && y > 1.0) return Prim<2>{0.5323, 1.206, 0.0, 0.3};
                if (x < 1.0 && y < 1.0) return Prim<2>{0.138, 1.206, 1.206, 0.029};
                return Prim<2>{0.5323, 0.0, 1.206, 0.3};
            };
            v.push_back(std::move(s));
        }
        {
            ProblemSpec s;
            s.name = "rp6";  // four-quadrant Riemann data, configuration 6
            s.dim = 2;
            s.x_min = 0.0;
            s.x_max = 1.0;
            s.y_min = 0.0;
            s.y_max = 1.0;
            s.t_final = 1.0;
            s.c1 = 0.06;
            s.c2 = 0.004;
            s.c1_old = 0.1;
            s.nx = 600;
            s.ny = 600;
            s.ic2 = [](double x, double y) {
                if (x > 0.5 && y > 0.5) return Prim<2>{1.0, 0.75, -0.5, 1.0};
                if (x < 0.5 && y > 0.5) return Prim<2>{2.0, 0.75, 0.5, 1.0};
                if (x < 0.5 && y < 0.5) return Prim<2>{1.0, -0.75, 0.5, 1.0};
                return Prim<2>{3.0, -0.75, -0.5, 1.0};
            };
            v.push_back(std::move(s));
        }
        {
            ProblemSpec s;
            s.name = "rp12";  // four-quadrant Riemann data, configuration 12
            s.dim = 2;
            s.x_min = 0.0;
            s.x_max = 0.6;
            s.y_min = 0.0;
            s.y_max = 0.6;
            s.t_final = 0.5;
            s.c1 = 0.03;
            s.c2 = 0.2;
            s.c1_old = 0.03;
            s.nx = 600;
            s.ny = 600;
            s.ic2 = [](double x, double y) {
                if (x > 0.5 && y > 0.5) return Prim<2>{0.5313, 0.0, 0.0, 0.4};
                if (x < 0.5 && y > 0.5) return Prim<2>{1.0, 0.7276, 0.0, 1.0};
                if (x < 0.5 && y < 0.5) return Prim<2>{0.8, 0.0, 0.0, 1.0};
                return Prim<2>{1.0, 0.0, 0.7276, 1.0};
            };
            v.push_back(std::move(s));
        }
        {
            // low-pressure diamond collapsing in a walled box; jet along y = x
            ProblemSpec s;
            s.name = "implosion";
            s.dim = 2;
            s.x_min = 0.0;
            s.x_max = 0.5;
            s.y_min = 0.0;
            s.y_max = 0.5;
            s.t_final = 2.5;
            s.bc_x = BcKind::solid_wall;
            s.bc_y = BcKind::solid_wall;
            s.c1 = 0.05;
            s.c2 = 0.1;
            s.c1_old = 0.05;
            s.nx = 1000;
            s.ny = 1000;
            s.ic2 = [](double x, double y) {
                if (std::fabs(x) + std::fabs(y) < 0.15) return Prim<2>{0.125, 0.0, 0.0, 0.14};
                return Prim<2>{1.0, 0.0, 0.0, 1.0};
            };
            v.push_back(std::move(s));
        }
        {
            // heavy-over-light instability with a gravity source
            ProblemSpec s;
            s.name = "rt";
            s.dim = 2;
            s.x_min = 0.0;
            s.x_max = 0.25;
            s.y_min = 0.0;
            s.y_max = 1.0;
            s.gamma = 5.0 / 3.0;
            s.t_final = 2.95;
            s.bc_x = BcKind::solid_wall;
            s.bc_y = BcKind::dirichlet;
            s.dirichlet_y_lo = Prim<2>{2.0, 0.0, 0.0, 1.0};
            s.dirichlet_y_hi = Prim<2>{1.0, 0.0, 0.0, 2.5};
            s.gravity = true;
            s.c1 = 0.08;
            s.c2 = 0.008;
            s.c1_old = 0.08;
            s.nx = 256;
            s.ny = 1024;
            const double g = s.gamma;
            s.ic2 = [g](double x, double y) {
                // the perturbation velocity uses the local sound speed of the
                // same branch's (rho, p)
                if (y < 0.5) {
                    const double rho = 2.0, p = 2.0 * y + 1.0;
                    const double c = std::sqrt(g * p / rho);
                    return Prim<2>{rho, 0.0, -0.025 * c * std::cos(8.0 * M_PI * x), p};
                }
                const double rho = 1.0, p = y + 1.5;
                const double c = std::sqrt(g * p / rho);
                return Prim<2>{rho, 0.0, -0.025 * c * std::cos(8.0 * M_PI * x), p};
            };
            v.push_back(std::move(s));
        }
        return v;
    }();
    return list;
}

inline const ProblemSpec& find_problem(const std::string& name) {
    for (const ProblemSpec& s : catalog())
        if (s.name == name) return s;
    std::string msg = "unknown problem '" + name + "'; available:";
    for (const ProblemSpec& s : catalog()) msg += " " + s.name;
    throw std::invalid_argument(msg);
}

template <int Dim>
Grid<Dim> make_grid(const ProblemSpec& s, int nx, int ny = 0);

template <>
inline Grid<1> make_grid<1>(const ProblemSpec& s, int nx, int) {
    return Grid<1>(s.x_min, s.x_max, nx > 0 ? nx : s.nx);
}
template <>
inline Grid<2> make_grid<2>(const ProblemSpec& s, int nx, int ny) {
    return Grid<2>(s.x_min, s.x_max, nx > 0 ? nx : s.nx, s.y_min, s.y_max, ny > 0 ? ny : s.ny);
}

template <int Dim>
BoundarySpec<Dim> make_boundary(const ProblemSpec& s, GasConfig gas);

template <>
inline BoundarySpec<1> make_boundary<1>(const ProblemSpec& s, GasConfig) {
    BoundarySpec<1> bc;
    bc.x_lo.kind = bc.x_hi.kind = s.bc_x;
    return bc;
}
template <>
inline BoundarySpec<2> make_boundary<2>(const ProblemSpec& s, GasConfig gas) {
    BoundarySpec<2> bc;
    bc.x_lo.kind = bc.x_hi.kind = s.bc_x;
    bc.y_lo.kind = bc.y_hi.kind = s.bc_y;
    if (s.bc_y == BcKind::dirichlet) {
        bc.y_lo.fixed = to_conserved(s.dirichlet_y_lo, gas);
        bc.y_hi.fixed = to_conserved(s.dirichlet_y_hi, gas);
    }
    return bc;
}

inline Field<1> init_field(const ProblemSpec& s, const Grid<1>& g, GasConfig gas) {
    Field<1> f(g);
    for (int j = 0; j < g.nx; ++j) f.at(j) = to_conserved(s.ic1(g.center(j)), gas);
    return f;
}

inline Field<2> init_field(const ProblemSpec& s, const Grid<2>& g, GasConfig gas) {
    Field<2> f(g);
    for (int k = 0; k < g.ny; ++k)
        for (int j = 0; j < g.nx; ++j)
            f.at(j, k) = to_conserved(s.ic2(g.center_x(j), g.center_y(k)), gas);
    return f;
}

}  // namespace adaflow
