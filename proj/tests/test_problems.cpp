#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <set>

#include "adaflow/problems.hpp"

using namespace adaflow;

TEST_CASE("catalog holds the full benchmark set") {
    std::set<std::string> names;
    for (const ProblemSpec& s : catalog()) names.insert(s.name);
    const std::set<std::string> expected{"smooth1d", "shock_density", "shock_entropy", "blast",
                                         "vortex2d", "rp3",           "rp6",           "rp12",
                                         "implosion", "rt"};
    CHECK(names == expected);
    CHECK_THROWS_AS(find_problem("sod"), std::invalid_argument);
    try {
        find_problem("sod");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("blast") != std::string::npos);
    }
}

TEST_CASE("initial states match the published configurations") {
    {
        const ProblemSpec& s = find_problem("smooth1d");
        const Prim<1> w = s.ic1(0.0);
        const double u = std::sin(M_PI / 4.0);
        CHECK(w.u == Catch::Approx(u).epsilon(1e-15));
        const double rho = std::pow(0.4 / (2.0 * std::sqrt(1.4)) * (u + 10.0), 5.0);
        CHECK(w.rho == Catch::Approx(rho).epsilon(1e-13));
        CHECK(w.p == Catch::Approx(std::pow(rho, 1.4)).epsilon(1e-13));
    }
    {
        const ProblemSpec& s = find_problem("shock_density");
        const Prim<1> l = s.ic1(-4.5);
        CHECK(l.rho == Catch::Approx(27.0 / 7.0));
        CHECK(l.u == Catch::Approx(4.0 * std::sqrt(35.0) / 9.0));
        CHECK(l.p == Catch::Approx(31.0 / 3.0));
        CHECK(s.ic1(1.0).rho == Catch::Approx(1.0 + 0.2 * std::sin(5.0)));
        CHECK(s.c1 == 0.015);
        CHECK(s.c2 == 0.15);
        CHECK(s.c1_old == 0.01);
    }
    {
        const ProblemSpec& s = find_problem("blast");
        CHECK(s.ic1(0.05).p == 1000.0);
        CHECK(s.ic1(0.5).p == 0.01);
        CHECK(s.ic1(0.5).rho == 1.0);
        CHECK(s.ic1(0.95).p == 100.0);
        CHECK(s.bc_x == BcKind::solid_wall);
        CHECK(s.t_final == 0.038);
    }
    {
        const ProblemSpec& s = find_problem("rp3");
        const Prim<2> q = s.ic2(0.5, 0.5);
        CHECK(q.rho == 0.138);
        CHECK(q.u == 1.206);
        CHECK(q.v == 1.206);
        CHECK(q.p == 0.029);
        CHECK(s.x_max == 1.2);
    }
    {
        const ProblemSpec& s = find_problem("rp6");
        const Prim<2> q = s.ic2(0.75, 0.25);
        CHECK(q.rho == 3.0);
        CHECK(q.u == -0.75);
        CHECK(q.v == -0.5);
        CHECK(s.c2 == 0.004);
    }
    {
        const ProblemSpec& s = find_problem("rp12");
        CHECK(s.ic2(0.55, 0.55).rho == 0.5313);
        CHECK(s.ic2(0.55, 0.55).p == 0.4);
        CHECK(s.ic2(0.25, 0.55).u == 0.7276);
        CHECK(s.x_max == 0.6);
        CHECK(s.t_final == 0.5);
    }
    {
        const ProblemSpec& s = find_problem("implosion");
        CHECK(s.ic2(0.05, 0.05).rho == 0.125);
        CHECK(s.ic2(0.05, 0.05).p == 0.14);
        CHECK(s.ic2(0.3, 0.3).rho == 1.0);
        CHECK(s.bc_x == BcKind::solid_wall);
    }
    {
        const ProblemSpec& s = find_problem("rt");
        CHECK(s.gamma == Catch::Approx(5.0 / 3.0));
        CHECK(s.gravity);
        // pressure is continuous across the interface: 2*0.5+1 = 0.5+1.5
        CHECK(s.ic2(0.1, 0.5 - 1e-12).p == Catch::Approx(s.ic2(0.1, 0.5).p).epsilon(1e-9));
        // perturbation velocity uses the branch sound speed
        const Prim<2> w = s.ic2(0.0, 0.25);
        const double c = std::sqrt(s.gamma * 1.5 / 2.0);
        CHECK(w.v == Catch::Approx(-0.025 * c).epsilon(1e-13));
        CHECK(s.dirichlet_y_hi.p == 2.5);
        CHECK(s.dirichlet_y_lo.rho == 2.0);
    }
}

TEST_CASE("vortex exact solution shifts the initial data") {
    const ProblemSpec& s = find_problem("vortex2d");
    REQUIRE(s.has_exact());
    for (double x : {-3.0, 0.0, 1.5})
        for (double y : {-1.0, 0.5}) {
            const Prim<2> a = s.exact2(x, y, 0.0);
            const Prim<2> b = s.ic2(x, y);
            CHECK(a.rho == b.rho);
            CHECK(a.u == b.u);
            CHECK(a.v == b.v);
            CHECK(a.p == b.p);
            const Prim<2> c = s.exact2(x, y, 0.25);
            const Prim<2> d = s.ic2(x - 0.25, y - 0.25);
            CHECK(c.rho == d.rho);
            CHECK(c.p == d.p);
        }
}

TEST_CASE("every catalog entry yields positive density and pressure") {
    for (const ProblemSpec& s : catalog()) {
        if (s.dim == 1) {
            for (int i = 0; i < 1000; ++i) {
                const double x = s.x_min + (i + 0.5) * (s.x_max - s.x_min) / 1000.0;
                const Prim<1> w = s.ic1(x);
                CHECK(w.rho > 0.0);
                CHECK(w.p > 0.0);
            }
        } else {
            for (int i = 0; i < 32; ++i)
                for (int j = 0; j < 32; ++j) {
                    const double x = s.x_min + (i + 0.5) * (s.x_max - s.x_min) / 32.0;
                    const double y = s.y_min + (j + 0.5) * (s.y_max - s.y_min) / 32.0;
                    const Prim<2> w = s.ic2(x, y);
                    CHECK(w.rho > 0.0);
                    CHECK(w.p > 0.0);
                }
        }
    }
}

TEST_CASE("grids and boundaries derive from the problem") {
    const ProblemSpec& rt = find_problem("rt");
    const GasConfig gas{rt.gamma};
    const Grid<2> g = make_grid<2>(rt, 32, 128);
    CHECK(g.dx == Catch::Approx(0.25 / 32.0));
    CHECK(g.dy == Catch::Approx(1.0 / 128.0));
    const BoundarySpec<2> bc = make_boundary<2>(rt, gas);
    CHECK(bc.x_lo.kind == BcKind::solid_wall);
    CHECK(bc.y_lo.kind == BcKind::dirichlet);
    CHECK(bc.y_lo.fixed == to_conserved(Prim<2>{2.0, 0.0, 0.0, 1.0}, gas));
    CHECK(bc.y_hi.fixed == to_conserved(Prim<2>{1.0, 0.0, 0.0, 2.5}, gas));

    const ProblemSpec& sd = find_problem("shock_density");
    const Grid<1> g1 = make_grid<1>(sd, 0);  // problem default
    CHECK(g1.nx == sd.nx);
}
