#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "adaflow/euler.hpp"

using namespace adaflow;

namespace {

// Flux Jacobian dF/dU by central differences; an oracle independent of the
// eigenvector formulas.
template <int N>
Mat<N> fd_jacobian(const Vec<N>& q, GasConfig gas, int axis, double h) {
    Mat<N> a;
    for (int c = 0; c < N; ++c) {
        Vec<N> qp = q, qm = q;
        qp[c] += h;
        qm[c] -= h;
        const Vec<N> fp = physical_flux(qp, gas, axis);
        const Vec<N> fm = physical_flux(qm, gas, axis);
        for (int r = 0; r < N; ++r) a(r, c) = (fp[r] - fm[r]) / (2.0 * h);
    }
    return a;
}

template <int N>
double max_offdiag(const Mat<N>& m) {
    double v = 0.0;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (r != c) v = std::max(v, std::fabs(m(r, c)));
    return v;
}

std::mt19937_64 rng(20240817u);

Prim<1> random_prim1() {
    std::uniform_real_distribution<double> d(0.5, 2.0), du(-1.0, 1.0);
    return {d(rng), du(rng), d(rng)};
}

Prim<2> random_prim2() {
    std::uniform_real_distribution<double> d(0.5, 2.0), du(-1.0, 1.0);
    return {d(rng), du(rng), du(rng), d(rng)};
}

}  // namespace

TEST_CASE("eos pressure on hand-checked states") {
    const GasConfig gas;
    CHECK(pressure(Vec3{1.0, 0.0, 2.5}, gas) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(pressure(Vec3{1.0, 2.0, 4.5}, gas) == Catch::Approx(1.0).epsilon(1e-14));
    // zero internal energy
    CHECK(pressure(Vec3{2.0, 3.0, 0.5 * 3.0 * 3.0 / 2.0}, gas) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("eos round-trip on primitives") {
    const GasConfig gas;
    for (int i = 0; i < 200; ++i) {
        const Prim<1> w = random_prim1();
        const double p = pressure(to_conserved(w, gas), gas);
        CHECK(p == Catch::Approx(w.p).epsilon(1e-14));
        const Prim<2> w2 = random_prim2();
        const double p2 = pressure(to_conserved(w2, gas), gas);
        CHECK(p2 == Catch::Approx(w2.p).epsilon(1e-14));
    }
}

TEST_CASE("physical flux componentwise against scalar evaluation") {
    const GasConfig gas;
    {
        const Vec3 f = flux_x(to_conserved(Prim<1>{1.0, 0.0, 1.0}, gas), gas);
        CHECK(f[0] == Catch::Approx(0.0).margin(1e-15));
        CHECK(f[1] == Catch::Approx(1.0));
        CHECK(f[2] == Catch::Approx(0.0).margin(1e-15));
    }
    {
        // E = 2.5 + 0.5*1*4 = 4.5 -> F = (2, 5, 11)
        const Vec3 f = flux_x(to_conserved(Prim<1>{1.0, 2.0, 1.0}, gas), gas);
        CHECK(f[0] == Catch::Approx(2.0));
        CHECK(f[1] == Catch::Approx(5.0));
        CHECK(f[2] == Catch::Approx(11.0));
    }
    {
        const Vec4 q = to_conserved(Prim<2>{1.0, 0.0, 0.0, 1.0}, gas);
        const Vec4 fx = flux_x(q, gas), fy = flux_y(q, gas);
        CHECK(fx[0] == 0.0);
        CHECK(fx[1] == Catch::Approx(1.0));
        CHECK(fx[2] == 0.0);
        CHECK(fx[3] == 0.0);
        CHECK(fy[0] == 0.0);
        CHECK(fy[1] == 0.0);
        CHECK(fy[2] == Catch::Approx(1.0));
        CHECK(fy[3] == 0.0);
    }
    for (int i = 0; i < 50; ++i) {
        const Prim<2> w = random_prim2();
        const Vec4 q = to_conserved(w, gas);
        const Vec4 fx = flux_x(q, gas);
        const double E = q[3];
        CHECK(fx[0] == Catch::Approx(w.rho * w.u).margin(1e-14));
        CHECK(fx[1] == Catch::Approx(w.rho * w.u * w.u + w.p).epsilon(1e-13));
        CHECK(fx[2] == Catch::Approx(w.rho * w.u * w.v).margin(1e-13));
        CHECK(fx[3] == Catch::Approx(w.u * (E + w.p)).epsilon(1e-13).margin(1e-13));
    }
}

TEST_CASE("interface speeds") {
    const GasConfig gas;
    const Vec3 q = to_conserved(Prim<1>{1.0, 0.0, 1.0}, gas);
    const LocalSpeeds s = interface_speeds(q, q, gas, 1);
    CHECK(s.plus == Catch::Approx(std::sqrt(1.4)).epsilon(1e-12));
    CHECK(s.minus == Catch::Approx(-std::sqrt(1.4)).epsilon(1e-12));

    // supersonic clamp: u = 3, c = 1 (p = rho/gamma)
    const Vec3 qs = to_conserved(Prim<1>{1.4, 3.0, 1.0}, gas);
    const LocalSpeeds ss = interface_speeds(qs, qs, gas, 1);
    CHECK(ss.plus == Catch::Approx(4.0).epsilon(1e-12));
    CHECK(ss.minus == 0.0);

    SECTION("mirror symmetry swaps and negates the speeds") {
        for (int i = 0; i < 100; ++i) {
            Prim<1> a = random_prim1(), b = random_prim1();
            const LocalSpeeds s1 = interface_speeds(to_conserved(a, gas), to_conserved(b, gas), gas, 1);
            Prim<1> am{a.rho, -a.u, a.p}, bm{b.rho, -b.u, b.p};
            const LocalSpeeds s2 = interface_speeds(to_conserved(bm, gas), to_conserved(am, gas), gas, 1);
            CHECK(s2.plus == Catch::Approx(-s1.minus).margin(1e-14));
            CHECK(s2.minus == Catch::Approx(-s1.plus).margin(1e-14));
        }
    }

    SECTION("invalid side state is rejected") {
        const Vec3 bad{1.0, 0.0, -1.0};  // negative pressure
        CHECK_THROWS_AS(interface_speeds(q, bad, gas, 1), InvalidState);
    }

    SECTION("ordering a_minus <= 0 <= a_plus always holds") {
        for (int i = 0; i < 200; ++i) {
            const LocalSpeeds s3 = interface_speeds(to_conserved(random_prim1(), gas),
                                                    to_conserved(random_prim1(), gas), gas, 1);
            CHECK(s3.minus <= 0.0);
            CHECK(s3.plus >= 0.0);
        }
    }
}

TEST_CASE("characteristic basis diagonalizes the flux Jacobian") {
    const GasConfig gas;

    SECTION("1-D reference state, finite-difference oracle") {
        const Vec3 mean{1.0, 0.5, 2.0};
        const CharBasis<3> b = char_basis(mean, gas);
        const Mat<3> a = fd_jacobian(mean, gas, 1, 1e-6);
        const Mat<3> d = b.Rinv * a * b.R;
        // the 1e-6 step leaves ~1e-10 finite-difference noise in each entry
        CHECK(max_offdiag(d) < 5e-9);
        // eigenvalues come out as u-c, u, u+c on the diagonal
        const double u = 0.5, c = std::sqrt(1.4 * pressure(mean, gas) / 1.0);
        CHECK(d(0, 0) == Catch::Approx(u - c).epsilon(1e-7));
        CHECK(d(1, 1) == Catch::Approx(u).epsilon(1e-6));
        CHECK(d(2, 2) == Catch::Approx(u + c).epsilon(1e-7));
    }

    SECTION("R * Rinv = I for random valid states") {
        for (int i = 0; i < 100; ++i) {
            const Vec3 q = to_conserved(random_prim1(), gas);
            const CharBasis<3> b = char_basis(q, gas);
            const Mat<3> prod = b.R * b.Rinv;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    CHECK(prod(r, c) == Catch::Approx(r == c ? 1.0 : 0.0).margin(1e-13));

            const Vec4 q2 = to_conserved(random_prim2(), gas);
            for (int axis : {1, 2}) {
                const CharBasis<4> b2 = char_basis(q2, gas, axis);
                const Mat<4> prod2 = b2.R * b2.Rinv;
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        CHECK(prod2(r, c) == Catch::Approx(r == c ? 1.0 : 0.0).margin(1e-13));
            }
        }
    }

    SECTION("2-D bases diagonalize both directional Jacobians") {
        for (int i = 0; i < 20; ++i) {
            const Vec4 q = to_conserved(random_prim2(), gas);
            for (int axis : {1, 2}) {
                const CharBasis<4> b = char_basis(q, gas, axis);
                const Mat<4> a = fd_jacobian(q, gas, axis, 1e-6);
                CHECK(max_offdiag(b.Rinv * a * b.R) < 2e-8);
            }
        }
    }

    SECTION("y basis is the x basis under the coordinate swap when u = v") {
        const Prim<2> w{1.3, 0.4, 0.4, 1.7};
        const Vec4 q = to_conserved(w, gas);
        const CharBasis<4> bx = char_basis(q, gas, 1);
        const CharBasis<4> by = char_basis(q, gas, 2);
        // swapping the momentum rows of the y basis must reproduce the x basis
        auto swapped = [](const Mat<4>& m, bool rows) {
            Mat<4> out = m;
            for (int i = 0; i < 4; ++i) {
                if (rows) std::swap(out(1, i), out(2, i));
                else std::swap(out(i, 1), out(i, 2));
            }
            return out;
        };
        const Mat<4> ry = swapped(by.R, true);
        const Mat<4> ly = swapped(by.Rinv, false);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(ry(r, c) == Catch::Approx(bx.R(r, c)).margin(1e-13));
                CHECK(ly(r, c) == Catch::Approx(bx.Rinv(r, c)).margin(1e-13));
            }
    }

    SECTION("non-positive mean state is rejected") {
        CHECK_THROWS_AS(char_basis(Vec3{1.0, 0.0, -1.0}, gas), InvalidState);
        CHECK_THROWS_AS(char_basis(Vec3{-1.0, 0.0, 2.0}, gas), InvalidState);
    }
}

TEST_CASE("gravity source column") {
    CHECK(gravity_source(Vec4{2.0, 0.0, 0.0, 5.0}) == Vec4{0.0, 0.0, 2.0, 0.0});
    CHECK(gravity_source(Vec4{1.0, 0.0, -0.5, 3.0}) == Vec4{0.0, 0.0, 1.0, -0.5});
    // momentum-free column still carries rho
    CHECK(gravity_source(Vec4{3.0, 1.0, 0.0, 9.0}) == Vec4{0.0, 0.0, 3.0, 0.0});
}
