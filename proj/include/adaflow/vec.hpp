#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace adaflow {

// Small fixed-size vector used for conserved states, fluxes, and
// characteristic variables.
template <int N>
struct Vec {
    std::array<double, N> c{};

    constexpr Vec() = default;

    template <class... Ts>
        requires(sizeof...(Ts) == N)
    constexpr Vec(Ts... xs) : c{static_cast<double>(xs)...} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) c[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) c[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (double& x : c) x *= s;
        return *this;
    }

    bool operator==(const Vec&) const = default;
};

template <int N>
Vec<N> operator+(Vec<N> a, const Vec<N>& b) {
    return a += b;
}
template <int N>
Vec<N> operator-(Vec<N> a, const Vec<N>& b) {
    return a -= b;
}
template <int N>
Vec<N> operator*(double s, Vec<N> a) {
    return a *= s;
}
template <int N>
Vec<N> operator*(Vec<N> a, double s) {
    return a *= s;
}
template <int N>
Vec<N> operator-(Vec<N> a) {
    return a *= -1.0;
}

using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

// Dense N-by-N matrix, row-major; just enough for the characteristic
// transforms and their tests.
template <int N>
struct Mat {
    std::array<double, N * N> m{};

    double& operator()(int r, int c) { return m[static_cast<std::size_t>(r * N + c)]; }
    double operator()(int r, int c) const { return m[static_cast<std::size_t>(r * N + c)]; }

    Vec<N> operator*(const Vec<N>& v) const {
        Vec<N> out;
        for (int r = 0; r < N; ++r) {
            double s = 0.0;
            for (int c = 0; c < N; ++c) s += (*this)(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    Mat operator*(const Mat& o) const {
        Mat out;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                double s = 0.0;
                for (int k = 0; k < N; ++k) s += (*this)(r, k) * o(k, c);
                out(r, c) = s;
            }
        return out;
    }

    static Mat identity() {
        Mat out;
        for (int r = 0; r < N; ++r) out(r, r) = 1.0;
        return out;
    }
};

}  // namespace adaflow
