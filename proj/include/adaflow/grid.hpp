#pragma once

#include <stdexcept>
#include <vector>

#include "adaflow/vec.hpp"

namespace adaflow {

// One ghost layout everywhere: the fifth-order interface flux at j+1/2
// reads cells j-2..j+3, so three layers cover every interior interface.
inline constexpr int kGhost = 3;

template <int Dim>
struct Grid;

template <>
struct Grid<1> {
    double x_min = 0.0;
    double x_max = 1.0;
    int nx = 1;
    double dx = 1.0;

    Grid() = default;
    Grid(double a, double b, int n) : x_min(a), x_max(b), nx(n), dx((b - a) / n) {
        if (n <= 0 || !(dx > 0.0)) throw std::invalid_argument("grid: need x_max > x_min and nx > 0");
    }
    double center(int j) const { return x_min + (j + 0.5) * dx; }
};

template <>
struct Grid<2> {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int nx = 1, ny = 1;
    double dx = 1.0, dy = 1.0;

    Grid() = default;
    Grid(double ax, double bx, int n, double ay, double by, int m)
        : x_min(ax), x_max(bx), y_min(ay), y_max(by), nx(n), ny(m), dx((bx - ax) / n), dy((by - ay) / m) {
        if (n <= 0 || m <= 0 || !(dx > 0.0) || !(dy > 0.0))
            throw std::invalid_argument("grid: need positive extents and cell counts");
    }
    double center_x(int j) const { return x_min + (j + 0.5) * dx; }
    double center_y(int k) const { return y_min + (k + 0.5) * dy; }
};

inline long cell_count(const Grid<1>& g) { return g.nx; }
inline long cell_count(const Grid<2>& g) { return static_cast<long>(g.nx) * g.ny; }

// Ghost-padded cell storage. Interior indices run 0..nx-1 (and 0..ny-1);
// ghosts extend kGhost cells past either end.
template <int Dim, class T>
class GridArray {
  public:
    GridArray() = default;

    explicit GridArray(const Grid<Dim>& g, T init = T{}) {
        nx_ = g.nx;
        if constexpr (Dim == 2) ny_ = g.ny;
        sx_ = nx_ + 2 * kGhost;
        sy_ = ny_ + 2 * kGhost;
        v_.assign(static_cast<std::size_t>(sx_) * (Dim == 2 ? sy_ : 1), init);
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    T& at(int j)
        requires(Dim == 1)
    {
        return v_[static_cast<std::size_t>(j + kGhost)];
    }
    const T& at(int j) const
        requires(Dim == 1)
    {
        return v_[static_cast<std::size_t>(j + kGhost)];
    }

    T& at(int j, int k)
        requires(Dim == 2)
    {
        return v_[static_cast<std::size_t>(k + kGhost) * sx_ + (j + kGhost)];
    }
    const T& at(int j, int k) const
        requires(Dim == 2)
    {
        return v_[static_cast<std::size_t>(k + kGhost) * sx_ + (j + kGhost)];
    }

    const std::vector<T>& raw() const { return v_; }
    bool operator==(const GridArray&) const = default;

  private:
    int nx_ = 0, ny_ = 1;
    int sx_ = 0, sy_ = 1;
    std::vector<T> v_;
};

template <int Dim>
using Field = GridArray<Dim, Vec<Dim + 2>>;

enum class BcKind { free, periodic, solid_wall, dirichlet };

template <int Dim>
struct BcSide {
    BcKind kind = BcKind::free;
    Vec<Dim + 2> fixed{};  // conserved state written into dirichlet ghosts
};

template <int Dim>
struct BoundarySpec;

template <>
struct BoundarySpec<1> {
    BcSide<1> x_lo, x_hi;

    void validate() const {
        if ((x_lo.kind == BcKind::periodic) != (x_hi.kind == BcKind::periodic))
            throw std::invalid_argument("boundary: periodic must be set on both x sides");
    }
    bool periodic_x() const { return x_lo.kind == BcKind::periodic; }
};

template <>
struct BoundarySpec<2> {
    BcSide<2> x_lo, x_hi, y_lo, y_hi;

    void validate() const {
        if ((x_lo.kind == BcKind::periodic) != (x_hi.kind == BcKind::periodic))
            throw std::invalid_argument("boundary: periodic must be set on both x sides");
        if ((y_lo.kind == BcKind::periodic) != (y_hi.kind == BcKind::periodic))
            throw std::invalid_argument("boundary: periodic must be set on both y sides");
    }
    bool periodic_x() const { return x_lo.kind == BcKind::periodic; }
    bool periodic_y() const { return y_lo.kind == BcKind::periodic; }
};

namespace detail {

// One padded line of cells. get/set take the interior index along the line;
// `mom` is the momentum slot reflected by solid walls.
template <class Get, class Set>
void fill_line(int n, const BcKind lo_kind, const BcKind hi_kind, Get&& get, Set&& set, int mom,
               const auto& lo_fixed, const auto& hi_fixed) {
    for (int g = 0; g < kGhost; ++g) {
        switch (lo_kind) {
            case BcKind::free: set(-1 - g, get(0)); break;
            case BcKind::periodic: set(-1 - g, get(n - 1 - g)); break;
            case BcKind::solid_wall: {
                auto q = get(g);
                q[mom] = -q[mom];
                set(-1 - g, q);
                break;
            }
            case BcKind::dirichlet: set(-1 - g, lo_fixed); break;
        }
        switch (hi_kind) {
            case BcKind::free: set(n + g, get(n - 1)); break;
            case BcKind::periodic: set(n + g, get(g)); break;
            case BcKind::solid_wall: {
                auto q = get(n - 1 - g);
                q[mom] = -q[mom];
                set(n + g, q);
                break;
            }
            case BcKind::dirichlet: set(n + g, hi_fixed); break;
        }
    }
}

}  // namespace detail

inline void fill_ghosts(Field<1>& f, const Grid<1>& g, const BoundarySpec<1>& bc) {
    bc.validate();
    detail::fill_line(
        g.nx, bc.x_lo.kind, bc.x_hi.kind, [&](int j) { return f.at(j); },
        [&](int j, const Vec3& q) { f.at(j) = q; }, 1, bc.x_lo.fixed, bc.x_hi.fixed);
}

// x ghosts come from the interior rows; the y pass then covers every column,
// ghost columns included, so corners end up doubly transformed.
inline void fill_ghosts(Field<2>& f, const Grid<2>& g, const BoundarySpec<2>& bc) {
    bc.validate();
    for (int k = 0; k < g.ny; ++k)
        detail::fill_line(
            g.nx, bc.x_lo.kind, bc.x_hi.kind, [&](int j) { return f.at(j, k); },
            [&](int j, const Vec4& q) { f.at(j, k) = q; }, 1, bc.x_lo.fixed, bc.x_hi.fixed);
    for (int j = -kGhost; j < g.nx + kGhost; ++j)
        detail::fill_line(
            g.ny, bc.y_lo.kind, bc.y_hi.kind, [&](int k) { return f.at(j, k); },
            [&](int k, const Vec4& q) { f.at(j, k) = q; }, 2, bc.y_lo.fixed, bc.y_hi.fixed);
}

}  // namespace adaflow
