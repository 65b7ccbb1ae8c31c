#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaflow/euler.hpp"
#include "adaflow/grid.hpp"
#include "adaflow/indicator.hpp"

namespace adaflow {

struct SnapshotMeta {
    std::string problem;
    std::string mode;
    double t = 0.0;
    int nx = 0, ny = 1;
    double dx = 0.0, dy = 0.0;
    double gamma = 1.4;
};

namespace detail {

inline std::string fmt_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

// Plain-text snapshot: a metadata header, then one row per interior cell
// with cell-center coordinates, primitives, total energy, and the region
// code (0 smooth / 1 rough / 2 contact). Values are written with 17
// significant digits so a re-read reproduces the field exactly.
inline void write_snapshot(const std::string& path, const SnapshotMeta& meta, const Grid<1>& g,
                           const Field<1>& f, const RegionMap<1>* mask, GasConfig gas) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open snapshot file " + path);
    out << "# problem=" << meta.problem << " mode=" << meta.mode << " t=" << detail::fmt_g17(meta.t)
        << " nx=" << g.nx << " ny=1 dx=" << detail::fmt_g17(g.dx) << " dy=0"
        << " gamma=" << detail::fmt_g17(meta.gamma) << "\n";
    out << "# x rho u p E region\n";
    for (int j = 0; j < g.nx; ++j) {
        const Prim<1> w = to_primitive(f.at(j), gas);
        const int reg = mask ? static_cast<int>(mask->at(j)) : 0;
        out << detail::fmt_g17(g.center(j)) << ' ' << detail::fmt_g17(w.rho) << ' '
            << detail::fmt_g17(w.u) << ' ' << detail::fmt_g17(w.p) << ' '
            << detail::fmt_g17(f.at(j)[2]) << ' ' << reg << "\n";
    }
}

inline void write_snapshot(const std::string& path, const SnapshotMeta& meta, const Grid<2>& g,
                           const Field<2>& f, const RegionMap<2>* mask, GasConfig gas) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open snapshot file " + path);
    out << "# problem=" << meta.problem << " mode=" << meta.mode << " t=" << detail::fmt_g17(meta.t)
        << " nx=" << g.nx << " ny=" << g.ny << " dx=" << detail::fmt_g17(g.dx)
        << " dy=" << detail::fmt_g17(g.dy) << " gamma=" << detail::fmt_g17(meta.gamma) << "\n";
    out << "# x y rho u v p E region\n";
    for (int k = 0; k < g.ny; ++k)
        for (int j = 0; j < g.nx; ++j) {
            const Prim<2> w = to_primitive(f.at(j, k), gas);
            const int reg = mask ? static_cast<int>(mask->at(j, k)) : 0;
            out << detail::fmt_g17(g.center_x(j)) << ' ' << detail::fmt_g17(g.center_y(k)) << ' '
                << detail::fmt_g17(w.rho) << ' ' << detail::fmt_g17(w.u) << ' '
                << detail::fmt_g17(w.v) << ' ' << detail::fmt_g17(w.p) << ' '
                << detail::fmt_g17(f.at(j, k)[3]) << ' ' << reg << "\n";
        }
}

struct SnapshotData {
    SnapshotMeta meta;
    std::vector<double> x, y, rho, u, v, p, E;
    std::vector<int> region;
};

inline SnapshotData read_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot file " + path);
    SnapshotData d;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("snapshot header missing in " + path);
    {
        std::istringstream hs(line);
        std::string tok;
        hs >> tok;  // '#'
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "problem") d.meta.problem = val;
            else if (key == "mode") d.meta.mode = val;
            else if (key == "t") d.meta.t = std::stod(val);
            else if (key == "nx") d.meta.nx = std::stoi(val);
            else if (key == "ny") d.meta.ny = std::stoi(val);
            else if (key == "dx") d.meta.dx = std::stod(val);
            else if (key == "dy") d.meta.dy = std::stod(val);
            else if (key == "gamma") d.meta.gamma = std::stod(val);
        }
    }
    const bool two_d = d.meta.ny > 1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        double x, y = 0, rho, u, v = 0, p, E;
        int reg;
        if (two_d) {
            if (!(ls >> x >> y >> rho >> u >> v >> p >> E >> reg)) break;
        } else {
            if (!(ls >> x >> rho >> u >> p >> E >> reg)) break;
        }
        d.x.push_back(x);
        d.y.push_back(y);
        d.rho.push_back(rho);
        d.u.push_back(u);
        d.v.push_back(v);
        d.p.push_back(p);
        d.E.push_back(E);
        d.region.push_back(reg);
    }
    return d;
}

}  // namespace adaflow
