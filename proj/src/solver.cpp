#include "activeflux/solver.hpp"

#include <algorithm>
#include <cmath>

namespace af {

std::array<double, 3> acoustic_flux(const std::array<double, 3>& q, int axis,
                                    double c) {
    if (axis == 0) return {c * q[kU], c * q[kP], 0.0};
    return {c * q[kV], 0.0, c * q[kP]};
}

std::array<double, 3> edge_flux_simpson(const std::array<double, 3> states[3][3],
                                        int axis, double c) {
    static constexpr double w[3] = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
    std::array<double, 3> out{};
    for (int t = 0; t < 3; ++t)
        for (int x = 0; x < 3; ++x) {
            const auto f = acoustic_flux(states[t][x], axis, c);
            const double ww = w[t] * w[x];
            for (int v = 0; v < 3; ++v) out[v] += ww * f[v];
        }
    return out;
}

DofField initialize(const Grid& g, const InitialData& f) {
    DofField field(g);
    static constexpr double w1[3] = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t s = g.idx(i, j);
            const auto qn = f(g.x_node(i), g.y_node(j));
            const auto qe = f(g.x_node(i), g.y_center(j));
            const auto qh = f(g.x_center(i), g.y_node(j));
            for (int v = 0; v < 3; ++v) {
                field.node[v][s] = qn[v];
                field.ev[v][s] = qe[v];
                field.eh[v][s] = qh[v];
            }
            const double xs[3] = {g.x_node(i), g.x_center(i), g.x_node(i + 1)};
            const double ys[3] = {g.y_node(j), g.y_center(j), g.y_node(j + 1)};
            std::array<double, 3> acc{};
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    const auto q = f(xs[a], ys[b]);
                    for (int v = 0; v < 3; ++v) acc[v] += w1[a] * w1[b] * q[v];
                }
            for (int v = 0; v < 3; ++v) field.avg[v][s] = acc[v];
        }
    return field;
}

TimeStepper::TimeStepper(const Grid& g, double cfl, bool parallel)
    : grid_(g), cfl_(cfl), parallel_(parallel) {
    if (!(cfl > 0.0) || cfl > 1.0)
        throw CflViolation("TimeStepper: CFL number must lie in (0, 1]");
    dt_ = cfl * g.dt_max();
    half_ = build_stencil_set(g, g.c * dt_ * 0.5);
    full_ = build_stencil_set(g, g.c * dt_);
}

void TimeStepper::step(DofField& f) const {
    const Grid& g = grid_;
    const long long n = static_cast<long long>(g.size());

    auto [half, full] = evolve_points(g, f, half_, full_, parallel_);

    // Space-time averaged fluxes, one per vertical and per horizontal edge.
    // fx[v] at (i,j): flux through the left edge of cell (i,j), +x normal;
    // fy[v] at (i,j): flux through the bottom edge of cell (i,j), +y normal.
    std::array<std::vector<double>, 3> fx, fy;
    for (int v = 0; v < 3; ++v) {
        fx[v].assign(g.size(), 0.0);
        fy[v].assign(g.size(), 0.0);
    }

#pragma omp parallel for schedule(static) if (parallel_)
    for (long long s = 0; s < n; ++s) {
        const int i = static_cast<int>(s % g.nx);
        const int j = static_cast<int>(s / g.nx);
        const int jp = (j + 1 == g.ny) ? 0 : j + 1;
        const int ip = (i + 1 == g.nx) ? 0 : i + 1;

        std::array<double, 3> st[3][3];
        // Vertical edge (i,j): endpoints node(i,j) and node(i,j+1).
        const std::size_t lo = g.idx(i, j), hi = g.idx(i, jp);
        for (int v = 0; v < 3; ++v) {
            st[0][0][v] = f.node[v][lo];
            st[0][1][v] = f.ev[v][lo];
            st[0][2][v] = f.node[v][hi];
            st[1][0][v] = half.node[v][lo];
            st[1][1][v] = half.ev[v][lo];
            st[1][2][v] = half.node[v][hi];
            st[2][0][v] = full.node[v][lo];
            st[2][1][v] = full.ev[v][lo];
            st[2][2][v] = full.node[v][hi];
        }
        auto fxv = edge_flux_simpson(st, 0, g.c);
        // Horizontal edge (i,j): endpoints node(i,j) and node(i+1,j).
        const std::size_t ri = g.idx(ip, j);
        for (int v = 0; v < 3; ++v) {
            st[0][0][v] = f.node[v][lo];
            st[0][1][v] = f.eh[v][lo];
            st[0][2][v] = f.node[v][ri];
            st[1][0][v] = half.node[v][lo];
            st[1][1][v] = half.eh[v][lo];
            st[1][2][v] = half.node[v][ri];
            st[2][0][v] = full.node[v][lo];
            st[2][1][v] = full.eh[v][lo];
            st[2][2][v] = full.node[v][ri];
        }
        auto fyv = edge_flux_simpson(st, 1, g.c);
        for (int v = 0; v < 3; ++v) {
            fx[v][s] = fxv[v];
            fy[v][s] = fyv[v];
        }
    }

    // Finite volume update of the averages, then commit the full-step points.
#pragma omp parallel for schedule(static) if (parallel_)
    for (long long s = 0; s < n; ++s) {
        const int i = static_cast<int>(s % g.nx);
        const int j = static_cast<int>(s / g.nx);
        const int ip = (i + 1 == g.nx) ? 0 : i + 1;
        const int jp = (j + 1 == g.ny) ? 0 : j + 1;
        const std::size_t right = g.idx(ip, j), top = g.idx(i, jp);
        for (int v = 0; v < 3; ++v) {
            f.avg[v][s] -= dt_ * ((fx[v][right] - fx[v][s]) / g.dx +
                                  (fy[v][top] - fy[v][s]) / g.dy);
        }
    }
#pragma omp parallel for schedule(static) if (parallel_)
    for (long long s = 0; s < n; ++s) {
        for (int v = 0; v < 3; ++v) {
            f.node[v][s] = full.node[v][s];
            f.ev[v][s] = full.ev[v][s];
            f.eh[v][s] = full.eh[v][s];
        }
    }
    f.time += dt_;
}

int run_to_time(const Grid& g, double cfl, double t_end, DofField& f,
                bool parallel) {
    const double remaining = t_end - f.time;
    if (!(remaining > 0.0)) return 0;
    const double dt_nom = cfl * g.dt_max();
    const int n_steps = std::max(1, static_cast<int>(std::ceil(remaining / dt_nom - 1e-12)));
    const double cfl_eff = (remaining / n_steps) / g.dt_max();
    TimeStepper ts(g, cfl_eff, parallel);
    for (int k = 0; k < n_steps; ++k) ts.step(f);
    return n_steps;
}

}  // namespace af
