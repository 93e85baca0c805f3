#include "activeflux/evolution.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "activeflux/reconstruction.hpp"
#include "activeflux/spherical_means.hpp"

namespace af {

namespace {

struct Contribution {
    std::array<int, 2> offset;  // cell offset relative to the target's owner
    Sector sector;              // directions pointing into that cell
    double ex, ey;              // target offset from the cell center, units of dx/2, dy/2
};

std::vector<Contribution> contributions(TargetClass cls) {
    switch (cls) {
        case TargetClass::Node:
            return {{{0, 0}, Sector(0, 1), -1.0, -1.0},
                    {{-1, 0}, Sector(1, 2), 1.0, -1.0},
                    {{-1, -1}, Sector(2, 3), 1.0, 1.0},
                    {{0, -1}, Sector(3, 4), -1.0, 1.0}};
        case TargetClass::VEdgeMid:
            return {{{0, 0}, Sector(-1, 1), -1.0, 0.0},
                    {{-1, 0}, Sector(1, 3), 1.0, 0.0}};
        case TargetClass::HEdgeMid:
            return {{{0, 0}, Sector(0, 2), 0.0, -1.0},
                    {{0, -1}, Sector(2, 4), 0.0, 1.0}};
    }
    throw std::logic_error("contributions: bad target class");
}

// Index of the basis function that is 1 at the target inside each
// contributing cell (reference location (-ex, -ey) ... the target sits at
// (ex, ey) in that cell's reference frame).
int target_basis_index(double ex, double ey) {
    for (int m = 1; m <= 8; ++m) {
        auto p = boundary_point(m);
        if (p[0] == ex && p[1] == ey) return m;
    }
    throw std::logic_error("target_basis_index: target not a boundary point");
}

// Sector mean of basis function b_m against normal weight n_x^wa n_y^wb,
// seen from the target: data polynomial lives in the contributing cell's
// frame, the mean is taken around the target point.
RadialPoly basis_sector_mean(int m, int wa, int wb, const Contribution& cb,
                             double dx, double dy) {
    const double x0 = cb.ex * 0.5 * dx;
    const double y0 = cb.ey * 0.5 * dy;
    const double sx = 2.0 / dx, sy = 2.0 / dy;
    RadialPoly acc;
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            const Rat b = basis_monomial(m, k, l);
            if (b.is_zero()) continue;
            const double scale =
                b.to_double() * std::pow(sx, k) * std::pow(sy, l);
            acc += sector_mean(k, l, wa, wb, x0, y0, cb.sector) * scale;
        }
    return acc;
}

// -(1/rho) d/dr (r^2 M)|_rho
double pressure_velocity_term(const RadialPoly& mean, double rho) {
    return -ddr(r_shift(mean, 2)).eval(rho) / rho;
}

// Integral term of the velocity update,
//   int_0^rho (1/r) d/dr [ (1/r) d/dr (r^3 W) - r U ] dr,
// where W is the mean against the quadratic normal weight and U the plain
// mean (U absent for the cross-velocity coupling). A single sector is not a
// full circle, so d/dr[...] can carry a spurious constant; it cancels exactly
// across the columns referencing the same shared point value, is dropped here
// per column and re-checked as a group in build_stencil.
struct VelocityIntegral {
    double value;
    double dropped_const;
};

VelocityIntegral velocity_integral(const RadialPoly& w_mean,
                                   const RadialPoly* u_mean, double rho) {
    RadialPoly h = div_r(ddr(r_shift(w_mean, 3)));
    if (u_mean) h = h - r_shift(*u_mean, 1);
    RadialPoly dh = ddr(h);
    const double dropped = dh.c[0];
    dh.c[0] = 0.0;
    return {integrate_0_to_R(div_r(dh)).eval(rho), dropped};
}

}  // namespace

StencilWeights build_stencil(const Grid& g, double rho, TargetClass cls) {
    const double d_min = 0.5 * std::min(g.dx, g.dy);
    if (!(rho > 0.0) || rho > d_min * (1.0 + 1e-12))
        throw CflViolation("build_stencil: radius " + std::to_string(rho) +
                           " exceeds half the cell size");

    StencilWeights s;
    s.cls = cls;
    s.dx = g.dx;
    s.dy = g.dy;
    s.rho = rho;

    const auto cbs = contributions(cls);
    s.n_cells = static_cast<int>(cbs.size());
    // Dropped constants per (out, cell, m, in); columns touching the shared
    // target value must cancel as a group, everything else individually.
    std::array<std::array<std::array<std::array<double, 3>, 9>, 4>, 3> dropped{};

    for (int ci = 0; ci < s.n_cells; ++ci) {
        const auto& cb = cbs[ci];
        s.cell_offsets[ci] = cb.offset;
        for (int m = 1; m <= 9; ++m) {
            const RadialPoly m00 = basis_sector_mean(m, 0, 0, cb, g.dx, g.dy);
            const RadialPoly m10 = basis_sector_mean(m, 1, 0, cb, g.dx, g.dy);
            const RadialPoly m01 = basis_sector_mean(m, 0, 1, cb, g.dx, g.dy);
            const RadialPoly m20 = basis_sector_mean(m, 2, 0, cb, g.dx, g.dy);
            const RadialPoly m11 = basis_sector_mean(m, 1, 1, cb, g.dx, g.dy);
            const RadialPoly m02 = basis_sector_mean(m, 0, 2, cb, g.dx, g.dy);

            // p(t) = d/dr(r M[p0])|_rho - (1/rho) d/dr(r^2 M[v0.n])|_rho
            s.w[kP][ci][m - 1][kP] = ddr(r_shift(m00, 1)).eval(rho);
            s.w[kP][ci][m - 1][kU] = pressure_velocity_term(m10, rho);
            s.w[kP][ci][m - 1][kV] = pressure_velocity_term(m01, rho);

            // v(t) = v0(x) - (1/rho) d/dr(r^2 M[p0 n])|_rho + integral term
            s.w[kU][ci][m - 1][kP] = pressure_velocity_term(m10, rho);
            s.w[kV][ci][m - 1][kP] = pressure_velocity_term(m01, rho);

            auto uu = velocity_integral(m20, &m00, rho);
            auto uv = velocity_integral(m11, nullptr, rho);
            auto vv = velocity_integral(m02, &m00, rho);
            s.w[kU][ci][m - 1][kU] = uu.value;
            s.w[kU][ci][m - 1][kV] = uv.value;
            s.w[kV][ci][m - 1][kU] = uv.value;
            s.w[kV][ci][m - 1][kV] = vv.value;
            dropped[kU][ci][m - 1][kU] = uu.dropped_const;
            dropped[kU][ci][m - 1][kV] = uv.dropped_const;
            dropped[kV][ci][m - 1][kU] = uv.dropped_const;
            dropped[kV][ci][m - 1][kV] = vv.dropped_const;
        }
    }

    // The identity part v0(x) of the velocity update is the reconstruction at
    // the target itself; by the interpolation property that is exactly the
    // shared point value the target carries, whichever adjacent cell evaluates
    // it. Fold it in through the owner-side corner/edge basis function.
    int id_cell = -1;
    for (int ci = 0; ci < s.n_cells; ++ci)
        if ((cls == TargetClass::Node && cbs[ci].offset == std::array<int, 2>{-1, -1}) ||
            (cls == TargetClass::VEdgeMid && cbs[ci].offset == std::array<int, 2>{-1, 0}) ||
            (cls == TargetClass::HEdgeMid && cbs[ci].offset == std::array<int, 2>{0, -1}))
            id_cell = ci;
    const int id_m = target_basis_index(cbs[id_cell].ex, cbs[id_cell].ey);
    s.w[kU][id_cell][id_m - 1][kU] += 1.0;
    s.w[kV][id_cell][id_m - 1][kV] += 1.0;

    // Divisibility audit: summed over the columns that reference one shared
    // value, the dropped constants must vanish; isolated columns must not
    // have dropped anything at all.
    double group_sum[3][3] = {};
    double max_isolated = 0.0;
    for (int ci = 0; ci < s.n_cells; ++ci) {
        const int tm = target_basis_index(cbs[ci].ex, cbs[ci].ey);
        for (int m = 1; m <= 9; ++m)
            for (int out = 0; out < 3; ++out)
                for (int in = 0; in < 3; ++in) {
                    const double d = dropped[out][ci][m - 1][in];
                    if (m == tm)
                        group_sum[out][in] += d;
                    else
                        max_isolated = std::max(max_isolated, std::abs(d));
                }
    }
    double max_group = 0.0;
    for (int out = 0; out < 3; ++out)
        for (int in = 0; in < 3; ++in)
            max_group = std::max(max_group, std::abs(group_sum[out][in]));
    if (max_group > 1e-11 || max_isolated > 1e-11)
        throw std::logic_error("build_stencil: sector means inconsistent across shared values");

    return s;
}

StencilSet build_stencil_set(const Grid& g, double rho) {
    return {build_stencil(g, rho, TargetClass::Node),
            build_stencil(g, rho, TargetClass::VEdgeMid),
            build_stencil(g, rho, TargetClass::HEdgeMid), rho};
}

std::array<double, 3> apply_stencil(const StencilWeights& s,
                                    const double coeffs[4][9][3]) {
    std::array<double, 3> out{};
    for (int ci = 0; ci < s.n_cells; ++ci)
        for (int m = 0; m < 9; ++m)
            for (int in = 0; in < 3; ++in) {
                const double c = coeffs[ci][m][in];
                out[kP] += s.w[kP][ci][m][in] * c;
                out[kU] += s.w[kU][ci][m][in] * c;
                out[kV] += s.w[kV][ci][m][in] * c;
            }
    return out;
}

namespace {

// Gather the nine reconstruction coefficients of cell (i,j) for all variables
// into coeffs[slot], using the precomputed bubble-coefficient planes.
inline void gather_coeffs(const Grid& g, const DofField& f,
                          const std::array<std::vector<double>, 3>& c9, int i,
                          int j, double coeffs[9][3]) {
    const int ip = (i + 1 == g.nx) ? 0 : i + 1;
    const int jp = (j + 1 == g.ny) ? 0 : j + 1;
    const std::size_t s00 = g.idx(i, j), s10 = g.idx(ip, j), s11 = g.idx(ip, jp),
                      s01 = g.idx(i, jp);
    for (int v = 0; v < 3; ++v) {
        coeffs[0][v] = f.node[v][s00];
        coeffs[1][v] = f.eh[v][s00];
        coeffs[2][v] = f.node[v][s10];
        coeffs[3][v] = f.ev[v][s10];
        coeffs[4][v] = f.node[v][s11];
        coeffs[5][v] = f.eh[v][s01];
        coeffs[6][v] = f.node[v][s01];
        coeffs[7][v] = f.ev[v][s00];
        coeffs[8][v] = c9[v][s00];
    }
}

}  // namespace

std::pair<PointSet, PointSet> evolve_points(const Grid& g, const DofField& f,
                                            const StencilSet& sten_half,
                                            const StencilSet& sten_full,
                                            bool parallel) {
    // Bubble coefficients once per cell.
    std::array<std::vector<double>, 3> c9;
    for (int v = 0; v < 3; ++v) c9[v].assign(g.size(), 0.0);
    const long long n = static_cast<long long>(g.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long long s = 0; s < n; ++s) {
        const int i = static_cast<int>(s % g.nx);
        const int j = static_cast<int>(s / g.nx);
        for (int v = 0; v < 3; ++v) {
            CellDofs d = gather_cell(f, g, i, j, v);
            c9[v][s] = compute_c9(d.mean, d.q);
        }
    }

    PointSet half(g), full(g);
    const StencilWeights* stencils[2][3] = {
        {&sten_half.node, &sten_half.ev, &sten_half.eh},
        {&sten_full.node, &sten_full.ev, &sten_full.eh}};
    PointSet* outs[2] = {&half, &full};

#pragma omp parallel for schedule(static) if (parallel)
    for (long long s = 0; s < n; ++s) {
        const int i = static_cast<int>(s % g.nx);
        const int j = static_cast<int>(s / g.nx);
        double coeffs[4][9][3];
        for (int cls = 0; cls < 3; ++cls) {
            // Contributing cells are identical for both radii.
            const StencilWeights& ref = *stencils[0][cls];
            for (int ci = 0; ci < ref.n_cells; ++ci)
                gather_coeffs(g, f, c9, g.wx(i + ref.cell_offsets[ci][0]),
                              g.wy(j + ref.cell_offsets[ci][1]), coeffs[ci]);
            for (int lev = 0; lev < 2; ++lev) {
                const auto val = apply_stencil(*stencils[lev][cls], coeffs);
                auto& ps = *outs[lev];
                auto& lat = (cls == 0) ? ps.node : (cls == 1) ? ps.ev : ps.eh;
                for (int v = 0; v < 3; ++v) lat[v][s] = val[v];
            }
        }
    }
    return {std::move(half), std::move(full)};
}

void dump_stencil_csv(const StencilWeights& s, std::ostream& os) {
    static const char* vn[3] = {"p", "u", "v"};
    os << "out,di,dj,m,in,weight\n";
    char buf[64];
    for (int out = 0; out < 3; ++out)
        for (int ci = 0; ci < s.n_cells; ++ci)
            for (int m = 0; m < 9; ++m)
                for (int in = 0; in < 3; ++in) {
                    std::snprintf(buf, sizeof buf, "%.17g", s.w[out][ci][m][in]);
                    os << vn[out] << ',' << s.cell_offsets[ci][0] << ','
                       << s.cell_offsets[ci][1] << ',' << m + 1 << ',' << vn[in]
                       << ',' << buf << '\n';
                }
}

}  // namespace af
