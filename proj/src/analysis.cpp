#include "activeflux/analysis.hpp"

#include <cmath>

#include "activeflux/reconstruction.hpp"

namespace af {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex cpow_int(Complex t, int e) {
    Complex r(1.0, 0.0);
    for (int i = 0; i < std::abs(e); ++i) r *= t;
    return e >= 0 ? r : Complex(1.0, 0.0) / r;
}

struct SymbolState {
    // (p,u,v) triples per block
    std::array<Complex, 3> avg, eh, ev, node;
};

SymbolState unpack(const Vector12& q) {
    SymbolState s;
    for (int v = 0; v < 3; ++v) {
        s.avg[v] = q[kAvgP + v];
        s.eh[v] = q[kEhP + v];
        s.ev[v] = q[kEvP + v];
        s.node[v] = q[kNP + v];
    }
    return s;
}

// Reconstruction coefficients of the reference cell in Fourier space.
void symbol_coeffs(const SymbolState& s, Complex tx, Complex ty,
                   std::array<std::array<Complex, 3>, 9>& c) {
    const Complex ix = Complex(1.0, 0.0) / tx, iy = Complex(1.0, 0.0) / ty;
    for (int v = 0; v < 3; ++v) {
        c[0][v] = s.node[v] * ix * iy;
        c[1][v] = s.eh[v] * iy;
        c[2][v] = s.node[v] * iy;
        c[3][v] = s.ev[v];
        c[4][v] = s.node[v];
        c[5][v] = s.eh[v];
        c[6][v] = s.node[v] * ix;
        c[7][v] = s.ev[v] * ix;
        const Complex alt = c[0][v] - 4.0 * c[1][v] + c[2][v] - 4.0 * c[3][v] +
                            c[4][v] - 4.0 * c[5][v] + c[6][v] - 4.0 * c[7][v];
        c[8][v] = (9.0 / 16.0) * (4.0 * s.avg[v] + alt / 3.0);
    }
}

// Evolved point value of one target class; base is the owner cell of the
// target that realizes this lattice's reference entry.
std::array<Complex, 3> symbol_evolve(const StencilWeights& st,
                                     const std::array<int, 2>& base, Complex tx,
                                     Complex ty,
                                     const std::array<std::array<Complex, 3>, 9>& c) {
    std::array<Complex, 3> out{};
    for (int ci = 0; ci < st.n_cells; ++ci) {
        const Complex phase = cpow_int(tx, base[0] + st.cell_offsets[ci][0]) *
                              cpow_int(ty, base[1] + st.cell_offsets[ci][1]);
        for (int outv = 0; outv < 3; ++outv) {
            Complex acc(0.0, 0.0);
            for (int m = 0; m < 9; ++m)
                for (int in = 0; in < 3; ++in)
                    acc += st.w[outv][ci][m][in] * c[m][in];
            out[outv] += phase * acc;
        }
    }
    return out;
}

std::array<Complex, 3> acoustic_flux_c(const std::array<Complex, 3>& q, int axis,
                                       double c) {
    if (axis == 0) return {c * q[kU], c * q[kP], Complex(0.0)};
    return {c * q[kV], Complex(0.0), c * q[kP]};
}

}  // namespace

Vector12 symbol_step(const Grid& g, const StencilSet& half,
                     const StencilSet& full, double dt, Complex tx, Complex ty,
                     const Vector12& q) {
    const SymbolState s = unpack(q);
    std::array<std::array<Complex, 3>, 9> c;
    symbol_coeffs(s, tx, ty, c);

    const std::array<int, 2> base_n{1, 1}, base_ev{1, 0}, base_eh{0, 1};
    const auto n_half = symbol_evolve(half.node, base_n, tx, ty, c);
    const auto n_full = symbol_evolve(full.node, base_n, tx, ty, c);
    const auto ev_half = symbol_evolve(half.ev, base_ev, tx, ty, c);
    const auto ev_full = symbol_evolve(full.ev, base_ev, tx, ty, c);
    const auto eh_half = symbol_evolve(half.eh, base_eh, tx, ty, c);
    const auto eh_full = symbol_evolve(full.eh, base_eh, tx, ty, c);

    const Complex ix = Complex(1.0, 0.0) / tx, iy = Complex(1.0, 0.0) / ty;
    static constexpr double w[3] = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};

    // Vertical-edge flux: endpoints are the nodes below (phase 1/ty) and at
    // the reference entry of the node lattice, midpoint the reference
    // vertical-edge entry.
    std::array<Complex, 3> fx{}, fy{};
    const std::array<const std::array<Complex, 3>*, 3> nx_lv = {&s.node, &n_half, &n_full};
    const std::array<const std::array<Complex, 3>*, 3> ev_lv = {&s.ev, &ev_half, &ev_full};
    const std::array<const std::array<Complex, 3>*, 3> eh_lv = {&s.eh, &eh_half, &eh_full};
    for (int t = 0; t < 3; ++t) {
        std::array<Complex, 3> L, M, R;
        for (int v = 0; v < 3; ++v) {
            L[v] = (*nx_lv[t])[v] * iy;
            M[v] = (*ev_lv[t])[v];
            R[v] = (*nx_lv[t])[v];
        }
        const auto fL = acoustic_flux_c(L, 0, g.c), fM = acoustic_flux_c(M, 0, g.c),
                   fR = acoustic_flux_c(R, 0, g.c);
        for (int v = 0; v < 3; ++v)
            fx[v] += w[t] * (w[0] * fL[v] + w[1] * fM[v] + w[2] * fR[v]);
    }
    // Horizontal-edge flux: endpoints left node (phase 1/tx) and reference.
    for (int t = 0; t < 3; ++t) {
        std::array<Complex, 3> L, M, R;
        for (int v = 0; v < 3; ++v) {
            L[v] = (*nx_lv[t])[v] * ix;
            M[v] = (*eh_lv[t])[v];
            R[v] = (*nx_lv[t])[v];
        }
        const auto fL = acoustic_flux_c(L, 1, g.c), fM = acoustic_flux_c(M, 1, g.c),
                   fR = acoustic_flux_c(R, 1, g.c);
        for (int v = 0; v < 3; ++v)
            fy[v] += w[t] * (w[0] * fL[v] + w[1] * fM[v] + w[2] * fR[v]);
    }

    Vector12 out;
    for (int v = 0; v < 3; ++v) {
        out[kAvgP + v] = s.avg[v] - dt * ((1.0 - ix) * fx[v] / g.dx +
                                          (1.0 - iy) * fy[v] / g.dy);
        out[kEhP + v] = eh_full[v];
        out[kEvP + v] = ev_full[v];
        out[kNP + v] = n_full[v];
    }
    return out;
}

SymbolMatrix assemble_symbol(const TimeStepper& ts, double kx, double ky) {
    const Grid& g = ts.grid();
    SymbolMatrix sm;
    sm.kx = kx;
    sm.ky = ky;
    sm.dt = ts.dt();
    sm.dx = g.dx;
    sm.dy = g.dy;
    sm.c = g.c;
    sm.tx = std::polar(1.0, g.dx * kx);
    sm.ty = std::polar(1.0, g.dy * ky);
    for (int col = 0; col < 12; ++col) {
        Vector12 e = Vector12::Zero();
        e[col] = Complex(1.0, 0.0);
        sm.A.col(col) = symbol_step(g, ts.stencils_half(), ts.stencils_full(),
                                    ts.dt(), sm.tx, sm.ty, e);
    }
    return sm;
}

SymbolMatrix assemble_symbol(const Grid& g, double dt, double kx, double ky) {
    SymbolMatrix sm;
    sm.kx = kx;
    sm.ky = ky;
    sm.dt = dt;
    sm.dx = g.dx;
    sm.dy = g.dy;
    sm.c = g.c;
    sm.tx = std::polar(1.0, g.dx * kx);
    sm.ty = std::polar(1.0, g.dy * ky);
    const StencilSet half = build_stencil_set(g, g.c * dt * 0.5);
    const StencilSet full = build_stencil_set(g, g.c * dt);
    for (int col = 0; col < 12; ++col) {
        Vector12 e = Vector12::Zero();
        e[col] = Complex(1.0, 0.0);
        sm.A.col(col) = symbol_step(g, half, full, dt, sm.tx, sm.ty, e);
    }
    return sm;
}

Vector12 stationary_mode(Complex tx, Complex ty, double dx, double dy) {
    const Complex one(1.0, 0.0);
    Vector12 q = Vector12::Zero();
    const Complex px4 = (one + 4.0 * tx + tx * tx) / tx;
    const Complex py4 = (one + 4.0 * ty + ty * ty) / ty;
    const Complex px6 = (one + 6.0 * tx + tx * tx) / tx;
    const Complex py6 = (one + 6.0 * ty + ty * ty) / ty;
    const Complex dxm = (tx - one) * (tx + one) / (dx * tx);
    const Complex dym = (ty - one) * (ty + one) / (dy * ty);

    q[kAvgU] = -(2.0 / 3.0) * px4 * dym;
    q[kAvgV] = (2.0 / 3.0) * py4 * dxm;
    q[kEhU] = -px6 * (ty - one) / dy;
    q[kEhV] = 2.0 * dxm * (ty + one);
    q[kEvU] = -2.0 * (tx + one) * dym;
    q[kEvV] = ((tx - one) / dx) * py6;
    q[kNU] = -4.0 * (tx + one) * (ty - one) / dy;
    q[kNV] = 4.0 * ((tx - one) / dx) * (ty + one);
    return q;
}

DofField synthesize_mode(const Grid& g, int mx, int my) {
    mx = ((mx % g.nx) + g.nx) % g.nx;
    my = ((my % g.ny) + g.ny) % g.ny;
    if (mx == 0 && my == 0)
        throw std::invalid_argument("synthesize_mode: (0,0) is the degenerate constant mode");

    const Complex tx = std::polar(1.0, kTwoPi * mx / g.nx);
    const Complex ty = std::polar(1.0, kTwoPi * my / g.ny);
    Vector12 q = stationary_mode(tx, ty, g.dx, g.dy);
    double amp = 0.0;
    for (int k = 0; k < 12; ++k) amp = std::max(amp, std::abs(q[k]));
    q /= amp;

    // Exactly periodic phases: reduce the integer mode index first.
    auto phase = [&](int ii, int jj) {
        const int a = ((mx * ii) % g.nx + g.nx) % g.nx;
        const int b = ((my * jj) % g.ny + g.ny) % g.ny;
        return std::polar(1.0, kTwoPi * (static_cast<double>(a) / g.nx) +
                                   kTwoPi * (static_cast<double>(b) / g.ny));
    };

    DofField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t s = g.idx(i, j);
            const Complex pc = phase(i, j);          // cell lattice
            const Complex pn = phase(i - 1, j - 1);  // node lattice shift
            const Complex pe = phase(i - 1, j);      // vertical edges
            const Complex ph = phase(i, j - 1);      // horizontal edges
            for (int v = 0; v < 3; ++v) {
                f.avg[v][s] = (q[kAvgP + v] * pc).real();
                f.node[v][s] = (q[kNP + v] * pn).real();
                f.ev[v][s] = (q[kEvP + v] * pe).real();
                f.eh[v][s] = (q[kEhP + v] * ph).real();
            }
        }
    return f;
}

int kernel_dimension(const Matrix12& A, double tol) {
    Eigen::JacobiSVD<Matrix12> svd(A - Matrix12::Identity());
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    int dim = 0;
    for (int k = 0; k < 12; ++k)
        if (sv(k) <= tol * smax) ++dim;
    return dim;
}

double spectral_radius(const Matrix12& A) {
    Eigen::ComplexEigenSolver<Matrix12> es(A, false);
    double r = 0.0;
    for (int k = 0; k < 12; ++k) r = std::max(r, std::abs(es.eigenvalues()(k)));
    return r;
}

std::array<double, 2> stationarity_singular_values(const Matrix12& A) {
    Eigen::JacobiSVD<Matrix12> svd(A - Matrix12::Identity());
    const auto& sv = svd.singularValues();
    return {sv(11), sv(0)};
}

double DivergenceResiduals::max_abs() const {
    double m = 0.0;
    for (const auto* v : {&node, &avg, &edge6, &edge_pair})
        for (double x : *v) m = std::max(m, std::abs(x));
    return m;
}

DivergenceResiduals discrete_divergences(const Grid& g, const DofField& f) {
    DivergenceResiduals r;
    r.node.assign(g.size(), 0.0);
    r.avg.assign(g.size(), 0.0);
    r.edge6.assign(g.size(), 0.0);
    r.edge_pair.assign(g.size(), 0.0);
    const auto& uN = f.node[kU];
    const auto& vN = f.node[kV];
    const auto& uA = f.avg[kU];
    const auto& vA = f.avg[kV];
    const auto& uEH = f.eh[kU];
    const auto& vEH = f.eh[kV];
    const auto& uEV = f.ev[kU];
    const auto& vEV = f.ev[kV];

    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int im = g.wx(i - 1), ip = g.wx(i + 1), ipp = g.wx(i + 2);
            const int jm = g.wy(j - 1), jp = g.wy(j + 1), jpp = g.wy(j + 2);
            const std::size_t s = g.idx(i, j);

            r.node[s] = (uN[g.idx(ip, jp)] - uN[g.idx(i, jp)] + uN[g.idx(ip, j)] -
                         uN[s]) /
                            g.dx +
                        (vN[g.idx(ip, jp)] + vN[g.idx(i, jp)] - vN[g.idx(ip, j)] -
                         vN[s]) /
                            g.dy;

            double du = 0.0, dv = 0.0;
            const int js[3] = {jm, j, jp};
            const int is[3] = {im, i, ip};
            const double w4[3] = {1.0, 4.0, 1.0};
            for (int k = 0; k < 3; ++k) {
                du += w4[k] * (uA[g.idx(ip, js[k])] - uA[g.idx(im, js[k])]);
                dv += w4[k] * (vA[g.idx(is[k], jp)] - vA[g.idx(is[k], jm)]);
            }
            r.avg[s] = du / g.dx + dv / g.dy;

            // The mixed relations pair the bottom-edge lattice with the
            // left-edge lattice; under this ownership convention the (1,6,1)
            // window sits at j..j+2 for the former and i..i+2 for the latter.
            double du6 = 0.0, dv6 = 0.0;
            const double w6[3] = {1.0, 6.0, 1.0};
            const int js6[3] = {j, jp, jpp};
            const int is6[3] = {i, ip, ipp};
            for (int k = 0; k < 3; ++k) {
                du6 += w6[k] * (uEH[g.idx(ip, js6[k])] - uEH[g.idx(i, js6[k])]);
                dv6 += w6[k] * (vEV[g.idx(is6[k], jp)] - vEV[g.idx(is6[k], j)]);
            }
            r.edge6[s] = du6 / g.dx + dv6 / g.dy;

            r.edge_pair[s] = (uEV[g.idx(ip, j)] - uEV[s]) / g.dx +
                             (vEH[g.idx(i, jp)] - vEH[s]) / g.dy;
        }
    return r;
}

Vector12 vorticity_row(Complex tx, Complex ty, double dx, double dy) {
    Vector12 w = Vector12::Zero();
    const Complex one(1.0, 0.0);
    w[kEhU] = -(ty - one) / (dy * ty);
    w[kEvV] = (tx - one) / (dx * tx);
    return w;
}

VorticityCheck vorticity_first_order_check(const Grid& g, double kx, double ky,
                                           double dt0, int n_halvings) {
    VorticityCheck out;
    double dt = dt0;
    for (int k = 0; k <= n_halvings; ++k) {
        const SymbolMatrix sm = assemble_symbol(g, dt, kx, ky);
        const Vector12 omega = vorticity_row(sm.tx, sm.ty, g.dx, g.dy);
        const double resid =
            (omega.transpose() * (sm.A - Matrix12::Identity())).norm();
        out.dts.push_back(dt);
        out.residuals.push_back(resid);
        dt *= 0.5;
    }
    // Least-squares slope of log(residual) against log(dt).
    const int n = static_cast<int>(out.dts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < n; ++k) {
        const double x = std::log(out.dts[k]);
        const double y = std::log(out.residuals[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    out.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

std::vector<SweepRow> sweep_symbol(const Grid& g, double dt, int nkx, int nky,
                                   bool parallel) {
    std::vector<SweepRow> rows(static_cast<std::size_t>(nkx) * nky);
    const StencilSet half = build_stencil_set(g, g.c * dt * 0.5);
    const StencilSet full = build_stencil_set(g, g.c * dt);
    const long long total = static_cast<long long>(nkx) * nky;
#pragma omp parallel for schedule(static) if (parallel)
    for (long long s = 0; s < total; ++s) {
        const int mx = static_cast<int>(s % nkx);
        const int my = static_cast<int>(s / nkx);
        const double kx = kTwoPi * mx / (nkx * g.dx);
        const double ky = kTwoPi * my / (nky * g.dy);
        SymbolMatrix sm;
        sm.kx = kx;
        sm.ky = ky;
        sm.dt = dt;
        sm.dx = g.dx;
        sm.dy = g.dy;
        sm.c = g.c;
        sm.tx = std::polar(1.0, g.dx * kx);
        sm.ty = std::polar(1.0, g.dy * ky);
        for (int col = 0; col < 12; ++col) {
            Vector12 e = Vector12::Zero();
            e[col] = Complex(1.0, 0.0);
            sm.A.col(col) = symbol_step(g, half, full, dt, sm.tx, sm.ty, e);
        }
        const auto sv = stationarity_singular_values(sm.A);
        rows[s] = {kx, ky, dt, sv[0] / sv[1], kernel_dimension(sm.A),
                   spectral_radius(sm.A)};
    }
    return rows;
}

}  // namespace af
