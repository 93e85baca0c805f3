// Independent reference computations used only by the tests: brute-force
// quadrature of partial spherical means, exact polynomial-in-time evolution
// of globally polynomial acoustic data, and a 1D finite-difference solver.
// None of these share code with the implementation paths they check.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature.

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth, int min_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    // The minimum depth guards against integrands resonant with the sample
    // lattice (e.g. trigonometric monomials vanishing at multiples of pi/2),
    // which would otherwise fake a zero error estimate.
    if (depth <= 0 ||
        (min_depth <= 0 && std::abs(left + right - whole) < 15.0 * tol))
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                                min_depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                                depth - 1, min_depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int depth = 20,
                               int min_depth = 5) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth, min_depth);
}

// ---------------------------------------------------------------------------
// Partial spherical mean of x^px y^py n_x^wa n_y^wb, straight from the
// definition: nested adaptive quadrature over the azimuth sector and the
// polar angle with the 1/(4 pi) normalization.

inline double partial_mean_quadrature(int px, int py, int wa, int wb, double x0,
                                      double y0, double phi1, double phi2,
                                      double r) {
    auto outer = [&](double phi) {
        auto inner = [&](double th) {
            const double sx = std::sin(th) * std::cos(phi);
            const double sy = std::sin(th) * std::sin(phi);
            double v = std::sin(th);
            for (int k = 0; k < px; ++k) v *= x0 + r * sx;
            for (int k = 0; k < py; ++k) v *= y0 + r * sy;
            for (int k = 0; k < wa; ++k) v *= sx;
            for (int k = 0; k < wb; ++k) v *= sy;
            return v;
        };
        return adaptive_simpson(inner, 0.0, kPi, 1e-13, 18);
    };
    return adaptive_simpson(outer, phi1, phi2, 1e-13, 18) / (4.0 * kPi);
}

// ---------------------------------------------------------------------------
// Bivariate polynomials with dense coefficient storage, plus the exact
// solution of the acoustic system for globally polynomial data: repeated
// application of the generator truncates, so the time Taylor series is finite.

struct Poly2 {
    static constexpr int N = 9;  // powers 0..8 per direction
    std::array<std::array<double, N>, N> a{};

    double eval(double x, double y) const {
        double v = 0.0;
        for (int i = N - 1; i >= 0; --i) {
            double row = 0.0;
            for (int j = N - 1; j >= 0; --j) row = row * y + a[i][j];
            v = v * x + row;
        }
        return v;
    }
    Poly2 dx() const {
        Poly2 r;
        for (int i = 1; i < N; ++i)
            for (int j = 0; j < N; ++j) r.a[i - 1][j] = i * a[i][j];
        return r;
    }
    Poly2 dy() const {
        Poly2 r;
        for (int i = 0; i < N; ++i)
            for (int j = 1; j < N; ++j) r.a[i][j - 1] = j * a[i][j];
        return r;
    }
    Poly2& axpy(double s, const Poly2& o) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) a[i][j] += s * o.a[i][j];
        return *this;
    }
    /// Average over [x0, x0+hx] x [y0, y0+hy].
    double cell_average(double x0, double y0, double hx, double hy) const {
        double v = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (a[i][j] == 0.0) continue;
                const double ix =
                    (std::pow(x0 + hx, i + 1) - std::pow(x0, i + 1)) / (i + 1);
                const double iy =
                    (std::pow(y0 + hy, j + 1) - std::pow(y0, j + 1)) / (j + 1);
                v += a[i][j] * ix * iy;
            }
        return v / (hx * hy);
    }
};

struct PolyState {
    Poly2 p, u, v;
};

/// d/dt (p,u,v) = (-c (du/dx + dv/dy), -c dp/dx, -c dp/dy).
inline PolyState acoustic_generator(const PolyState& s, double c) {
    PolyState r;
    r.p.axpy(-c, s.u.dx()).axpy(-c, s.v.dy());
    r.u.axpy(-c, s.p.dx());
    r.v.axpy(-c, s.p.dy());
    return r;
}

/// Exact solution at time t for polynomial data (finite Taylor series).
inline PolyState evolve_poly(const PolyState& s0, double c, double t,
                             int terms = 10) {
    PolyState acc = s0, der = s0;
    double fact = 1.0;
    for (int k = 1; k <= terms; ++k) {
        der = acoustic_generator(der, c);
        fact *= t / k;
        acc.p.axpy(fact, der.p);
        acc.u.axpy(fact, der.u);
        acc.v.axpy(fact, der.v);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// 1D acoustic system p_t + c V_s = 0, V_t + c p_s = 0 on a periodic interval,
// fourth-order central differences in space and classical RK4 in time.

struct Fd1dSolution {
    std::vector<double> s;  // sample locations
    std::vector<double> p, V;
};

inline Fd1dSolution solve_1d_acoustics(const std::function<double(double)>& p0,
                                       double period, double c, double t_end,
                                       int n = 4096) {
    const double h = period / n;
    std::vector<double> p(n), V(n, 0.0);
    for (int i = 0; i < n; ++i) p[i] = p0(i * h);

    auto deriv = [&](const std::vector<double>& f, int i) {
        const int im2 = (i - 2 + n) % n, im1 = (i - 1 + n) % n;
        const int ip1 = (i + 1) % n, ip2 = (i + 2) % n;
        return (f[im2] - 8.0 * f[im1] + 8.0 * f[ip1] - f[ip2]) / (12.0 * h);
    };
    auto rhs = [&](const std::vector<double>& pp, const std::vector<double>& vv,
                   std::vector<double>& dp, std::vector<double>& dv) {
        for (int i = 0; i < n; ++i) {
            dp[i] = -c * deriv(vv, i);
            dv[i] = -c * deriv(pp, i);
        }
    };

    const double dt = 0.2 * h / c;
    const int steps = static_cast<int>(std::ceil(t_end / dt));
    const double dte = t_end / steps;
    std::vector<double> k1p(n), k1v(n), k2p(n), k2v(n), k3p(n), k3v(n), k4p(n),
        k4v(n), tp(n), tv(n);
    for (int s = 0; s < steps; ++s) {
        rhs(p, V, k1p, k1v);
        for (int i = 0; i < n; ++i) tp[i] = p[i] + 0.5 * dte * k1p[i], tv[i] = V[i] + 0.5 * dte * k1v[i];
        rhs(tp, tv, k2p, k2v);
        for (int i = 0; i < n; ++i) tp[i] = p[i] + 0.5 * dte * k2p[i], tv[i] = V[i] + 0.5 * dte * k2v[i];
        rhs(tp, tv, k3p, k3v);
        for (int i = 0; i < n; ++i) tp[i] = p[i] + dte * k3p[i], tv[i] = V[i] + dte * k3v[i];
        rhs(tp, tv, k4p, k4v);
        for (int i = 0; i < n; ++i) {
            p[i] += dte / 6.0 * (k1p[i] + 2.0 * k2p[i] + 2.0 * k3p[i] + k4p[i]);
            V[i] += dte / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
        }
    }
    Fd1dSolution out;
    out.s.resize(n);
    for (int i = 0; i < n; ++i) out.s[i] = i * h;
    out.p = std::move(p);
    out.V = std::move(V);
    return out;
}

}  // namespace oracle
