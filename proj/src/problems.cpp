#include "activeflux/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace af::problems {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::array<double, 3> vortex(double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    double speed = 0.0;
    if (r <= 0.2)
        speed = 5.0 * r;
    else if (r <= 0.4)
        speed = 2.0 - 5.0 * r;
    if (r == 0.0 || speed == 0.0) return {0.0, 0.0, 0.0};
    // n_phi = (-sin, cos) = (-y/r, x/r)
    return {0.0, -speed * y / r, speed * x / r};
}

Grid vortex_default_grid(double c) { return Grid::centered(50, 50, 0.03, 0.03, c); }

ObliqueWaves::ObliqueWaves() {
    const double alpha = std::atan(0.5);
    bx = std::cos(alpha);
    by = std::sin(alpha);
    delta = 0.1;
    width = 0.5 * std::cos(alpha);
    period = std::sin(alpha);  // = 1/sqrt(5), minimal s-period of the unit torus
}

double ObliqueWaves::profile(double s) const {
    // Periodized five-Gaussian profile. Tails below 1e-300 long before the
    // image window ends, so the truncation is exact in double precision.
    const double reach = 3.0;
    const int k0 = static_cast<int>(std::floor((s - reach) / period));
    const int k1 = static_cast<int>(std::ceil((s + reach) / period));
    double acc = 0.0;
    for (int k = k0; k <= k1; ++k) {
        const double sk = s - k * period;
        for (int i = -2; i <= 2; ++i) {
            const double d = (sk - i * delta) / width;
            acc += std::exp(-d * d);
        }
    }
    return acc;
}

std::array<double, 3> ObliqueWaves::init(double x, double y) const {
    return {profile(x * bx + y * by), 0.0, 0.0};
}

std::array<double, 3> ObliqueWaves::oracle(double t, double x, double y,
                                           double c) const {
    const double s = x * bx + y * by;
    const double pl = profile(s - c * t);
    const double pr = profile(s + c * t);
    const double p = 0.5 * (pl + pr);
    const double vb = 0.5 * (pl - pr);  // velocity component along b
    return {p, vb * bx, vb * by};
}

Grid oblique_default_grid(int m, double c) {
    return Grid(m, m, 1.0 / m, 1.0 / m, c, {0.0, 0.0});
}

std::array<double, 3> radial_shock(double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    return {r <= 0.2 ? 2.0 : 1.0, 0.0, 0.0};
}

Grid radial_shock_default_grid(double c) {
    return Grid::centered(100, 100, 0.01, 0.01, c);
}

namespace {

constexpr double kShockRadius = 0.2;

// Angular measure of directions from a point at radius R whose endpoint at
// distance s lies inside the disc of radius a.
double inside_angle(double R, double s, double a) {
    if (R + s <= a) return 2.0 * kPi;
    if (std::abs(R - s) >= a) return 0.0;
    const double mu = (a * a - R * R - s * s) / (2.0 * R * s);
    return 2.0 * (kPi - std::acos(std::clamp(mu, -1.0, 1.0)));
}

// Spherical mean of the initial pressure at radius R, mean radius r:
// 1 + (1/2pi) int_0^{pi/2} sin(th) L(r sin th) dth.
double shock_mean_integrand(double R, double r, double th) {
    return std::sin(th) * inside_angle(R, r * std::sin(th), kShockRadius);
}

double adaptive_simpson(double R, double r, double a, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = shock_mean_integrand(R, r, lm);
    const double frm = shock_mean_integrand(R, r, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(R, r, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(R, r, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double shock_mean(double R, double r) {
    if (r <= 0.0) return R <= kShockRadius ? 2.0 : 1.0;
    const double a = 0.0, b = 0.5 * kPi;
    const double fa = shock_mean_integrand(R, r, a);
    const double fb = shock_mean_integrand(R, r, b);
    const double fm = shock_mean_integrand(R, r, 0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double integral =
        adaptive_simpson(R, r, a, b, fa, fm, fb, whole, 1e-12, 24);
    return 1.0 + integral / (2.0 * kPi);
}

}  // namespace

double oracle_radial(double ct, double r) {
    if (!(ct > 0.0)) return radial_shock(r, 0.0)[0];
    // p = d/dr (r * M)(r)|_{r = ct}, centered difference.
    const double h = 1e-4 * ct;
    const double gp = (ct + h) * shock_mean(r, ct + h);
    const double gm = (ct - h) * shock_mean(r, ct - h);
    return (gp - gm) / (2.0 * h);
}

double oblique_edge_error(const Grid& g, const DofField& f, double c) {
    ObliqueWaves ow;
    double acc = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const auto pos = g.ev_pos(i, j);
            const auto ex = ow.oracle(f.time, pos[0], pos[1], c);
            acc += std::abs(f.ev[kP][g.idx(i, j)] - ex[kP]);
        }
    return acc / g.size();
}

std::vector<ConvergenceRow> convergence_study(const std::vector<int>& ms,
                                              double cfl, double ct_end,
                                              double c, bool parallel) {
    ObliqueWaves ow;
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const Grid g = oblique_default_grid(ms[k], c);
        DofField f = initialize(g, [&](double x, double y) { return ow.init(x, y); });
        const double t_end = ct_end / c;
        run_to_time(g, cfl, t_end, f, parallel);
        ConvergenceRow row;
        row.m = ms[k];
        row.error = oblique_edge_error(g, f, c);
        row.order = std::numeric_limits<double>::quiet_NaN();
        if (k > 0)
            row.order = std::log2(rows.back().error / row.error) /
                        std::log2(static_cast<double>(ms[k]) / ms[k - 1]);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace af::problems
