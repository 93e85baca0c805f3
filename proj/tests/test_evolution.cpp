#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "activeflux/evolution.hpp"
#include "activeflux/reconstruction.hpp"
#include "activeflux/solver.hpp"
#include "support/oracles.hpp"

using namespace af;

namespace {

std::array<double, 2> target_position(TargetClass cls, double dx, double dy) {
    // Owner cell centered at the origin.
    switch (cls) {
        case TargetClass::Node: return {-0.5 * dx, -0.5 * dy};
        case TargetClass::VEdgeMid: return {-0.5 * dx, 0.0};
        case TargetClass::HEdgeMid: return {0.0, -0.5 * dy};
    }
    return {};
}

// Sample globally polynomial data into the stencil's contributing cells:
// point values by evaluation, averages exactly. No periodic wrap involved.
void fill_coeffs(const StencilWeights& s, const oracle::PolyState& st,
                 double coeffs[4][9][3]) {
    const oracle::Poly2* polys[3] = {&st.p, &st.u, &st.v};
    for (int ci = 0; ci < s.n_cells; ++ci) {
        const double ccx = s.cell_offsets[ci][0] * s.dx;
        const double ccy = s.cell_offsets[ci][1] * s.dy;
        for (int var = 0; var < 3; ++var) {
            std::array<double, 8> q;
            for (int m = 1; m <= 8; ++m) {
                const auto bp = boundary_point(m);
                q[m - 1] = polys[var]->eval(ccx + 0.5 * s.dx * bp[0],
                                            ccy + 0.5 * s.dy * bp[1]);
            }
            const double mean = polys[var]->cell_average(ccx - 0.5 * s.dx,
                                                         ccy - 0.5 * s.dy, s.dx, s.dy);
            for (int m = 0; m < 8; ++m) coeffs[ci][m][var] = q[m];
            coeffs[ci][8][var] = compute_c9(mean, q);
        }
    }
}

}  // namespace

TEST_CASE("constant states are reproduced exactly") {
    const Grid g(6, 5, 0.4, 0.25, 2.0);
    for (TargetClass cls :
         {TargetClass::Node, TargetClass::VEdgeMid, TargetClass::HEdgeMid}) {
        for (double frac : {0.1, 0.5, 0.999}) {
            const double rho = frac * 0.5 * std::min(g.dx, g.dy);
            const StencilWeights s = build_stencil(g, rho, cls);
            oracle::PolyState st;
            st.p.a[0][0] = 1.0;
            st.u.a[0][0] = 2.0;
            st.v.a[0][0] = 3.0;
            double coeffs[4][9][3];
            fill_coeffs(s, st, coeffs);
            const auto out = apply_stencil(s, coeffs);
            CHECK(out[kP] == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(out[kU] == doctest::Approx(2.0).epsilon(1e-13));
            CHECK(out[kV] == doctest::Approx(3.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("linear pressure data evolves exactly") {
    // p0 = x, v0 = 0: p stays x, u = -c t = -rho, v stays 0.
    const Grid g(6, 6, 0.3, 0.5, 3.0);
    const double rho = 0.4 * 0.5 * std::min(g.dx, g.dy);
    for (TargetClass cls :
         {TargetClass::Node, TargetClass::VEdgeMid, TargetClass::HEdgeMid}) {
        const StencilWeights s = build_stencil(g, rho, cls);
        oracle::PolyState st;
        st.p.a[1][0] = 1.0;
        double coeffs[4][9][3];
        fill_coeffs(s, st, coeffs);
        const auto out = apply_stencil(s, coeffs);
        const auto tp = target_position(cls, g.dx, g.dy);
        CHECK(out[kP] == doctest::Approx(tp[0]).epsilon(1e-13));
        CHECK(out[kU] == doctest::Approx(-rho).epsilon(1e-13));
        CHECK(out[kV] == doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("globally biquadratic data evolves to the exact polynomial solution") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const Grid g(6, 6, 0.37, 0.29, 1.7);
    const double rho = 0.93 * 0.5 * std::min(g.dx, g.dy);
    const double tau = rho / g.c;
    for (int iter = 0; iter < 4; ++iter) {
        oracle::PolyState st;
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                st.p.a[k][l] = d(rng);
                st.u.a[k][l] = d(rng);
                st.v.a[k][l] = d(rng);
            }
        const oracle::PolyState evolved = oracle::evolve_poly(st, g.c, tau);
        for (TargetClass cls :
             {TargetClass::Node, TargetClass::VEdgeMid, TargetClass::HEdgeMid}) {
            const StencilWeights s = build_stencil(g, rho, cls);
            double coeffs[4][9][3];
            fill_coeffs(s, st, coeffs);
            const auto out = apply_stencil(s, coeffs);
            const auto tp = target_position(cls, g.dx, g.dy);
            CHECK(out[kP] ==
                  doctest::Approx(evolved.p.eval(tp[0], tp[1])).epsilon(1e-12));
            CHECK(out[kU] ==
                  doctest::Approx(evolved.u.eval(tp[0], tp[1])).epsilon(1e-12));
            CHECK(out[kV] ==
                  doctest::Approx(evolved.v.eval(tp[0], tp[1])).epsilon(1e-12));
        }
    }
}

TEST_CASE("vanishing radius reduces to point evaluation of the reconstruction") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const Grid g(6, 6, 0.5, 0.5, 1.0);
    const double rho = 1e-9 * g.dx;
    oracle::PolyState st;
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            st.p.a[k][l] = d(rng);
            st.u.a[k][l] = d(rng);
            st.v.a[k][l] = d(rng);
        }
    for (TargetClass cls :
         {TargetClass::Node, TargetClass::VEdgeMid, TargetClass::HEdgeMid}) {
        const StencilWeights s = build_stencil(g, rho, cls);
        double coeffs[4][9][3];
        fill_coeffs(s, st, coeffs);
        const auto out = apply_stencil(s, coeffs);
        const auto tp = target_position(cls, g.dx, g.dy);
        CHECK(out[kP] == doctest::Approx(st.p.eval(tp[0], tp[1])).epsilon(1e-7));
        CHECK(out[kU] == doctest::Approx(st.u.eval(tp[0], tp[1])).epsilon(1e-7));
        CHECK(out[kV] == doctest::Approx(st.v.eval(tp[0], tp[1])).epsilon(1e-7));
    }
}

TEST_CASE("stencil rebuild is bit-identical") {
    const Grid g(8, 8, 0.11, 0.07, 1.3);
    for (TargetClass cls :
         {TargetClass::Node, TargetClass::VEdgeMid, TargetClass::HEdgeMid}) {
        const StencilWeights a = build_stencil(g, 0.03, cls);
        const StencilWeights b = build_stencil(g, 0.03, cls);
        CHECK(std::memcmp(&a.w, &b.w, sizeof a.w) == 0);
    }
}

TEST_CASE("weights depend only on the radius-to-cell ratios") {
    const Grid g1(8, 8, 0.2, 0.3, 1.0);
    const Grid g2(8, 8, 0.4, 0.6, 1.0);
    for (TargetClass cls :
         {TargetClass::Node, TargetClass::VEdgeMid, TargetClass::HEdgeMid}) {
        const StencilWeights a = build_stencil(g1, 0.08, cls);
        const StencilWeights b = build_stencil(g2, 0.16, cls);
        for (int out = 0; out < 3; ++out)
            for (int ci = 0; ci < a.n_cells; ++ci)
                for (int m = 0; m < 9; ++m)
                    for (int in = 0; in < 3; ++in)
                        CHECK(a.w[out][ci][m][in] ==
                              doctest::Approx(b.w[out][ci][m][in]).epsilon(2e-13));
    }
}

TEST_CASE("radius beyond half a cell is rejected") {
    const Grid g(5, 5, 0.2, 0.3, 1.0);
    CHECK_THROWS_AS((void)build_stencil(g, 0.11, TargetClass::Node), CflViolation);
    CHECK_THROWS_AS((void)build_stencil(g, 0.0, TargetClass::Node), CflViolation);
    CHECK_NOTHROW((void)build_stencil(g, 0.1, TargetClass::Node));
}

TEST_CASE("evolve_points keeps a uniform field uniform at both substeps") {
    const Grid g(5, 4, 0.2, 0.21, 1.0);
    DofField f(g);
    for (int v = 0; v < 3; ++v)
        for (std::size_t s = 0; s < g.size(); ++s) {
            f.avg[v][s] = 1.5 - v;
            f.node[v][s] = 1.5 - v;
            f.ev[v][s] = 1.5 - v;
            f.eh[v][s] = 1.5 - v;
        }
    const StencilSet half = build_stencil_set(g, 0.02);
    const StencilSet full = build_stencil_set(g, 0.04);
    const auto [ph, pf] = evolve_points(g, f, half, full);
    for (int v = 0; v < 3; ++v)
        for (std::size_t s = 0; s < g.size(); ++s) {
            CHECK(ph.node[v][s] == doctest::Approx(1.5 - v).epsilon(1e-13));
            CHECK(pf.node[v][s] == doctest::Approx(1.5 - v).epsilon(1e-13));
            CHECK(ph.ev[v][s] == doctest::Approx(1.5 - v).epsilon(1e-13));
            CHECK(pf.eh[v][s] == doctest::Approx(1.5 - v).epsilon(1e-13));
        }
}

TEST_CASE("evolved plane wave converges at third order") {
    // Harmonic pressure wave along b = (2,1)/sqrt(5); exact solution by 1D
    // characteristics. One evolution application per resolution.
    const double c = 1.0;
    const double kw = 2.0 * oracle::kPi;
    auto exact_p = [&](double x, double y, double t) {
        const double s = 2.0 * x + y;  // sqrt(5) * (x . b)
        return 0.5 * (std::cos(kw * (s - std::sqrt(5.0) * c * t)) +
                      std::cos(kw * (s + std::sqrt(5.0) * c * t)));
    };
    double errs[2];
    int idx = 0;
    for (int m : {24, 48}) {
        const Grid g(m, m, 1.0 / m, 1.0 / m, c);
        DofField f = initialize(g, [&](double x, double y) -> std::array<double, 3> {
            return {std::cos(kw * (2.0 * x + y)), 0.0, 0.0};
        });
        const double rho = 0.8 * 0.5 * g.dx;
        const StencilSet half = build_stencil_set(g, 0.5 * rho);
        const StencilSet full = build_stencil_set(g, rho);
        const auto [ph, pf] = evolve_points(g, f, half, full);
        const double t = rho / c;
        double err = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const auto pos = g.node_pos(i, j);
                err = std::max(err, std::abs(pf.node[kP][g.idx(i, j)] -
                                             exact_p(pos[0], pos[1], t)));
            }
        errs[idx++] = err;
    }
    const double order = std::log2(errs[0] / errs[1]);
    CHECK(order >= 2.5);
}
