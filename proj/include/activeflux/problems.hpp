#pragma once

#include <array>
#include <string>
#include <vector>

#include "activeflux/grid.hpp"
#include "activeflux/solver.hpp"

namespace af::problems {

/// Stationary vortex: rotational velocity with piecewise-linear profile
/// 5r on [0, 0.2], 2 - 5r on (0.2, 0.4], 0 outside; p = 0.
std::array<double, 3> vortex(double x, double y);
Grid vortex_default_grid(double c = 1.0);

/// Oblique Gaussian waves along b = (cos a, sin a), tan a = 1/2: pressure is
/// the five-Gaussian profile sum_{i=-2..2} exp(-(s - i d)^2 / w^2), s = x.b,
/// d = 0.1, w = 0.5 cos a, periodized with the shortest period compatible
/// with the unit torus (p = sin a) so the periodic problem stays exactly
/// one-dimensional along b; v = 0.
struct ObliqueWaves {
    double bx, by;        // unit direction
    double delta, width;  // Gaussian spacing and width
    double period;        // profile period along s

    ObliqueWaves();
    double profile(double s) const;                       // periodized p0(s)
    std::array<double, 3> init(double x, double y) const;
    /// Exact solution by 1D characteristics along b.
    std::array<double, 3> oracle(double t, double x, double y, double c) const;
};
Grid oblique_default_grid(int m = 50, double c = 1.0);

/// Radial shock tube: p = 2 inside radius 0.2, 1 outside; v = 0.
std::array<double, 3> radial_shock(double x, double y);
Grid radial_shock_default_grid(double c = 1.0);

/// Reference pressure of the radial shock at time t and radius r, by
/// numerical quadrature of the spherical mean of the initial step and a
/// centered difference in the radius.
double oracle_radial(double ct, double r);

/// Grid-convergence record for a sequence of M x M runs.
struct ConvergenceRow {
    int m;
    double error;
    double order;  // log2 ratio against the previous row, NaN for the first
};

/// Oblique-waves convergence study: L1 error of p at the vertical edge
/// midpoints at time c t = ct_end.
std::vector<ConvergenceRow> convergence_study(const std::vector<int>& ms,
                                              double cfl, double ct_end,
                                              double c = 1.0,
                                              bool parallel = true);

/// L1 error of p at vertical edge midpoints against the oblique oracle.
double oblique_edge_error(const Grid& g, const DofField& f, double c);

}  // namespace af::problems
