#pragma once

#include <array>

#include "activeflux/grid.hpp"
#include "activeflux/rational.hpp"

namespace af {

/// Coefficients of the conservative biquadratic reconstruction of one cell in
/// the interpolation basis b_1..b_9: c_m equals the m-th boundary point value
/// for m <= 8, and c_9 carries the cell-average constraint through the bubble
/// function b_9 = (xi^2-1)(eta^2-1).
struct ReconCoeffs {
    std::array<double, 9> c{};
};

/// b_m(xi, eta), m in 1..9. b_m is 1 at the m-th boundary point and 0 at the
/// other seven; b_9 vanishes at all eight.
double basis_eval(int m, double xi, double eta);

/// Exact monomial expansion of b_m: coefficient of xi^k eta^l.
Rat basis_monomial(int m, int k, int l);

/// Bubble coefficient from the average and the eight point values.
double compute_c9(double mean, const std::array<double, 8>& q);

ReconCoeffs compute_coeffs(double mean, const std::array<double, 8>& q);
inline ReconCoeffs compute_coeffs(const CellDofs& d) { return compute_coeffs(d.mean, d.q); }

double recon_eval(const ReconCoeffs& rc, double xi, double eta);

/// Equivalent expansion a[k][l] xi^k eta^l of the reconstruction.
std::array<std::array<double, 3>, 3> recon_monomial_coeffs(const ReconCoeffs& rc);

}  // namespace af
