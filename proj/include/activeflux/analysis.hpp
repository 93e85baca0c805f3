#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "activeflux/grid.hpp"
#include "activeflux/solver.hpp"

namespace af {

using Complex = std::complex<double>;
using Matrix12 = Eigen::Matrix<Complex, 12, 12>;
using Vector12 = Eigen::Matrix<Complex, 12, 1>;

/// Component order of the Fourier state: cell averages, horizontal-edge,
/// vertical-edge and node lattices, (p,u,v) within each block. The lattice
/// phase convention ties cell (i,j) to its top edge, right edge and
/// upper-right node; synthesize_mode translates to the storage convention
/// (bottom/left/lower-left ownership) by constant index shifts.
enum SymbolIndex : int {
    kAvgP = 0, kAvgU, kAvgV,
    kEhP, kEhU, kEhV,
    kEvP, kEvU, kEvV,
    kNP, kNU, kNV,
};

/// One-step amplification matrix of the full scheme on Fourier modes.
struct SymbolMatrix {
    Matrix12 A;
    double kx = 0.0, ky = 0.0, dt = 0.0;
    double dx = 0.0, dy = 0.0, c = 1.0;
    Complex tx, ty;
};

/// Apply one scheme step to a Fourier state vector.
Vector12 symbol_step(const Grid& g, const StencilSet& half,
                     const StencilSet& full, double dt, Complex tx, Complex ty,
                     const Vector12& q);

SymbolMatrix assemble_symbol(const TimeStepper& ts, double kx, double ky);
/// Convenience variant that builds the two stencil sets for the given dt.
SymbolMatrix assemble_symbol(const Grid& g, double dt, double kx, double ky);

/// Fourier coefficients of the discrete state that the scheme keeps exactly
/// stationary (zero pressure, discretely divergence-free velocity);
/// identically zero at tx = ty = 1.
Vector12 stationary_mode(Complex tx, Complex ty, double dx, double dy);

/// Realize the stationary mode of integer wavenumbers (mx, my) as a periodic
/// field on the grid (real part, normalized to unit max amplitude).
DofField synthesize_mode(const Grid& g, int mx, int my);

/// Number of singular values of (A - 1) below tol times the largest.
int kernel_dimension(const Matrix12& A, double tol = 1e-9);

double spectral_radius(const Matrix12& A);

/// Smallest and largest singular value of (A - 1).
std::array<double, 2> stationarity_singular_values(const Matrix12& A);

/// The four discrete divergence combinations that characterize the discrete
/// stationary states, evaluated on every lattice point.
struct DivergenceResiduals {
    std::vector<double> node;       // corner-node combination
    std::vector<double> avg;        // cell-average combination, (1,4,1) weights
    std::vector<double> edge6;      // edge combination, (1,6,1) weights
    std::vector<double> edge_pair;  // compact vertical/horizontal edge pair
    double max_abs() const;
};
DivergenceResiduals discrete_divergences(const Grid& g, const DofField& f);

/// First-order discrete vorticity row vector (left null vector of the O(dt)
/// part of the update).
Vector12 vorticity_row(Complex tx, Complex ty, double dx, double dy);

/// Residual ||Omega^(1) (A(dt) - 1)|| over a sequence of halved time steps
/// and the fitted convergence order (about 2: the first-order vorticity is
/// not conserved by the full scheme).
struct VorticityCheck {
    std::vector<double> dts;
    std::vector<double> residuals;
    double fitted_order;
};
VorticityCheck vorticity_first_order_check(const Grid& g, double kx, double ky,
                                           double dt0, int n_halvings = 4);

/// One record of a wavenumber sweep report.
struct SweepRow {
    double kx, ky, dt;
    double det_scaled;  // smallest/largest singular value of (A - 1)
    int kernel_dim;
    double spectral_radius;
};
std::vector<SweepRow> sweep_symbol(const Grid& g, double dt, int nkx, int nky,
                                   bool parallel = true);

}  // namespace af
