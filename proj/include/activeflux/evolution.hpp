#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "activeflux/grid.hpp"
#include "activeflux/radial_poly.hpp"

namespace af {

/// Thrown when a requested evolution radius would reach beyond the cells
/// adjacent to the target, i.e. the time step violates the CFL bound.
struct CflViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Where an evolved point value lives. Node targets collect four quarter-circle
/// sector means from the four cells meeting at the corner; edge-midpoint
/// targets collect two half-circle means from the two adjacent cells.
enum class TargetClass { Node, VEdgeMid, HEdgeMid };

/// Precomputed linear weights of the exact acoustic solution operator for one
/// radius rho = c*tau: the evolved (p,u,v) at a target is
///   sum over contributing cells, basis index m, input variable of
///   w[out][cell][m][in] * c_{m,cell}[in].
/// Cell offsets are relative to the cell owning the target.
struct StencilWeights {
    TargetClass cls;
    double dx = 0.0, dy = 0.0, rho = 0.0;
    int n_cells = 0;
    std::array<std::array<int, 2>, 4> cell_offsets{};
    // [out var][cell][m][in var]
    std::array<std::array<std::array<std::array<double, 3>, 9>, 4>, 3> w{};
};

StencilWeights build_stencil(const Grid& g, double rho, TargetClass cls);

/// Contract a stencil with explicitly supplied per-cell coefficients
/// (coeffs[cell][m][var], cells ordered as stencil.cell_offsets).
std::array<double, 3> apply_stencil(const StencilWeights& s,
                                    const double coeffs[4][9][3]);

/// The three stencils (node, vertical edge, horizontal edge) of one radius.
struct StencilSet {
    StencilWeights node, ev, eh;
    double rho = 0.0;
};

StencilSet build_stencil_set(const Grid& g, double rho);

/// Point values of all three lattices at one time level.
struct PointSet {
    std::array<std::vector<double>, 3> node, ev, eh;
    explicit PointSet(const Grid& g) {
        for (int v = 0; v < 3; ++v) {
            node[v].assign(g.size(), 0.0);
            ev[v].assign(g.size(), 0.0);
            eh[v].assign(g.size(), 0.0);
        }
    }
};

/// Evolve every node and edge point value by the two radii of the given
/// stencil sets (built from the same grid), reading the time-t^n field only.
/// Returns the half-step and full-step point sets; cell averages untouched.
std::pair<PointSet, PointSet> evolve_points(const Grid& g, const DofField& f,
                                            const StencilSet& sten_half,
                                            const StencilSet& sten_full,
                                            bool parallel = true);

/// CSV dump (out-var, di, dj, m, in-var, weight) for cross-checking stencils.
void dump_stencil_csv(const StencilWeights& s, std::ostream& os);

}  // namespace af
