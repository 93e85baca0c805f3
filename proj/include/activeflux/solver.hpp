#pragma once

#include <array>
#include <functional>

#include "activeflux/evolution.hpp"
#include "activeflux/grid.hpp"

namespace af {

/// Pointwise flux of the acoustic system in conservation form:
/// x-flux (c u, c p, 0), y-flux (c v, 0, c p).
std::array<double, 3> acoustic_flux(const std::array<double, 3>& q, int axis,
                                    double c);

/// Space-time averaged flux through one edge from the nine states
/// states[time level 0..2][L, M, R], Simpson weights (1/6, 2/3, 1/6) in both
/// directions. L and R are the edge's endpoint nodes, M its midpoint.
std::array<double, 3> edge_flux_simpson(const std::array<double, 3> states[3][3],
                                        int axis, double c);

/// Initial data: (x, y) -> (p, u, v).
using InitialData = std::function<std::array<double, 3>(double, double)>;

/// Point lattices by evaluation at the owned locations, cell averages by the
/// 3x3 tensor Simpson rule over each cell.
DofField initialize(const Grid& g, const InitialData& f);

/// One full active-flux time step: per-cell reconstruction, exact point-value
/// evolution at dt/2 and dt, space-time Simpson fluxes, finite-volume average
/// update. Phases are internally parallel; a serial reference path is kept
/// for testing and produces bit-identical results.
class TimeStepper {
public:
    TimeStepper(const Grid& g, double cfl = 0.45, bool parallel = true);

    void step(DofField& f) const;
    double dt() const { return dt_; }
    double cfl() const { return cfl_; }
    const Grid& grid() const { return grid_; }
    const StencilSet& stencils_half() const { return half_; }
    const StencilSet& stencils_full() const { return full_; }
    bool parallel() const { return parallel_; }

private:
    Grid grid_;
    double cfl_;
    double dt_;
    bool parallel_;
    StencilSet half_, full_;
};

/// Advance the field to exactly t_end: the nominal step cfl * dt_max is
/// shrunk to the nearest divisor of the remaining time. Returns the number
/// of steps taken.
int run_to_time(const Grid& g, double cfl, double t_end, DofField& f,
                bool parallel = true);

}  // namespace af
