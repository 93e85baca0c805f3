#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace af {

/// Uniform periodic Cartesian grid for the acoustic solver.
///
/// Cell (i,j) spans [x_node(i), x_node(i+1)] x [y_node(j), y_node(j+1)].
/// Positions are generated relative to the domain midpoint so that mirrored
/// indices produce bitwise-negated coordinates on centered domains; the
/// symmetry tests rely on that.
struct Grid {
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;
    double c = 1.0;  // sound speed
    std::array<double, 2> origin{0.0, 0.0};

    Grid() = default;
    Grid(int nx_, int ny_, double dx_, double dy_, double c_,
         std::array<double, 2> origin_ = {0.0, 0.0})
        : nx(nx_), ny(ny_), dx(dx_), dy(dy_), c(c_), origin(origin_) {
        if (nx < 3 || ny < 3)
            throw std::invalid_argument("Grid: need nx >= 3 and ny >= 3");
        if (!(dx > 0.0) || !(dy > 0.0) || !(c > 0.0))
            throw std::invalid_argument("Grid: dx, dy, c must be positive");
        cx_ = origin[0] + 0.5 * nx * dx;
        cy_ = origin[1] + 0.5 * ny * dy;
    }
    /// Grid whose domain is centered on (0,0).
    static Grid centered(int nx, int ny, double dx, double dy, double c) {
        return Grid(nx, ny, dx, dy, c, {-(0.5 * nx * dx), -(0.5 * ny * dy)});
    }

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    int wx(int i) const { return ((i % nx) + nx) % nx; }
    int wy(int j) const { return ((j % ny) + ny) % ny; }

    double x_node(int i) const { return cx_ + (i - 0.5 * nx) * dx; }
    double y_node(int j) const { return cy_ + (j - 0.5 * ny) * dy; }
    double x_center(int i) const { return cx_ + (i + 0.5 - 0.5 * nx) * dx; }
    double y_center(int j) const { return cy_ + (j + 0.5 - 0.5 * ny) * dy; }

    std::array<double, 2> center_pos(int i, int j) const { return {x_center(i), y_center(j)}; }
    std::array<double, 2> node_pos(int i, int j) const { return {x_node(i), y_node(j)}; }
    std::array<double, 2> ev_pos(int i, int j) const { return {x_node(i), y_center(j)}; }
    std::array<double, 2> eh_pos(int i, int j) const { return {x_center(i), y_node(j)}; }

    double dt_max() const {
        double t = dx / (2.0 * c);
        double ty = dy / (2.0 * c);
        return t < ty ? t : ty;
    }

private:
    double cx_ = 0.0, cy_ = 0.0;
};

/// Variable indices within a state triple.
enum Var : int { kP = 0, kU = 1, kV = 2 };

/// The four staggered degree-of-freedom lattices, one entry of each per cell:
///  - avg : cell average
///  - node: point value at the cell's lower-left corner
///  - ev  : point value at the midpoint of the cell's left (vertical) edge
///  - eh  : point value at the midpoint of the cell's bottom (horizontal) edge
/// Corner and edge values are shared between neighbours through this
/// ownership convention; gather_cell resolves the sharing.
struct DofField {
    std::array<std::vector<double>, 3> avg, node, ev, eh;
    double time = 0.0;

    DofField() = default;
    explicit DofField(const Grid& g) {
        for (int v = 0; v < 3; ++v) {
            avg[v].assign(g.size(), 0.0);
            node[v].assign(g.size(), 0.0);
            ev[v].assign(g.size(), 0.0);
            eh[v].assign(g.size(), 0.0);
        }
    }
};

/// One cell's degrees of freedom for a single variable: the average and the
/// eight boundary point values, counterclockwise from the lower-left corner
/// (odd m are corners, even m are edge midpoints).
struct CellDofs {
    double mean;
    std::array<double, 8> q;
};

inline CellDofs gather_cell(const DofField& f, const Grid& g, int i, int j, int var) {
    i = g.wx(i);
    j = g.wy(j);
    const int ip = (i + 1 == g.nx) ? 0 : i + 1;
    const int jp = (j + 1 == g.ny) ? 0 : j + 1;
    CellDofs d;
    d.mean = f.avg[var][g.idx(i, j)];
    d.q[0] = f.node[var][g.idx(i, j)];    // (-1,-1)
    d.q[1] = f.eh[var][g.idx(i, j)];      // ( 0,-1)
    d.q[2] = f.node[var][g.idx(ip, j)];   // ( 1,-1)
    d.q[3] = f.ev[var][g.idx(ip, j)];     // ( 1, 0)
    d.q[4] = f.node[var][g.idx(ip, jp)];  // ( 1, 1)
    d.q[5] = f.eh[var][g.idx(i, jp)];     // ( 0, 1)
    d.q[6] = f.node[var][g.idx(i, jp)];   // (-1, 1)
    d.q[7] = f.ev[var][g.idx(i, j)];      // (-1, 0)
    return d;
}

/// Reference-cell locations of the eight boundary point values.
inline std::array<double, 2> boundary_point(int m) {
    static constexpr std::array<std::array<double, 2>, 8> pts{{{-1, -1},
                                                               {0, -1},
                                                               {1, -1},
                                                               {1, 0},
                                                               {1, 1},
                                                               {0, 1},
                                                               {-1, 1},
                                                               {-1, 0}}};
    if (m < 1 || m > 8) throw std::invalid_argument("boundary_point: m out of range");
    return pts[m - 1];
}

}  // namespace af
