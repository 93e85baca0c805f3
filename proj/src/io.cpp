#include "activeflux/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace af::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_lattice_csv(const Grid& g, const std::array<std::vector<double>, 3>& lat,
                       const std::string& path,
                       std::array<double, 2> (Grid::*pos)(int, int) const) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "i,j,x,y,p,u,v\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const auto p = (g.*pos)(i, j);
            const std::size_t s = g.idx(i, j);
            os << i << ',' << j << ',' << format_double(p[0]) << ','
               << format_double(p[1]) << ',' << format_double(lat[0][s]) << ','
               << format_double(lat[1][s]) << ',' << format_double(lat[2][s])
               << '\n';
        }
    if (!os) throw std::runtime_error("write failed: " + path);
}

void read_lattice_csv(const Grid& g, std::array<std::vector<double>, 3>& lat,
                      const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> cols;
        while (std::getline(ls, tok, ',')) cols.push_back(tok);
        if (cols.size() != 7) throw std::runtime_error("bad row in " + path);
        const int i = std::stoi(cols[0]);
        const int j = std::stoi(cols[1]);
        const std::size_t s = g.idx(i, j);
        for (int v = 0; v < 3; ++v) lat[v][s] = std::stod(cols[4 + v]);
    }
}

}  // namespace

void write_field(const Grid& g, const DofField& f, const std::string& prefix) {
    write_lattice_csv(g, f.avg, prefix + "_avg.csv", &Grid::center_pos);
    write_lattice_csv(g, f.node, prefix + "_node.csv", &Grid::node_pos);
    write_lattice_csv(g, f.ev, prefix + "_ev.csv", &Grid::ev_pos);
    write_lattice_csv(g, f.eh, prefix + "_eh.csv", &Grid::eh_pos);

    // Legacy VTK structured points; cell averages as cell data.
    std::ofstream os(prefix + ".vtk");
    if (!os) throw std::runtime_error("cannot open " + prefix + ".vtk");
    os << "# vtk DataFile Version 3.0\n"
       << "acoustic field t=" << format_double(f.time) << "\nASCII\n"
       << "DATASET STRUCTURED_POINTS\n"
       << "DIMENSIONS " << g.nx + 1 << ' ' << g.ny + 1 << " 1\n"
       << "ORIGIN " << format_double(g.x_node(0)) << ' '
       << format_double(g.y_node(0)) << " 0\n"
       << "SPACING " << format_double(g.dx) << ' ' << format_double(g.dy)
       << " 1\n"
       << "CELL_DATA " << g.size() << '\n';
    static const char* names[3] = {"p", "u", "v"};
    for (int v = 0; v < 3; ++v) {
        os << "SCALARS " << names[v] << " double 1\nLOOKUP_TABLE default\n";
        for (std::size_t s = 0; s < g.size(); ++s)
            os << format_double(f.avg[v][s]) << '\n';
    }
    os << "SCALARS vmag double 1\nLOOKUP_TABLE default\n";
    for (std::size_t s = 0; s < g.size(); ++s)
        os << format_double(std::hypot(f.avg[kU][s], f.avg[kV][s])) << '\n';
    if (!os) throw std::runtime_error("write failed: " + prefix + ".vtk");
}

DofField read_field(const Grid& g, const std::string& prefix) {
    DofField f(g);
    read_lattice_csv(g, f.avg, prefix + "_avg.csv");
    read_lattice_csv(g, f.node, prefix + "_node.csv");
    read_lattice_csv(g, f.ev, prefix + "_ev.csv");
    read_lattice_csv(g, f.eh, prefix + "_eh.csv");
    return f;
}

void write_radial_scatter(const Grid& g, const DofField& f,
                          const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "lattice,r,p\n";
    auto emit = [&](const char* name, const std::array<std::vector<double>, 3>& lat,
                    std::array<double, 2> (Grid::*pos)(int, int) const) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const auto xy = (g.*pos)(i, j);
                os << name << ',' << format_double(std::hypot(xy[0], xy[1]))
                   << ',' << format_double(lat[0][g.idx(i, j)]) << '\n';
            }
    };
    emit("avg", f.avg, &Grid::center_pos);
    emit("node", f.node, &Grid::node_pos);
    emit("ev", f.ev, &Grid::ev_pos);
    emit("eh", f.eh, &Grid::eh_pos);
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const std::map<std::string, std::string>& kv,
                    const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    for (const auto& [k, v] : kv) os << k << " = " << v << '\n';
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace af::io
