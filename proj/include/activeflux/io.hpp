#pragma once

#include <map>
#include <string>

#include "activeflux/grid.hpp"

namespace af::io {

/// Write the four lattices as CSV files (prefix_avg.csv, prefix_node.csv,
/// prefix_ev.csv, prefix_eh.csv; one row per cell with indices, coordinates
/// and the (p,u,v) values) plus a legacy VTK structured grid of the cell
/// averages for contour plotting. Output is byte-deterministic.
void write_field(const Grid& g, const DofField& f, const std::string& prefix);

/// Read a field back from the CSV files written by write_field.
DofField read_field(const Grid& g, const std::string& prefix);

/// Radius/value scatter of the pressure for all four lattices
/// (columns: lattice, r, p).
void write_radial_scatter(const Grid& g, const DofField& f,
                          const std::string& path);

/// Flat key = value run manifest.
void write_manifest(const std::map<std::string, std::string>& kv,
                    const std::string& path);

std::string format_double(double v);

}  // namespace af::io
