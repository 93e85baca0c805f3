#pragma once

#include <optional>
#include <string>

#include "activeflux/grid.hpp"

namespace af {

#define ACTIVEFLUX_VERSION "0.1.0"

/// Run configuration assembled from a flat key = value file and command-line
/// overrides. Times can be given either directly (t_end) or as c*t (ct_end).
struct RunConfig {
    std::string problem = "vortex";  // vortex | oblique_waves | radial_shock |
                                     // stationary_mode | custom
    int nx = 0, ny = 0;              // 0: problem default
    double dx = 0.0, dy = 0.0;       // 0: problem default
    std::optional<std::array<double, 2>> origin;
    double c = 1.0;
    double cfl = 0.45;
    double t_end = -1.0;   // takes precedence when >= 0
    double ct_end = -1.0;
    int output_every = 0;  // snapshot cadence in steps; 0 = final only
    std::string outdir = "out";
    unsigned long seed = 12345;
    int mode_mx = 1, mode_my = 2;    // stationary_mode problem
    std::string custom_prefix;       // custom problem: read_field prefix
    bool serial = false;

    void validate() const;
    Grid make_grid() const;
    double end_time() const;
};

/// Parse a flat "key = value" file into the config (unknown keys rejected).
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

}  // namespace af
