#include "activeflux/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "activeflux/problems.hpp"

namespace af {

void RunConfig::validate() const {
    static const char* known[] = {"vortex", "oblique_waves", "radial_shock",
                                  "stationary_mode", "custom"};
    bool ok = false;
    for (const char* k : known) ok = ok || problem == k;
    if (!ok) throw std::invalid_argument("unknown problem: " + problem);
    if (nx < 0 || ny < 0 || dx < 0.0 || dy < 0.0)
        throw std::invalid_argument("grid parameters must be positive");
    if (!(c > 0.0)) throw std::invalid_argument("sound speed must be positive");
    if (!(cfl > 0.0) || cfl > 1.0)
        throw std::invalid_argument("CFL number must lie in (0, 1]");
    if (t_end < 0.0 && ct_end < 0.0)
        throw std::invalid_argument("one of t_end / ct_end is required");
    if (output_every < 0) throw std::invalid_argument("output_every must be >= 0");
}

Grid RunConfig::make_grid() const {
    Grid def = problem == "oblique_waves" ? problems::oblique_default_grid(50, c)
               : problem == "radial_shock" ? problems::radial_shock_default_grid(c)
                                           : problems::vortex_default_grid(c);
    const int gnx = nx > 0 ? nx : def.nx;
    const int gny = ny > 0 ? ny : def.ny;
    double gdx = dx > 0.0 ? dx : def.dx;
    double gdy = dy > 0.0 ? dy : def.dy;
    if (nx > 0 && dx == 0.0 && problem == "oblique_waves") gdx = 1.0 / gnx;
    if (ny > 0 && dy == 0.0 && problem == "oblique_waves") gdy = 1.0 / gny;
    if (origin) return Grid(gnx, gny, gdx, gdy, c, *origin);
    if (problem == "oblique_waves") return Grid(gnx, gny, gdx, gdy, c, {0.0, 0.0});
    return Grid::centered(gnx, gny, gdx, gdy, c);
}

double RunConfig::end_time() const { return t_end >= 0.0 ? t_end : ct_end / c; }

RunConfig parse_config_file(const std::string& path, RunConfig base) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "problem") base.problem = val;
        else if (key == "nx") base.nx = std::stoi(val);
        else if (key == "ny") base.ny = std::stoi(val);
        else if (key == "dx") base.dx = std::stod(val);
        else if (key == "dy") base.dy = std::stod(val);
        else if (key == "origin_x") {
            auto o = base.origin.value_or(std::array<double, 2>{0.0, 0.0});
            o[0] = std::stod(val);
            base.origin = o;
        } else if (key == "origin_y") {
            auto o = base.origin.value_or(std::array<double, 2>{0.0, 0.0});
            o[1] = std::stod(val);
            base.origin = o;
        }
        else if (key == "c") base.c = std::stod(val);
        else if (key == "cfl") base.cfl = std::stod(val);
        else if (key == "t_end") base.t_end = std::stod(val);
        else if (key == "ct_end") base.ct_end = std::stod(val);
        else if (key == "output_every") base.output_every = std::stoi(val);
        else if (key == "outdir") base.outdir = val;
        else if (key == "seed") base.seed = std::stoul(val);
        else if (key == "mode_mx") base.mode_mx = std::stoi(val);
        else if (key == "mode_my") base.mode_my = std::stoi(val);
        else if (key == "custom_prefix") base.custom_prefix = val;
        else if (key == "serial") base.serial = (val == "1" || val == "true");
        else
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
    }
    return base;
}

}  // namespace af
