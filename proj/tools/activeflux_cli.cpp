// Command-line driver for the active flux acoustic solver: problem runs,
// grid convergence studies, Fourier-symbol sweeps and stencil dumps.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "activeflux/analysis.hpp"
#include "activeflux/config.hpp"
#include "activeflux/io.hpp"
#include "activeflux/problems.hpp"
#include "activeflux/solver.hpp"

namespace fs = std::filesystem;

namespace {

af::InitialData problem_data(const af::RunConfig& cfg, const af::Grid& g) {
    if (cfg.problem == "vortex")
        return [](double x, double y) { return af::problems::vortex(x, y); };
    if (cfg.problem == "oblique_waves") {
        af::problems::ObliqueWaves ow;
        return [ow](double x, double y) { return ow.init(x, y); };
    }
    if (cfg.problem == "radial_shock")
        return [](double x, double y) { return af::problems::radial_shock(x, y); };
    throw std::invalid_argument("problem has no analytic initial data: " + cfg.problem);
}

int cmd_run(const af::RunConfig& cfg) {
    cfg.validate();
    const af::Grid g = cfg.make_grid();
    fs::create_directories(cfg.outdir);

    af::DofField f(g);
    if (cfg.problem == "stationary_mode")
        f = af::synthesize_mode(g, cfg.mode_mx, cfg.mode_my);
    else if (cfg.problem == "custom")
        f = af::io::read_field(g, cfg.custom_prefix);
    else
        f = af::initialize(g, problem_data(cfg, g));

    af::io::write_field(g, f, cfg.outdir + "/snapshot_000000");

    const double t_end = cfg.end_time();
    const double dt_nom = cfg.cfl * g.dt_max();
    const int n_steps = std::max(1, static_cast<int>(std::ceil(t_end / dt_nom - 1e-12)));
    const double cfl_eff = (t_end / n_steps) / g.dt_max();
    af::TimeStepper ts(g, cfl_eff, !cfg.serial);

    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= n_steps; ++k) {
        ts.step(f);
        if (cfg.output_every > 0 && k % cfg.output_every == 0 && k < n_steps) {
            char name[64];
            std::snprintf(name, sizeof name, "/snapshot_%06d", k);
            af::io::write_field(g, f, cfg.outdir + name);
        }
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    char name[64];
    std::snprintf(name, sizeof name, "/snapshot_%06d", n_steps);
    af::io::write_field(g, f, cfg.outdir + name);

    std::map<std::string, std::string> man{
        {"problem", cfg.problem},
        {"nx", std::to_string(g.nx)},
        {"ny", std::to_string(g.ny)},
        {"dx", af::io::format_double(g.dx)},
        {"dy", af::io::format_double(g.dy)},
        {"c", af::io::format_double(g.c)},
        {"cfl", af::io::format_double(ts.cfl())},
        {"dt", af::io::format_double(ts.dt())},
        {"steps", std::to_string(n_steps)},
        {"t_final", af::io::format_double(f.time)},
        {"seed", std::to_string(cfg.seed)},
        {"wall_time_s", af::io::format_double(wall)},
        {"version", ACTIVEFLUX_VERSION},
    };
    if (cfg.problem == "radial_shock" || cfg.problem == "vortex")
        af::io::write_radial_scatter(g, f, cfg.outdir + "/radial_scatter.csv");
    if (cfg.problem == "oblique_waves")
        man["l1_edge_error_p"] =
            af::io::format_double(af::problems::oblique_edge_error(g, f, g.c));
    af::io::write_manifest(man, cfg.outdir + "/manifest.txt");
    std::cout << "wrote " << cfg.outdir << " (steps=" << n_steps
              << ", t=" << f.time << ", wall=" << wall << "s)\n";
    return 0;
}

int cmd_converge(const std::vector<int>& ms, double cfl, double ct_end,
                 const std::string& out, bool serial) {
    const auto rows = af::problems::convergence_study(ms, cfl, ct_end, 1.0, !serial);
    std::ofstream os;
    std::ostream* target = &std::cout;
    if (!out.empty()) {
        os.open(out);
        if (!os) throw std::runtime_error("cannot open " + out);
        target = &os;
    }
    *target << "M,l1_error,observed_order\n";
    for (const auto& r : rows)
        *target << r.m << ',' << af::io::format_double(r.error) << ','
                << af::io::format_double(r.order) << '\n';
    return 0;
}

int cmd_analyze(int nk, double cfl, double dx, double dy, double c,
                const std::string& out, bool serial) {
    const af::Grid g(8, 8, dx, dy, c);
    const double dt = cfl * g.dt_max();
    const auto rows = af::sweep_symbol(g, dt, nk, nk, !serial);
    std::ofstream os;
    std::ostream* target = &std::cout;
    if (!out.empty()) {
        os.open(out);
        if (!os) throw std::runtime_error("cannot open " + out);
        target = &os;
    }
    *target << "kx,ky,dt,det_scaled,kernel_dim,spectral_radius\n";
    for (const auto& r : rows)
        *target << af::io::format_double(r.kx) << ',' << af::io::format_double(r.ky)
                << ',' << af::io::format_double(r.dt) << ','
                << af::io::format_double(r.det_scaled) << ',' << r.kernel_dim
                << ',' << af::io::format_double(r.spectral_radius) << '\n';
    double rho_max = 0.0;
    for (const auto& r : rows) rho_max = std::max(rho_max, r.spectral_radius);
    std::cerr << "max spectral radius over sweep: " << rho_max << '\n';
    return 0;
}

int cmd_stencil_dump(double dx, double dy, double rho, const std::string& cls,
                     const std::string& out) {
    const af::Grid g(8, 8, dx, dy, 1.0);
    af::TargetClass tc;
    if (cls == "node") tc = af::TargetClass::Node;
    else if (cls == "vedge") tc = af::TargetClass::VEdgeMid;
    else if (cls == "hedge") tc = af::TargetClass::HEdgeMid;
    else throw std::invalid_argument("class must be node, vedge or hedge");
    const auto s = af::build_stencil(g, rho, tc);
    if (out.empty()) {
        af::dump_stencil_csv(s, std::cout);
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot open " + out);
        af::dump_stencil_csv(s, os);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active flux solver for 2D linear acoustics on Cartesian grids"};
    app.require_subcommand(1);

    af::RunConfig cfg;
    std::string config_file;

    auto* run = app.add_subcommand("run", "run a problem and write snapshots");
    run->add_option("--config", config_file, "flat key = value config file");
    run->add_option("--problem", cfg.problem,
                    "vortex | oblique_waves | radial_shock | stationary_mode | custom");
    run->add_option("--nx", cfg.nx);
    run->add_option("--ny", cfg.ny);
    run->add_option("--dx", cfg.dx);
    run->add_option("--dy", cfg.dy);
    run->add_option("--c", cfg.c, "sound speed");
    run->add_option("--cfl", cfg.cfl);
    run->add_option("--t-end", cfg.t_end);
    run->add_option("--ct-end", cfg.ct_end);
    run->add_option("--output-every", cfg.output_every, "snapshot cadence in steps");
    run->add_option("--out", cfg.outdir);
    run->add_option("--seed", cfg.seed);
    run->add_option("--mode-mx", cfg.mode_mx);
    run->add_option("--mode-my", cfg.mode_my);
    run->add_option("--custom-prefix", cfg.custom_prefix);
    run->add_flag("--serial", cfg.serial, "disable the parallel kernels");

    std::vector<int> ms{25, 50, 100, 200};
    double cv_cfl = 0.45, cv_ct = 0.1;
    std::string cv_out;
    bool cv_serial = false;
    auto* conv = app.add_subcommand("converge", "oblique-waves grid convergence study");
    conv->add_option("--grids", ms, "grid sizes M");
    conv->add_option("--cfl", cv_cfl);
    conv->add_option("--ct-end", cv_ct);
    conv->add_option("--out", cv_out, "CSV output path (default stdout)");
    conv->add_flag("--serial", cv_serial);

    int an_nk = 32;
    double an_cfl = 0.99, an_dx = 1.0, an_dy = 1.0, an_c = 1.0;
    std::string an_out;
    bool an_serial = false;
    auto* an = app.add_subcommand("analyze", "wavenumber sweep of the one-step symbol");
    an->add_option("--nk", an_nk, "modes per direction");
    an->add_option("--cfl", an_cfl);
    an->add_option("--dx", an_dx);
    an->add_option("--dy", an_dy);
    an->add_option("--c", an_c);
    an->add_option("--out", an_out, "CSV output path (default stdout)");
    an->add_flag("--serial", an_serial);

    double sd_dx = 1.0, sd_dy = 1.0, sd_rho = 0.2;
    std::string sd_cls = "node", sd_out;
    auto* sd = app.add_subcommand("stencil-dump", "dump evolution stencil weights as CSV");
    sd->add_option("--dx", sd_dx);
    sd->add_option("--dy", sd_dy);
    sd->add_option("--rho", sd_rho, "evolution radius c*tau");
    sd->add_option("--class", sd_cls, "node | vedge | hedge");
    sd->add_option("--out", sd_out, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (!config_file.empty()) {
                // File provides base values, explicit command-line flags win.
                af::RunConfig merged = af::parse_config_file(config_file);
                if (run->count("--problem")) merged.problem = cfg.problem;
                if (run->count("--nx")) merged.nx = cfg.nx;
                if (run->count("--ny")) merged.ny = cfg.ny;
                if (run->count("--dx")) merged.dx = cfg.dx;
                if (run->count("--dy")) merged.dy = cfg.dy;
                if (run->count("--c")) merged.c = cfg.c;
                if (run->count("--cfl")) merged.cfl = cfg.cfl;
                if (run->count("--t-end")) merged.t_end = cfg.t_end;
                if (run->count("--ct-end")) merged.ct_end = cfg.ct_end;
                if (run->count("--output-every")) merged.output_every = cfg.output_every;
                if (run->count("--out")) merged.outdir = cfg.outdir;
                if (run->count("--seed")) merged.seed = cfg.seed;
                if (run->count("--mode-mx")) merged.mode_mx = cfg.mode_mx;
                if (run->count("--mode-my")) merged.mode_my = cfg.mode_my;
                if (run->count("--custom-prefix")) merged.custom_prefix = cfg.custom_prefix;
                if (run->count("--serial")) merged.serial = cfg.serial;
                return cmd_run(merged);
            }
            return cmd_run(cfg);
        }
        if (conv->parsed()) return cmd_converge(ms, cv_cfl, cv_ct, cv_out, cv_serial);
        if (an->parsed())
            return cmd_analyze(an_nk, an_cfl, an_dx, an_dy, an_c, an_out, an_serial);
        if (sd->parsed()) return cmd_stencil_dump(sd_dx, sd_dy, sd_rho, sd_cls, sd_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
