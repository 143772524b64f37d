// Command-line front end: error sweeps, analytic oracles, single solves with
// density dumps, and the boundary-layer diagnostic.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hfbem/analytic.hpp"
#include "hfbem/errors.hpp"
#include "hfbem/experiments.hpp"
#include "hfbem/galerkin.hpp"
#include "hfbem/kernels.hpp"
#include "hfbem/nystrom.hpp"

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw hfbem::IoError("cannot open output file '" + path + "'");
    return out;
}

void write_density_csv(const std::string& path, const hfbem::DiscreteDensity& total,
                       const hfbem::DiscreteDensity& slow) {
    std::ofstream out = open_output(path);
    out << "t,re_eta,im_eta,re_eta_slow,im_eta_slow\n";
    for (int i = 0; i < total.grid.n; ++i) {
        out << fmt17(total.grid.nodes[static_cast<std::size_t>(i)]) << ','
            << fmt17(total.values[i].real()) << ',' << fmt17(total.values[i].imag()) << ','
            << fmt17(slow.values[i].real()) << ',' << fmt17(slow.values[i].imag()) << '\n';
    }
    if (!out) throw hfbem::IoError("failed writing '" + path + "'");
}

void write_galerkin_csv(const std::string& path, const hfbem::GalerkinSolution& solution,
                        const hfbem::DiscreteDensity& reconstruction) {
    std::ofstream out = open_output(path);
    out << "t,re_eta_hat,im_eta_hat\n";
    for (int i = 0; i < reconstruction.grid.n; ++i) {
        out << fmt17(reconstruction.grid.nodes[static_cast<std::size_t>(i)]) << ','
            << fmt17(reconstruction.values[i].real()) << ','
            << fmt17(reconstruction.values[i].imag()) << '\n';
    }
    out << "\nregion,label,order,coeff_magnitude\n";
    const int per_region = solution.space.degree + 1;
    const auto& regions = solution.space.partition.regions;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        for (int n = 0; n < per_region; ++n) {
            const int idx = static_cast<int>(r) * per_region + n;
            const double magnitude =
                std::abs(solution.coefficients[idx]) * solution.column_scales[idx];
            out << r << ',' << regions[r].label << ',' << n << ',' << fmt17(magnitude) << '\n';
        }
    }
    if (!out) throw hfbem::IoError("failed writing '" + path + "'");
}

struct GeometryFlags {
    std::string kind = "circle";
    double radius = 1.0;
    double semi_a = 1.5;
    double semi_b = 0.5;
    double rotation = 0.0;
    std::vector<double> incidence{1.0, 0.0};
};

void add_geometry_flags(CLI::App* cmd, GeometryFlags& flags) {
    cmd->add_option("--geometry", flags.kind, "obstacle shape")
        ->check(CLI::IsMember({"circle", "ellipse"}))
        ->capture_default_str();
    cmd->add_option("--radius", flags.radius, "circle radius")->capture_default_str();
    cmd->add_option("--semi-a", flags.semi_a, "ellipse semi-axis a")->capture_default_str();
    cmd->add_option("--semi-b", flags.semi_b, "ellipse semi-axis b")->capture_default_str();
    cmd->add_option("--rotation", flags.rotation, "ellipse rotation (radians)")
        ->capture_default_str();
    cmd->add_option("--incidence", flags.incidence, "incidence direction (two components)")
        ->expected(2);
}

hfbem::GeometrySpec to_spec(const GeometryFlags& flags) {
    hfbem::GeometrySpec spec;
    spec.kind = flags.kind;
    spec.radius = flags.radius;
    spec.semi_a = flags.semi_a;
    spec.semi_b = flags.semi_b;
    spec.rotation = flags.rotation;
    return spec;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir, bool allow_large) {
    hfbem::SweepConfig config = hfbem::load_sweep_config(config_path);
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (allow_large) config.allow_large = true;

    const std::vector<hfbem::ErrorRecord> records = hfbem::run_sweep(config);
    for (const hfbem::ErrorRecord& r : records) {
        if (r.failed)
            std::printf("k=%-6g d=%-3d FAILED: %s\n", r.k, r.degree, r.message.c_str());
        else
            std::printf("k=%-6g d=%-3d dim=%-4d rel_l2_error=%.3e cond=%.2e%s\n", r.k, r.degree,
                        r.dimension, r.rel_l2_error, r.condition,
                        r.ill_conditioned ? " (least squares)" : "");
    }
    const int failures = hfbem::count_failures(records);
    if (failures < static_cast<int>(records.size()))
        hfbem::emit_plots(records, config.output_dir);
    std::printf("%zu cells, %d failed; outputs in %s\n", records.size(), failures,
                config.output_dir.c_str());
    return failures == 0 ? 0 : 1;
}

int cmd_oracle_circle(double k, const std::string& out_path, double radius, double ppw,
                      int truncation) {
    const hfbem::ParametricBoundary circle = hfbem::make_circle(radius);
    const hfbem::PeriodicGrid grid = hfbem::build_grid(circle, k, ppw);
    hfbem::CircleSeriesSpec series;
    series.radius = radius;
    series.k = k;
    series.direction = hfbem::Vec2(1.0, 0.0);
    series.truncation = truncation;
    const hfbem::DiscreteDensity total = hfbem::circle_density_on_grid(series, grid);
    const hfbem::IncidentWave wave(hfbem::Vec2(1.0, 0.0), k);
    const hfbem::DiscreteDensity slow = hfbem::slow_envelope(total, circle, wave);
    write_density_csv(out_path, total, slow);
    std::printf("analytic circle density: k=%g radius=%g n=%d -> %s\n", k, radius, grid.n,
                out_path.c_str());
    return 0;
}

int cmd_diag_layer(const GeometryFlags& flags, double k, double k2, double ppw) {
    const hfbem::ParametricBoundary curve = hfbem::make_geometry(to_spec(flags));
    const hfbem::Vec2 alpha =
        hfbem::Vec2(flags.incidence[0], flags.incidence[1]).normalized();
    const double high_k = k2 > 0.0 ? k2 : 8.0 * k;
    const hfbem::IncidentWave low(alpha, k);
    const hfbem::IncidentWave high(alpha, high_k);
    const double width_low = hfbem::boundary_layer_width(curve, low, ppw);
    const double width_high = hfbem::boundary_layer_width(curve, high, ppw);
    const double expected = std::cbrt(high_k / k);
    std::printf("layer width %s: k=%g -> %.6f, k=%g -> %.6f\n", flags.kind.c_str(), k, width_low,
                high_k, width_high);
    std::printf("ratio %.4f (k^(-1/3) scaling predicts %.4f)\n", width_low / width_high,
                expected);
    return 0;
}

int cmd_solve(const GeometryFlags& flags, double k, double ppw, const std::string& method_name,
              int degree, const std::string& dump_density, const std::string& dump_galerkin,
              int max_nodes) {
    const hfbem::Vec2 alpha =
        hfbem::Vec2(flags.incidence[0], flags.incidence[1]).normalized();
    const hfbem::ShadowResult shifted =
        hfbem::shadow_geometry(hfbem::make_geometry(to_spec(flags)), alpha);
    const hfbem::IncidentWave wave(alpha, k);
    const hfbem::PeriodicGrid grid = hfbem::build_grid(shifted.curve, k, ppw, max_nodes);
    const hfbem::KernelSplit kernel(shifted.curve, k);
    const hfbem::NystromSystem system = hfbem::assemble(kernel, wave, grid);
    const hfbem::ReferenceSolution reference = hfbem::solve_reference(system);
    std::printf("%s k=%g: n=%d residual=%.2e\n", flags.kind.c_str(), k, grid.n,
                reference.residual);

    if (!dump_density.empty()) {
        const hfbem::DiscreteDensity slow =
            hfbem::slow_envelope(reference.density, shifted.curve, wave);
        write_density_csv(dump_density, reference.density, slow);
        std::printf("density -> %s\n", dump_density.c_str());
    }

    if (!method_name.empty()) {
        const hfbem::MethodKind method = hfbem::parse_method(method_name);
        const hfbem::Space space =
            method == hfbem::MethodKind::FrequencyAdapted
                ? hfbem::make_freq_adapted_space(shifted.curve, wave, shifted.shadow, degree)
                : hfbem::make_cov_space(shifted.curve, wave, shifted.shadow, degree);
        const hfbem::GalerkinSolution solution = hfbem::galerkin_solve(system, space);
        const hfbem::DiscreteDensity recon = hfbem::reconstruct(solution, grid);
        const double rel_err = hfbem::l2_error(recon, reference.density);
        std::printf("%s d=%d: dim=%d rel_l2_error=%.3e cond=%.2e%s\n", method_name.c_str(),
                    degree, hfbem::dimension(space), rel_err, solution.condition,
                    solution.ill_conditioned ? " (least squares)" : "");
        if (!dump_galerkin.empty()) {
            write_galerkin_csv(dump_galerkin, solution, recon);
            std::printf("galerkin density -> %s\n", dump_galerkin.c_str());
        }
    } else if (!dump_galerkin.empty()) {
        throw hfbem::ConfigError("--dump-galerkin requires --method");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-frequency convex-obstacle acoustic scattering solver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    bool allow_large = false;
    CLI::App* sweep = app.add_subcommand("sweep", "Run an error sweep from a config file");
    sweep->add_option("--config", config_path, "key = value config file")->required();
    sweep->add_option("--out", out_dir, "override the configured output directory");
    sweep->add_flag("--allow-large", allow_large, "permit wavenumbers above 400");

    double oracle_k = 50.0;
    std::string oracle_out;
    double oracle_radius = 1.0;
    double oracle_ppw = 12.0;
    int oracle_truncation = 0;
    CLI::App* oracle = app.add_subcommand("oracle", "Analytic reference outputs");
    oracle->require_subcommand(1);
    CLI::App* oracle_circle =
        oracle->add_subcommand("circle", "Dump the analytic circle boundary density");
    oracle_circle->add_option("--k", oracle_k, "wavenumber")->required();
    oracle_circle->add_option("--out", oracle_out, "output CSV path")->required();
    oracle_circle->add_option("--radius", oracle_radius, "circle radius")->capture_default_str();
    oracle_circle->add_option("--ppw", oracle_ppw, "grid points per wavelength")
        ->capture_default_str();
    oracle_circle->add_option("--truncation", oracle_truncation,
                              "series truncation override (0 = automatic)");

    GeometryFlags layer_flags;
    double layer_k = 50.0;
    double layer_k2 = 0.0;
    double layer_ppw = 12.0;
    CLI::App* diag = app.add_subcommand("diag", "Diagnostics");
    diag->require_subcommand(1);
    CLI::App* layer =
        diag->add_subcommand("layer", "Shadow-boundary layer width and its wavenumber scaling");
    layer->add_option("--k", layer_k, "base wavenumber")->required();
    layer->add_option("--k2", layer_k2, "comparison wavenumber (default 8k)");
    layer->add_option("--ppw", layer_ppw, "grid points per wavelength")->capture_default_str();
    add_geometry_flags(layer, layer_flags);

    GeometryFlags solve_flags;
    double solve_k = 50.0;
    double solve_ppw = 12.0;
    std::string solve_method;
    int solve_degree = 8;
    std::string dump_density;
    std::string dump_galerkin;
    int solve_max_nodes = 20000;
    bool solve_allow_large = false;
    CLI::App* solve = app.add_subcommand("solve", "Single solve with optional density dumps");
    solve->add_option("--k", solve_k, "wavenumber")->required();
    solve->add_option("--ppw", solve_ppw, "grid points per wavelength")->capture_default_str();
    solve->add_option("--method", solve_method, "also run a trial-space solve")
        ->check(CLI::IsMember({"freq_adapted", "cov"}));
    solve->add_option("--degree", solve_degree, "trial-space polynomial degree")
        ->capture_default_str();
    solve->add_option("--dump-density", dump_density,
                      "CSV of t, Re/Im total density, Re/Im slow envelope");
    solve->add_option("--dump-galerkin", dump_galerkin,
                      "CSV of the trial-space density and coefficient magnitudes");
    solve->add_option("--max-nodes", solve_max_nodes, "grid size cap")->capture_default_str();
    solve->add_flag("--allow-large", solve_allow_large, "raise the grid size cap to 60000");
    add_geometry_flags(solve, solve_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(config_path, out_dir, allow_large);
        if (oracle_circle->parsed())
            return cmd_oracle_circle(oracle_k, oracle_out, oracle_radius, oracle_ppw,
                                     oracle_truncation);
        if (layer->parsed()) return cmd_diag_layer(layer_flags, layer_k, layer_k2, layer_ppw);
        if (solve->parsed())
            return cmd_solve(solve_flags, solve_k, solve_ppw, solve_method, solve_degree,
                             dump_density, dump_galerkin,
                             solve_allow_large ? 60000 : solve_max_nodes);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
