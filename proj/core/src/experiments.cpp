#include "hfbem/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

#include "hfbem/analytic.hpp"
#include "hfbem/errors.hpp"
#include "hfbem/kernels.hpp"

namespace hfbem {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_compact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void bad_value(int lineno, const std::string& key, const std::string& what) {
    std::ostringstream msg;
    msg << "sweep config line " << lineno << ", key '" << key << "': " << what;
    throw ConfigError(msg.str());
}

double to_number(int lineno, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v.empty()) bad_value(lineno, key, "empty value");
    char* end = nullptr;
    const double parsed = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || !std::isfinite(parsed))
        bad_value(lineno, key, "expected a finite number, got '" + v + "'");
    return parsed;
}

int to_int(int lineno, const std::string& key, const std::string& value) {
    const double parsed = to_number(lineno, key, value);
    if (parsed != std::floor(parsed) || std::abs(parsed) > 1e9)
        bad_value(lineno, key, "expected an integer, got '" + trim(value) + "'");
    return static_cast<int>(parsed);
}

bool to_bool(int lineno, const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    bad_value(lineno, key, "expected true/false, got '" + v + "'");
}

std::vector<double> to_list(int lineno, const std::string& key, const std::string& value) {
    std::string v = trim(value);
    if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = trim(v.substr(1, v.size() - 2));
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        std::size_t comma = v.find(',', pos);
        if (comma == std::string::npos) comma = v.size();
        out.push_back(to_number(lineno, key, v.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) bad_value(lineno, key, "empty list");
    return out;
}

double require_positive(int lineno, const std::string& key, double v) {
    if (!(v > 0.0)) bad_value(lineno, key, "must be positive");
    return v;
}

std::string timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tmv{};
    localtime_r(&now, &tmv);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%d %H:%M:%S", &tmv);
    return buf;
}

std::string join_list(const std::vector<double>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += fmt_compact(vs[i]);
    }
    return out;
}

std::string join_list(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void ensure_directory(const std::string& dir) {
    try {
        if (!dir.empty()) std::filesystem::create_directories(dir);
    } catch (const std::filesystem::filesystem_error& e) {
        throw IoError(std::string("cannot create output directory: ") + e.what());
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    return out;
}

} // namespace

const char* method_name(MethodKind method) {
    return method == MethodKind::FrequencyAdapted ? "freq_adapted" : "cov";
}

MethodKind parse_method(const std::string& name) {
    if (name == "freq_adapted") return MethodKind::FrequencyAdapted;
    if (name == "cov") return MethodKind::ChangeOfVariables;
    throw ConfigError("unknown method '" + name + "' (expected freq_adapted or cov)");
}

ParametricBoundary make_geometry(const GeometrySpec& spec) {
    if (spec.kind == "circle") return make_circle(spec.radius);
    if (spec.kind == "ellipse") return make_ellipse(spec.semi_a, spec.semi_b, spec.rotation);
    throw ConfigError("unknown geometry '" + spec.kind + "' (expected circle or ellipse)");
}

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string s = trim(line);
        if (s.empty()) continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "sweep config line " << lineno << ": expected 'key = value'";
            throw ConfigError(msg.str());
        }
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) bad_value(lineno, key, "missing key or value");

        if (key == "geometry") {
            if (value != "circle" && value != "ellipse")
                bad_value(lineno, key, "expected circle or ellipse");
            cfg.geometry.kind = value;
        } else if (key == "radius") {
            cfg.geometry.radius = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "semi_a") {
            cfg.geometry.semi_a = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "semi_b") {
            cfg.geometry.semi_b = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "rotation_rad") {
            cfg.geometry.rotation = to_number(lineno, key, value);
        } else if (key == "incidence") {
            const std::vector<double> v = to_list(lineno, key, value);
            if (v.size() != 2) bad_value(lineno, key, "expected two components");
            cfg.incidence = Vec2(v[0], v[1]);
        } else if (key == "k") {
            cfg.wavenumbers = to_list(lineno, key, value);
            for (double k : cfg.wavenumbers)
                if (!(k > 1.0)) bad_value(lineno, key, "wavenumbers must exceed 1");
        } else if (key == "d") {
            const std::vector<double> v = to_list(lineno, key, value);
            cfg.degrees.clear();
            for (double d : v) {
                if (d != std::floor(d) || d < 1.0 || d > 1e6)
                    bad_value(lineno, key, "degrees must be integers >= 1");
                cfg.degrees.push_back(static_cast<int>(d));
            }
        } else if (key == "method") {
            cfg.method = parse_method(value);
        } else if (key == "levels") {
            const int m = to_int(lineno, key, value);
            if (m < 0) bad_value(lineno, key, "levels must be >= 0 (0 selects the default rule)");
            cfg.freq_adapted.m = m;
        } else if (key == "xi1") {
            const double v = require_positive(lineno, key, to_number(lineno, key, value));
            cfg.freq_adapted.xi1 = v;
            cfg.cov.xi1 = v;
        } else if (key == "xi2") {
            const double v = require_positive(lineno, key, to_number(lineno, key, value));
            cfg.freq_adapted.xi2 = v;
            cfg.cov.xi2 = v;
        } else if (key == "zeta1") {
            const double v = require_positive(lineno, key, to_number(lineno, key, value));
            cfg.freq_adapted.zeta1 = v;
            cfg.cov.zeta1 = v;
        } else if (key == "zeta2") {
            const double v = require_positive(lineno, key, to_number(lineno, key, value));
            cfg.freq_adapted.zeta2 = v;
            cfg.cov.zeta2 = v;
        } else if (key == "xi1_prime") {
            cfg.cov.xi1p = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "xi2_prime") {
            cfg.cov.xi2p = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "zeta1_prime") {
            cfg.cov.zeta1p = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "zeta2_prime") {
            cfg.cov.zeta2p = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "ppw") {
            cfg.ppw = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "reference_ppw") {
            cfg.reference_ppw = require_positive(lineno, key, to_number(lineno, key, value));
        } else if (key == "max_nodes") {
            const int n = to_int(lineno, key, value);
            if (n < 8) bad_value(lineno, key, "max_nodes must be >= 8");
            cfg.max_nodes = n;
        } else if (key == "allow_large") {
            cfg.allow_large = to_bool(lineno, key, value);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else {
            bad_value(lineno, key, "unknown config key");
        }
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sweep config '" + path + "'");
    return parse_sweep_config(in);
}

ScatteringCase prepare_case(const GeometrySpec& geometry, const Vec2& incidence, double k,
                            double ppw, double reference_ppw, int max_nodes) {
    const double nrm = incidence.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw ConfigError("incidence direction must be a finite nonzero vector");
    const Vec2 alpha = incidence / nrm;

    ShadowResult shifted = shadow_geometry(make_geometry(geometry), alpha);
    const IncidentWave wave(alpha, k);
    PeriodicGrid grid = build_grid(shifted.curve, k, ppw, max_nodes);
    const KernelSplit kernel(shifted.curve, k);

    PeriodicGrid reference_grid;
    DiscreteDensity reference;
    if (geometry.kind == "circle") {
        // The reparameterized curve puts the deep-shadow point at parameter
        // 0, so on a circle the angle measured from the incidence direction
        // is exactly t / radius regardless of where the wave comes from;
        // the series can always be evaluated with direction (1, 0).
        reference_grid = grid;
        CircleSeriesSpec series;
        series.radius = geometry.radius;
        series.k = k;
        series.direction = Vec2(1.0, 0.0);
        reference = circle_density_on_grid(series, reference_grid);
    } else {
        reference_grid = build_grid(shifted.curve, k, reference_ppw, max_nodes);
        // Scoped so the fine-grid matrix is released before the method-grid
        // assembly below; at high wavenumbers the two together would double
        // the peak memory.
        NystromSystem reference_system = assemble(kernel, wave, reference_grid);
        reference = solve_reference(reference_system).density;
    }

    NystromSystem system = assemble(kernel, wave, grid);
    return ScatteringCase{std::move(shifted.curve), shifted.shadow,         wave,
                          std::move(grid),          std::move(system),     std::move(reference_grid),
                          std::move(reference)};
}

ErrorRecord solve_cell(const ScatteringCase& scattering, MethodKind method, int degree,
                       const FreqAdaptedParams& fa_params, const CovParams& cov_params,
                       DiscreteDensity* reconstruction) {
    const auto start = std::chrono::steady_clock::now();
    const Space space =
        method == MethodKind::FrequencyAdapted
            ? make_freq_adapted_space(scattering.curve, scattering.wave, scattering.shadow,
                                      degree, fa_params)
            : make_cov_space(scattering.curve, scattering.wave, scattering.shadow, degree,
                             cov_params);
    const GalerkinSolution solution = galerkin_solve(scattering.system, space);
    DiscreteDensity recon = reconstruct(solution, scattering.reference_grid);

    ErrorRecord record;
    record.k = scattering.wave.k;
    record.degree = degree;
    record.method = method;
    record.dimension = dimension(space);
    record.rel_l2_error = l2_error(recon, scattering.reference);
    const double abs_error = record.rel_l2_error * l2_norm(scattering.reference);
    record.log10_error = std::log10(std::max(abs_error, 1e-300));
    record.condition = solution.condition;
    record.ill_conditioned = solution.ill_conditioned;
    record.wall_time_seconds = seconds_since(start);
    if (reconstruction) *reconstruction = std::move(recon);
    return record;
}

namespace {

void write_sweep_csv(const std::string& path, const std::vector<ErrorRecord>& records) {
    std::ofstream out = open_output(path);
    out << "k,d,method,dim,rel_l2_error,log10_abs_l2_error,condition,ill_conditioned\n";
    for (const ErrorRecord& r : records) {
        if (r.failed) continue;
        out << fmt17(r.k) << ',' << r.degree << ',' << method_name(r.method) << ','
            << r.dimension << ',' << fmt17(r.rel_l2_error) << ',' << fmt17(r.log10_error) << ','
            << fmt17(r.condition) << ',' << (r.ill_conditioned ? 1 : 0) << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

void write_pointwise_csv(const std::string& path, const PeriodicGrid& grid,
                         const DiscreteDensity& reference,
                         const std::vector<std::pair<int, Eigen::VectorXcd>>& reconstructions) {
    std::ofstream out = open_output(path);
    out << "t";
    for (const auto& entry : reconstructions) out << ",log10_abs_err_d" << entry.first;
    out << '\n';
    for (int i = 0; i < grid.n; ++i) {
        out << fmt17(grid.nodes[static_cast<std::size_t>(i)]);
        for (const auto& entry : reconstructions) {
            const double diff = std::abs(reference.values[i] - entry.second[i]);
            out << ',' << fmt17(std::log10(std::max(diff, 1e-300)));
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

ErrorRecord failed_record(double k, int degree, MethodKind method, const std::string& message) {
    ErrorRecord record;
    record.k = k;
    record.degree = degree;
    record.method = method;
    record.failed = true;
    record.message = message;
    return record;
}

} // namespace

std::vector<ErrorRecord> run_sweep(const SweepConfig& config) {
    if (config.wavenumbers.empty()) throw ConfigError("sweep needs at least one wavenumber");
    if (config.degrees.empty()) throw ConfigError("sweep needs at least one degree");
    for (double k : config.wavenumbers) {
        if (!(k > 1.0)) throw ConfigError("sweep wavenumbers must exceed 1");
        if (k > 400.0 && !config.allow_large)
            throw ConfigError("wavenumber " + fmt_compact(k) +
                              " exceeds the default cap of 400; set allow_large to opt in");
    }
    for (int d : config.degrees)
        if (d < 1) throw ConfigError("sweep degrees must be >= 1");

    ensure_directory(config.output_dir);
    const std::string dir = config.output_dir.empty() ? "." : config.output_dir;
    std::ofstream log = open_output(dir + "/run.log");
    log << '[' << timestamp() << "] sweep start: geometry=" << config.geometry.kind
        << " method=" << method_name(config.method) << " k={" << join_list(config.wavenumbers)
        << "} d={" << join_list(config.degrees) << "} ppw=" << fmt_compact(config.ppw)
        << " reference_ppw=" << fmt_compact(config.reference_ppw) << '\n'
        << std::flush;

    std::vector<ErrorRecord> records;
    records.reserve(config.wavenumbers.size() * config.degrees.size());
    for (double k : config.wavenumbers) {
        const auto setup_start = std::chrono::steady_clock::now();
        std::unique_ptr<ScatteringCase> scattering;
        try {
            scattering = std::make_unique<ScatteringCase>(
                prepare_case(config.geometry, config.incidence, k, config.ppw,
                             config.reference_ppw, config.max_nodes));
        } catch (const std::exception& e) {
            log << '[' << timestamp() << "] k=" << fmt_compact(k)
                << ": case setup FAILED: " << e.what() << '\n'
                << std::flush;
            for (int d : config.degrees)
                records.push_back(failed_record(k, d, config.method, e.what()));
            continue;
        }
        log << '[' << timestamp() << "] k=" << fmt_compact(k) << ": grid n=" << scattering->grid.n
            << " reference n=" << scattering->reference_grid.n << " setup "
            << fmt_compact(seconds_since(setup_start)) << " s\n"
            << std::flush;

        std::vector<std::pair<int, Eigen::VectorXcd>> reconstructions;
        for (int d : config.degrees) {
            try {
                DiscreteDensity recon{DensityKind::Total, scattering->reference_grid,
                                      Eigen::VectorXcd()};
                ErrorRecord record = solve_cell(*scattering, config.method, d,
                                                config.freq_adapted, config.cov, &recon);
                log << '[' << timestamp() << "] k=" << fmt_compact(k) << " d=" << d
                    << ": dim=" << record.dimension
                    << " rel_err=" << fmt_compact(record.rel_l2_error)
                    << " cond=" << fmt_compact(record.condition)
                    << (record.ill_conditioned ? " (least-squares fallback)" : "") << " time "
                    << fmt_compact(record.wall_time_seconds) << " s\n"
                    << std::flush;
                reconstructions.emplace_back(d, std::move(recon.values));
                records.push_back(std::move(record));
            } catch (const std::exception& e) {
                log << '[' << timestamp() << "] k=" << fmt_compact(k) << " d=" << d
                    << ": FAILED: " << e.what() << '\n'
                    << std::flush;
                records.push_back(failed_record(k, d, config.method, e.what()));
            }
        }
        if (!reconstructions.empty())
            write_pointwise_csv(dir + "/pointwise_error_k" + fmt_compact(k) + ".csv",
                                scattering->reference_grid, scattering->reference,
                                reconstructions);
    }

    write_sweep_csv(dir + "/sweep.csv", records);
    const int failures = count_failures(records);
    log << '[' << timestamp() << "] sweep done: " << records.size() << " cells, " << failures
        << " failed\n";
    return records;
}

int count_failures(const std::vector<ErrorRecord>& records) {
    int n = 0;
    for (const ErrorRecord& r : records)
        if (r.failed) ++n;
    return n;
}

void emit_plots(const std::vector<ErrorRecord>& records, const std::string& output_dir) {
    std::map<std::pair<double, int>, double> cells;
    std::set<double> ks;
    std::set<int> ds;
    for (const ErrorRecord& r : records) {
        if (r.failed) continue;
        if (!cells.emplace(std::make_pair(r.k, r.degree), r.log10_error).second)
            throw std::invalid_argument("emit_plots: duplicate record for one (k, d) cell");
        ks.insert(r.k);
        ds.insert(r.degree);
    }
    if (cells.empty()) throw std::invalid_argument("emit_plots: no successful records");

    ensure_directory(output_dir);
    const std::string dir = output_dir.empty() ? "." : output_dir;

    {
        std::ofstream dat = open_output(dir + "/error_vs_degree.dat");
        dat << "# d";
        for (double k : ks) dat << " log10_err_k" << fmt_compact(k);
        dat << '\n';
        for (int d : ds) {
            dat << d;
            for (double k : ks) {
                const auto it = cells.find(std::make_pair(k, d));
                dat << ' ' << (it == cells.end() ? std::string("nan") : fmt17(it->second));
            }
            dat << '\n';
        }
        if (!dat) throw IoError("failed writing '" + dir + "/error_vs_degree.dat'");
    }

    std::ofstream gp = open_output(dir + "/error_vs_degree.gnuplot");
    gp << "# Plot stub for error_vs_degree.dat (column i+1 = wavenumber i below).\n"
          "set xlabel \"polynomial degree d\"\n"
          "set ylabel \"log10 L2 error\"\n"
          "set key outside\n"
          "plot \\\n";
    int column = 2;
    for (auto it = ks.begin(); it != ks.end(); ++it, ++column) {
        gp << "  \"error_vs_degree.dat\" using 1:" << column << " with linespoints title \"k="
           << fmt_compact(*it) << '"';
        gp << (std::next(it) == ks.end() ? "\n" : ", \\\n");
    }
    if (!gp) throw IoError("failed writing '" + dir + "/error_vs_degree.gnuplot'");
}

namespace {

DiscreteDensity reference_slow_envelope(const ParametricBoundary& curve, const IncidentWave& wave,
                                        double ppw, ShadowGeometry* shadow_out) {
    ShadowResult shifted = shadow_geometry(curve, wave.direction);
    const PeriodicGrid grid = build_grid(shifted.curve, wave.k, ppw);
    const KernelSplit kernel(shifted.curve, wave.k);
    const NystromSystem system = assemble(kernel, wave, grid);
    const DiscreteDensity total = solve_reference(system).density;
    if (shadow_out) *shadow_out = shifted.shadow;
    return slow_envelope(total, shifted.curve, wave);
}

// Interpolated parameter offset where the magnitude sequence drops through
// `level` between samples j and j+1.
double crossing_offset(const std::vector<std::pair<double, double>>& pts, std::size_t j,
                       double level) {
    const double o0 = pts[j].first;
    const double o1 = pts[j + 1].first;
    const double a0 = pts[j].second;
    const double a1 = pts[j + 1].second;
    return o0 + (o1 - o0) * (level - a0) / (a1 - a0);
}

} // namespace

double deep_shadow_peak(const ParametricBoundary& curve, const IncidentWave& wave, double ppw) {
    ShadowGeometry shadow{};
    const DiscreteDensity slow = reference_slow_envelope(curve, wave, ppw, &shadow);
    const double period = slow.grid.period;
    const double mid = 0.5 * (shadow.t1 + shadow.t2) + 0.5 * period;
    double peak = 0.0;
    for (int i = 0; i < slow.grid.n; ++i) {
        const double off = std::remainder(slow.grid.nodes[static_cast<std::size_t>(i)] - mid,
                                          period);
        if (std::abs(off) <= period / 8.0) peak = std::max(peak, std::abs(slow.values[i]));
    }
    return peak;
}

double boundary_layer_width(const ParametricBoundary& curve, const IncidentWave& wave,
                            double ppw) {
    ShadowGeometry shadow{};
    const DiscreteDensity slow = reference_slow_envelope(curve, wave, ppw, &shadow);
    const double period = slow.grid.period;
    const double window = std::min(1.5, 6.0 * std::pow(wave.k, -1.0 / 3.0));

    const struct {
        double t;
        double toward_illuminated;
    } boundaries[2] = {{shadow.t1, 1.0}, {shadow.t2, -1.0}};

    double width_sum = 0.0;
    for (const auto& sb : boundaries) {
        // Offsets are oriented so positive values lie on the illuminated
        // side; the transition is scanned in decreasing offset (into the
        // shadow).
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < slow.grid.n; ++i) {
            const double off =
                sb.toward_illuminated *
                std::remainder(slow.grid.nodes[static_cast<std::size_t>(i)] - sb.t, period);
            if (std::abs(off) <= window)
                pts.emplace_back(off, std::abs(slow.values[i]));
        }
        std::sort(pts.begin(), pts.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        if (pts.size() < 8)
            throw DiagnosticError("boundary layer window holds too few grid nodes");

        std::size_t imax = 0;
        for (std::size_t j = 1; j < pts.size(); ++j)
            if (pts[j].second > pts[imax].second) imax = j;
        const double peak = pts[imax].second;
        if (!(peak > 0.0)) throw DiagnosticError("slow envelope vanishes near a shadow point");
        const double hi = 0.7 * peak;
        const double lo = 0.3 * peak;

        double upper = std::numeric_limits<double>::quiet_NaN();
        double lower = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t j = imax; j + 1 < pts.size(); ++j) {
            const double a0 = pts[j].second;
            const double a1 = pts[j + 1].second;
            if (std::isnan(upper) && a0 >= hi && a1 < hi) upper = crossing_offset(pts, j, hi);
            if (!std::isnan(upper) && a0 >= lo && a1 < lo) {
                lower = crossing_offset(pts, j, lo);
                break;
            }
        }
        if (std::isnan(upper) || std::isnan(lower))
            throw DiagnosticError("boundary layer not detected: envelope has no 70%-30% drop");
        width_sum += upper - lower;
    }
    return 0.5 * width_sum;
}

double boundary_layer_diagnostic(const ParametricBoundary& curve, const IncidentWave& low,
                                 const IncidentWave& high, double ppw) {
    if ((low.direction - high.direction).norm() > 1e-14)
        throw std::invalid_argument("layer diagnostic expects a shared incidence direction");
    const double width_low = boundary_layer_width(curve, low, ppw);
    const double width_high = boundary_layer_width(curve, high, ppw);
    return width_low / width_high;
}

} // namespace hfbem
