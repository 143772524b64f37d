#ifndef HFBEM_EXPERIMENTS_HPP
#define HFBEM_EXPERIMENTS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hfbem/galerkin.hpp"
#include "hfbem/nystrom.hpp"
#include "hfbem/spaces.hpp"

namespace hfbem {

/// Obstacle description as it appears in sweep config files. `kind` selects
/// the shape: "circle" uses `radius`, "ellipse" uses the semi-axes and the
/// rotation angle (radians); the unused fields are ignored.
struct GeometrySpec {
    std::string kind{"circle"};
    double radius{1.0};
    double semi_a{1.5};
    double semi_b{0.5};
    double rotation{0.0};
};

/// Builds the boundary curve described by `spec`. Unknown `kind` raises
/// ConfigError; invalid dimensions propagate std::invalid_argument from the
/// curve factories.
ParametricBoundary make_geometry(const GeometrySpec& spec);

/// One full error-sweep request: a single geometry and method, evaluated on
/// the cross product of the wavenumber and degree lists. The default lists
/// are the largest set that runs without the large-problem opt-in; higher
/// wavenumbers (above 400) are accepted only with `allow_large` because the
/// dense reference matrices grow quadratically.
struct SweepConfig {
    GeometrySpec geometry{};
    Vec2 incidence{1.0, 0.0};
    std::vector<double> wavenumbers{50.0, 100.0, 200.0, 400.0};
    std::vector<int> degrees{4, 8, 12, 16, 20};
    MethodKind method{MethodKind::ChangeOfVariables};
    FreqAdaptedParams freq_adapted{};
    CovParams cov{};
    double ppw{12.0};
    double reference_ppw{16.0};
    int max_nodes{20000};
    bool allow_large{false};
    std::string output_dir{"."};
};

/// Canonical short name of a method ("freq_adapted" or "cov").
const char* method_name(MethodKind method);

/// Inverse of method_name; throws ConfigError for unknown names.
MethodKind parse_method(const std::string& name);

/// Parses the `key = value` sweep config format. Lines may carry `#`
/// comments; lists are comma separated and may be wrapped in brackets.
/// Recognized keys: geometry, radius, semi_a, semi_b, rotation_rad,
/// incidence, k, d, method, levels, xi1, xi2, zeta1, zeta2, xi1_prime,
/// xi2_prime, zeta1_prime, zeta2_prime, ppw, reference_ppw, max_nodes,
/// allow_large, output_dir. Unknown keys or malformed values raise
/// ConfigError.
SweepConfig parse_sweep_config(std::istream& in);

/// Reads and parses a sweep config file; missing file raises IoError.
SweepConfig load_sweep_config(const std::string& path);

/// Result of one sweep cell (one wavenumber/degree pair). `rel_l2_error` is
/// the discrete relative L2 distance between the Galerkin reconstruction and
/// the reference density; `log10_error` is log10 of the corresponding
/// absolute L2 error. Cells that raised an error keep `failed = true` and
/// the message, with the numeric fields zeroed.
struct ErrorRecord {
    double k{0.0};
    int degree{0};
    MethodKind method{MethodKind::ChangeOfVariables};
    int dimension{0};
    double rel_l2_error{0.0};
    double log10_error{0.0};
    double wall_time_seconds{0.0};
    double condition{0.0};
    bool ill_conditioned{false};
    bool failed{false};
    std::string message{};
};

/// Everything that is shared between sweep cells of one wavenumber: the
/// reparameterized curve (shadow points symmetric about the period), the
/// assembled collocation system on the method grid, and the reference
/// density. For the circle the reference is the analytic series on the
/// method grid; otherwise it is a solver run on a finer grid
/// (`reference_ppw`), so reconstructions are compared off the assembly grid.
struct ScatteringCase {
    ParametricBoundary curve;
    ShadowGeometry shadow;
    IncidentWave wave;
    PeriodicGrid grid;
    NystromSystem system;
    PeriodicGrid reference_grid;
    DiscreteDensity reference;
};

/// Builds the shared per-wavenumber state. The reference solve runs before
/// the method-grid assembly so the two dense matrices never coexist.
/// `incidence` is normalized here; a zero vector raises ConfigError.
ScatteringCase prepare_case(const GeometrySpec& geometry, const Vec2& incidence, double k,
                            double ppw, double reference_ppw, int max_nodes = 20000);

/// Solves one cell on a prepared case: builds the trial space, runs the
/// projected solve, reconstructs on the reference grid and measures errors.
/// When `reconstruction` is non-null, the reconstructed density on the
/// reference grid is stored there (for pointwise error dumps). Errors
/// propagate; run_sweep converts them to failed records.
ErrorRecord solve_cell(const ScatteringCase& scattering, MethodKind method, int degree,
                       const FreqAdaptedParams& fa_params, const CovParams& cov_params,
                       DiscreteDensity* reconstruction = nullptr);

/// Runs the full sweep. Writes into `output_dir`:
///   - `sweep.csv`: one row per successful cell, fixed 17-significant-digit
///     formatting, no timestamps or timings (byte-stable across runs);
///   - `pointwise_error_k<k>.csv`: per wavenumber, node parameter vs
///     log10 absolute pointwise error for each successful degree;
///   - `run.log`: timestamped progress, wall times and failure reports.
/// Cell failures are recorded and the sweep continues; the returned sequence
/// contains every requested cell exactly once (failed ones flagged).
std::vector<ErrorRecord> run_sweep(const SweepConfig& config);

/// Number of failed records (CLI exit-code helper).
int count_failures(const std::vector<ErrorRecord>& records);

/// Writes `error_vs_degree.dat` (rows: degree; columns: log10 absolute L2
/// error, one per wavenumber, "nan" for missing cells) and a matching
/// gnuplot stub into `output_dir`. Output is byte-stable for identical
/// records. Failed records are ignored; an empty or duplicate-cell record
/// set raises std::invalid_argument before any file is touched, and an
/// unwritable directory raises IoError.
void emit_plots(const std::vector<ErrorRecord>& records, const std::string& output_dir);

/// Largest slow-envelope magnitude over the deep-shadow quarter arc (the
/// quarter of the boundary centered on the point diametrically opposite the
/// illuminated side, in parameter distance). Uses a reference solve at the
/// given resolution.
double deep_shadow_peak(const ParametricBoundary& curve, const IncidentWave& wave,
                        double ppw = 12.0);

/// Width of the shadow-boundary transition layer of the slow envelope,
/// averaged over both shadow points: within a window of half-width
/// min(1.5, 6 k^{-1/3}) around each shadow point, the envelope magnitude is
/// scanned from its local maximum toward the shadow side, and the width is
/// the parameter distance between the interpolated downward crossings of
/// 70% and 30% of that maximum. Raises DiagnosticError when no such
/// transition is found (flat envelope).
double boundary_layer_width(const ParametricBoundary& curve, const IncidentWave& wave,
                            double ppw = 12.0);

/// Ratio boundary_layer_width(low) / boundary_layer_width(high) for two
/// waves with the same direction. The asymptotic layer width scales like
/// k^{-1/3}, so an eightfold wavenumber step should give a ratio near 2;
/// identical waves give exactly 1.
double boundary_layer_diagnostic(const ParametricBoundary& curve, const IncidentWave& low,
                                 const IncidentWave& high, double ppw = 12.0);

} // namespace hfbem

#endif
