#include "hfbem/nystrom.hpp"

#include "hfbem/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hfbem {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_grid(const PeriodicGrid& grid) {
    if (grid.n < 4 || grid.n % 2 != 0) {
        throw std::invalid_argument("grid size must be even and at least 4");
    }
    if (!(grid.period > 0.0) || !std::isfinite(grid.period)) {
        throw std::invalid_argument("grid period must be positive and finite");
    }
    if (static_cast<int>(grid.nodes.size()) != grid.n) {
        throw std::invalid_argument("grid node count does not match n");
    }
}

void require_same_period(double a, double b, const char* what) {
    if (std::abs(a - b) > 1e-10 * std::max(a, b)) {
        throw std::invalid_argument(std::string(what) + ": period mismatch between grid and curve");
    }
}

} // namespace

PeriodicGrid build_grid(const ParametricBoundary& curve, double k, double ppw, int max_nodes) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("build_grid: wavenumber must be positive and finite");
    }
    if (!std::isfinite(ppw) || ppw < 4.0) {
        throw std::invalid_argument("build_grid: at least 4 points per wavelength are required");
    }
    if (max_nodes < 4) {
        throw std::invalid_argument("build_grid: max_nodes must be at least 4");
    }
    const double length = curve.period();
    const double raw = ppw * k * length / (2.0 * kPi);
    long long n = static_cast<long long>(std::ceil(raw));
    if (n % 2 != 0) ++n;
    if (n < 8) n = 8;
    if (n > static_cast<long long>(max_nodes)) {
        throw ResourceError("build_grid: " + std::to_string(n) + " nodes requested, cap is " +
                            std::to_string(max_nodes));
    }
    PeriodicGrid grid;
    grid.period = length;
    grid.n = static_cast<int>(n);
    grid.nodes.resize(static_cast<std::size_t>(n));
    const double h = length / static_cast<double>(n);
    for (int j = 0; j < grid.n; ++j) grid.nodes[static_cast<std::size_t>(j)] = h * static_cast<double>(j);
    return grid;
}

std::vector<double> log_quadrature_weights(int n, double period) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("log_quadrature_weights: n must be even and at least 4");
    }
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw std::invalid_argument("log_quadrature_weights: period must be positive and finite");
    }
    const double P = 0.5 * period;
    std::vector<double> cos_tab(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        cos_tab[static_cast<std::size_t>(r)] = std::cos(2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
    }
    std::vector<double> base(static_cast<std::size_t>(n));
    const double nd = static_cast<double>(n);
    for (int m = 0; m < n; ++m) {
        double sum = 0.0;
        for (int q = 1; q <= n / 2 - 1; ++q) {
            const std::size_t idx = static_cast<std::size_t>((static_cast<long long>(q) * m) % n);
            sum += cos_tab[idx] / static_cast<double>(q);
        }
        const double parity = (m % 2 == 0) ? 1.0 : -1.0;
        base[static_cast<std::size_t>(m)] =
            (P / kPi) * (-(4.0 * kPi / nd) * sum - (4.0 * kPi / (nd * nd)) * parity);
    }
    return base;
}

NystromSystem assemble(const KernelSplit& kernel, const IncidentWave& wave,
                       const PeriodicGrid& grid) {
    require_grid(grid);
    const ParametricBoundary& curve = kernel.boundary();
    require_same_period(grid.period, curve.period(), "assemble");
    if (wave.k != kernel.wavenumber()) {
        throw std::invalid_argument("assemble: incident wavenumber differs from the kernel wavenumber");
    }

    const int n = grid.n;
    const double h = grid.spacing();
    const double k = wave.k;

    NystromSystem sys;
    sys.grid = grid;
    sys.samples.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        sys.samples.push_back(kernel.extended_sample(grid.nodes[static_cast<std::size_t>(j)]));
    }

    const std::vector<double> base = log_quadrature_weights(n, grid.period);

    sys.matrix.resize(n, n);
    for (int j = 0; j < n; ++j) {
        const CurveSample& src = sys.samples[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            const KernelValues kv = kernel.evaluate(sys.samples[static_cast<std::size_t>(i)], src);
            const double w = base[static_cast<std::size_t>((i - j + n) % n)];
            std::complex<double> a = -2.0 * (w * kv.log_part + h * kv.smooth_part);
            if (i == j) a += 1.0;
            sys.matrix(i, j) = a;
        }
    }

    sys.rhs.resize(n);
    for (int i = 0; i < n; ++i) {
        const double phase = k * wave.direction.dot(sys.samples[static_cast<std::size_t>(i)].gamma);
        sys.rhs(i) = 2.0 * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sys;
}

ReferenceSolution solve_reference(const NystromSystem& system) {
    const int n = system.grid.n;
    if (system.matrix.rows() != n || system.matrix.cols() != n || system.rhs.size() != n) {
        throw std::invalid_argument("solve_reference: inconsistent system dimensions");
    }
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(system.matrix);
    Eigen::VectorXcd x = lu.solve(system.rhs);
    const double rhs_norm = system.rhs.norm();
    const double residual = (system.matrix * x - system.rhs).norm() / rhs_norm;
    if (!std::isfinite(residual) || residual > 1e-8) {
        throw SolverError("solve_reference: relative residual " + std::to_string(residual) +
                          " (system near-singular, possibly an interior eigenvalue)");
    }
    ReferenceSolution out;
    out.density.kind = DensityKind::Total;
    out.density.grid = system.grid;
    out.density.values = std::move(x);
    out.residual = residual;
    return out;
}

DiscreteDensity slow_envelope(const DiscreteDensity& total, const ParametricBoundary& curve,
                              const IncidentWave& wave) {
    if (total.kind != DensityKind::Total) {
        throw std::invalid_argument("slow_envelope: input density must be of Total kind");
    }
    require_grid(total.grid);
    require_same_period(total.grid.period, curve.period(), "slow_envelope");
    if (total.values.size() != total.grid.n) {
        throw std::invalid_argument("slow_envelope: value count does not match the grid");
    }
    DiscreteDensity out;
    out.kind = DensityKind::Slow;
    out.grid = total.grid;
    out.values.resize(total.grid.n);
    for (int j = 0; j < total.grid.n; ++j) {
        const double phase = -wave.k * wave.direction.dot(curve.position(total.grid.nodes[static_cast<std::size_t>(j)]));
        out.values(j) = std::complex<double>(std::cos(phase), std::sin(phase)) * total.values(j);
    }
    return out;
}

} // namespace hfbem
