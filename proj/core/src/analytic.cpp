#include "hfbem/analytic.hpp"

#include "hfbem/errors.hpp"
#include "hfbem/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hfbem {

namespace {

struct SeriesTable {
    double kr = 0.0;
    double phase0 = 0.0; ///< polar angle of the incidence direction
    int M = 0;
    std::vector<std::complex<double>> c; ///< reflection coefficients, orders 0..M
};

SeriesTable build_series(const CircleSeriesSpec& spec) {
    if (!std::isfinite(spec.radius) || spec.radius <= 0.0) {
        throw std::invalid_argument("circle series: radius must be positive and finite");
    }
    if (!std::isfinite(spec.k) || spec.k <= 0.0) {
        throw std::invalid_argument("circle series: wavenumber must be positive and finite");
    }
    if (std::abs(spec.direction.norm() - 1.0) > 1e-14) {
        throw std::invalid_argument("circle series: direction must be a unit vector");
    }
    if (spec.truncation < 0) {
        throw std::invalid_argument("circle series: truncation must be nonnegative");
    }

    SeriesTable table;
    table.kr = spec.k * spec.radius;
    table.phase0 = std::atan2(spec.direction.y(), spec.direction.x());
    table.M = (spec.truncation > 0) ? spec.truncation : series_truncation(table.kr);

    const BesselTable bt = bessel_table(table.kr, table.M);
    table.c.resize(static_cast<std::size_t>(table.M) + 1);
    const std::complex<double> iunit(0.0, 1.0);
    std::complex<double> ipow(1.0, 0.0); // i^m
    for (int m = 0; m <= table.M; ++m) {
        const std::complex<double> H(bt.J[static_cast<std::size_t>(m)], bt.Y[static_cast<std::size_t>(m)]);
        const std::complex<double> Hp(bt.Jp[static_cast<std::size_t>(m)], bt.Yp[static_cast<std::size_t>(m)]);
        table.c[static_cast<std::size_t>(m)] =
            -ipow * (bt.Jp[static_cast<std::size_t>(m)] / Hp) * H;
        ipow *= iunit;
    }
    return table;
}

// cos(m theta) by the angle-addition recurrence, then the reflected part
// summed from the smallest (highest-order) terms up.
std::complex<double> evaluate_series_at(const SeriesTable& table, std::vector<double>& cosbuf,
                                        double theta_rel) {
    const int M = table.M;
    const double c1 = std::cos(theta_rel);
    cosbuf[0] = 1.0;
    if (M >= 1) cosbuf[1] = c1;
    for (int m = 2; m <= M; ++m) {
        cosbuf[static_cast<std::size_t>(m)] =
            2.0 * c1 * cosbuf[static_cast<std::size_t>(m) - 1] - cosbuf[static_cast<std::size_t>(m) - 2];
    }
    std::complex<double> acc(0.0, 0.0);
    for (int m = M; m >= 1; --m) {
        acc += table.c[static_cast<std::size_t>(m)] * cosbuf[static_cast<std::size_t>(m)];
    }
    std::complex<double> total = 2.0 * acc + table.c[0];
    const double phase = table.kr * c1;
    total += std::complex<double>(std::cos(phase), std::sin(phase));
    return total;
}

} // namespace

std::complex<double> circle_total_field(const CircleSeriesSpec& spec, double theta) {
    const SeriesTable table = build_series(spec);
    std::vector<double> cosbuf(static_cast<std::size_t>(table.M) + 1);
    return evaluate_series_at(table, cosbuf, theta - table.phase0);
}

DiscreteDensity circle_density_on_grid(const CircleSeriesSpec& spec, const PeriodicGrid& grid) {
    const SeriesTable table = build_series(spec);
    const double circumference = 2.0 * 3.14159265358979323846 * spec.radius;
    if (std::abs(grid.period - circumference) > 1e-10 * circumference) {
        throw std::invalid_argument("circle_density_on_grid: grid period must equal the circumference");
    }
    if (grid.n < 1 || static_cast<int>(grid.nodes.size()) != grid.n) {
        throw std::invalid_argument("circle_density_on_grid: malformed grid");
    }
    DiscreteDensity out;
    out.kind = DensityKind::Total;
    out.grid = grid;
    out.values.resize(grid.n);
    std::vector<double> cosbuf(static_cast<std::size_t>(table.M) + 1);
    for (int j = 0; j < grid.n; ++j) {
        const double theta = grid.nodes[static_cast<std::size_t>(j)] / spec.radius;
        out.values(j) = evaluate_series_at(table, cosbuf, theta - table.phase0);
    }
    return out;
}

} // namespace hfbem
