#include "hfbem/analytic.hpp"

#include "hfbem/specfun.hpp"

#include <cmath>
#include <complex>

#include "hfbem/errors.hpp"
#include "hfbem/geometry.hpp"
#include "hfbem/kernels.hpp"
#include "hfbem/nystrom.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace hfbem;

namespace {

constexpr double kPi = 3.14159265358979323846;

void test_frozen_values() {
    CircleSeriesSpec spec;
    spec.k = 10.0;
    for (const auto& spot : oracle::kMieK10) {
        CHECK_CCLOSE(circle_total_field(spec, spot.theta), spot.eta, 1e-12);
    }
}

void test_symmetries() {
    CircleSeriesSpec spec;
    spec.k = 35.0;
    // Reflection across the incidence axis.
    for (double theta : {0.3, 1.2, 2.8}) {
        CHECK_CCLOSE(circle_total_field(spec, theta), circle_total_field(spec, -theta), 1e-12);
    }
    // Rotating the incidence rotates the field pattern rigidly.
    const double phi = 0.7;
    CircleSeriesSpec rotated = spec;
    rotated.direction = Vec2(std::cos(phi), std::sin(phi));
    for (double theta : {0.0, 1.0, 2.5, 4.4}) {
        CHECK_CCLOSE(circle_total_field(rotated, theta),
                     circle_total_field(spec, theta - phi), 1e-12);
    }
}

void test_truncation_convergence() {
    CircleSeriesSpec spec;
    spec.k = 400.0;
    const int m_auto = series_truncation(400.0);
    CircleSeriesSpec longer = spec;
    longer.truncation = m_auto + 50;
    for (double theta : {0.0, 0.9, kPi}) {
        CHECK_CCLOSE(circle_total_field(spec, theta), circle_total_field(longer, theta), 1e-12);
    }
}

void test_physics() {
    // At high frequency the illuminated apex approaches the reflecting-plane
    // value |2 u_inc| = 2 and the deep shadow is much quieter.
    CircleSeriesSpec spec;
    spec.k = 100.0;
    const double lit = std::abs(circle_total_field(spec, kPi));
    const double shadow = std::abs(circle_total_field(spec, 0.0));
    CHECK(std::abs(lit - 2.0) < 0.4);
    CHECK(shadow < 0.5 * lit);
}

void test_grid_sampling() {
    CircleSeriesSpec spec;
    spec.radius = 2.0;
    spec.k = 30.0;
    const ParametricBoundary circ = make_circle(2.0);
    const PeriodicGrid grid = build_grid(circ, 30.0, 10.0);
    const DiscreteDensity density = circle_density_on_grid(spec, grid);
    CHECK(density.kind == DensityKind::Total);
    CHECK(density.values.size() == grid.n);
    for (int j : {0, 11, grid.n / 2, grid.n - 1}) {
        const double theta = grid.nodes[static_cast<std::size_t>(j)] / spec.radius;
        CHECK_CCLOSE(density.values(j), circle_total_field(spec, theta), 1e-13);
    }

    PeriodicGrid bad = grid;
    bad.period = 2.0 * kPi;
    CHECK_THROWS(circle_density_on_grid(spec, bad), std::invalid_argument);
}

void test_against_collocation() {
    // Two fully independent solution paths for the same problem.
    const double k = 50.0;
    const ParametricBoundary circ = make_circle(1.0);
    const KernelSplit kernel(circ, k);
    const IncidentWave wave(Vec2(1.0, 0.0), k);
    const PeriodicGrid grid = build_grid(circ, k, 12.0);
    const ReferenceSolution ref = solve_reference(assemble(kernel, wave, grid));

    CircleSeriesSpec spec;
    spec.k = k;
    const DiscreteDensity series = circle_density_on_grid(spec, grid);
    const double err = (series.values - ref.density.values).norm() / series.values.norm();
    CHECK_CLOSE(err, 0.0, 1e-6);
}

void test_validation() {
    CircleSeriesSpec spec;
    spec.radius = 0.0;
    CHECK_THROWS(circle_total_field(spec, 0.0), std::invalid_argument);
    spec.radius = 1.0;
    spec.k = -2.0;
    CHECK_THROWS(circle_total_field(spec, 0.0), std::invalid_argument);
    spec.k = 10.0;
    spec.direction = Vec2(0.5, 0.5);
    CHECK_THROWS(circle_total_field(spec, 0.0), std::invalid_argument);
    spec.direction = Vec2(1.0, 0.0);
    spec.truncation = -3;
    CHECK_THROWS(circle_total_field(spec, 0.0), std::invalid_argument);
}

} // namespace

int main() {
    test_frozen_values();
    test_symmetries();
    test_truncation_convergence();
    test_physics();
    test_grid_sampling();
    test_against_collocation();
    test_validation();
    return checks::report("analytic");
}
