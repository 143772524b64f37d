#ifndef HFBEM_ANALYTIC_HPP
#define HFBEM_ANALYTIC_HPP

#include <complex>

#include "hfbem/geometry.hpp"
#include "hfbem/nystrom.hpp"

namespace hfbem {

/// Separation-of-variables reference for the sound-hard circle: the total
/// boundary field under plane-wave incidence, as a cylindrical-harmonic
/// series. Used as an external oracle for the collocation solver.
struct CircleSeriesSpec {
    double radius = 1.0;
    double k = 1.0;
    Vec2 direction{1.0, 0.0};
    /// Series order; 0 selects series_truncation(k * radius). The tail decays
    /// super-exponentially past order k * radius, so the automatic choice is
    /// converged to machine precision.
    int truncation = 0;
};

/// Total boundary field at the point (radius cos theta, radius sin theta).
std::complex<double> circle_total_field(const CircleSeriesSpec& spec, double theta);

/// Series solution sampled at the grid nodes t_j (arc length, so the polar
/// angle is t_j / radius). The grid period must equal the circumference.
DiscreteDensity circle_density_on_grid(const CircleSeriesSpec& spec, const PeriodicGrid& grid);

} // namespace hfbem

#endif // HFBEM_ANALYTIC_HPP
