#ifndef HFBEM_GEOMETRY_HPP
#define HFBEM_GEOMETRY_HPP

#include <Eigen/Dense>
#include <functional>
#include <memory>

#include "hfbem/errors.hpp"

namespace hfbem {

using Vec2 = Eigen::Vector2d;

/// One boundary point with the local frame quantities used by kernel
/// evaluation. The optional curvature derivatives are filled on demand
/// (see KernelSplit); they are only needed very close to the diagonal.
struct CurveSample {
    double t = 0.0;       ///< arc-length parameter
    Vec2 gamma{0, 0};     ///< position
    Vec2 tangent{0, 0};   ///< unit tangent
    Vec2 normal{0, 0};    ///< outward unit normal
    double kappa = 0.0;   ///< curvature (> 0 for the curves handled here)
    double kappa_d1 = 0.0;
    double kappa_d2 = 0.0;
    double kappa_d3 = 0.0;
    bool has_curvature_derivatives = false;
};

/// Smooth closed strictly convex plane curve in arc-length parameterization,
/// traversed counterclockwise. The parameter is 2P-periodic where 2P is the
/// total boundary length; every evaluator accepts any real t and reduces it
/// internally. Instances are immutable and cheap to copy (shared backend),
/// hence safe for concurrent reads.
class ParametricBoundary {
public:
    class Impl;

    explicit ParametricBoundary(std::shared_ptr<const Impl> impl);

    double half_period() const;  ///< P (half the boundary length)
    double period() const;       ///< 2P (the boundary length)

    Vec2 position(double t) const;           ///< gamma(t)
    Vec2 tangent(double t) const;            ///< gamma'(t), |gamma'| = 1
    Vec2 second_derivative(double t) const;  ///< gamma''(t) = -kappa(t) nu(t)
    Vec2 normal(double t) const;             ///< outward unit normal nu(t)
    double curvature(double t) const;        ///< kappa(t)

    /// All local frame quantities in one evaluation (one parameter inversion
    /// for curves defined through a reparameterization).
    CurveSample sample(double t) const;

    /// Curve with shifted parameter origin: result.position(t) equals
    /// this->position(t - delta).
    ParametricBoundary shifted(double delta) const;

private:
    std::shared_ptr<const Impl> impl_;
};

/// Closed curve supplied in an arbitrary (not arc-length) parameterization;
/// input to arc_length_form. The callables must be smooth and `period`-periodic.
struct RawCurve {
    double period = 0.0;
    std::function<Vec2(double)> position;
    std::function<Vec2(double)> derivative;
    std::function<Vec2(double)> second_derivative;
};

/// Circle of given radius centered at the origin, gamma(0) = (radius, 0).
/// Closed-form arc-length parameterization.
ParametricBoundary make_circle(double radius);

/// Ellipse with semi-axes (semi_a, semi_b), rotated counterclockwise by
/// `rotation` radians, in arc-length form (numeric reparameterization).
ParametricBoundary make_ellipse(double semi_a, double semi_b, double rotation);

/// Arc-length reparameterization of a raw closed convex curve. The speed
/// |gamma'| is expanded in a trigonometric series on n_quad uniform nodes
/// (spectrally accurate for smooth curves); the cumulative arc length is
/// integrated termwise and inverted per query by a safeguarded Newton
/// iteration. Throws NotConvexError if the curvature is not positive at
/// every quadrature node.
ParametricBoundary arc_length_form(const RawCurve& raw, int n_quad);

/// Plane-wave excitation: direction alpha (unit vector) and wavenumber k.
struct IncidentWave {
    Vec2 direction;
    double k;

    /// Validates |alpha| = 1 to 1e-14 and k >= k_min (default lower bound 1).
    IncidentWave(const Vec2& alpha, double k, double k_min = 1.0);
};

/// The two shadow-boundary parameters of a convex curve under plane-wave
/// incidence, on the origin-shifted curve: 0 < t1 < t2 < 2P, t1 + t2 = 2P,
/// and alpha . nu < 0 exactly on the illuminated arc (t1, t2).
struct ShadowGeometry {
    double t1 = 0.0;
    double t2 = 0.0;
};

struct ShadowResult {
    ShadowGeometry shadow;
    ParametricBoundary curve;  ///< origin-shifted curve realizing t1 + t2 = 2P
};

/// Locates the two roots of alpha . nu(t) = 0 (coarse scan, bisection, Newton
/// polish), orients them so that the arc (t1, t2) is illuminated, and shifts
/// the parameter origin so that t1 + t2 = 2P holds exactly.
/// Throws GeometryError unless exactly two roots are found.
ShadowResult shadow_geometry(const ParametricBoundary& curve, const Vec2& alpha);

} // namespace hfbem

#endif // HFBEM_GEOMETRY_HPP
