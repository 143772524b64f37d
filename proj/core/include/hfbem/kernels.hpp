#ifndef HFBEM_KERNELS_HPP
#define HFBEM_KERNELS_HPP

#include <complex>

#include "hfbem/geometry.hpp"

namespace hfbem {

/// Both factors of the split kernel at one (target, source) pair.
struct KernelValues {
    double log_part = 0.0;
    std::complex<double> smooth_part{0.0, 0.0};
};

/// Splitting of the double-layer kernel of the exterior Helmholtz problem on
/// a closed convex curve of length 2P:
///
///   K(t,s) = log_part(t,s) * ln(4 sin^2(pi (t-s) / (2P))) + smooth_part(t,s)
///
/// with both factors smooth and 2P-periodic, so that periodic product
/// quadrature applies. On the diagonal log_part vanishes and smooth_part
/// equals -kappa(t) / (4 pi).
///
/// Within the band |t-s| < near_band() around the diagonal (and its periodic
/// images) the geometric ratios D/R and D/R^2 and the regularized logarithm
/// are evaluated from series in (t-s) whose coefficients involve curvature
/// derivatives at the source point; outside the band they are formed
/// directly from positions. The two paths agree far below the tolerances the
/// split is used at, and the series path is exact on the diagonal itself.
class KernelSplit {
public:
    /// The curve is captured by value (cheap shared backend); k > 0.
    KernelSplit(const ParametricBoundary& curve, double k);

    double wavenumber() const { return k_; }
    const ParametricBoundary& boundary() const { return curve_; }

    /// Half-width of the series band around the diagonal.
    static constexpr double near_band() { return 1e-3; }

    /// Curve sample with the curvature derivatives filled (central finite
    /// differences), suitable as the source argument of evaluate() at any
    /// distance from the diagonal. Assemblers should precompute these once
    /// per node.
    CurveSample extended_sample(double t) const;

    /// Both factors at once (shared geometry and Bessel evaluations). If the
    /// pair falls in the near band and the source sample lacks curvature
    /// derivatives, they are computed on the fly.
    KernelValues evaluate(const CurveSample& target, const CurveSample& source) const;

    double log_part(double t, double s) const;
    std::complex<double> smooth_part(double t, double s) const;

    /// Unsplit kernel value (i k / 4) H1(kR) <gamma(t)-gamma(s), nu(s)> / R,
    /// evaluated directly; t and s must not coincide modulo 2P.
    std::complex<double> direct(double t, double s) const;

private:
    void fill_curvature_derivatives(CurveSample& s) const;

    ParametricBoundary curve_;
    double k_;
    double P_;
};

} // namespace hfbem

#endif // HFBEM_KERNELS_HPP
