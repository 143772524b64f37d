#ifndef HFBEM_NYSTROM_HPP
#define HFBEM_NYSTROM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hfbem/geometry.hpp"
#include "hfbem/kernels.hpp"

namespace hfbem {

/// Uniform periodic grid t_j = j h, h = period / n, j = 0..n-1, n even.
struct PeriodicGrid {
    double period = 0.0;
    int n = 0;
    std::vector<double> nodes;

    double spacing() const { return n > 0 ? period / static_cast<double>(n) : 0.0; }
};

/// Grid with the smallest even n giving at least `ppw` points per wavelength
/// along the whole boundary: n >= ppw * k * length / (2 pi). Throws
/// ResourceError when n would exceed max_nodes. The accuracy statements of
/// the solver are made for ppw in the 8..16 range; values below 4 are
/// rejected.
PeriodicGrid build_grid(const ParametricBoundary& curve, double k, double ppw,
                        int max_nodes = 20000);

/// Translation-invariant product-quadrature weights for the periodic
/// logarithm: with base = log_quadrature_weights(n, 2P),
///
///   integral_0^{2P} f(s) ln(4 sin^2(pi (t_i - s) / (2P))) ds
///     ~ sum_j base[(i - j) mod n] f(t_j),
///
/// exact for trigonometric polynomials of degree < n/2. The weights sum to
/// zero (the log factor integrates to zero against 1).
std::vector<double> log_quadrature_weights(int n, double period);

/// What a grid vector of boundary values represents: the total field eta, or
/// the slow envelope eta_slow = exp(-i k alpha . gamma) eta.
enum class DensityKind { Total, Slow };

struct DiscreteDensity {
    DensityKind kind = DensityKind::Total;
    PeriodicGrid grid;
    Eigen::VectorXcd values;
};

/// Dense collocation system (I - 2 K_h) eta = 2 u_inc for the total boundary
/// field, where K_h combines the log-weight quadrature on the log factor of
/// the kernel with the trapezoid rule on the smooth factor.
struct NystromSystem {
    PeriodicGrid grid;
    std::vector<CurveSample> samples; ///< extended node samples (reusable by callers)
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
};

NystromSystem assemble(const KernelSplit& kernel, const IncidentWave& wave,
                       const PeriodicGrid& grid);

struct ReferenceSolution {
    DiscreteDensity density; ///< total boundary field at the grid nodes
    double residual = 0.0;   ///< relative residual |A x - b| / |b| of the direct solve
};

/// Direct (partial-pivot LU) solve of the collocation system. The reported
/// residual is a computable a posteriori check; SolverError is thrown when
/// it exceeds 1e-8, which for this second-kind equation indicates severe
/// ill-conditioning (the underlying boundary integral operator is singular
/// exactly at interior Dirichlet eigenvalues of the obstacle, where the
/// formulation itself breaks down).
ReferenceSolution solve_reference(const NystromSystem& system);

/// Removes the incident phase at the nodes: values_j -> exp(-i k alpha .
/// gamma(t_j)) values_j. Input must be of Total kind; the result is Slow.
DiscreteDensity slow_envelope(const DiscreteDensity& total, const ParametricBoundary& curve,
                              const IncidentWave& wave);

} // namespace hfbem

#endif // HFBEM_NYSTROM_HPP
