#ifndef HFBEM_SPACES_HPP
#define HFBEM_SPACES_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hfbem/geometry.hpp"

namespace hfbem {

/// Exponent ladder for the graded transition regions, j = 1..m (returned
/// 0-based): eps_j = (2m - 2j + 1) / (3 (2m + 1)). Strictly decreasing, and
/// balanced so that (1 - 3 eps_1) / 6 = eps_m = (eps_j - eps_{j+1}) / 2.
std::vector<double> optimal_epsilons(int m);

/// Half-open parameter interval [a, b) with a descriptive label. Intervals
/// may extend below 0 or above 2P; membership is decided modulo the period.
struct PartitionRegion {
    std::string label;
    double a = 0.0;
    double b = 0.0;

    double width() const { return b - a; }
};

/// Ordered cover of one period of the boundary parameter. The order of
/// `regions` fixes the basis enumeration and is not necessarily monotone in
/// position.
struct Partition {
    double period = 0.0;
    std::vector<PartitionRegion> regions;
};

/// Index of the region containing t (modulo the period, half-open on the
/// right). Falls back to the nearest region if t sits in a rounding-level
/// gap between intervals.
int locate_region(const Partition& partition, double t);

/// Parameters of the wavenumber-graded partition. The four scale factors
/// control the k^{-1/3} vicinities of the two shadow boundary points
/// (xi: illuminated side, zeta: shadow side; index 1 for t1, 2 for t2);
/// m is the number of grading levels, 0 selecting max(1, ceil(ln(k^{1/6}))).
struct FreqAdaptedParams {
    double xi1 = 1.0;
    double xi2 = 1.0;
    double zeta1 = 1.0;
    double zeta2 = 1.0;
    int m = 0;
};

/// Partition with 4m regions: m-1 graded transition intervals on each of the
/// four sides of the two shadow boundary points, the illuminated region IL,
/// the deep shadow region SR (wrapping through parameter 0), and the two
/// shadow-boundary intervals SB1, SB2 of width ~ k^{-1/3+eps_m}. Region
/// labels: IT1_j / IT2_j (illuminated transitions), ST1_j / ST2_j (shadow
/// transitions), IL, SR, SB1, SB2. Requires k > 1 and a geometry roomy
/// enough that IL and SR are nonempty.
Partition freq_adapted_partition(const ShadowGeometry& shadow, double period, double k,
                                 const FreqAdaptedParams& params = {});

/// One region of the change-of-variables method: a monotone self-map phi of
/// [a, b] that compresses polynomial resolution toward the k^{-1/3}
/// vicinities of the shadow boundaries,
///
///   phi(s) = center + sign * ((1 - tau) c0 + tau c1) * k^(-rho/3),
///   tau = (s - a)/(b - a),  rho = tau or 1 - tau,
///
/// or the identity on the two shadow-boundary intervals. Basis polynomials
/// live in the preimage coordinate s = phi^{-1}(t).
struct CovMap {
    std::string label;
    double a = 0.0;
    double b = 0.0;
    double k = 1.0;
    double center = 0.0;
    double sign = 1.0;
    double c0 = 0.0;
    double c1 = 0.0;
    bool rho_is_tau = true;
    bool identity = false;
};

double cov_map_value(const CovMap& map, double s);
double cov_map_derivative(const CovMap& map, double s);

/// Inverse of the region map: the s in [a, b] with phi(s) = y. Monotone
/// bisection-safeguarded Newton; y is clamped to the (rounding-level) actual
/// range of phi at the interval ends.
double invert_cov(const CovMap& map, double y);

/// Scale factors of the six regions of the change-of-variables method.
/// Unprimed factors size the k^{-1/3} shadow-boundary vicinities; primed
/// factors place the outer ends of the four transition regions and must
/// satisfy xi <= xi', zeta <= zeta' with t1 + xi1' = t2 - xi2' and
/// t2 + zeta2' = 2P + t1 - zeta1'. Zero primed values select the defaults
/// that split the illuminated and shadow arcs at their midpoints.
struct CovParams {
    double xi1 = 1.0;
    double xi2 = 1.0;
    double zeta1 = 1.0;
    double zeta2 = 1.0;
    double xi1p = 0.0;
    double xi2p = 0.0;
    double zeta1p = 0.0;
    double zeta2p = 0.0;
};

struct CovPartition {
    Partition partition;      ///< regions I1..I6 in label order
    std::vector<CovMap> maps; ///< aligned with partition.regions
};

/// Six-region partition: I1, I2 the illuminated transitions, I3, I4 the
/// shadow transitions, I5, I6 the shadow-boundary vicinities (identity
/// maps). I3 starts and I4 ends at the deep-shadow point (parameter 0
/// modulo 2P). Requires k > 1.
CovPartition cov_partition(const ShadowGeometry& shadow, double period, double k,
                           const CovParams& params = {});

enum class MethodKind { FrequencyAdapted, ChangeOfVariables };

/// Phase-extracted piecewise polynomial trial space: on each region,
/// polynomials of degree <= degree in the region coordinate (the map
/// preimage for ChangeOfVariables), multiplied by the incident phase
/// exp(i k alpha . gamma(t)). Basis index = region * (degree+1) + n, with n
/// the Legendre order on the region.
struct Space {
    MethodKind method = MethodKind::FrequencyAdapted;
    ParametricBoundary curve;
    Vec2 direction{1.0, 0.0};
    double k = 1.0;
    int degree = 0;
    Partition partition;
    std::vector<CovMap> maps; ///< empty for FrequencyAdapted
    /// Optional extra modulation applied to every basis function; reserved
    /// for graded boundary-layer weights. Default: none.
    std::function<std::complex<double>(double)> modulation;
};

Space make_freq_adapted_space(const ParametricBoundary& curve, const IncidentWave& wave,
                              const ShadowGeometry& shadow, int degree,
                              const FreqAdaptedParams& params = {});

Space make_cov_space(const ParametricBoundary& curve, const IncidentWave& wave,
                     const ShadowGeometry& shadow, int degree, const CovParams& params = {});

int dimension(const Space& space);

/// Basis function `index` at parameter t; zero outside its region. The
/// function is supported on one region (half-open modulo the period) and is
/// unimodular there for Legendre order 0.
std::complex<double> eval_basis(const Space& space, int index, double t);

} // namespace hfbem

#endif // HFBEM_SPACES_HPP
