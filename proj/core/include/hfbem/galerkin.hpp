#ifndef HFBEM_GALERKIN_HPP
#define HFBEM_GALERKIN_HPP

#include <Eigen/Dense>

#include "hfbem/nystrom.hpp"
#include "hfbem/spaces.hpp"

namespace hfbem {

/// Galerkin solution in a phase-extracted trial space, projected from the
/// dense collocation system with the grid inner product <u, v> = h sum u
/// conj(v). Columns are normalized to unit discrete norm before projection;
/// the applied scales are kept so the density can be reconstructed on any
/// grid.
struct GalerkinSolution {
    Space space;
    Eigen::VectorXcd coefficients; ///< coordinates in the normalized column basis
    Eigen::VectorXd column_scales; ///< normalization factor per basis function
    double condition = 0.0;        ///< spectral condition number of the projected matrix
    bool ill_conditioned = false;  ///< projected solve replaced by least squares
    double orthogonality_residual = 0.0; ///< |B^H (A B c - f) h| relative to |B^H f h|
};

/// Projects the system onto the trial space and solves the small projected
/// system (column-pivoted QR). If the projected matrix is numerically
/// singular (condition above 1e12), the coefficients are recomputed as the
/// discrete least-squares minimizer of |A B c - f| and the solution is
/// flagged; the trial space dimension must be smaller than the grid size.
GalerkinSolution galerkin_solve(const NystromSystem& system, const Space& space);

/// Evaluates the Galerkin density (total field) at the nodes of an arbitrary
/// grid with the same period. This is how solutions computed on a coarse
/// grid are compared against references on a finer one.
DiscreteDensity reconstruct(const GalerkinSolution& solution, const PeriodicGrid& grid);

/// Discrete L2(boundary) norm, sqrt(h sum |u_j|^2).
double l2_norm(const DiscreteDensity& density);

/// Relative discrete L2 distance |approx - reference| / |reference| between
/// densities on the same grid and of the same kind.
double l2_error(const DiscreteDensity& approx, const DiscreteDensity& reference);

} // namespace hfbem

#endif // HFBEM_GALERKIN_HPP
