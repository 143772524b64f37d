#include "hfbem/galerkin.hpp"

#include "hfbem/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hfbem {

namespace {

double positive_mod(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    return r;
}

void require_period_match(double a, double b, const char* what) {
    if (std::abs(a - b) > 1e-10 * std::max(a, b)) {
        throw std::invalid_argument(std::string(what) + ": period mismatch");
    }
}

// Local coordinate of node t in its region: region index, the Legendre
// argument x in [-1, 1], computed through the region map where present.
struct NodeLocation {
    int region = 0;
    double x = 0.0;
};

NodeLocation locate_node(const Space& space, double t) {
    NodeLocation loc;
    loc.region = locate_region(space.partition, t);
    const PartitionRegion& reg = space.partition.regions[static_cast<std::size_t>(loc.region)];
    const double off = positive_mod(t - reg.a, space.partition.period);
    const double u = reg.a + std::min(off, reg.width());
    const double s =
        space.maps.empty() ? u : invert_cov(space.maps[static_cast<std::size_t>(loc.region)], u);
    loc.x = 2.0 * (s - reg.a) / reg.width() - 1.0;
    return loc;
}

// All Legendre values 0..degree at x, scaled by a common complex factor,
// written into row j of B starting at column region*(degree+1).
void write_basis_row(Eigen::MatrixXcd& B, int j, const NodeLocation& loc, int degree,
                     const std::complex<double>& factor) {
    const int col0 = loc.region * (degree + 1);
    B(j, col0) = factor;
    if (degree < 1) return;
    double pm1 = 1.0;
    double p = loc.x;
    B(j, col0 + 1) = p * factor;
    for (int q = 1; q < degree; ++q) {
        const double pn =
            ((2.0 * q + 1.0) * loc.x * p - static_cast<double>(q) * pm1) / (static_cast<double>(q) + 1.0);
        pm1 = p;
        p = pn;
        B(j, col0 + q + 1) = p * factor;
    }
}

Eigen::MatrixXcd build_basis_matrix(const NystromSystem& system, const Space& space) {
    const int n = system.grid.n;
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, dimension(space));
    for (int j = 0; j < n; ++j) {
        const double t = system.grid.nodes[static_cast<std::size_t>(j)];
        const NodeLocation loc = locate_node(space, t);
        std::complex<double> factor = 0.5 * system.rhs(j); // the incident phase at the node
        if (space.modulation) factor *= space.modulation(t);
        write_basis_row(B, j, loc, space.degree, factor);
    }
    return B;
}

} // namespace

GalerkinSolution galerkin_solve(const NystromSystem& system, const Space& space) {
    const int n = system.grid.n;
    if (system.matrix.rows() != n || system.matrix.cols() != n || system.rhs.size() != n) {
        throw std::invalid_argument("galerkin_solve: inconsistent system dimensions");
    }
    require_period_match(system.grid.period, space.partition.period, "galerkin_solve");
    require_period_match(system.grid.period, space.curve.period(), "galerkin_solve");
    const int dim = dimension(space);
    if (dim >= n) {
        throw std::invalid_argument("galerkin_solve: trial space dimension must be smaller than "
                                    "the grid size");
    }
    const double h = system.grid.spacing();
    const double sqrth = std::sqrt(h);

    Eigen::MatrixXcd B = build_basis_matrix(system, space);
    Eigen::VectorXd scales(dim);
    for (int c = 0; c < dim; ++c) {
        const double nrm = B.col(c).norm() * sqrth;
        if (!(nrm > 0.0)) {
            throw AssemblyError("galerkin_solve: basis function " + std::to_string(c) +
                                " vanishes at every node (region without grid nodes)");
        }
        scales(c) = 1.0 / nrm;
        B.col(c) *= scales(c);
    }

    const Eigen::MatrixXcd AB = system.matrix * B;
    const Eigen::MatrixXcd G = (B.adjoint() * AB) * h;
    const Eigen::VectorXcd g = (B.adjoint() * system.rhs) * h;

    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(dim - 1);
    const double condition =
        (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();

    GalerkinSolution sol{space, Eigen::VectorXcd(), scales, condition, false, 0.0};
    if (condition < 1e12) {
        sol.coefficients = Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>(G).solve(g);
    } else {
        sol.ill_conditioned = true;
        sol.coefficients = Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>(AB).solve(system.rhs);
    }

    const Eigen::VectorXcd defect = (B.adjoint() * (AB * sol.coefficients - system.rhs)) * h;
    const double gnorm = g.norm();
    sol.orthogonality_residual = (gnorm > 0.0) ? defect.norm() / gnorm : defect.norm();
    return sol;
}

DiscreteDensity reconstruct(const GalerkinSolution& solution, const PeriodicGrid& grid) {
    const Space& space = solution.space;
    const int dim = dimension(space);
    if (solution.coefficients.size() != dim ||
        solution.column_scales.size() != dim) {
        throw std::invalid_argument("reconstruct: solution does not match its space");
    }
    if (grid.n < 1 || static_cast<int>(grid.nodes.size()) != grid.n) {
        throw std::invalid_argument("reconstruct: malformed grid");
    }
    require_period_match(grid.period, space.partition.period, "reconstruct");

    const int per = space.degree + 1;
    Eigen::VectorXcd effective(dim);
    for (int c = 0; c < dim; ++c) {
        effective(c) = solution.coefficients(c) * solution.column_scales(c);
    }

    DiscreteDensity out;
    out.kind = DensityKind::Total;
    out.grid = grid;
    out.values.resize(grid.n);
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.nodes[static_cast<std::size_t>(j)];
        const NodeLocation loc = locate_node(space, t);
        const int col0 = loc.region * per;
        std::complex<double> acc = effective(col0);
        if (per > 1) {
            double pm1 = 1.0;
            double p = loc.x;
            acc += effective(col0 + 1) * p;
            for (int q = 1; q < space.degree; ++q) {
                const double pn = ((2.0 * q + 1.0) * loc.x * p - static_cast<double>(q) * pm1) /
                                  (static_cast<double>(q) + 1.0);
                pm1 = p;
                p = pn;
                acc += effective(col0 + q + 1) * p;
            }
        }
        const double phase = space.k * space.direction.dot(space.curve.position(t));
        std::complex<double> val = acc * std::complex<double>(std::cos(phase), std::sin(phase));
        if (space.modulation) val *= space.modulation(t);
        out.values(j) = val;
    }
    return out;
}

double l2_norm(const DiscreteDensity& density) {
    if (density.grid.n < 1 || density.values.size() != density.grid.n) {
        throw std::invalid_argument("l2_norm: malformed density");
    }
    return std::sqrt(density.grid.spacing()) * density.values.norm();
}

double l2_error(const DiscreteDensity& approx, const DiscreteDensity& reference) {
    if (approx.kind != reference.kind) {
        throw std::invalid_argument("l2_error: densities are of different kinds");
    }
    if (approx.grid.n != reference.grid.n || approx.values.size() != reference.values.size()) {
        throw std::invalid_argument("l2_error: densities live on different grids");
    }
    require_period_match(approx.grid.period, reference.grid.period, "l2_error");
    const double refnorm = reference.values.norm();
    if (!(refnorm > 0.0)) {
        throw std::invalid_argument("l2_error: zero reference density");
    }
    return (approx.values - reference.values).norm() / refnorm;
}

} // namespace hfbem
