#include "hfbem/spaces.hpp"

#include "hfbem/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hfbem {

namespace {

double positive_mod(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    return r;
}

double legendre_value(int n, double x) {
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = x;
    for (int j = 1; j < n; ++j) {
        const double pn =
            ((2.0 * j + 1.0) * x * p - static_cast<double>(j) * pm1) / (static_cast<double>(j) + 1.0);
        pm1 = p;
        p = pn;
    }
    return p;
}

int auto_levels(double k) {
    return std::max(1, static_cast<int>(std::ceil(std::log(k) / 6.0)));
}

void require_shadow(const ShadowGeometry& shadow, double period) {
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw std::invalid_argument("partition: period must be positive and finite");
    }
    if (!(shadow.t1 > 0.0) || !(shadow.t1 < shadow.t2) || !(shadow.t2 < period)) {
        throw std::invalid_argument("partition: need 0 < t1 < t2 < period");
    }
}

void require_wavenumber_above_one(double k) {
    if (!std::isfinite(k) || k <= 1.0) {
        throw std::invalid_argument("partition: graded widths require k > 1");
    }
}

void require_positive_scale(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string("partition: scale factor ") + name +
                                    " must be positive and finite");
    }
}

} // namespace

std::vector<double> optimal_epsilons(int m) {
    if (m < 1) throw std::invalid_argument("optimal_epsilons: m must be at least 1");
    std::vector<double> eps(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        eps[static_cast<std::size_t>(j) - 1] =
            (2.0 * m - 2.0 * j + 1.0) / (3.0 * (2.0 * m + 1.0));
    }
    return eps;
}

int locate_region(const Partition& partition, double t) {
    if (partition.regions.empty() || !(partition.period > 0.0)) {
        throw std::invalid_argument("locate_region: empty partition");
    }
    int best = -1;
    double best_excess = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(partition.regions.size()); ++i) {
        const PartitionRegion& reg = partition.regions[static_cast<std::size_t>(i)];
        const double off = positive_mod(t - reg.a, partition.period);
        if (off < reg.width()) return i;
        const double excess = off - reg.width();
        if (excess < best_excess) {
            best_excess = excess;
            best = i;
        }
    }
    return best;
}

Partition freq_adapted_partition(const ShadowGeometry& shadow, double period, double k,
                                 const FreqAdaptedParams& params) {
    require_shadow(shadow, period);
    require_wavenumber_above_one(k);
    require_positive_scale(params.xi1, "xi1");
    require_positive_scale(params.xi2, "xi2");
    require_positive_scale(params.zeta1, "zeta1");
    require_positive_scale(params.zeta2, "zeta2");
    if (params.m < 0) throw std::invalid_argument("freq_adapted_partition: m must be nonnegative");
    const int m = (params.m == 0) ? auto_levels(k) : params.m;

    const std::vector<double> eps = optimal_epsilons(m);
    const double t1 = shadow.t1;
    const double t2 = shadow.t2;

    // Shared breakpoints on each side so that adjacent regions meet exactly.
    std::vector<double> bi1(static_cast<std::size_t>(m)), bi2(static_cast<std::size_t>(m));
    std::vector<double> bs1(static_cast<std::size_t>(m)), bs2(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double g = std::pow(k, -1.0 / 3.0 + eps[static_cast<std::size_t>(i)]);
        bi1[static_cast<std::size_t>(i)] = t1 + params.xi1 * g;
        bi2[static_cast<std::size_t>(i)] = t2 - params.xi2 * g;
        bs1[static_cast<std::size_t>(i)] = t1 - params.zeta1 * g;
        bs2[static_cast<std::size_t>(i)] = t2 + params.zeta2 * g;
    }

    Partition out;
    out.period = period;
    out.regions.reserve(static_cast<std::size_t>(4 * m));
    for (int j = 1; j <= m - 1; ++j) {
        out.regions.push_back({"IT1_" + std::to_string(j), bi1[static_cast<std::size_t>(j)],
                               bi1[static_cast<std::size_t>(j) - 1]});
    }
    out.regions.push_back({"IL", bi1[0], bi2[0]});
    for (int j = 1; j <= m - 1; ++j) {
        out.regions.push_back({"IT2_" + std::to_string(j), bi2[static_cast<std::size_t>(j) - 1],
                               bi2[static_cast<std::size_t>(j)]});
    }
    out.regions.push_back({"SR", bs2[0], period + bs1[0]});
    for (int j = 1; j <= m - 1; ++j) {
        out.regions.push_back({"ST1_" + std::to_string(j), bs1[static_cast<std::size_t>(j) - 1],
                               bs1[static_cast<std::size_t>(j)]});
    }
    out.regions.push_back({"SB1", bs1[static_cast<std::size_t>(m) - 1],
                           bi1[static_cast<std::size_t>(m) - 1]});
    for (int j = 1; j <= m - 1; ++j) {
        out.regions.push_back({"ST2_" + std::to_string(j), bs2[static_cast<std::size_t>(j)],
                               bs2[static_cast<std::size_t>(j) - 1]});
    }
    out.regions.push_back({"SB2", bi2[static_cast<std::size_t>(m) - 1],
                           bs2[static_cast<std::size_t>(m) - 1]});

    for (const PartitionRegion& reg : out.regions) {
        if (!(reg.width() > 0.0)) {
            throw std::invalid_argument("freq_adapted_partition: region " + reg.label +
                                        " is empty (scale factors too large for this geometry)");
        }
    }
    return out;
}

double cov_map_value(const CovMap& map, double s) {
    if (map.identity) return s;
    const double tau = (s - map.a) / (map.b - map.a);
    const double rho = map.rho_is_tau ? tau : 1.0 - tau;
    const double phi = (1.0 - tau) * map.c0 + tau * map.c1;
    return map.center + map.sign * phi * std::pow(map.k, -(1.0 / 3.0) * rho);
}

double cov_map_derivative(const CovMap& map, double s) {
    if (map.identity) return 1.0;
    const double dtau = 1.0 / (map.b - map.a);
    const double tau = (s - map.a) * dtau;
    const double rho = map.rho_is_tau ? tau : 1.0 - tau;
    const double drho = map.rho_is_tau ? dtau : -dtau;
    const double phi = (1.0 - tau) * map.c0 + tau * map.c1;
    const double dphi = (map.c1 - map.c0) * dtau;
    const double pw = std::pow(map.k, -(1.0 / 3.0) * rho);
    return map.sign * pw * (dphi - phi * (std::log(map.k) / 3.0) * drho);
}

double invert_cov(const CovMap& map, double y) {
    if (!(map.b > map.a)) throw std::invalid_argument("invert_cov: empty interval");
    const double slack = 1e-9 * (map.b - map.a);
    if (map.identity) {
        if (y < map.a - slack || y > map.b + slack) {
            throw std::invalid_argument("invert_cov: value outside the region");
        }
        return std::min(std::max(y, map.a), map.b);
    }
    const double fa = cov_map_value(map, map.a);
    const double fb = cov_map_value(map, map.b);
    if (y <= fa) {
        if (y < fa - slack) throw std::invalid_argument("invert_cov: value outside the region");
        return map.a;
    }
    if (y >= fb) {
        if (y > fb + slack) throw std::invalid_argument("invert_cov: value outside the region");
        return map.b;
    }
    double lo = map.a, hi = map.b;
    double s = 0.5 * (lo + hi);
    double f = cov_map_value(map, s) - y;
    for (int it = 0; it < 200; ++it) {
        if (f == 0.0) break;
        if (f > 0.0) hi = s;
        else lo = s;
        const double d = cov_map_derivative(map, s);
        double next = (d > 0.0) ? s - f / d : 0.5 * (lo + hi);
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - s);
        s = next;
        f = cov_map_value(map, s) - y;
        if (step <= 4e-16 * (map.b - map.a)) break;
    }
    return s;
}

CovPartition cov_partition(const ShadowGeometry& shadow, double period, double k,
                           const CovParams& params) {
    require_shadow(shadow, period);
    require_wavenumber_above_one(k);
    require_positive_scale(params.xi1, "xi1");
    require_positive_scale(params.xi2, "xi2");
    require_positive_scale(params.zeta1, "zeta1");
    require_positive_scale(params.zeta2, "zeta2");

    const double t1 = shadow.t1;
    const double t2 = shadow.t2;
    const double xi1p = (params.xi1p != 0.0) ? params.xi1p : 0.5 * (t2 - t1);
    const double xi2p = (params.xi2p != 0.0) ? params.xi2p : 0.5 * (t2 - t1);
    const double zeta1p = (params.zeta1p != 0.0) ? params.zeta1p : 0.5 * (period - (t2 - t1));
    const double zeta2p = (params.zeta2p != 0.0) ? params.zeta2p : 0.5 * (period - (t2 - t1));
    require_positive_scale(xi1p, "xi1'");
    require_positive_scale(xi2p, "xi2'");
    require_positive_scale(zeta1p, "zeta1'");
    require_positive_scale(zeta2p, "zeta2'");
    if (params.xi1 > xi1p || params.xi2 > xi2p || params.zeta1 > zeta1p || params.zeta2 > zeta2p) {
        throw std::invalid_argument("cov_partition: primed scale factors must dominate the "
                                    "unprimed ones");
    }
    const double tol = 1e-12 * period;
    if (std::abs((t1 + xi1p) - (t2 - xi2p)) > tol) {
        throw std::invalid_argument("cov_partition: t1 + xi1' and t2 - xi2' must coincide");
    }
    if (std::abs((t2 + zeta2p) - (period + t1 - zeta1p)) > tol) {
        throw std::invalid_argument("cov_partition: t2 + zeta2' and 2P + t1 - zeta1' must coincide");
    }

    const double c13 = std::pow(k, -1.0 / 3.0);
    const double a1 = t1 + params.xi1 * c13;
    const double mid_ill = t1 + xi1p; // b1 and a2, shared exactly
    const double b2 = t2 - params.xi2 * c13;
    const double b3 = t1 - params.zeta1 * c13;
    const double a4 = t2 + params.zeta2 * c13;
    const double b4 = t2 + zeta2p;
    const double a3 = b4 - period; // shared with b4 through the wrap

    CovPartition out;
    out.partition.period = period;
    out.partition.regions = {
        {"I1", a1, mid_ill}, {"I2", mid_ill, b2}, {"I3", a3, b3},
        {"I4", a4, b4},      {"I5", b3, a1},      {"I6", b2, a4},
    };
    for (const PartitionRegion& reg : out.partition.regions) {
        if (!(reg.width() > 0.0)) {
            throw std::invalid_argument("cov_partition: region " + reg.label +
                                        " is empty (scale factors too large for this geometry)");
        }
    }
    out.maps = {
        {"I1", a1, mid_ill, k, t1, 1.0, params.xi1, xi1p, false, false},
        {"I2", mid_ill, b2, k, t2, -1.0, xi2p, params.xi2, true, false},
        {"I3", a3, b3, k, t1, -1.0, zeta1p, params.zeta1, true, false},
        {"I4", a4, b4, k, t2, 1.0, params.zeta2, zeta2p, false, false},
        {"I5", b3, a1, k, 0.0, 1.0, 0.0, 0.0, true, true},
        {"I6", b2, a4, k, 0.0, 1.0, 0.0, 0.0, true, true},
    };
    return out;
}

Space make_freq_adapted_space(const ParametricBoundary& curve, const IncidentWave& wave,
                              const ShadowGeometry& shadow, int degree,
                              const FreqAdaptedParams& params) {
    if (degree < 0) throw std::invalid_argument("make_freq_adapted_space: degree must be nonnegative");
    Partition partition = freq_adapted_partition(shadow, curve.period(), wave.k, params);
    return Space{MethodKind::FrequencyAdapted, curve,      wave.direction, wave.k,
                 degree,                       std::move(partition), {},     nullptr};
}

Space make_cov_space(const ParametricBoundary& curve, const IncidentWave& wave,
                     const ShadowGeometry& shadow, int degree, const CovParams& params) {
    if (degree < 0) throw std::invalid_argument("make_cov_space: degree must be nonnegative");
    CovPartition cp = cov_partition(shadow, curve.period(), wave.k, params);
    return Space{MethodKind::ChangeOfVariables, curve,
                 wave.direction,                wave.k,
                 degree,                        std::move(cp.partition),
                 std::move(cp.maps),            nullptr};
}

int dimension(const Space& space) {
    return static_cast<int>(space.partition.regions.size()) * (space.degree + 1);
}

std::complex<double> eval_basis(const Space& space, int index, double t) {
    const int dim = dimension(space);
    if (index < 0 || index >= dim) {
        throw std::invalid_argument("eval_basis: index out of range");
    }
    const int per = space.degree + 1;
    const int r = index / per;
    const int n = index % per;
    const PartitionRegion& reg = space.partition.regions[static_cast<std::size_t>(r)];
    const double off = positive_mod(t - reg.a, space.partition.period);
    if (!(off < reg.width())) return {0.0, 0.0};
    const double u = reg.a + off;
    const double s = space.maps.empty() ? u : invert_cov(space.maps[static_cast<std::size_t>(r)], u);
    const double x = 2.0 * (s - reg.a) / reg.width() - 1.0;
    const double poly = legendre_value(n, x);
    const double phase = space.k * space.direction.dot(space.curve.position(t));
    std::complex<double> val = poly * std::complex<double>(std::cos(phase), std::sin(phase));
    if (space.modulation) val *= space.modulation(t);
    return val;
}

} // namespace hfbem
