#include "hfbem/specfun.hpp"

#include "hfbem/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hfbem {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGammaL = 0.577215664901532860606512090082402431L;

// Y values beyond this magnitude are clamped and flagged instead of being
// allowed to overflow further up the forward recurrence.
constexpr double kYSaturation = 1e290;

} // namespace

namespace detail {

Bessel01 bessel01_series(double x) {
    const long double h = static_cast<long double>(x) / 2.0L;
    const long double h2 = h * h;

    long double t0 = 1.0L; // (-1)^q h^{2q} / (q!)^2
    long double t1 = h;    // (-1)^q h^{2q+1} / (q! (q+1)!)
    long double j0 = t0;
    long double j1 = t1;
    long double s0 = 0.0L;                // sum_{q>=1} (-1)^{q+1} H_q h^{2q} / (q!)^2
    long double s1 = (1.0L - 2.0L * kEulerGammaL) * t1; // q = 0 term below
    long double Hq = 0.0L;                // harmonic number H_q

    for (int q = 1; q <= 300; ++q) {
        const long double ql = static_cast<long double>(q);
        t0 *= -h2 / (ql * ql);
        t1 *= -h2 / (ql * (ql + 1.0L));
        Hq += 1.0L / ql;
        const long double Hq1 = Hq + 1.0L / (ql + 1.0L);
        j0 += t0;
        j1 += t1;
        s0 += -Hq * t0;
        s1 += (Hq + Hq1 - 2.0L * kEulerGammaL) * t1;
        if (std::abs(t0) < 1e-24L && std::abs(t1) < 1e-24L) break;
    }

    const long double lnh = std::log(h);
    Bessel01 out;
    out.j0 = static_cast<double>(j0);
    out.j1 = static_cast<double>(j1);
    out.y0 = static_cast<double>((2.0L / kPiL) * ((lnh + kEulerGammaL) * j0 + s0));
    out.y1 = static_cast<double>((2.0L / kPiL) * lnh * j1 -
                                 2.0L / (kPiL * static_cast<long double>(x)) -
                                 (1.0L / kPiL) * s1);
    return out;
}

Bessel01 bessel01_asymptotic(double x) {
    // Hankel expansion: J_nu = c (P cos chi - Q sin chi),
    //                   Y_nu = c (P sin chi + Q cos chi),
    // chi = x - (nu/2 + 1/4) pi, truncated at the smallest term.
    const double c = std::sqrt(2.0 / (kPi * x));

    const auto pq_sums = [x](double mu, double& P, double& Q) {
        P = 0.0;
        Q = 0.0;
        double term = 1.0; // a_q / x^q, starting at a_0 = 1
        double prev = std::numeric_limits<double>::infinity();
        for (int q = 0; q < 80; ++q) {
            const double mag = std::abs(term);
            if (mag > prev) break; // past the optimal truncation point
            prev = mag;
            const int j = q / 2;
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            if (q % 2 == 0) {
                P += sgn * term;
            } else {
                Q += sgn * term;
            }
            if (mag < 1e-19) break;
            const double odd = static_cast<double>(2 * q + 1);
            term *= (mu - odd * odd) / (8.0 * static_cast<double>(q + 1) * x);
        }
    };

    double p0 = 0.0, q0 = 0.0, p1 = 0.0, q1 = 0.0;
    pq_sums(0.0, p0, q0);
    pq_sums(4.0, p1, q1);

    const double chi0 = x - 0.25 * kPi;
    const double chi1 = x - 0.75 * kPi;
    const double c0 = std::cos(chi0), s0 = std::sin(chi0);
    const double c1 = std::cos(chi1), s1 = std::sin(chi1);

    Bessel01 out;
    out.j0 = c * (p0 * c0 - q0 * s0);
    out.y0 = c * (p0 * s0 + q0 * c0);
    out.j1 = c * (p1 * c1 - q1 * s1);
    out.y1 = c * (p1 * s1 + q1 * c1);
    return out;
}

} // namespace detail

Bessel01 bessel01(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::invalid_argument("bessel01: argument must be positive and finite");
    }
    return (x <= 12.0) ? detail::bessel01_series(x) : detail::bessel01_asymptotic(x);
}

double bessel_j0(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument("bessel_j0: argument must be nonnegative and finite");
    }
    if (x == 0.0) return 1.0;
    return bessel01(x).j0;
}

double bessel_j1(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::invalid_argument("bessel_j1: argument must be nonnegative and finite");
    }
    if (x == 0.0) return 0.0;
    return bessel01(x).j1;
}

double bessel_y1_entire(double z) {
    if (!std::isfinite(z) || z < 0.0) {
        throw std::invalid_argument("bessel_y1_entire: argument must be nonnegative and finite");
    }
    if (z == 0.0) return 0.0;
    if (z > 6.0) {
        const Bessel01 b = bessel01(z);
        return b.y1 - (2.0 / kPi) * std::log(z / 2.0) * b.j1 + 2.0 / (kPi * z);
    }
    // Power series: -(1/pi) sum_q (-1)^q (H_q + H_{q+1} - 2 gamma)
    //               (z/2)^{2q+1} / (q! (q+1)!)
    const long double h = static_cast<long double>(z) / 2.0L;
    const long double h2 = h * h;
    long double t1 = h;
    long double s1 = (1.0L - 2.0L * kEulerGammaL) * t1;
    long double Hq = 0.0L;
    for (int q = 1; q <= 60; ++q) {
        const long double ql = static_cast<long double>(q);
        t1 *= -h2 / (ql * (ql + 1.0L));
        Hq += 1.0L / ql;
        const long double Hq1 = Hq + 1.0L / (ql + 1.0L);
        s1 += (Hq + Hq1 - 2.0L * kEulerGammaL) * t1;
        if (std::abs(t1) < 1e-26L) break;
    }
    return static_cast<double>(-(1.0L / kPiL) * s1);
}

int series_truncation(double kr) {
    if (!std::isfinite(kr) || kr <= 0.0) {
        throw std::invalid_argument("series_truncation: argument must be positive and finite");
    }
    return static_cast<int>(std::ceil(kr + 10.0 * std::cbrt(kr) + 20.0));
}

BesselTable bessel_table(double x, int max_order) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::invalid_argument("bessel_table: x must be positive and finite");
    }
    if (max_order < 0) {
        throw std::invalid_argument("bessel_table: max_order must be nonnegative");
    }

    const int M = max_order;
    const int Mi = std::max(M, 1); // always produce J1, Y1 so derivatives at order 0 work

    // Backward (Miller) recurrence for J, started well above the largest
    // requested order, normalized with J0 + 2 sum_{m even} J_m = 1.
    const int start =
        Mi + static_cast<int>(std::ceil(10.0 * std::sqrt(static_cast<double>(Mi) + x))) + 20;
    std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
    f[static_cast<std::size_t>(start) + 1] = 0.0;
    f[static_cast<std::size_t>(start)] = 1e-30;
    for (int m = start; m >= 1; --m) {
        f[static_cast<std::size_t>(m) - 1] =
            (2.0 * static_cast<double>(m) / x) * f[static_cast<std::size_t>(m)] -
            f[static_cast<std::size_t>(m) + 1];
        if (std::abs(f[static_cast<std::size_t>(m) - 1]) > 1e250) {
            for (int q = m - 1; q <= start + 1; ++q) {
                f[static_cast<std::size_t>(q)] *= 1e-250;
            }
        }
    }
    double norm = f[0];
    for (int m = 2; m <= start; m += 2) norm += 2.0 * f[static_cast<std::size_t>(m)];
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw NumericError("bessel_table: backward recurrence failed to normalize");
    }

    BesselTable table;
    table.x = x;
    table.max_order = M;
    table.J.resize(static_cast<std::size_t>(M) + 1);
    table.Jp.resize(static_cast<std::size_t>(M) + 1);
    table.Y.resize(static_cast<std::size_t>(M) + 1);
    table.Yp.resize(static_cast<std::size_t>(M) + 1);
    table.y_overflow.assign(static_cast<std::size_t>(M) + 1, 0);

    for (int m = 0; m <= M; ++m) table.J[static_cast<std::size_t>(m)] = f[static_cast<std::size_t>(m)] / norm;
    const double j1 = f[1] / norm;
    table.Jp[0] = -j1;
    for (int m = 1; m <= M; ++m) {
        table.Jp[static_cast<std::size_t>(m)] =
            table.J[static_cast<std::size_t>(m) - 1] -
            (static_cast<double>(m) / x) * table.J[static_cast<std::size_t>(m)];
    }

    // Forward recurrence for Y from Y0, Y1; growth is monotone past m ~ x,
    // so saturation is clamped and flagged for every higher order.
    const Bessel01 b01 = bessel01(x);
    std::vector<double> y(static_cast<std::size_t>(Mi) + 1, 0.0);
    std::vector<std::uint8_t> yflag(static_cast<std::size_t>(Mi) + 1, 0);
    y[0] = b01.y0;
    y[1] = b01.y1;
    bool saturated = false;
    for (int m = 1; m < Mi; ++m) {
        double next = (2.0 * static_cast<double>(m) / x) * y[static_cast<std::size_t>(m)] -
                      y[static_cast<std::size_t>(m) - 1];
        if (saturated || std::abs(next) > kYSaturation) {
            saturated = true;
            next = std::copysign(kYSaturation, next == 0.0 ? -1.0 : next);
        }
        y[static_cast<std::size_t>(m) + 1] = next;
        yflag[static_cast<std::size_t>(m) + 1] = saturated ? 1 : 0;
    }
    for (int m = 0; m <= M; ++m) {
        table.Y[static_cast<std::size_t>(m)] = y[static_cast<std::size_t>(m)];
        table.y_overflow[static_cast<std::size_t>(m)] = yflag[static_cast<std::size_t>(m)];
    }
    table.Yp[0] = -y[1];
    for (int m = 1; m <= M; ++m) {
        table.Yp[static_cast<std::size_t>(m)] =
            table.Y[static_cast<std::size_t>(m) - 1] -
            (static_cast<double>(m) / x) * table.Y[static_cast<std::size_t>(m)];
    }
    return table;
}

std::complex<double> hankel1(int m, double x) {
    if (m < 0) throw std::invalid_argument("hankel1: order must be nonnegative");
    const BesselTable t = bessel_table(x, m);
    if (t.y_overflow[static_cast<std::size_t>(m)]) {
        throw NumericError("hankel1: Y overflowed at requested order");
    }
    return {t.J[static_cast<std::size_t>(m)], t.Y[static_cast<std::size_t>(m)]};
}

std::complex<double> hankel1_derivative(int m, double x) {
    if (m < 0) throw std::invalid_argument("hankel1_derivative: order must be nonnegative");
    const BesselTable t = bessel_table(x, m);
    if (t.y_overflow[static_cast<std::size_t>(m)]) {
        throw NumericError("hankel1_derivative: Y overflowed at requested order");
    }
    return {t.Jp[static_cast<std::size_t>(m)], t.Yp[static_cast<std::size_t>(m)]};
}

} // namespace hfbem
