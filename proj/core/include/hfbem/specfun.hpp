#ifndef HFBEM_SPECFUN_HPP
#define HFBEM_SPECFUN_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace hfbem {

/// Cylindrical Bessel functions of integer order 0..max_order at a fixed
/// positive argument, with derivatives. J by backward (Miller) recurrence
/// with normalization, Y by forward recurrence seeded from Y0, Y1.
/// Entries of Y that would overflow are clamped to +-1e290 and flagged in
/// y_overflow (the flag propagates to all higher orders and to Yp).
struct BesselTable {
    double x = 0.0;
    int max_order = 0;
    std::vector<double> J, Jp, Y, Yp;
    std::vector<std::uint8_t> y_overflow;
};

BesselTable bessel_table(double x, int max_order);

/// H^(1)_m(x) = J_m(x) + i Y_m(x) and its derivative.
std::complex<double> hankel1(int m, double x);
std::complex<double> hankel1_derivative(int m, double x);

/// Truncation order for Bessel-series sums at argument kr:
/// ceil(kr + 10 (kr)^(1/3) + 20).
int series_truncation(double kr);

/// J0, J1, Y0, Y1 at one point, x > 0. Power series below x = 12, Hankel
/// asymptotic expansion with optimal truncation above.
struct Bessel01 {
    double j0 = 0.0, j1 = 0.0, y0 = 0.0, y1 = 0.0;
};
Bessel01 bessel01(double x);

/// Pointwise J0, J1 for x >= 0 (power series / asymptotic branch as above).
double bessel_j0(double x);
double bessel_j1(double x);

/// Entire part of Y1: y1e(z) = Y1(z) - (2/pi) ln(z/2) J1(z) + 2/(pi z),
/// continued by its power series through z = 0 (value 0 there). Used to
/// evaluate the smooth remainder of the double-layer kernel without
/// cancellation near the diagonal.
double bessel_y1_entire(double z);

namespace detail {
// Both branches of bessel01, exposed so the switch point can be verified.
Bessel01 bessel01_series(double x);
Bessel01 bessel01_asymptotic(double x);
} // namespace detail

} // namespace hfbem

#endif // HFBEM_SPECFUN_HPP
