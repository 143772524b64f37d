#ifndef HFBEM_TESTS_CHECKS_HPP
#define HFBEM_TESTS_CHECKS_HPP

// Minimal self-contained assertion helpers for the test binaries: every
// check prints a line on failure, report() prints the tally, and the
// process exit code is 0 only when nothing failed.

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include <Eigen/Dense>

namespace checks {

inline int total = 0;
inline int failed = 0;

inline bool record(bool ok, const char* file, int line, const char* what) {
    ++total;
    if (!ok) {
        ++failed;
        std::printf("FAIL %s:%d  %s\n", file, line, what);
    }
    return ok;
}

inline int report(const char* name) {
    std::printf("%s: %d checks, %d failed\n", name, total, failed);
    return failed == 0 ? 0 : 1;
}

// Fixed-depth tanh-sinh quadrature over [a, b]; spectrally accurate for
// smooth integrands including endpoint singularities. Works for double and
// complex integrands.
template <class F>
auto integrate(F&& f, double a, double b) {
    using R = decltype(f(0.0));
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double h = 1.0 / 64.0;
    const double pi_half = 1.5707963267948966;
    R sum = f(mid) * pi_half; // u = 0 term, weight (pi/2) cosh(0) / cosh^2(0)
    for (int i = 1; i * h <= 4.0; ++i) {
        const double u = i * h;
        const double s = std::sinh(u);
        const double c = std::cosh(u);
        const double x = std::tanh(pi_half * s);
        const double w = pi_half * c / std::pow(std::cosh(pi_half * s), 2);
        if (1.0 - std::abs(x) < 1e-17) break;
        sum += (f(mid + half * x) + f(mid - half * x)) * w;
    }
    return sum * (half * h);
}

// Trigonometric interpolation of periodic samples (uniform grid, period P)
// onto arbitrary parameter values; the Nyquist mode is split symmetrically.
inline Eigen::VectorXcd trig_resample(const Eigen::VectorXcd& values, double period,
                                      const std::vector<double>& targets) {
    const int n = static_cast<int>(values.size());
    const int half = n / 2;
    const std::complex<double> im(0.0, 1.0);
    const double omega = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
    Eigen::VectorXcd coeff(n);
    for (int m = -half; m < half; ++m) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += values[j] * std::exp(-im * (omega * m * j));
        coeff[m + half] = acc / static_cast<double>(n);
    }
    const double w = 2.0 * 3.14159265358979323846 / period;
    Eigen::VectorXcd out(static_cast<int>(targets.size()));
    for (std::size_t q = 0; q < targets.size(); ++q) {
        const double t = targets[q];
        std::complex<double> acc = 0.0;
        for (int m = -half + 1; m < half; ++m)
            acc += coeff[m + half] * std::exp(im * (w * m * t));
        acc += coeff[0] * std::cos(w * half * t); // split +-n/2 mode
        out[static_cast<int>(q)] = acc;
    }
    return out;
}

} // namespace checks

#define CHECK(cond) ::checks::record(static_cast<bool>(cond), __FILE__, __LINE__, #cond)

#define CHECK_CLOSE(a, b, tol)                                                                \
    do {                                                                                      \
        const double ca_ = static_cast<double>(a);                                           \
        const double cb_ = static_cast<double>(b);                                           \
        const double ct_ = (tol);                                                            \
        if (!::checks::record(std::abs(ca_ - cb_) <= ct_, __FILE__, __LINE__, #a " ~ " #b))  \
            std::printf("      %.17g vs %.17g (diff %.3g, tol %.3g)\n", ca_, cb_,            \
                        std::abs(ca_ - cb_), ct_);                                           \
    } while (0)

#define CHECK_REL(a, b, tol)                                                                  \
    do {                                                                                      \
        const double ra_ = static_cast<double>(a);                                           \
        const double rb_ = static_cast<double>(b);                                           \
        const double rt_ = (tol);                                                            \
        if (!::checks::record(std::abs(ra_ - rb_) <= rt_ * std::abs(rb_), __FILE__,          \
                              __LINE__, #a " ~rel " #b))                                     \
            std::printf("      %.17g vs %.17g (rel %.3g, tol %.3g)\n", ra_, rb_,             \
                        std::abs(ra_ - rb_) / std::abs(rb_), rt_);                           \
    } while (0)

#define CHECK_CCLOSE(a, b, tol)                                                               \
    do {                                                                                      \
        const std::complex<double> xa_ = (a);                                                \
        const std::complex<double> xb_ = (b);                                                \
        const double xt_ = (tol);                                                            \
        if (!::checks::record(std::abs(xa_ - xb_) <= xt_, __FILE__, __LINE__, #a " ~ " #b))  \
            std::printf("      (%.17g, %.17g) vs (%.17g, %.17g) (diff %.3g, tol %.3g)\n",    \
                        xa_.real(), xa_.imag(), xb_.real(), xb_.imag(), std::abs(xa_ - xb_), \
                        xt_);                                                                \
    } while (0)

#define CHECK_THROWS(expr, Exc)                                                               \
    do {                                                                                      \
        bool caught_ = false;                                                                \
        bool other_ = false;                                                                 \
        try {                                                                                \
            (void)(expr);                                                                    \
        } catch (const Exc&) {                                                               \
            caught_ = true;                                                                  \
        } catch (...) {                                                                      \
            other_ = true;                                                                   \
        }                                                                                    \
        (void)other_;                                                                        \
        ::checks::record(caught_, __FILE__, __LINE__, "throws " #Exc ": " #expr);            \
    } while (0)

#endif
