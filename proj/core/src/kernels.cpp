#include "hfbem/kernels.hpp"

#include "hfbem/errors.hpp"
#include "hfbem/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hfbem {

namespace {

constexpr double kPi = 3.14159265358979323846;

// J1 and the entire part of Y1 at one argument, sharing work where possible.
void j1_and_y1e(double z, double& j1, double& y1e) {
    if (z > 6.0) {
        const Bessel01 b = bessel01(z);
        j1 = b.j1;
        y1e = b.y1 - (2.0 / kPi) * std::log(z / 2.0) * b.j1 + 2.0 / (kPi * z);
    } else if (z > 0.0) {
        j1 = bessel_j1(z);
        y1e = bessel_y1_entire(z);
    } else {
        j1 = 0.0;
        y1e = 0.0;
    }
}

} // namespace

KernelSplit::KernelSplit(const ParametricBoundary& curve, double k)
    : curve_(curve), k_(k), P_(curve.half_period()) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw std::invalid_argument("KernelSplit: wavenumber must be positive and finite");
    }
}

void KernelSplit::fill_curvature_derivatives(CurveSample& s) const {
    const double h = 1e-2;
    const double k0 = s.kappa;
    const double kp1 = curve_.curvature(s.t + h);
    const double km1 = curve_.curvature(s.t - h);
    const double kp2 = curve_.curvature(s.t + 2.0 * h);
    const double km2 = curve_.curvature(s.t - 2.0 * h);
    s.kappa_d1 = (8.0 * (kp1 - km1) - (kp2 - km2)) / (12.0 * h);
    s.kappa_d2 = (16.0 * (kp1 + km1) - (kp2 + km2) - 30.0 * k0) / (12.0 * h * h);
    s.kappa_d3 = (kp2 - 2.0 * kp1 + 2.0 * km1 - km2) / (2.0 * h * h * h);
    s.has_curvature_derivatives = true;
}

CurveSample KernelSplit::extended_sample(double t) const {
    CurveSample s = curve_.sample(t);
    fill_curvature_derivatives(s);
    return s;
}

KernelValues KernelSplit::evaluate(const CurveSample& target, const CurveSample& source) const {
    const double twoP = 2.0 * P_;
    const double dw = std::remainder(target.t - source.t, twoP);

    double dR = 0.0;  // D / R
    double dR2 = 0.0; // D / R^2
    double R = 0.0;
    double lnratio = 0.0; // ln( kR / (4 |sin(pi (t-s) / (2P))|) ), finite through the diagonal

    if (std::abs(dw) < near_band()) {
        const CurveSample* src = &source;
        CurveSample filled;
        if (!source.has_curvature_derivatives) {
            filled = source;
            fill_curvature_derivatives(filled);
            src = &filled;
        }
        const double ka = src->kappa;
        const double k1 = src->kappa_d1;
        const double k2 = src->kappa_d2;
        const double k3 = src->kappa_d3;
        const double c3 = -ka * ka * k1 / 180.0 - k3 / 120.0;
        dR2 = -0.5 * ka - (k1 / 6.0) * dw - (k2 / 24.0) * dw * dw + c3 * dw * dw * dw;
        const double roR = 1.0 - ka * ka * dw * dw / 24.0 - ka * k1 * dw * dw * dw / 24.0;
        R = std::abs(dw) * roR;
        dR = dR2 * R;
        const double w = kPi * dw / twoP;
        const double sincw = (w == 0.0) ? 1.0 : std::sin(w) / w;
        lnratio = std::log((k_ * P_ / (2.0 * kPi)) * roR / sincw);
    } else {
        const Vec2 diff = target.gamma - source.gamma;
        R = diff.norm();
        const double D = diff.dot(source.normal);
        dR = D / R;
        dR2 = dR / R;
        const double s4 = 4.0 * std::abs(std::sin(kPi * dw / twoP));
        lnratio = std::log(k_ * R / s4);
    }

    double j1 = 0.0, y1e = 0.0;
    j1_and_y1e(k_ * R, j1, y1e);

    KernelValues out;
    out.log_part = -(k_ / (4.0 * kPi)) * j1 * dR;
    const double re = dR2 / (2.0 * kPi) - (k_ / 4.0) * dR * y1e - (k_ / (2.0 * kPi)) * dR * j1 * lnratio;
    const double im = (k_ / 4.0) * dR * j1;
    out.smooth_part = {re, im};
    return out;
}

double KernelSplit::log_part(double t, double s) const {
    return evaluate(curve_.sample(t), extended_sample(s)).log_part;
}

std::complex<double> KernelSplit::smooth_part(double t, double s) const {
    return evaluate(curve_.sample(t), extended_sample(s)).smooth_part;
}

std::complex<double> KernelSplit::direct(double t, double s) const {
    const double twoP = 2.0 * P_;
    if (std::remainder(t - s, twoP) == 0.0) {
        throw std::invalid_argument("KernelSplit::direct: points coincide modulo the period");
    }
    const CurveSample a = curve_.sample(t);
    const CurveSample b = curve_.sample(s);
    const Vec2 diff = a.gamma - b.gamma;
    const double R = diff.norm();
    const double dR = diff.dot(b.normal) / R;
    const Bessel01 bb = bessel01(k_ * R);
    return {-(k_ / 4.0) * dR * bb.y1, (k_ / 4.0) * dR * bb.j1};
}

} // namespace hfbem
