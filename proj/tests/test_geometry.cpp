#include "hfbem/geometry.hpp"

#include <cmath>

#include "hfbem/errors.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace hfbem;

namespace {

constexpr double kPi = 3.14159265358979323846;

void test_circle() {
    const ParametricBoundary circle = make_circle(2.0);
    CHECK_CLOSE(circle.period(), 4.0 * kPi, 1e-14);
    CHECK_CLOSE(circle.half_period(), 2.0 * kPi, 1e-14);

    const Vec2 p0 = circle.position(0.0);
    CHECK_CLOSE(p0.x(), 2.0, 1e-14);
    CHECK_CLOSE(p0.y(), 0.0, 1e-14);

    for (double t : {0.0, 0.51, 2.0, 5.5, 11.0}) {
        CHECK_CLOSE(circle.tangent(t).norm(), 1.0, 1e-14);
        CHECK_CLOSE(circle.curvature(t), 0.5, 1e-14);
        // Outward normal of a centered circle is radial.
        const Vec2 nu = circle.normal(t);
        CHECK_CLOSE((nu - circle.position(t) / 2.0).norm(), 0.0, 1e-14);
        // Periodicity.
        CHECK_CLOSE((circle.position(t + circle.period()) - circle.position(t)).norm(), 0.0,
                    1e-12);
    }

    CHECK_THROWS(make_circle(0.0), std::invalid_argument);
    CHECK_THROWS(make_circle(-1.0), std::invalid_argument);
}

void test_frame_relations(const ParametricBoundary& curve) {
    const double period = curve.period();
    for (int i = 0; i < 60; ++i) {
        const double t = period * (static_cast<double>(i) + 0.37) / 60.0;
        const Vec2 tau = curve.tangent(t);
        const Vec2 nu = curve.normal(t);
        const double kappa = curve.curvature(t);
        CHECK_CLOSE(tau.norm(), 1.0, 1e-12);
        // nu = (tau_y, -tau_x), orthogonal and unit for arc-length curves.
        CHECK_CLOSE(nu.x() - tau.y(), 0.0, 1e-14);
        CHECK_CLOSE(nu.y() + tau.x(), 0.0, 1e-14);
        CHECK(kappa > 0.0);
        // gamma'' = -kappa nu in the arc-length frame.
        const Vec2 dd = curve.second_derivative(t);
        CHECK_CLOSE((dd + kappa * nu).norm(), 0.0, 1e-10);
        // Curvature against a finite difference of the unit tangent.
        const double h = 1e-5;
        const Vec2 dtau = (curve.tangent(t + h) - curve.tangent(t - h)) / (2.0 * h);
        CHECK_CLOSE(dtau.norm(), kappa, 1e-6);
        // sample() agrees with the individual accessors.
        const CurveSample s = curve.sample(t);
        CHECK_CLOSE((s.gamma - curve.position(t)).norm(), 0.0, 1e-14);
        CHECK_CLOSE((s.tangent - tau).norm(), 0.0, 1e-14);
        CHECK_CLOSE((s.normal - nu).norm(), 0.0, 1e-14);
        CHECK_CLOSE(s.kappa, kappa, 1e-14);
    }
}

void test_ellipse() {
    // Degenerate ellipse coincides with the circle.
    const ParametricBoundary ell1 = make_ellipse(1.0, 1.0, 0.0);
    const ParametricBoundary circ = make_circle(1.0);
    CHECK_CLOSE(ell1.period(), circ.period(), 1e-10);
    for (double t : {0.0, 1.0, 2.5, 4.0, 6.0})
        CHECK_CLOSE((ell1.position(t) - circ.position(t)).norm(), 0.0, 1e-10);

    // Total arc length against the independently computed circumference.
    const ParametricBoundary ell = make_ellipse(1.5, 0.5, 0.0);
    CHECK_REL(ell.period(), oracle::kEllipseCircumference, 1e-10);

    test_frame_relations(ell);

    // Rotation acts on positions as a rigid rotation.
    const double phi = 0.7;
    const ParametricBoundary rot = make_ellipse(1.5, 0.5, phi);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    for (double t : {0.0, 0.9, 2.2, 3.9, 5.8}) {
        const Vec2 p = ell.position(t);
        const Vec2 expected(c * p.x() - s * p.y(), s * p.x() + c * p.y());
        CHECK_CLOSE((rot.position(t) - expected).norm(), 0.0, 1e-10);
    }

    CHECK_THROWS(make_ellipse(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS(make_ellipse(1.0, -2.0, 0.0), std::invalid_argument);
}

void test_arc_length_form() {
    // A radius-2 circle given in angle parameterization: the arc-length form
    // is known in closed form.
    RawCurve raw;
    raw.period = 2.0 * kPi;
    raw.position = [](double q) { return Vec2(2.0 * std::cos(q), 2.0 * std::sin(q)); };
    raw.derivative = [](double q) { return Vec2(-2.0 * std::sin(q), 2.0 * std::cos(q)); };
    raw.second_derivative = [](double q) {
        return Vec2(-2.0 * std::cos(q), -2.0 * std::sin(q));
    };
    const ParametricBoundary curve = arc_length_form(raw, 256);
    CHECK_REL(curve.period(), 4.0 * kPi, 1e-12);
    for (double t : {0.0, 1.3, 4.0, 9.2}) {
        const Vec2 expected(2.0 * std::cos(t / 2.0), 2.0 * std::sin(t / 2.0));
        CHECK_CLOSE((curve.position(t) - expected).norm(), 0.0, 1e-11);
        CHECK_CLOSE(curve.curvature(t), 0.5, 1e-11);
    }

    // Non-convex curves are rejected during construction.
    RawCurve peanut;
    peanut.period = 2.0 * kPi;
    auto r = [](double q) { return 1.0 + 0.6 * std::cos(2.0 * q); };
    auto rp = [](double q) { return -1.2 * std::sin(2.0 * q); };
    auto rpp = [](double q) { return -2.4 * std::cos(2.0 * q); };
    peanut.position = [=](double q) { return Vec2(r(q) * std::cos(q), r(q) * std::sin(q)); };
    peanut.derivative = [=](double q) {
        return Vec2(rp(q) * std::cos(q) - r(q) * std::sin(q),
                    rp(q) * std::sin(q) + r(q) * std::cos(q));
    };
    peanut.second_derivative = [=](double q) {
        return Vec2(rpp(q) * std::cos(q) - 2.0 * rp(q) * std::sin(q) - r(q) * std::cos(q),
                    rpp(q) * std::sin(q) + 2.0 * rp(q) * std::cos(q) - r(q) * std::sin(q));
    };
    CHECK_THROWS(arc_length_form(peanut, 256), NotConvexError);

    RawCurve incomplete;
    incomplete.period = 2.0 * kPi;
    incomplete.position = raw.position;
    CHECK_THROWS(arc_length_form(incomplete, 256), std::invalid_argument);
    CHECK_THROWS(arc_length_form(raw, 4), std::invalid_argument);
}

void test_shifted() {
    const ParametricBoundary circle = make_circle(1.0);
    const ParametricBoundary moved = circle.shifted(1.25);
    for (double t : {0.0, 0.4, 3.0, 6.0}) {
        CHECK_CLOSE((moved.position(t) - circle.position(t - 1.25)).norm(), 0.0, 1e-13);
        CHECK_CLOSE(moved.curvature(t), circle.curvature(t - 1.25), 1e-13);
    }
    CHECK_CLOSE(moved.period(), circle.period(), 0.0);
}

void test_incident_wave() {
    const IncidentWave wave(Vec2(0.0, 1.0), 50.0);
    CHECK_CLOSE(wave.k, 50.0, 0.0);
    CHECK_CLOSE(wave.direction.y(), 1.0, 0.0);
    CHECK_THROWS(IncidentWave(Vec2(1.0, 1.0), 50.0), std::invalid_argument);
    CHECK_THROWS(IncidentWave(Vec2(1.0, 0.0), 0.5), std::invalid_argument);
}

void test_shadow_circle() {
    const ParametricBoundary circle = make_circle(1.0);
    const Vec2 alpha(1.0, 0.0);
    const ShadowResult res = shadow_geometry(circle, alpha);
    CHECK_CLOSE(res.shadow.t1, kPi / 2.0, 1e-12);
    CHECK_CLOSE(res.shadow.t2, 3.0 * kPi / 2.0, 1e-12);
    CHECK(res.shadow.t1 + res.shadow.t2 == 2.0 * res.curve.half_period());
    CHECK_CLOSE(alpha.dot(res.curve.normal(res.shadow.t1)), 0.0, 1e-12);
    CHECK_CLOSE(alpha.dot(res.curve.normal(res.shadow.t2)), 0.0, 1e-12);
    // Illuminated in between, shadow outside.
    CHECK(alpha.dot(res.curve.normal(0.5 * (res.shadow.t1 + res.shadow.t2))) < 0.0);
    CHECK(alpha.dot(res.curve.normal(0.0)) > 0.0);

    CHECK_THROWS(shadow_geometry(circle, Vec2(2.0, 0.0)), std::invalid_argument);
}

void test_shadow_rotated_ellipse() {
    const ParametricBoundary curve = make_ellipse(1.5, 0.5, 0.3);
    const Vec2 alpha(1.0, 0.0);
    const ShadowResult res = shadow_geometry(curve, alpha);
    const double period = res.curve.period();

    CHECK(res.shadow.t1 > 0.0);
    CHECK(res.shadow.t1 < res.shadow.t2);
    CHECK(res.shadow.t2 < period);
    CHECK_CLOSE(res.shadow.t1 + res.shadow.t2, period, 1e-12);
    CHECK_CLOSE(alpha.dot(res.curve.normal(res.shadow.t1)), 0.0, 1e-12);
    CHECK_CLOSE(alpha.dot(res.curve.normal(res.shadow.t2)), 0.0, 1e-12);

    // Dense-scan oracle on the shifted curve: alpha . nu changes sign exactly
    // twice, inside grid cells that bracket the reported roots.
    const int n = 100000;
    int sign_changes = 0;
    double brackets[4] = {0.0, 0.0, 0.0, 0.0};
    double prev = alpha.dot(res.curve.normal(0.0));
    for (int i = 1; i <= n; ++i) {
        const double t = period * static_cast<double>(i) / n;
        const double val = alpha.dot(res.curve.normal(t));
        if ((prev < 0.0) != (val < 0.0) && sign_changes < 2) {
            brackets[2 * sign_changes] = period * static_cast<double>(i - 1) / n;
            brackets[2 * sign_changes + 1] = t;
            ++sign_changes;
        } else if ((prev < 0.0) != (val < 0.0)) {
            ++sign_changes;
        }
        prev = val;
    }
    CHECK(sign_changes == 2);
    CHECK(brackets[0] <= res.shadow.t1);
    CHECK(res.shadow.t1 <= brackets[1]);
    CHECK(brackets[2] <= res.shadow.t2);
    CHECK(res.shadow.t2 <= brackets[3]);

    // The shift is a pure reparameterization: the shadow point coincides with
    // a root located independently on the original curve.
    double lo = 0.0;
    double hi = 0.0;
    prev = alpha.dot(curve.normal(0.0));
    for (int i = 1; i <= n; ++i) {
        const double t = curve.period() * static_cast<double>(i) / n;
        const double val = alpha.dot(curve.normal(t));
        if ((prev < 0.0) != (val < 0.0)) {
            lo = curve.period() * static_cast<double>(i - 1) / n;
            hi = t;
            break;
        }
        prev = val;
    }
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((alpha.dot(curve.normal(lo)) < 0.0) != (alpha.dot(curve.normal(mid)) < 0.0))
            hi = mid;
        else
            lo = mid;
    }
    const Vec2 root_pos = curve.position(0.5 * (lo + hi));
    const double d1 = (res.curve.position(res.shadow.t1) - root_pos).norm();
    const double d2 = (res.curve.position(res.shadow.t2) - root_pos).norm();
    CHECK(std::min(d1, d2) < 1e-9);
}

} // namespace

int main() {
    test_circle();
    test_ellipse();
    test_arc_length_form();
    test_shifted();
    test_incident_wave();
    test_shadow_circle();
    test_shadow_rotated_ellipse();
    return checks::report("geometry");
}
