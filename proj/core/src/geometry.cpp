#include "hfbem/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfbem {

namespace {

constexpr double kPi = 3.14159265358979323846;

double reduce_mod(double t, double period) {
    double r = std::fmod(t, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0; // fmod rounding at the seam
    return r;
}

bool is_unit(const Vec2& v) {
    return std::isfinite(v.x()) && std::isfinite(v.y()) && std::abs(v.norm() - 1.0) <= 1e-14;
}

} // namespace

class ParametricBoundary::Impl {
public:
    virtual ~Impl() = default;
    virtual double half_period() const = 0;
    virtual CurveSample sample(double t) const = 0;
};

namespace {

class CircleImpl final : public ParametricBoundary::Impl {
public:
    explicit CircleImpl(double radius) : r_(radius), P_(kPi * radius) {}

    double half_period() const override { return P_; }

    CurveSample sample(double t) const override {
        const double theta = reduce_mod(t, 2.0 * P_) / r_;
        const double c = std::cos(theta), s = std::sin(theta);
        CurveSample out;
        out.t = t;
        out.gamma = Vec2(r_ * c, r_ * s);
        out.tangent = Vec2(-s, c);
        out.normal = Vec2(c, s);
        out.kappa = 1.0 / r_;
        return out;
    }

private:
    double r_;
    double P_;
};

/// Arc-length form of a raw closed curve. The speed is expanded in a
/// trigonometric series sampled on a uniform grid; the cumulative arc length
/// follows by termwise integration and is inverted per query by a bisection
/// safeguarded Newton iteration.
class GeneralArcImpl final : public ParametricBoundary::Impl {
public:
    GeneralArcImpl(const RawCurve& raw, int n_quad)
        : T_(raw.period),
          position_(raw.position),
          derivative_(raw.derivative),
          second_(raw.second_derivative) {
        const int n = n_quad + (n_quad % 2);
        std::vector<double> sigma(static_cast<std::size_t>(n));
        std::vector<double> cos_tab(static_cast<std::size_t>(n)), sin_tab(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const double ang = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            cos_tab[static_cast<std::size_t>(j)] = std::cos(ang);
            sin_tab[static_cast<std::size_t>(j)] = std::sin(ang);
        }
        for (int j = 0; j < n; ++j) {
            const double phi = T_ * static_cast<double>(j) / static_cast<double>(n);
            const Vec2 d1 = derivative_(phi);
            const Vec2 d2 = second_(phi);
            const double sg = d1.norm();
            if (!(sg > 0.0) || !std::isfinite(sg)) {
                throw GeometryError("arc_length_form: vanishing or non-finite speed");
            }
            const double curv = (d1.x() * d2.y() - d1.y() * d2.x()) / (sg * sg * sg);
            if (!(curv > 0.0)) {
                throw NotConvexError(
                    "arc_length_form: curvature must be positive everywhere "
                    "(counterclockwise strictly convex curve required)");
            }
            sigma[static_cast<std::size_t>(j)] = sg;
        }

        // Real trigonometric coefficients of the speed, highest kept mode
        // chosen by coefficient decay.
        const int half = n / 2;
        std::vector<double> a(static_cast<std::size_t>(half) + 1, 0.0);
        std::vector<double> b(static_cast<std::size_t>(half) + 1, 0.0);
        for (int m = 0; m <= half; ++m) {
            double ca = 0.0, cb = 0.0;
            for (int j = 0; j < n; ++j) {
                const std::size_t idx =
                    static_cast<std::size_t>((static_cast<long long>(m) * j) % n);
                ca += sigma[static_cast<std::size_t>(j)] * cos_tab[idx];
                cb += sigma[static_cast<std::size_t>(j)] * sin_tab[idx];
            }
            const double scale = (m == 0 || m == half) ? 1.0 : 2.0;
            a[static_cast<std::size_t>(m)] = scale * ca / static_cast<double>(n);
            b[static_cast<std::size_t>(m)] = scale * cb / static_cast<double>(n);
        }
        int keep = 0;
        for (int m = 1; m <= half; ++m) {
            if (std::abs(a[static_cast<std::size_t>(m)]) + std::abs(b[static_cast<std::size_t>(m)]) >
                1e-17 * std::abs(a[0])) {
                keep = m;
            }
        }
        a.resize(static_cast<std::size_t>(keep) + 1);
        b.resize(static_cast<std::size_t>(keep) + 1);
        a_ = std::move(a);
        b_ = std::move(b);
        P_ = 0.5 * a_[0] * T_;
        if (!(P_ > 0.0) || !std::isfinite(P_)) {
            throw GeometryError("arc_length_form: non-positive total length");
        }
    }

    double half_period() const override { return P_; }

    CurveSample sample(double t) const override {
        const double tr = reduce_mod(t, 2.0 * P_);
        const double phi = invert(tr);
        const Vec2 d1 = derivative_(phi);
        const Vec2 d2 = second_(phi);
        const double sg = d1.norm();
        CurveSample out;
        out.t = t;
        out.gamma = position_(phi);
        out.tangent = d1 / sg;
        out.normal = Vec2(out.tangent.y(), -out.tangent.x());
        out.kappa = (d1.x() * d2.y() - d1.y() * d2.x()) / (sg * sg * sg);
        return out;
    }

private:
    double speed(double phi) const {
        const double w = 2.0 * kPi / T_;
        double s = a_[0];
        for (std::size_t m = 1; m < a_.size(); ++m) {
            const double ang = w * static_cast<double>(m) * phi;
            s += a_[m] * std::cos(ang) + b_[m] * std::sin(ang);
        }
        return s;
    }

    double arc(double phi) const {
        const double w = 2.0 * kPi / T_;
        double s = a_[0] * phi;
        for (std::size_t m = 1; m < a_.size(); ++m) {
            const double mw = w * static_cast<double>(m);
            const double ang = mw * phi;
            s += (a_[m] * std::sin(ang) - b_[m] * (std::cos(ang) - 1.0)) / mw;
        }
        return s;
    }

    /// Solves arc(phi) = target on [0, T]; arc is strictly increasing.
    double invert(double target) const {
        double lo = 0.0, hi = T_;
        double phi = target / a_[0];
        if (!(phi > lo) || !(phi < hi)) phi = 0.5 * (lo + hi);
        double f = arc(phi) - target;
        for (int it = 0; it < 100; ++it) {
            if (f == 0.0) break;
            if (f > 0.0) hi = phi;
            else lo = phi;
            double next = phi - f / speed(phi);
            if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
            const double df = std::abs(next - phi);
            phi = next;
            f = arc(phi) - target;
            if (df <= 4e-16 * T_) break;
        }
        return phi;
    }

    double T_;
    double P_ = 0.0;
    std::function<Vec2(double)> position_, derivative_, second_;
    std::vector<double> a_, b_; // speed coefficients: a0 + sum a_m cos + b_m sin
};

class ShiftImpl final : public ParametricBoundary::Impl {
public:
    ShiftImpl(std::shared_ptr<const ParametricBoundary::Impl> base, double delta)
        : base_(std::move(base)), delta_(delta) {}

    double half_period() const override { return base_->half_period(); }

    CurveSample sample(double t) const override {
        CurveSample s = base_->sample(t - delta_);
        s.t = t;
        return s;
    }

    const std::shared_ptr<const ParametricBoundary::Impl>& base() const { return base_; }
    double delta() const { return delta_; }

private:
    std::shared_ptr<const ParametricBoundary::Impl> base_;
    double delta_;
};

} // namespace

ParametricBoundary::ParametricBoundary(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {
    if (!impl_) throw std::invalid_argument("ParametricBoundary: null implementation");
}

double ParametricBoundary::half_period() const { return impl_->half_period(); }
double ParametricBoundary::period() const { return 2.0 * impl_->half_period(); }

Vec2 ParametricBoundary::position(double t) const { return impl_->sample(t).gamma; }
Vec2 ParametricBoundary::tangent(double t) const { return impl_->sample(t).tangent; }

Vec2 ParametricBoundary::second_derivative(double t) const {
    const CurveSample s = impl_->sample(t);
    return -s.kappa * s.normal;
}

Vec2 ParametricBoundary::normal(double t) const { return impl_->sample(t).normal; }
double ParametricBoundary::curvature(double t) const { return impl_->sample(t).kappa; }
CurveSample ParametricBoundary::sample(double t) const { return impl_->sample(t); }

ParametricBoundary ParametricBoundary::shifted(double delta) const {
    if (auto sh = std::dynamic_pointer_cast<const ShiftImpl>(impl_)) {
        return ParametricBoundary(std::make_shared<ShiftImpl>(sh->base(), sh->delta() + delta));
    }
    return ParametricBoundary(std::make_shared<ShiftImpl>(impl_, delta));
}

ParametricBoundary make_circle(double radius) {
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw std::invalid_argument("make_circle: radius must be positive and finite");
    }
    return ParametricBoundary(std::make_shared<CircleImpl>(radius));
}

ParametricBoundary make_ellipse(double semi_a, double semi_b, double rotation) {
    if (!std::isfinite(semi_a) || semi_a <= 0.0 || !std::isfinite(semi_b) || semi_b <= 0.0) {
        throw std::invalid_argument("make_ellipse: semi-axes must be positive and finite");
    }
    if (!std::isfinite(rotation)) {
        throw std::invalid_argument("make_ellipse: rotation must be finite");
    }
    const double cr = std::cos(rotation), sr = std::sin(rotation);
    const auto rot = [cr, sr](const Vec2& v) {
        return Vec2(cr * v.x() - sr * v.y(), sr * v.x() + cr * v.y());
    };
    RawCurve raw;
    raw.period = 2.0 * kPi;
    raw.position = [semi_a, semi_b, rot](double phi) {
        return rot(Vec2(semi_a * std::cos(phi), semi_b * std::sin(phi)));
    };
    raw.derivative = [semi_a, semi_b, rot](double phi) {
        return rot(Vec2(-semi_a * std::sin(phi), semi_b * std::cos(phi)));
    };
    raw.second_derivative = [semi_a, semi_b, rot](double phi) {
        return rot(Vec2(-semi_a * std::cos(phi), -semi_b * std::sin(phi)));
    };
    return arc_length_form(raw, 2048);
}

ParametricBoundary arc_length_form(const RawCurve& raw, int n_quad) {
    if (!std::isfinite(raw.period) || raw.period <= 0.0) {
        throw std::invalid_argument("arc_length_form: period must be positive and finite");
    }
    if (!raw.position || !raw.derivative || !raw.second_derivative) {
        throw std::invalid_argument("arc_length_form: all three curve callables are required");
    }
    if (n_quad < 8) {
        throw std::invalid_argument("arc_length_form: n_quad must be at least 8");
    }
    return ParametricBoundary(std::make_shared<GeneralArcImpl>(raw, n_quad));
}

IncidentWave::IncidentWave(const Vec2& alpha, double k_in, double k_min)
    : direction(alpha), k(k_in) {
    if (!is_unit(alpha)) {
        throw std::invalid_argument("IncidentWave: direction must be a unit vector");
    }
    if (!std::isfinite(k_in) || k_in < k_min) {
        throw std::invalid_argument("IncidentWave: wavenumber below the admissible lower bound");
    }
}

ShadowResult shadow_geometry(const ParametricBoundary& curve, const Vec2& alpha) {
    if (!is_unit(alpha)) {
        throw std::invalid_argument("shadow_geometry: direction must be a unit vector");
    }
    const double twoP = curve.period();
    const int n = 8192;
    const double h = twoP / static_cast<double>(n);

    std::vector<double> g(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        g[static_cast<std::size_t>(j)] = alpha.dot(curve.normal(h * static_cast<double>(j)));
    }

    std::vector<double> roots;
    for (int j = 0; j < n; ++j) {
        const double gj = g[static_cast<std::size_t>(j)];
        const double gn = g[static_cast<std::size_t>((j + 1) % n)];
        if (gj == 0.0) {
            roots.push_back(h * static_cast<double>(j));
            continue;
        }
        if (gj * gn < 0.0) {
            double lo = h * static_cast<double>(j), hi = h * static_cast<double>(j + 1);
            double flo = gj;
            while (hi - lo > 1e-13) {
                const double mid = 0.5 * (lo + hi);
                const double fm = alpha.dot(curve.normal(mid));
                if (fm == 0.0) {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if ((flo < 0.0) == (fm < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            double root = 0.5 * (lo + hi);
            // Newton polish: d/dt (alpha . nu) = kappa alpha . gamma'
            for (int it = 0; it < 3; ++it) {
                const CurveSample s = curve.sample(root);
                const double val = alpha.dot(s.normal);
                const double der = s.kappa * alpha.dot(s.tangent);
                if (der == 0.0) break;
                root -= val / der;
            }
            roots.push_back(reduce_mod(root, twoP));
        }
    }
    if (roots.size() != 2) {
        throw GeometryError("shadow_geometry: expected exactly two shadow boundary points, found " +
                            std::to_string(roots.size()));
    }

    const double u1 = std::min(roots[0], roots[1]);
    const double u2 = std::max(roots[0], roots[1]);
    double t1_pre = 0.0, t2_pre = 0.0;
    if (alpha.dot(curve.normal(0.5 * (u1 + u2))) < 0.0) {
        t1_pre = u1; // the arc (u1, u2) is illuminated
        t2_pre = u2;
    } else {
        t1_pre = u2; // the illuminated arc wraps through the seam
        t2_pre = u1 + twoP;
    }
    // Shift the origin so that t1 + t2 = 2P exactly; t2 is defined through t1
    // to make the symmetry exact in floating point.
    const double delta = 0.5 * (t1_pre + t2_pre) - 0.5 * twoP;
    const double t1 = t1_pre - delta;
    const double t2 = twoP - t1;
    return ShadowResult{ShadowGeometry{t1, t2}, curve.shifted(-delta)};
}

} // namespace hfbem
