#include "flatfront/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"

namespace flatfront {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp1(double v) { return std::max(-1.0, std::min(1.0, v)); }
}  // namespace

SphericalCurve::SphericalCurve(TrigCurve3 raw, int grid_n)
    : raw_(std::move(raw)), d1_(raw_.derivative()), d2_(d1_.derivative()), grid_n_(grid_n) {
    if (!raw_.is_periodic())
        throw InvalidParameter("spherical curve requires a periodic series");
    for (int j = 0; j < grid_n_; ++j) {
        const double r = raw_.eval(kTwoPi * j / grid_n_).norm();
        if (!(r > 1e-12)) throw NonRegularCurve("raw curve passes through the origin");
    }
}

Vec3 SphericalCurve::point(double t) const {
    const Vec3 g = raw_.eval(t);
    return g / g.norm();
}

Vec3 SphericalCurve::d1(double t) const {
    const Vec3 g = raw_.eval(t);
    const Vec3 gp = d1_.eval(t);
    const double r = g.norm();
    const double s1 = g.dot(gp);
    return gp / r - g * (s1 / (r * r * r));
}

Vec3 SphericalCurve::d2(double t) const {
    const Vec3 g = raw_.eval(t);
    const Vec3 gp = d1_.eval(t);
    const Vec3 gpp = d2_.eval(t);
    const double r = g.norm();
    const double r3 = r * r * r;
    const double s1 = g.dot(gp);
    const double s1p = gp.dot(gp) + g.dot(gpp);
    return gpp / r - gp * (2.0 * s1 / r3) - g * (s1p / r3) + g * (3.0 * s1 * s1 / (r3 * r * r));
}

double SphericalCurve::min_speed() const {
    double m = speed(0.0);
    for (int j = 1; j < grid_n_; ++j) m = std::min(m, speed(kTwoPi * j / grid_n_));
    return m;
}

double SphericalCurve::max_speed() const {
    double m = 0.0;
    for (int j = 0; j < grid_n_; ++j) m = std::max(m, speed(kTwoPi * j / grid_n_));
    return m;
}

double SphericalCurve::eps_zero() const { return 1e-8 * std::max(1.0, max_speed()); }

void SphericalCurve::require_regular(const char* who) const {
    const double m = min_speed();
    if (!(m > eps_zero())) {
        std::ostringstream os;
        os << who << ": curve is not regular (min |gamma'| = " << m << ")";
        throw NonRegularCurve(os.str());
    }
}

TrigCurve3 SphericalCurve::unit_series() const {
    return TrigCurve3::project(grid_n_, [this](double t) { return point(t); });
}

DualCurve dual_curve(const SphericalCurve& gamma) {
    gamma.require_regular("dual_curve");
    // gamma' x gamma = (g' x g)/|g|^2, so the normalized dual is exactly the
    // normalization of the polynomial series g' x g.
    TrigCurve3 raw_n = cross(gamma.raw().derivative(), gamma.raw()).trimmed();
    DualCurve out{SphericalCurve(std::move(raw_n), gamma.grid_size()), false, false, {}};

    const int n = out.dual.grid_size();
    const double eps = gamma.eps_zero();
    double min_sp = out.dual.speed(0.0), max_sp = min_sp;
    std::vector<double> sp(n);
    for (int j = 0; j < n; ++j) {
        sp[j] = out.dual.speed(kTwoPi * j / n);
        min_sp = std::min(min_sp, sp[j]);
        max_sp = std::max(max_sp, sp[j]);
    }
    out.dual_regular = min_sp > eps;
    out.dual_singular_everywhere = max_sp <= eps;
    if (!out.dual_regular && !out.dual_singular_everywhere) {
        // local minima of |n'| below threshold, refined by ternary search
        for (int j = 0; j < n; ++j) {
            const int jm = (j + n - 1) % n, jp = (j + 1) % n;
            if (sp[j] <= eps && sp[j] <= sp[jm] && sp[j] <= sp[jp]) {
                double lo = kTwoPi * (j - 1) / n, hi = kTwoPi * (j + 1) / n;
                for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                    if (out.dual.speed(m1) < out.dual.speed(m2))
                        hi = m2;
                    else
                        lo = m1;
                }
                double t = 0.5 * (lo + hi);
                if (t < 0.0) t += kTwoPi;
                if (t >= kTwoPi) t -= kTwoPi;
                out.inflection_params.push_back(t);
            }
        }
    }
    return out;
}

FrameData frame_functions(const SphericalCurve& xi, const SphericalCurve& nu, double t) {
    FrameData fd;
    const Vec3 x = xi.point(t), v = nu.point(t);
    const Vec3 xp = xi.d1(t), vp = nu.d1(t);
    fd.eta = cross(x, v);
    fd.mu1 = xp.dot(fd.eta);
    fd.mu2 = vp.dot(fd.eta);
    fd.residual_xi = (xp - fd.eta * fd.mu1).norm();
    fd.residual_nu = (vp - fd.eta * fd.mu2).norm();
    if (fd.residual_xi > 1e-7 || fd.residual_nu > 1e-7) {
        std::ostringstream os;
        os << "frame residuals " << fd.residual_xi << ", " << fd.residual_nu << " at t = " << t
           << " exceed 1e-7; (xi, nu) is not a dual pair";
        throw DualityViolation(os.str());
    }
    return fd;
}

double geodesic_curvature_at(const SphericalCurve& gamma, double t) {
    const Vec3 g = gamma.point(t), gp = gamma.d1(t), gpp = gamma.d2(t);
    const double sp = gp.norm();
    return det3(g, gp, gpp) / (sp * sp * sp);
}

GeodesicCurvature geodesic_curvature(const SphericalCurve& gamma) {
    gamma.require_regular("geodesic_curvature");
    const int n = gamma.grid_size();

    GeodesicCurvature out;
    std::vector<double> samples(n);
    for (int j = 0; j < n; ++j) samples[j] = geodesic_curvature_at(gamma, kTwoPi * j / n);
    out.series = TrigSeries::from_samples(samples, n / 2 - 1).trimmed();
    out.min_value = *std::min_element(samples.begin(), samples.end());
    out.max_value = *std::max_element(samples.begin(), samples.end());
    out.min_abs = std::fabs(samples[0]);
    for (double v : samples) out.min_abs = std::min(out.min_abs, std::fabs(v));
    out.constant_flag = (out.max_value - out.min_value) < 1e-9;
    if (out.constant_flag) return out;

    const TrigSeries dk = out.series.derivative();
    const TrigSeries ddk = dk.derivative();
    const double eps = gamma.eps_zero();
    for (int j = 0; j < n; ++j) {
        double a = kTwoPi * j / n, b = kTwoPi * (j + 1) / n;
        const double fa = dk.eval(a), fb = dk.eval(b);
        if (fa == 0.0 && fb == 0.0) continue;
        if (fa * fb > 0.0) continue;
        // bisection on kappa_g'
        double lo = a, hi = b, flo = fa;
        for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
            const double mid = 0.5 * (lo + hi), fm = dk.eval(mid);
            if (flo * fm <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        const double t = 0.5 * (lo + hi);
        if (!out.vertices.empty() && std::fabs(out.vertices.back().t - t) < 1e-9) continue;
        out.vertices.push_back({t, out.series.eval(t), std::fabs(ddk.eval(t)) > eps});
    }
    // the interval [t_{n-1}, 2 pi) wraps to the first vertex; drop a duplicate
    if (out.vertices.size() >= 2 &&
        std::fabs(out.vertices.front().t + kTwoPi - out.vertices.back().t) < 1e-9)
        out.vertices.pop_back();
    return out;
}

namespace {

// p on the minor arc from a to b (all unit vectors); arcs are short.
bool on_arc(const Vec3& p, const Vec3& a, const Vec3& b) {
    const double ab = std::acos(clamp1(a.dot(b)));
    const double ap = std::acos(clamp1(a.dot(p)));
    const double pb = std::acos(clamp1(p.dot(b)));
    return ap + pb <= ab + 1e-9;
}

}  // namespace

Convexity is_convex(const SphericalCurve& gamma) {
    gamma.require_regular("is_convex");
    const int n = gamma.grid_size();

    Convexity out;
    std::vector<Vec3> p(n);
    for (int j = 0; j < n; ++j) p[j] = gamma.point(kTwoPi * j / n);
    for (int j = 0; j < n; ++j) {
        const double step = std::acos(clamp1(p[j].dot(p[(j + 1) % n])));
        if (step > 0.1) {
            std::ostringstream os;
            os << "is_convex: polyline segment " << j << " spans " << step
               << " radians (> 0.1); increase the grid";
            throw GridTooCoarse(os.str());
        }
    }

    // O(N^2) arc pair test with a chord-distance prefilter
    std::vector<Vec3> mid(n);
    std::vector<double> rad(n);
    for (int j = 0; j < n; ++j) {
        mid[j] = (p[j] + p[(j + 1) % n]) * 0.5;
        rad[j] = (p[(j + 1) % n] - p[j]).norm() * 0.5;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent across the seam
            const double gap = (mid[i] - mid[j]).norm();
            // margin covers the sagitta of arcs up to 0.1 radians
            if (gap > rad[i] + rad[j] + 0.01) continue;
            const Vec3 n1 = cross(p[i], p[(i + 1) % n]);
            const Vec3 n2 = cross(p[j], p[(j + 1) % n]);
            const Vec3 d = cross(n1, n2);
            const double d2 = d.squared_norm();
            if (d2 < 1e-24 * n1.squared_norm() * n2.squared_norm()) {
                // near-coplanar arcs: overlap iff an endpoint lies on the other arc
                if (on_arc(p[j], p[i], p[(i + 1) % n]) ||
                    on_arc(p[(j + 1) % n], p[i], p[(i + 1) % n]))
                    out.intersections.emplace_back(kTwoPi * i / n, kTwoPi * j / n);
                continue;
            }
            const Vec3 q = d / std::sqrt(d2);
            for (const Vec3& cand : {q, -q}) {
                if (on_arc(cand, p[i], p[(i + 1) % n]) && on_arc(cand, p[j], p[(j + 1) % n])) {
                    out.intersections.emplace_back(kTwoPi * i / n, kTwoPi * j / n);
                    break;
                }
            }
        }
    }
    out.simple = out.intersections.empty();

    out.min_abs_kappa_g = std::fabs(geodesic_curvature_at(gamma, 0.0));
    for (int j = 1; j < n; ++j)
        out.min_abs_kappa_g =
            std::min(out.min_abs_kappa_g, std::fabs(geodesic_curvature_at(gamma, kTwoPi * j / n)));

    out.convex = out.simple && out.min_abs_kappa_g > gamma.eps_zero();
    return out;
}

SphericalCurve spherical_parallel(const SphericalCurve& gamma, double theta) {
    const SphericalCurve n = dual_curve(gamma).dual;
    const double c = std::cos(theta), s = std::sin(theta);
    TrigCurve3 raw = TrigCurve3::project(
        gamma.grid_size(), [&](double t) { return gamma.point(t) * c + n.point(t) * s; });
    return SphericalCurve(std::move(raw), gamma.grid_size());
}

SphericalCaustic spherical_caustic(const SphericalCurve& gamma) {
    gamma.require_regular("spherical_caustic");
    const SphericalCurve n = dual_curve(gamma).dual;
    const int ng = gamma.grid_size();
    const double eps = gamma.eps_zero();

    // dual-frame convention n' = -kappa_g gamma' (parametrization invariant)
    auto kappa_app = [&](double t) {
        const Vec3 gp = gamma.d1(t);
        return -n.d1(t).dot(gp) / gp.squared_norm();
    };

    std::vector<double> kg(ng);
    bool has_zero = false;
    for (int j = 0; j < ng; ++j) {
        kg[j] = kappa_app(kTwoPi * j / ng);
        if (std::fabs(kg[j]) <= eps) has_zero = true;
        if (j > 0 && kg[j] * kg[j - 1] < 0.0) has_zero = true;
    }
    if (has_zero) {
        std::ostringstream os;
        os << "spherical_caustic: kappa_g vanishes (A jumps through pi/2); branch segments:";
        double seg_start = 0.0;
        for (int j = 1; j < ng; ++j) {
            if (kg[j] * kg[j - 1] < 0.0 ||
                (std::fabs(kg[j]) <= eps && std::fabs(kg[j - 1]) > eps)) {
                os << " [" << seg_start << ", " << kTwoPi * j / ng << ")";
                seg_start = kTwoPi * j / ng;
            }
        }
        os << " [" << seg_start << ", 2pi)";
        throw UmbilicDegenerate(os.str());
    }

    auto caustic_point = [&](double t) {
        const double a = std::atan(1.0 / kappa_app(t));  // A in (-pi/2, pi/2]
        return gamma.point(t) * std::cos(a) + n.point(t) * std::sin(a);
    };

    std::vector<Vec3> pts(ng);
    for (int j = 0; j < ng; ++j) pts[j] = caustic_point(kTwoPi * j / ng);
    double diam = 0.0;
    for (int i = 0; i < ng; ++i)
        for (int j = i + 1; j < ng; ++j) diam = std::max(diam, (pts[i] - pts[j]).norm());

    SphericalCaustic out{
        SphericalCurve(TrigCurve3::project(ng, caustic_point), ng), diam < 1e-8,
        pts[0], diam, TrigSeries::from_samples(kg, ng / 2 - 1).trimmed()};
    if (out.is_point) {
        Vec3 centroid{0, 0, 0};
        for (const Vec3& p : pts) centroid += p;
        out.point = centroid / static_cast<double>(ng);
    }
    return out;
}

SphericalCurve tangent_indicatrix(const SphericalCurve& gamma) {
    gamma.require_regular("tangent_indicatrix");
    TrigCurve3 raw = TrigCurve3::project(gamma.grid_size(), [&](double t) { return gamma.d1(t); });
    return SphericalCurve(std::move(raw), gamma.grid_size());
}

SphericalCurve latitude_circle(double phi, int grid_n) {
    const double c = std::cos(phi), s = std::sin(phi);
    TrigCurve3 raw(TrigSeries::harmonic(1, c, 0.0), TrigSeries::harmonic(1, 0.0, c),
                   TrigSeries::constant(s));
    return SphericalCurve(std::move(raw), grid_n);
}

}  // namespace flatfront
