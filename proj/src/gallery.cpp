#include "flatfront/gallery.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"

namespace flatfront {

namespace {

void require_latitude(double phi) {
    if (!(std::fabs(phi) < std::numbers::pi / 2 - 1e-9))
        throw InvalidParameter("latitude phi must satisfy |phi| < pi/2");
    if (std::fabs(std::sin(phi)) < 1e-9)
        throw InvalidParameter("latitude phi = 0 degenerates (the dual is a point)");
}

}  // namespace

const char* to_string(GalleryName name) {
    switch (name) {
        case GalleryName::Cone: return "cone";
        case GalleryName::CircleCosN: return "circle_cos_n";
        case GalleryName::CardioidCylinder: return "cardioid_cylinder";
        case GalleryName::TangentialExample54: return "tangential_example54";
        case GalleryName::TangentialCustom: return "tangential_custom";
        case GalleryName::RectifyingCustom: return "rectifying_custom";
        default: return "plane";
    }
}

std::optional<GalleryName> gallery_name_from_string(const std::string& s) {
    for (GalleryName g :
         {GalleryName::Cone, GalleryName::CircleCosN, GalleryName::CardioidCylinder,
          GalleryName::TangentialExample54, GalleryName::TangentialCustom,
          GalleryName::RectifyingCustom, GalleryName::Plane}) {
        if (s == to_string(g)) return g;
    }
    return std::nullopt;
}

Quadruple gallery_build(const GallerySpec& spec) {
    switch (spec.name) {
        case GalleryName::Cone: {
            require_latitude(spec.phi);
            return Quadruple::with_dual(TrigSeries(0.0), TrigSeries(0.0),
                                        latitude_circle(spec.phi, spec.grid_n));
        }
        case GalleryName::CircleCosN: {
            require_latitude(spec.phi);
            if (spec.n < 2)
                throw InvalidParameter(
                    "circle_cos_n requires n >= 2 (cos nt must be orthogonal to 1, cos t, sin t)");
            return Quadruple::with_dual(TrigSeries::harmonic(spec.n, 1.0, 0.0), TrigSeries(0.0),
                                        latitude_circle(spec.phi, spec.grid_n));
        }
        case GalleryName::CardioidCylinder: {
            // Double cover of the cylinder over the cardioid (1 - sin t)(cos t, sin t, 0)
            // with s = t/2. The normalized normal reduces to the degree-3 circle below;
            // sigma'(s) = 2 c'(2s) gives b(s) = 2 sqrt(2) (cos s - sin s) and a = 0.
            const double r = 1.0 / std::sqrt(2.0);
            TrigCurve3 nu_raw(TrigSeries::harmonic(3, r, -r), TrigSeries::harmonic(3, r, r),
                              TrigSeries(0.0));
            TrigCurve3 xi_raw = TrigCurve3::constant({0.0, 0.0, 1.0});
            const double c1 = 2.0 * std::sqrt(2.0);
            return Quadruple(TrigSeries(0.0), TrigSeries::harmonic(1, c1, -c1),
                             SphericalCurve(std::move(xi_raw), spec.grid_n),
                             SphericalCurve(std::move(nu_raw), spec.grid_n));
        }
        case GalleryName::TangentialExample54:
            return tangential_developable(example54_curve(spec.grid_n));
        case GalleryName::TangentialCustom: {
            if (!spec.curve) throw InvalidParameter("tangential_custom requires a curve");
            return tangential_developable(*spec.curve);
        }
        case GalleryName::RectifyingCustom: {
            if (!spec.curve) throw InvalidParameter("rectifying_custom requires a curve");
            return rectifying_developable(*spec.curve);
        }
        case GalleryName::Plane:
            return Quadruple(TrigSeries(0.0), TrigSeries(1.0),
                             SphericalCurve(TrigCurve3::constant({1.0, 0.0, 0.0}), spec.grid_n),
                             SphericalCurve(TrigCurve3::constant({0.0, 0.0, 1.0}), spec.grid_n));
    }
    throw InvalidParameter("unknown gallery name");
}

Quadruple tangential_developable(const SpaceCurve& c) {
    const double min_k = c.min_kappa();
    if (!(min_k > c.eps_zero())) {
        std::ostringstream os;
        os << "tangential_developable: min kappa = " << min_k;
        throw VanishingCurvature(os.str());
    }
    const int n = c.grid_size();
    TrigCurve3 xi_raw = c.curve().derivative().trimmed();
    TrigCurve3 nu_raw = cross(xi_raw, xi_raw.derivative()).trimmed();  // direction of binormal
    TrigSeries a = TrigSeries::project(n, [&](double t) { return c.speed(t); });
    return Quadruple(std::move(a), TrigSeries(0.0), SphericalCurve(std::move(xi_raw), n),
                     SphericalCurve(std::move(nu_raw), n));
}

Quadruple rectifying_developable(const SpaceCurve& c) {
    const double min_k = c.min_kappa();
    if (!(min_k > c.eps_zero())) {
        std::ostringstream os;
        os << "rectifying_developable: min kappa = " << min_k;
        throw VanishingCurvature(os.str());
    }
    const int n = c.grid_size();
    // The envelope of the rectifying planes is ruled by the Darboux direction
    // tau e + kappa b (perpendicular to both n and n'); this is the unique
    // choice for which (xi, n) are dual. The generator is c itself:
    // c' = a xi + b eta with a = |c'| tau / s, b = -|c'| kappa / s.
    TrigCurve3 xi_raw = TrigCurve3::project(n, [&](double t) {
        const FrenetFrame f = frenet_data(c, t);
        return f.e * f.tau + f.b * f.kappa;  // norm sqrt(kappa^2 + tau^2)
    });
    TrigCurve3 nu_raw = TrigCurve3::project(n, [&](double t) { return frenet_data(c, t).n; });
    TrigSeries a = TrigSeries::project(n, [&](double t) {
        const FrenetFrame f = frenet_data(c, t);
        return c.speed(t) * f.tau / std::hypot(f.kappa, f.tau);
    });
    TrigSeries b = TrigSeries::project(n, [&](double t) {
        const FrenetFrame f = frenet_data(c, t);
        return -c.speed(t) * f.kappa / std::hypot(f.kappa, f.tau);
    });
    return Quadruple(std::move(a), std::move(b), SphericalCurve(std::move(xi_raw), n),
                     SphericalCurve(std::move(nu_raw), n));
}

SpaceCurve example54_curve(int grid_n) {
    // (4 + cos 2t)(cos t, sin t, 0) + (0, 0, sin 2t), expanded into harmonics
    TrigSeries x(0.0, {4.5, 0.0, 0.5}, {0.0, 0.0, 0.0});
    TrigSeries y(0.0, {0.0, 0.0, 0.0}, {3.5, 0.0, 0.5});
    TrigSeries z = TrigSeries::harmonic(2, 0.0, 1.0);
    return SpaceCurve(TrigCurve3(std::move(x), std::move(y), std::move(z)), grid_n);
}

SpaceCurve helix_curve(double r, double p, int grid_n) {
    TrigSeries x = TrigSeries::harmonic(1, r, 0.0);
    TrigSeries y = TrigSeries::harmonic(1, 0.0, r);
    // z = p t: secular term via the antiderivative of the constant p
    TrigSeries z = TrigSeries(p).antiderivative();
    return SpaceCurve(TrigCurve3(std::move(x), std::move(y), std::move(z)), grid_n);
}

}  // namespace flatfront
