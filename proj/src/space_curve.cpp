#include "flatfront/space_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"

namespace flatfront {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SpaceCurve::SpaceCurve(TrigCurve3 curve, int grid_n)
    : c_(std::move(curve)),
      d1_(c_.derivative()),
      d2_(d1_.derivative()),
      d3_(d2_.derivative()),
      grid_n_(grid_n) {}

double SpaceCurve::kappa(double t) const {
    const Vec3 cp = d1(t);
    const double sp = cp.norm();
    return cross(cp, d2(t)).norm() / (sp * sp * sp);
}

double SpaceCurve::tau(double t) const {
    const Vec3 cp = d1(t), cpp = d2(t);
    const Vec3 cxc = cross(cp, cpp);
    return det3(cp, cpp, d3(t)) / cxc.squared_norm();
}

double SpaceCurve::min_speed() const {
    double m = speed(0.0);
    for (int j = 1; j < grid_n_; ++j) m = std::min(m, speed(kTwoPi * j / grid_n_));
    return m;
}

double SpaceCurve::max_speed() const {
    double m = 0.0;
    for (int j = 0; j < grid_n_; ++j) m = std::max(m, speed(kTwoPi * j / grid_n_));
    return m;
}

double SpaceCurve::min_kappa() const {
    double m = kappa(0.0);
    for (int j = 1; j < grid_n_; ++j) m = std::min(m, kappa(kTwoPi * j / grid_n_));
    return m;
}

double SpaceCurve::min_abs_tau() const {
    double m = std::fabs(tau(0.0));
    for (int j = 1; j < grid_n_; ++j) m = std::min(m, std::fabs(tau(kTwoPi * j / grid_n_)));
    return m;
}

double SpaceCurve::eps_zero() const { return 1e-8 * std::max(1.0, max_speed()); }

FrenetFrame frenet_data(const SpaceCurve& c, double t) {
    const Vec3 cp = c.d1(t);
    const double sp = cp.norm();
    if (!(sp > c.eps_zero())) {
        std::ostringstream os;
        os << "frenet_data: |c'(" << t << ")| = " << sp;
        throw NonRegularCurve(os.str());
    }
    const Vec3 cpp = c.d2(t);
    const Vec3 cxc = cross(cp, cpp);
    const double kappa = cxc.norm() / (sp * sp * sp);
    if (!(kappa > c.eps_zero())) {
        std::ostringstream os;
        os << "frenet_data: kappa(" << t << ") = " << kappa;
        throw VanishingCurvature(os.str());
    }
    FrenetFrame f;
    f.e = cp / sp;
    f.b = cxc / cxc.norm();
    f.n = cross(f.b, f.e);
    f.kappa = kappa;
    f.tau = det3(cp, cpp, c.d3(t)) / cxc.squared_norm();
    return f;
}

}  // namespace flatfront
