#include "flatfront/quadruple.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"

namespace flatfront {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ValidationReport::worst_value() const {
    return std::max({nu_dot_xi, nup_dot_xi, nu_dot_xip, frame_residual_xi, frame_residual_nu});
}

std::string ValidationReport::worst_name() const {
    const double w = worst_value();
    if (w == nu_dot_xi) return "nu.xi";
    if (w == nup_dot_xi) return "nu'.xi";
    if (w == nu_dot_xip) return "nu.xi'";
    if (w == frame_residual_xi) return "|xi' - mu1 eta|";
    return "|nu' - mu2 eta|";
}

Quadruple::Quadruple(TrigSeries a, TrigSeries b, SphericalCurve xi, SphericalCurve nu)
    : a_(a.trimmed()), b_(b.trimmed()), xi_(std::move(xi)), nu_(std::move(nu)) {
    if (!a_.is_periodic() || !b_.is_periodic())
        throw InvalidParameter("quadruple densities must be periodic");
    const int n = xi_.grid_size();
    std::vector<double> m1(n), m2(n);
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const Vec3 e = eta(t);
        m1[j] = xi_.d1(t).dot(e);
        m2[j] = nu_.d1(t).dot(e);
    }
    mu1_ = TrigSeries::from_samples(m1, n / 2 - 1).trimmed();
    mu2_ = TrigSeries::from_samples(m2, n / 2 - 1).trimmed();
    min_abs_mu1_ = std::fabs(m1[0]);
    min_abs_mu2_ = std::fabs(m2[0]);
    for (int j = 1; j < n; ++j) {
        min_abs_mu1_ = std::min(min_abs_mu1_, std::fabs(m1[j]));
        min_abs_mu2_ = std::min(min_abs_mu2_, std::fabs(m2[j]));
    }
    eps_zero_ = 1e-8 * std::max({1.0, xi_.max_speed(), nu_.max_speed()});
}

Quadruple Quadruple::with_dual(TrigSeries a, TrigSeries b, const SphericalCurve& xi) {
    return Quadruple(std::move(a), std::move(b), xi, dual_curve(xi).dual);
}

ValidationReport Quadruple::validate() const {
    ValidationReport r;
    const int n = grid_size();
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const Vec3 x = xi_.point(t), v = nu_.point(t);
        const Vec3 xp = xi_.d1(t), vp = nu_.d1(t);
        const Vec3 e = cross(x, v);
        r.nu_dot_xi = std::max(r.nu_dot_xi, std::fabs(v.dot(x)));
        r.nup_dot_xi = std::max(r.nup_dot_xi, std::fabs(vp.dot(x)));
        r.nu_dot_xip = std::max(r.nu_dot_xip, std::fabs(v.dot(xp)));
        r.frame_residual_xi = std::max(r.frame_residual_xi, (xp - e * xp.dot(e)).norm());
        r.frame_residual_nu = std::max(r.frame_residual_nu, (vp - e * vp.dot(e)).norm());
    }
    r.pass = r.worst_value() < 1e-9;
    return r;
}

void Quadruple::require_valid(const char* who) const {
    const ValidationReport r = validate();
    if (!r.pass) {
        std::ostringstream os;
        os << who << ": duality violation, residual " << r.worst_name() << " = "
           << r.worst_value();
        throw DualityViolation(os.str());
    }
}

ValidationReport validate_quadruple(const Quadruple& q) { return q.validate(); }

}  // namespace flatfront
