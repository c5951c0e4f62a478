#include "flatfront/front.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"

namespace flatfront {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Vec3> integrand_samples(const Quadruple& q) {
    const int n = q.grid_size();
    std::vector<Vec3> h(n);
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        h[j] = q.xi().point(t) * q.a().eval(t) + q.eta(t) * q.b().eval(t);
    }
    return h;
}

Vec3 periodic_integral(const std::vector<Vec3>& samples) {
    Vec3 sum{0, 0, 0};
    for (const Vec3& v : samples) sum += v;
    const double w = kTwoPi / static_cast<double>(samples.size());
    return {sum.x * w, sum.y * w, sum.z * w};
}

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    Mat3 inverse(double d) const {
        Mat3 inv;
        inv.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
        inv.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
        inv.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
        inv.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
        inv.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
        inv.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
        inv.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
        inv.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
        inv.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
        return inv;
    }
    double frobenius() const {
        double s = 0.0;
        for (const auto& row : m)
            for (double v : row) s += v * v;
        return std::sqrt(s);
    }
    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
};

FunctionPeriodicity classify_periodicity(double res_per, double res_anti) {
    FunctionPeriodicity f;
    f.residual_periodic = res_per;
    f.residual_antiperiodic = res_anti;
    f.pi_periodic = res_per < 1e-8;
    f.anti_pi_periodic = res_anti < 1e-8;
    if (f.pi_periodic && f.anti_pi_periodic)
        f.label = PeriodicityLabel::Zero;
    else if (f.pi_periodic)
        f.label = PeriodicityLabel::Periodic;
    else if (f.anti_pi_periodic)
        f.label = PeriodicityLabel::AntiPeriodic;
    else
        f.label = PeriodicityLabel::Neither;
    return f;
}

}  // namespace

FrontEvaluator::FrontEvaluator(Quadruple q) : q_(std::move(q)) {
    const std::vector<Vec3> h = integrand_samples(q_);
    defect_ = periodic_integral(h);
    defect_warning_ = defect_.norm() > 1e-8;

    const int n = static_cast<int>(h.size());
    std::vector<double> vx(n), vy(n), vz(n);
    for (int j = 0; j < n; ++j) {
        vx[j] = h[j].x;
        vy[j] = h[j].y;
        vz[j] = h[j].z;
    }
    const int k = n / 2 - 1;
    TrigCurve3 integrand(TrigSeries::from_samples(vx, k).trimmed(),
                         TrigSeries::from_samples(vy, k).trimmed(),
                         TrigSeries::from_samples(vz, k).trimmed());
    sigma_ = integrand.antiderivative_periodic_part();
}

FrontEvaluator build_front(const Quadruple& q) {
    q.require_valid("build_front");
    return FrontEvaluator(q);
}

Vec3 period_residual(const Quadruple& q) { return periodic_integral(integrand_samples(q)); }

Vec3 period_residual(const SphericalCurve& xi, const TrigSeries& a, const TrigSeries& b) {
    return period_residual(Quadruple::with_dual(a, b, xi));
}

TrigSeries project_period(const SphericalCurve& xi, const TrigSeries& a_raw) {
    const int n = xi.grid_size();
    Mat3 gram;
    Vec3 rhs{0, 0, 0};
    {
        Mat3 sum{};
        Vec3 rsum{0, 0, 0};
        for (int j = 0; j < n; ++j) {
            const Vec3 x = xi.point(kTwoPi * j / n);
            const double av = a_raw.eval(kTwoPi * j / n);
            const double c[3] = {x.x, x.y, x.z};
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s) sum.m[r][s] += c[r] * c[s];
            rsum += x * av;
        }
        const double w = kTwoPi / n;
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) gram.m[r][s] = sum.m[r][s] * w;
        rhs = rsum * w;
    }

    const double d = gram.det();
    if (d == 0.0) throw DegenerateGram("project_period: singular Gram matrix");
    const Mat3 inv = gram.inverse(d);
    const double cond = gram.frobenius() * inv.frobenius();
    if (!(cond < 1e8)) {
        std::ostringstream os;
        os << "project_period: Gram matrix condition " << cond << " exceeds 1e8";
        throw DegenerateGram(os.str());
    }
    const Vec3 c = inv.apply(rhs);

    const TrigCurve3 xs = xi.unit_series();
    TrigSeries a = a_raw - (xs.x() * c.x + xs.y() * c.y + xs.z() * c.z);
    a = a.trimmed();

    Vec3 post{0, 0, 0};
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        post += xi.point(t) * a.eval(t);
    }
    post = post * (kTwoPi / n);
    if (!(post.norm() < 1e-10)) {
        std::ostringstream os;
        os << "project_period: post residual " << post.norm() << " exceeds 1e-10";
        throw Error(os.str());
    }
    return a;
}

std::pair<TrigSeries, TrigSeries> project_period_joint(const Quadruple& q) {
    const int n = q.grid_size();
    Mat3 m{};
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const Vec3 x = q.xi().point(t), e = q.eta(t);
        const double cx[3] = {x.x, x.y, x.z};
        const double ce[3] = {e.x, e.y, e.z};
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) m.m[r][s] += cx[r] * cx[s] + ce[r] * ce[s];
    }
    const double w = kTwoPi / n;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) m.m[r][s] *= w;

    const double d = m.det();
    if (d == 0.0) throw DegenerateGram("project_period_joint: singular system");
    const Mat3 inv = m.inverse(d);
    if (!(m.frobenius() * inv.frobenius() < 1e8))
        throw DegenerateGram("project_period_joint: ill-conditioned system");
    const Vec3 c = inv.apply(period_residual(q));

    const TrigCurve3 xs = q.xi().unit_series();
    const TrigCurve3 es =
        TrigCurve3::project(n, [&](double t) { return q.eta(t); });
    TrigSeries a = (q.a() - (xs.x() * c.x + xs.y() * c.y + xs.z() * c.z)).trimmed();
    TrigSeries b = (q.b() - (es.x() * c.x + es.y() * c.y + es.z() * c.z)).trimmed();
    return {a, b};
}

FrontCondition front_condition(const Quadruple& q) {
    FrontCondition out;
    const int n = q.grid_size();
    const double eps = q.eps_zero();
    out.front = true;
    out.min_abs_nu_prime = q.nu().d1(0.0).norm();
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const double nup = q.nu().d1(t).norm();
        const double xip = q.xi().d1(t).norm();
        const double b = std::fabs(q.b().eval(t));
        out.min_abs_nu_prime = std::min(out.min_abs_nu_prime, nup);
        bool front_here;
        if (nup > eps) {
            front_here = true;
        } else if (xip <= eps && b > eps) {
            front_here = true;  // umbilic ruling: immersed, nu' = 0
            out.umbilic_ruling_params.push_back(t);
        } else {
            front_here = false;
            if (out.failure_params.size() < 32) out.failure_params.push_back(t);
        }
        out.front = out.front && front_here;
    }
    return out;
}

Quadruple regauge(const Quadruple& q, const TrigSeries& phi) {
    if (!phi.is_periodic()) throw InvalidParameter("regauge: phi must be periodic");
    return Quadruple(q.a() + phi.derivative(), q.b() + product(phi, q.mu1()), q.xi(), q.nu());
}

const char* to_string(PeriodicityLabel label) {
    switch (label) {
        case PeriodicityLabel::Periodic: return "pi-periodic";
        case PeriodicityLabel::AntiPeriodic: return "anti-pi-periodic";
        case PeriodicityLabel::Zero: return "zero";
        default: return "neither";
    }
}

PeriodicityClass periodicity_class(const Quadruple& q) {
    const int half = q.grid_size() / 2;
    double xi_per = 0.0, xi_anti = 0.0, nu_per = 0.0, nu_anti = 0.0;
    double a_per = 0.0, a_anti = 0.0, b_per = 0.0, b_anti = 0.0;
    for (int j = 0; j < half; ++j) {
        const double t = kTwoPi * j / q.grid_size();
        const double tp = t + std::numbers::pi;
        xi_per = std::max(xi_per, (q.xi().point(tp) - q.xi().point(t)).max_abs());
        xi_anti = std::max(xi_anti, (q.xi().point(tp) + q.xi().point(t)).max_abs());
        nu_per = std::max(nu_per, (q.nu().point(tp) - q.nu().point(t)).max_abs());
        nu_anti = std::max(nu_anti, (q.nu().point(tp) + q.nu().point(t)).max_abs());
        a_per = std::max(a_per, std::fabs(q.a().eval(tp) - q.a().eval(t)));
        a_anti = std::max(a_anti, std::fabs(q.a().eval(tp) + q.a().eval(t)));
        b_per = std::max(b_per, std::fabs(q.b().eval(tp) - q.b().eval(t)));
        b_anti = std::max(b_anti, std::fabs(q.b().eval(tp) + q.b().eval(t)));
    }

    PeriodicityClass out;
    out.xi = classify_periodicity(xi_per, xi_anti);
    out.nu = classify_periodicity(nu_per, nu_anti);
    out.a = classify_periodicity(a_per, a_anti);
    out.b = classify_periodicity(b_per, b_anti);

    out.covers_nonorientable = out.xi.anti_pi_periodic && out.a.anti_pi_periodic;
    out.covers_noncoorientable = out.nu.anti_pi_periodic;
    out.plain = !out.covers_nonorientable && !out.covers_noncoorientable;

    out.nonorientable_coorientable =
        out.covers_nonorientable && out.nu.pi_periodic && out.b.anti_pi_periodic;
    out.nonorientable_noncoorientable =
        out.covers_nonorientable && out.nu.anti_pi_periodic && out.b.pi_periodic;
    out.noncoorientable_orientable = out.covers_noncoorientable && out.xi.pi_periodic &&
                                     out.a.pi_periodic && out.b.anti_pi_periodic;
    out.noncoorientable_nonorientable = out.covers_noncoorientable && out.xi.anti_pi_periodic &&
                                        out.a.anti_pi_periodic && out.b.pi_periodic;

    out.underlying_orientable = !out.covers_nonorientable;
    out.underlying_coorientable = !out.covers_noncoorientable;
    return out;
}

}  // namespace flatfront
