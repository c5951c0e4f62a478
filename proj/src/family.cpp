#include "flatfront/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"
#include "flatfront/front.hpp"

namespace flatfront {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Quadruple parallel(const Quadruple& q, double delta) {
    return Quadruple(q.a(), q.b() + q.mu2() * delta, q.xi(), q.nu());
}

CausticResult caustic(const Quadruple& q) {
    q.require_valid("caustic");
    const double eps = q.eps_zero();
    if (q.min_abs_mu2() <= eps) {
        std::ostringstream os;
        os << "caustic: mu2 vanishes (min |mu2| = " << q.min_abs_mu2()
           << "); the front has umbilics";
        throw UmbilicDegenerate(os.str());
    }

    const int n = q.grid_size();
    const TrigSeries mu2p = q.mu2().derivative();
    const TrigSeries bp = q.b().derivative();
    auto bm = [&](double t) {  // (b/mu2)'
        const double m2 = q.mu2().eval(t);
        return (bp.eval(t) * m2 - q.b().eval(t) * mu2p.eval(t)) / (m2 * m2);
    };

    TrigSeries alpha_c = TrigSeries::project(n, [&](double t) {
        const double m1 = q.mu1().eval(t), m2 = q.mu2().eval(t);
        return (q.a().eval(t) * m2 + bm(t) * m1) / std::hypot(m1, m2);
    });
    TrigSeries beta_c = TrigSeries::project(n, [&](double t) {
        const double m1 = q.mu1().eval(t), m2 = q.mu2().eval(t);
        return (-q.a().eval(t) * m1 + bm(t) * m2) / std::hypot(m1, m2);
    });
    // raw ruling direction mu2 xi - mu1 nu has norm s; normalization is exact
    TrigCurve3 cxi_raw = TrigCurve3::project(n, [&](double t) {
        return q.xi().point(t) * q.mu2().eval(t) - q.nu().point(t) * q.mu1().eval(t);
    });
    TrigCurve3 eta_raw = TrigCurve3::project(n, [&](double t) { return q.eta(t); });

    CausticResult out{Quadruple(std::move(alpha_c), std::move(beta_c),
                                SphericalCurve(std::move(cxi_raw), n),
                                SphericalCurve(std::move(eta_raw), n)),
                      false, false};

    double diam = 0.0;
    const Vec3 p0 = out.quadruple.xi().point(0.0);
    for (int j = 1; j < n; ++j)
        diam = std::max(diam, (out.quadruple.xi().point(kTwoPi * j / n) - p0).norm());
    out.constant_ruling = diam < 1e-8;
    out.degenerate_line = out.constant_ruling &&
                          out.quadruple.a().sup_on_grid(n) <= eps &&
                          out.quadruple.b().sup_on_grid(n) <= eps;
    return out;
}

double curvature_radius(const Quadruple& q, double t, double v) {
    const double m2 = q.mu2().eval(t);
    if (std::fabs(m2) <= q.eps_zero()) {
        std::ostringstream os;
        os << "curvature_radius: mu2(" << t << ") = " << m2;
        throw UmbilicDegenerate(os.str());
    }
    return -(q.b().eval(t) + v * q.mu1().eval(t)) / m2;
}

CurvatureLine curvature_line(const Quadruple& q, double t0, double v0, int turns,
                             int samples_per_turn) {
    CurvatureLine line;
    line.t0 = t0;
    line.v0 = v0;
    line.turns = turns;
    line.a_primitive = q.a().antiderivative();
    line.closure_defect = -kTwoPi * q.a().mean();
    line.closed = std::fabs(line.closure_defect) < 1e-10;
    const int total = std::max(1, turns) * samples_per_turn;
    line.samples.reserve(total + 1);
    for (int j = 0; j <= total; ++j) {
        const double t = t0 + kTwoPi * std::max(1, turns) * j / total;
        line.samples.emplace_back(t, line.v_at(t));
    }
    return line;
}

LiftMetricCoeffs lift_metric_coeffs(const Quadruple& q, double t, double v) {
    const double a = q.a().eval(t);
    const double lam = q.b().eval(t) + v * q.mu1().eval(t);
    const double m2 = q.mu2().eval(t);
    return {a * a + lam * lam + m2 * m2, a, 1.0};
}

CompletenessReport completeness_report(const Quadruple& q, bool strict) {
    q.require_valid("completeness_report");
    CompletenessReport rep;
    rep.min_abs_mu1 = q.min_abs_mu1();
    rep.min_abs_mu2 = q.min_abs_mu2();

    rep.period_defect_norm = period_residual(q).norm();
    rep.period_condition_ok = rep.period_defect_norm < 1e-8;
    if (!rep.period_condition_ok && strict) {
        std::ostringstream os;
        os << "completeness_report: period defect " << rep.period_defect_norm << " exceeds 1e-8";
        throw PeriodConditionViolated(os.str());
    }

    const FrontCondition fc = front_condition(q);
    rep.is_front = fc.front;
    rep.umbilic_branch = !fc.umbilic_ruling_params.empty();

    // locus structure: every ruling with mu1 != 0 carries one singular point;
    // a ruling with mu1 = b = 0 is wholly singular (compactness fails there)
    const int n = q.grid_size();
    const double eps = q.eps_zero();
    bool nonempty = false, compact = true;
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        const double m1 = std::fabs(q.mu1().eval(t)), b = std::fabs(q.b().eval(t));
        if (m1 > eps) {
            nonempty = true;
        } else if (b <= eps) {
            nonempty = true;
            compact = false;
        }
    }
    rep.singular_set_nonempty = nonempty;
    rep.singular_set_compact = compact;

    if (rep.period_condition_ok) {
        rep.weakly_complete = rep.is_front;  // closed generator structure
        rep.complete = rep.weakly_complete && nonempty && compact;
        if (rep.complete && nonempty) rep.ends_embedded = is_convex(q.xi()).convex;
    }
    return rep;
}

}  // namespace flatfront
