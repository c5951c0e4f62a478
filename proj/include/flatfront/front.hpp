#pragma once

#include <vector>

#include "flatfront/quadruple.hpp"
#include "flatfront/trig_curve.hpp"

namespace flatfront {

/// The developable frontal f(t, v) = sigma_hat(t) + v xi_hat(t) built from a
/// quadruple. sigma_hat is the exact series primitive of the oscillating part
/// of a xi + b eta with sigma_hat(0) = 0; the mean of the integrand is kept
/// aside as the period defect (the front closes iff it vanishes).
class FrontEvaluator {
public:
    explicit FrontEvaluator(Quadruple q);

    const Quadruple& quadruple() const { return q_; }
    const TrigCurve3& sigma_hat() const { return sigma_; }

    Vec3 sigma(double t) const { return sigma_.eval(t); }
    Vec3 eval(double t, double v) const { return sigma_.eval(t) + xi_dir(t) * v; }
    Vec3 xi_dir(double t) const { return q_.xi().point(t); }
    Vec3 normal(double t) const { return q_.nu().point(t); }
    /// Area density lambda(t, v) = b(t) + v mu1(t): f_t x f_v = lambda nu.
    double density(double t, double v) const { return q_.b().eval(t) + v * q_.mu1().eval(t); }

    const Vec3& period_defect() const { return defect_; }
    /// True when |period defect| > 1e-8; the evaluator then lives on the
    /// universal cover rather than S^1 x R.
    bool period_defect_warning() const { return defect_warning_; }

private:
    Quadruple q_;
    TrigCurve3 sigma_;
    Vec3 defect_;
    bool defect_warning_ = false;
};

/// Validates q and constructs the evaluator.
FrontEvaluator build_front(const Quadruple& q);

/// Integral of (a xi + b eta) dt over one period by the trapezoid rule on the
/// quadruple's grid (eta from the quadruple's own nu).
Vec3 period_residual(const Quadruple& q);

/// Same integral with nu taken as the fixed-convention dual of xi.
Vec3 period_residual(const SphericalCurve& xi, const TrigSeries& a, const TrigSeries& b);

/// L^2 projection of a_raw against span{xi_1, xi_2, xi_3} making the period
/// integral of a xi vanish. Throws DegenerateGram when the Gram matrix of the
/// components is numerically singular (condition number above 1e8).
TrigSeries project_period(const SphericalCurve& xi, const TrigSeries& a_raw);

/// Joint minimal-L^2 correction of (a, b) making the full period integral of
/// a xi + b eta vanish (the CLI `project` path when beta is present).
std::pair<TrigSeries, TrigSeries> project_period_joint(const Quadruple& q);

struct FrontCondition {
    bool front = false;                       // conjunction over the grid
    double min_abs_nu_prime = 0.0;
    std::vector<double> failure_params;       // grid t where the condition fails
    std::vector<double> umbilic_ruling_params;  // nu' = 0 but front holds
};

/// Front test: at each grid t, front iff |nu'| > eps or
/// (|xi'| <= eps and |nu'| <= eps and |b| > eps).
FrontCondition front_condition(const Quadruple& q);

/// Gauge change (a, b) -> (a + phi', b + phi mu1); the surface changes by the
/// tangential re-parametrization f + phi xi and is congruent to f.
Quadruple regauge(const Quadruple& q, const TrigSeries& phi);

enum class PeriodicityLabel { Periodic, AntiPeriodic, Zero, Neither };

const char* to_string(PeriodicityLabel label);

struct FunctionPeriodicity {
    double residual_periodic = 0.0;      // sup |g(t+pi) - g(t)|
    double residual_antiperiodic = 0.0;  // sup |g(t+pi) + g(t)|
    bool pi_periodic = false;
    bool anti_pi_periodic = false;
    PeriodicityLabel label = PeriodicityLabel::Neither;
};

/// Half-period classification of the quadruple data and the covering-space
/// verdicts it implies for the underlying p-frontal.
struct PeriodicityClass {
    FunctionPeriodicity xi, nu, a, b;
    bool covers_nonorientable = false;    // xi, a anti-pi-periodic
    bool covers_noncoorientable = false;  // nu anti-pi-periodic
    bool plain = false;
    // sub-cases of the covered surface
    bool nonorientable_coorientable = false;     // nu pi-periodic, b anti
    bool nonorientable_noncoorientable = false;  // nu anti, b pi-periodic
    bool noncoorientable_orientable = false;     // xi, a pi-periodic, b anti
    bool noncoorientable_nonorientable = false;  // xi, a anti, b pi-periodic
    // verdict for the underlying surface
    bool underlying_orientable = true;
    bool underlying_coorientable = true;
};

PeriodicityClass periodicity_class(const Quadruple& q);

}  // namespace flatfront
