#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flatfront/quadruple.hpp"

namespace flatfront {

/// Parallel front at distance delta: quadruple (a, b + delta mu2, xi, nu).
Quadruple parallel(const Quadruple& q, double delta);

struct CausticResult {
    Quadruple quadruple;
    bool constant_ruling = false;  // c_xi is constant: the caustic is a cylinder
    bool degenerate_line = false;  // additionally the generator is a point: a line
};

/// Caustic quadruple
///   ((a mu2 + (b/mu2)' mu1)/s dt, (-a mu1 + (b/mu2)' mu2)/s dt, c_xi, eta),
/// s = sqrt(mu1^2 + mu2^2), c_xi = (mu2 xi - mu1 nu)/s. Throws
/// UmbilicDegenerate when mu2 vanishes.
CausticResult caustic(const Quadruple& q);

/// Curvature radius rho(t, v) = -(b + v mu1)/mu2; vanishes exactly on the
/// singular set. Throws UmbilicDegenerate when mu2(t) is below threshold.
double curvature_radius(const Quadruple& q, double t, double v);

struct CurvatureLine {
    double t0 = 0.0;
    double v0 = 0.0;
    int turns = 1;
    TrigSeries a_primitive;        // exact series primitive of a
    double closure_defect = 0.0;   // v(t0 + 2 pi) - v(t0) = -2 pi mean(a), per turn
    bool closed = false;           // |defect| < 1e-10
    std::vector<std::pair<double, double>> samples;  // (t, v) along the line

    double v_at(double t) const { return v0 - (a_primitive.eval(t) - a_primitive.eval(t0)); }
};

/// Non-zero principal curvature line through (t0, v0): the graph v(t) with
/// v'(t) + a(t) = 0, integrated analytically over `turns` periods.
CurvatureLine curvature_line(const Quadruple& q, double t0, double v0, int turns,
                             int samples_per_turn = 256);

struct LiftMetricCoeffs {
    double E = 0.0;  // a^2 + (b + v mu1)^2 + mu2^2
    double F = 0.0;  // a
    double G = 1.0;
};

/// Coefficients of the lift metric ds^2_# = df.df + dnu.dnu in (t, v).
LiftMetricCoeffs lift_metric_coeffs(const Quadruple& q, double t, double v);

/// Completeness verdicts for a closed quadruple. `complete` and
/// `ends_embedded` follow the complete-front-with-nonempty-singular-set
/// criteria; when the period condition fails the completeness verdicts are
/// refused (all false, ends_embedded unset) and the flag records why.
struct CompletenessReport {
    double period_defect_norm = 0.0;
    bool period_condition_ok = false;
    bool is_front = false;
    bool umbilic_branch = false;  // front relies on the umbilic branch somewhere
    bool singular_set_nonempty = false;
    bool singular_set_compact = false;
    bool weakly_complete = false;
    bool complete = false;
    std::optional<bool> ends_embedded;  // defined only when complete with singularities
    double min_abs_mu1 = 0.0;
    double min_abs_mu2 = 0.0;
};

/// When `strict`, a period defect above 1e-8 throws PeriodConditionViolated
/// instead of being reported through the flags.
CompletenessReport completeness_report(const Quadruple& q, bool strict = false);

}  // namespace flatfront
