#pragma once

#include <string>

#include "flatfront/spherical.hpp"
#include "flatfront/trig_series.hpp"

namespace flatfront {

/// Sup-norm duality residuals of a quadruple on the evaluation grid.
struct ValidationReport {
    double nu_dot_xi = 0.0;
    double nup_dot_xi = 0.0;
    double nu_dot_xip = 0.0;
    double frame_residual_xi = 0.0;  // sup |xi' - mu1 eta|
    double frame_residual_nu = 0.0;  // sup |nu' - mu2 eta|
    bool pass = false;

    double worst_value() const;
    std::string worst_name() const;
};

/// Generating data (alpha = a dt, beta = b dt, xi, nu) of a developable
/// frontal, with the frame functions mu1, mu2 (xi' = mu1 eta, nu' = mu2 eta,
/// eta = xi x nu) cached as spectrally projected series. Immutable.
class Quadruple {
public:
    Quadruple(TrigSeries a, TrigSeries b, SphericalCurve xi, SphericalCurve nu);

    /// Convenience constructor taking nu as the fixed-convention dual of xi.
    static Quadruple with_dual(TrigSeries a, TrigSeries b, const SphericalCurve& xi);

    const TrigSeries& a() const { return a_; }
    const TrigSeries& b() const { return b_; }
    const SphericalCurve& xi() const { return xi_; }
    const SphericalCurve& nu() const { return nu_; }
    int grid_size() const { return xi_.grid_size(); }

    const TrigSeries& mu1() const { return mu1_; }
    const TrigSeries& mu2() const { return mu2_; }
    Vec3 eta(double t) const { return cross(xi_.point(t), nu_.point(t)); }

    double min_abs_mu1() const { return min_abs_mu1_; }
    double min_abs_mu2() const { return min_abs_mu2_; }

    /// Classification threshold: 1e-8 scaled by the curves' max derivative norm.
    double eps_zero() const { return eps_zero_; }

    ValidationReport validate() const;
    /// Throws DualityViolation naming the worst residual when validation fails.
    void require_valid(const char* who) const;

private:
    TrigSeries a_, b_;
    SphericalCurve xi_, nu_;
    TrigSeries mu1_, mu2_;
    double min_abs_mu1_ = 0.0, min_abs_mu2_ = 0.0;
    double eps_zero_ = 1e-8;
};

/// Duality residual report for (nu.xi, nu'.xi, nu.xi', frame residuals);
/// pass iff all sup-norms are below 1e-9.
ValidationReport validate_quadruple(const Quadruple& q);

}  // namespace flatfront
