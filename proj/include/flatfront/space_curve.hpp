#pragma once

#include "flatfront/trig_curve.hpp"
#include "flatfront/vec3.hpp"

namespace flatfront {

/// Frenet data at a parameter of an arbitrary-speed space curve.
struct FrenetFrame {
    Vec3 e;        // unit tangent
    Vec3 n;        // principal normal
    Vec3 b;        // binormal
    double kappa;  // curvature, |c' x c''| / |c'|^3
    double tau;    // torsion, det(c', c'', c''') / |c' x c''|^2
};

/// Space curve backed by trigonometric series (a secular term is allowed,
/// e.g. for helices). Frenet data is computed from exact series derivatives.
class SpaceCurve {
public:
    static constexpr int kDefaultGrid = 1024;

    explicit SpaceCurve(TrigCurve3 curve, int grid_n = kDefaultGrid);

    const TrigCurve3& curve() const { return c_; }
    int grid_size() const { return grid_n_; }

    Vec3 eval(double t) const { return c_.eval(t); }
    Vec3 d1(double t) const { return d1_.eval(t); }
    Vec3 d2(double t) const { return d2_.eval(t); }
    Vec3 d3(double t) const { return d3_.eval(t); }

    double speed(double t) const { return d1(t).norm(); }
    double kappa(double t) const;
    double tau(double t) const;

    double min_speed() const;
    double max_speed() const;
    double min_kappa() const;
    double min_abs_tau() const;
    double eps_zero() const;

private:
    TrigCurve3 c_, d1_, d2_, d3_;
    int grid_n_;
};

/// Frenet frame, curvature and torsion at t. Throws NonRegularCurve when the
/// speed is below threshold and VanishingCurvature when kappa is.
FrenetFrame frenet_data(const SpaceCurve& c, double t);

}  // namespace flatfront
