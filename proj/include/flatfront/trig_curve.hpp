#pragma once

#include <functional>

#include "flatfront/trig_series.hpp"
#include "flatfront/vec3.hpp"

namespace flatfront {

/// R^3-valued curve with one trigonometric series per component. Evaluation
/// is exactly 2*pi-periodic when all components are periodic; derivatives of
/// any order are term-wise analytic.
class TrigCurve3 {
public:
    TrigCurve3() = default;
    TrigCurve3(TrigSeries x, TrigSeries y, TrigSeries z)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    static TrigCurve3 constant(const Vec3& v) {
        return {TrigSeries(v.x), TrigSeries(v.y), TrigSeries(v.z)};
    }
    static TrigCurve3 project(int n_grid, const std::function<Vec3(double)>& fn);

    const TrigSeries& x() const { return x_; }
    const TrigSeries& y() const { return y_; }
    const TrigSeries& z() const { return z_; }
    const TrigSeries& component(int i) const { return i == 0 ? x_ : (i == 1 ? y_ : z_); }

    int degree() const;
    bool is_periodic() const { return x_.is_periodic() && y_.is_periodic() && z_.is_periodic(); }

    Vec3 eval(double t) const { return {x_.eval(t), y_.eval(t), z_.eval(t)}; }
    Vec3 operator()(double t) const { return eval(t); }

    TrigCurve3 derivative() const { return {x_.derivative(), y_.derivative(), z_.derivative()}; }
    TrigCurve3 derivative(int order) const;
    TrigCurve3 antiderivative() const {
        return {x_.antiderivative(), y_.antiderivative(), z_.antiderivative()};
    }
    TrigCurve3 antiderivative_periodic_part() const {
        return {x_.antiderivative_periodic_part(), y_.antiderivative_periodic_part(),
                z_.antiderivative_periodic_part()};
    }

    Vec3 mean() const { return {x_.mean(), y_.mean(), z_.mean()}; }

    TrigCurve3 operator+(const TrigCurve3& o) const { return {x_ + o.x_, y_ + o.y_, z_ + o.z_}; }
    TrigCurve3 operator-(const TrigCurve3& o) const { return {x_ - o.x_, y_ - o.y_, z_ - o.z_}; }
    TrigCurve3 operator*(double s) const { return {x_ * s, y_ * s, z_ * s}; }

    TrigCurve3 trimmed(double rel_eps = 1e-15) const {
        return {x_.trimmed(rel_eps), y_.trimmed(rel_eps), z_.trimmed(rel_eps)};
    }

private:
    TrigSeries x_, y_, z_;
};

/// Component-wise exact cross product of two periodic curves.
TrigCurve3 cross(const TrigCurve3& a, const TrigCurve3& b);

/// Exact dot product of two periodic curves as a scalar series.
TrigSeries dot(const TrigCurve3& a, const TrigCurve3& b);

/// Scalar 1-form density times curve: s(t) * c(t) as a series curve.
TrigCurve3 scale_by(const TrigSeries& s, const TrigCurve3& c);

}  // namespace flatfront
