#include "flatfront/trig_curve.hpp"

#include <algorithm>
#include <numbers>

namespace flatfront {

TrigCurve3 TrigCurve3::project(int n_grid, const std::function<Vec3(double)>& fn) {
    std::vector<double> vx(n_grid), vy(n_grid), vz(n_grid);
    for (int j = 0; j < n_grid; ++j) {
        const Vec3 p = fn(2.0 * std::numbers::pi * j / n_grid);
        vx[j] = p.x;
        vy[j] = p.y;
        vz[j] = p.z;
    }
    const int k = n_grid / 2 - 1;
    return TrigCurve3(TrigSeries::from_samples(vx, k).trimmed(),
                      TrigSeries::from_samples(vy, k).trimmed(),
                      TrigSeries::from_samples(vz, k).trimmed());
}

int TrigCurve3::degree() const {
    return std::max(x_.degree(), std::max(y_.degree(), z_.degree()));
}

TrigCurve3 TrigCurve3::derivative(int order) const {
    TrigCurve3 d = *this;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d;
}

TrigCurve3 cross(const TrigCurve3& a, const TrigCurve3& b) {
    return {product(a.y(), b.z()) - product(a.z(), b.y()),
            product(a.z(), b.x()) - product(a.x(), b.z()),
            product(a.x(), b.y()) - product(a.y(), b.x())};
}

TrigSeries dot(const TrigCurve3& a, const TrigCurve3& b) {
    return product(a.x(), b.x()) + product(a.y(), b.y()) + product(a.z(), b.z());
}

TrigCurve3 scale_by(const TrigSeries& s, const TrigCurve3& c) {
    return {product(s, c.x()), product(s, c.y()), product(s, c.z())};
}

}  // namespace flatfront
