#include "flatfront/trig_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flatfront {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TrigSeries::TrigSeries(double constant, std::vector<double> cos_coeffs,
                       std::vector<double> sin_coeffs)
    : c0_(constant), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    if (cos_.size() < sin_.size()) cos_.resize(sin_.size(), 0.0);
    if (sin_.size() < cos_.size()) sin_.resize(cos_.size(), 0.0);
}

TrigSeries TrigSeries::harmonic(int k, double ck, double sk) {
    if (k < 1) throw std::invalid_argument("harmonic index must be >= 1");
    TrigSeries s;
    s.cos_.assign(k, 0.0);
    s.sin_.assign(k, 0.0);
    s.cos_[k - 1] = ck;
    s.sin_[k - 1] = sk;
    return s;
}

TrigSeries TrigSeries::from_samples(const std::vector<double>& samples, int max_degree) {
    const int n = static_cast<int>(samples.size());
    if (n < 2) throw std::invalid_argument("need at least two samples");
    const int kmax = std::min(max_degree, n / 2 - 1);
    TrigSeries s;
    double sum = 0.0;
    for (double v : samples) sum += v;
    s.c0_ = sum / n;
    if (kmax < 1) return s;
    s.cos_.assign(kmax, 0.0);
    s.sin_.assign(kmax, 0.0);
    // harmonics cos(k t_j), sin(k t_j) by angle addition from the k = 1 table
    std::vector<double> c1(n), s1(n);
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        c1[j] = std::cos(t);
        s1[j] = std::sin(t);
    }
    for (int j = 0; j < n; ++j) {
        const double v = samples[j];
        double ck = c1[j], sk = s1[j];
        for (int k = 1; k <= kmax; ++k) {
            s.cos_[k - 1] += v * ck;
            s.sin_[k - 1] += v * sk;
            const double cn = ck * c1[j] - sk * s1[j];
            sk = sk * c1[j] + ck * s1[j];
            ck = cn;
        }
    }
    for (int k = 0; k < kmax; ++k) {
        s.cos_[k] *= 2.0 / n;
        s.sin_[k] *= 2.0 / n;
    }
    return s;
}

TrigSeries TrigSeries::project(int n_grid, const std::function<double(double)>& fn) {
    std::vector<double> v(n_grid);
    for (int j = 0; j < n_grid; ++j) v[j] = fn(kTwoPi * j / n_grid);
    return from_samples(v, n_grid / 2 - 1).trimmed();
}

double TrigSeries::eval(double t) const {
    double v = c0_ + lin_ * t;
    const int n = degree();
    if (n == 0) return v;
    const double c1 = std::cos(t), s1 = std::sin(t);
    double ck = c1, sk = s1;
    for (int k = 1; k <= n; ++k) {
        v += cos_[k - 1] * ck + sin_[k - 1] * sk;
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
    }
    return v;
}

TrigSeries TrigSeries::derivative() const {
    TrigSeries d;
    d.c0_ = lin_;
    d.cos_.assign(degree(), 0.0);
    d.sin_.assign(degree(), 0.0);
    for (int k = 1; k <= degree(); ++k) {
        d.cos_[k - 1] = k * sin_[k - 1];
        d.sin_[k - 1] = -k * cos_[k - 1];
    }
    return d;
}

TrigSeries TrigSeries::derivative(int order) const {
    TrigSeries d = *this;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d;
}

TrigSeries TrigSeries::antiderivative() const {
    if (lin_ != 0.0) throw std::invalid_argument("cannot integrate a series with a secular term");
    TrigSeries f = antiderivative_periodic_part();
    f.lin_ = c0_;
    return f;
}

TrigSeries TrigSeries::antiderivative_periodic_part() const {
    TrigSeries f;
    f.cos_.assign(degree(), 0.0);
    f.sin_.assign(degree(), 0.0);
    double at_zero = 0.0;
    for (int k = 1; k <= degree(); ++k) {
        f.sin_[k - 1] = cos_[k - 1] / k;
        f.cos_[k - 1] = -sin_[k - 1] / k;
        at_zero += f.cos_[k - 1];
    }
    f.c0_ = -at_zero;  // F(0) = 0
    return f;
}

TrigSeries TrigSeries::operator+(const TrigSeries& o) const {
    TrigSeries r;
    r.c0_ = c0_ + o.c0_;
    r.lin_ = lin_ + o.lin_;
    const int n = std::max(degree(), o.degree());
    r.cos_.assign(n, 0.0);
    r.sin_.assign(n, 0.0);
    for (int k = 1; k <= n; ++k) {
        r.cos_[k - 1] = cos_coeff(k) + o.cos_coeff(k);
        r.sin_[k - 1] = sin_coeff(k) + o.sin_coeff(k);
    }
    return r;
}

TrigSeries TrigSeries::operator-(const TrigSeries& o) const { return (*this) + (o * -1.0); }

TrigSeries TrigSeries::operator*(double s) const {
    TrigSeries r = *this;
    r.c0_ *= s;
    r.lin_ *= s;
    for (auto& c : r.cos_) c *= s;
    for (auto& c : r.sin_) c *= s;
    return r;
}

double TrigSeries::max_abs_coeff() const {
    double m = std::max(std::fabs(c0_), std::fabs(lin_));
    for (double c : cos_) m = std::max(m, std::fabs(c));
    for (double c : sin_) m = std::max(m, std::fabs(c));
    return m;
}

double TrigSeries::sup_on_grid(int n_grid) const {
    double m = 0.0;
    for (int j = 0; j < n_grid; ++j) m = std::max(m, std::fabs(eval(kTwoPi * j / n_grid)));
    return m;
}

TrigSeries TrigSeries::trimmed(double rel_eps) const {
    const double tol = rel_eps * std::max(max_abs_coeff(), 1e-300);
    int keep = degree();
    while (keep > 0 && std::fabs(cos_[keep - 1]) < tol && std::fabs(sin_[keep - 1]) < tol) --keep;
    TrigSeries r;
    r.c0_ = c0_;
    r.lin_ = lin_;
    r.cos_.assign(cos_.begin(), cos_.begin() + keep);
    r.sin_.assign(sin_.begin(), sin_.begin() + keep);
    return r;
}

TrigSeries product(const TrigSeries& a, const TrigSeries& b) {
    if (!a.is_periodic() || !b.is_periodic())
        throw std::invalid_argument("product requires periodic series");
    const int deg = a.degree() + b.degree();
    int n = 8;
    while (n < 2 * deg + 4) n *= 2;
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) {
        const double t = kTwoPi * j / n;
        v[j] = a.eval(t) * b.eval(t);
    }
    return TrigSeries::from_samples(v, deg).trimmed();
}

std::vector<double> uniform_grid(int n) {
    std::vector<double> t(n);
    for (int j = 0; j < n; ++j) t[j] = kTwoPi * j / n;
    return t;
}

double periodic_quadrature(int n_grid, const std::function<double(double)>& fn) {
    double sum = 0.0;
    for (int j = 0; j < n_grid; ++j) sum += fn(kTwoPi * j / n_grid);
    return sum * (kTwoPi / n_grid);
}

}  // namespace flatfront
