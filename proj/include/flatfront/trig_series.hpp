#pragma once

#include <functional>
#include <vector>

namespace flatfront {

/// Real-valued function on R represented by a truncated trigonometric series
///
///     f(t) = c0 + lin*t + sum_{k=1}^{K} (cos_[k-1] cos(kt) + sin_[k-1] sin(kt)).
///
/// All calculus on the series is term-wise and analytic; there are no finite
/// differences anywhere. The secular coefficient `lin` is zero for periodic
/// data and is used to represent primitives of series with non-zero mean and
/// non-closed space curves (helices).
class TrigSeries {
public:
    TrigSeries() = default;
    explicit TrigSeries(double constant) : c0_(constant) {}
    TrigSeries(double constant, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static TrigSeries constant(double v) { return TrigSeries(v); }
    /// Single harmonic ck*cos(kt) + sk*sin(kt), k >= 1.
    static TrigSeries harmonic(int k, double ck, double sk);

    /// Least-squares projection of uniform samples v_j = f(2*pi*j/N) onto the
    /// series of degree min(max_degree, N/2 - 1). Exact for trigonometric
    /// polynomials within that degree; spectrally accurate for smooth f.
    static TrigSeries from_samples(const std::vector<double>& samples, int max_degree);

    /// Sample `fn` on the N-point uniform grid and project (degree N/2 - 1,
    /// trailing negligible harmonics trimmed).
    static TrigSeries project(int n_grid, const std::function<double(double)>& fn);

    int degree() const { return static_cast<int>(cos_.size()); }
    double constant_term() const { return c0_; }
    double linear_term() const { return lin_; }
    bool is_periodic() const { return lin_ == 0.0; }
    /// Mean value over one period (exact from the constant coefficient).
    double mean() const { return c0_; }
    double cos_coeff(int k) const { return (k >= 1 && k <= degree()) ? cos_[k - 1] : 0.0; }
    double sin_coeff(int k) const { return (k >= 1 && k <= degree()) ? sin_[k - 1] : 0.0; }

    double eval(double t) const;
    double operator()(double t) const { return eval(t); }

    /// Term-wise analytic derivative.
    TrigSeries derivative() const;
    TrigSeries derivative(int order) const;

    /// Term-wise primitive F with F(0) = 0. The mean becomes the secular
    /// coefficient of F. Requires a periodic series (lin == 0).
    TrigSeries antiderivative() const;

    /// Primitive of the oscillating part only (mean dropped), F(0) = 0.
    TrigSeries antiderivative_periodic_part() const;

    TrigSeries operator+(const TrigSeries& o) const;
    TrigSeries operator-(const TrigSeries& o) const;
    TrigSeries operator*(double s) const;
    TrigSeries operator-() const { return (*this) * -1.0; }

    /// Largest absolute coefficient (cheap magnitude proxy).
    double max_abs_coeff() const;
    /// sup |f| estimated on an n-point grid.
    double sup_on_grid(int n_grid = 1024) const;

    /// Drop trailing harmonics whose coefficients are below rel_eps times the
    /// largest coefficient magnitude.
    TrigSeries trimmed(double rel_eps = 1e-15) const;

private:
    double c0_ = 0.0;
    double lin_ = 0.0;
    std::vector<double> cos_, sin_;  // harmonic k stored at index k-1
};

/// Product of two periodic series, exact in the coefficient space (computed
/// by sampling at a grid large enough for the product degree).
TrigSeries product(const TrigSeries& a, const TrigSeries& b);

/// Uniform grid t_j = 2*pi*j/N, j = 0..N-1.
std::vector<double> uniform_grid(int n);

/// (2*pi/N) * sum f(t_j): the trapezoid rule for 2*pi-periodic integrands,
/// spectrally accurate. Fixed accumulation order for reproducibility.
double periodic_quadrature(int n_grid, const std::function<double(double)>& fn);

}  // namespace flatfront
