#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flatfront/trig_curve.hpp"
#include "flatfront/vec3.hpp"

namespace flatfront {

/// Unit-sphere-valued curve, stored as a raw trigonometric series that is
/// normalized pointwise: gamma(t) = g(t)/|g(t)|. Derivatives of gamma come
/// from the analytic quotient rule applied to the series derivatives of g,
/// so |gamma| = 1 and gamma . gamma' = 0 hold to machine precision.
class SphericalCurve {
public:
    static constexpr int kDefaultGrid = 1024;

    explicit SphericalCurve(TrigCurve3 raw, int grid_n = kDefaultGrid);

    const TrigCurve3& raw() const { return raw_; }
    int grid_size() const { return grid_n_; }

    /// gamma(t), |gamma| = 1.
    Vec3 point(double t) const;
    /// gamma'(t).
    Vec3 d1(double t) const;
    /// gamma''(t).
    Vec3 d2(double t) const;

    double speed(double t) const { return d1(t).norm(); }
    double min_speed() const;
    double max_speed() const;

    /// Regularity threshold 1e-8 scaled by the maximal derivative norm.
    double eps_zero() const;
    bool is_regular() const { return min_speed() > eps_zero(); }
    void require_regular(const char* who) const;

    /// Projection of the normalized curve onto a trigonometric series
    /// (spectrally accurate; exact when the raw curve is already unit).
    TrigCurve3 unit_series() const;

private:
    TrigCurve3 raw_, d1_, d2_;
    int grid_n_;
};

/// Result of dual_curve: the dual n = gamma' x gamma / |gamma' x gamma| with
/// regularity flags; parameters where n' vanishes are the inflection points
/// of gamma.
struct DualCurve {
    SphericalCurve dual;
    bool dual_regular = false;
    bool dual_singular_everywhere = false;
    std::vector<double> inflection_params;
};

DualCurve dual_curve(const SphericalCurve& gamma);

/// Frame data eta = xi x nu, mu1 = xi'.eta, mu2 = nu'.eta at a parameter,
/// with the residuals |xi' - mu1 eta| and |nu' - mu2 eta|.
struct FrameData {
    Vec3 eta;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double residual_xi = 0.0;
    double residual_nu = 0.0;
};

/// Throws DualityViolation if a residual exceeds 1e-7.
FrameData frame_functions(const SphericalCurve& xi, const SphericalCurve& nu, double t);

/// Pointwise geodesic curvature det(gamma, gamma', gamma'') / |gamma'|^3
/// (orientation convention of gamma only).
double geodesic_curvature_at(const SphericalCurve& gamma, double t);

struct Vertex {
    double t = 0.0;
    double kappa_g = 0.0;
    bool generic = false;  // |kappa_g''| above threshold
};

struct GeodesicCurvature {
    TrigSeries series;  // spectral projection of kappa_g(t)
    double min_value = 0.0;
    double max_value = 0.0;
    double min_abs = 0.0;
    bool constant_flag = false;  // max - min below 1e-9; vertex list then meaningless
    std::vector<Vertex> vertices;
};

GeodesicCurvature geodesic_curvature(const SphericalCurve& gamma);

struct Convexity {
    bool convex = false;
    double min_abs_kappa_g = 0.0;
    bool simple = false;
    /// (t_i, t_j) segment start parameters of intersecting arc pairs.
    std::vector<std::pair<double, double>> intersections;
};

/// Convex iff simple (no polyline arc pair intersects) and min |kappa_g| is
/// above the regularity threshold. Throws GridTooCoarse when a polyline step
/// exceeds 0.1 radians.
Convexity is_convex(const SphericalCurve& gamma);

/// Parallel curve gamma_theta = gamma cos(theta) + n sin(theta), n the dual.
SphericalCurve spherical_parallel(const SphericalCurve& gamma, double theta);

struct SphericalCaustic {
    SphericalCurve curve;
    bool is_point = false;
    Vec3 point;         // set when is_point
    double diameter = 0.0;
    TrigSeries kappa_g_dual;  // curvature in the convention n' = -kappa_g gamma'
};

/// Caustic c = gamma cos A + n sin A where cot A = kappa_g in the dual-frame
/// convention, A fixed in (-pi/2, pi/2]. Throws UmbilicDegenerate when
/// kappa_g has zeros (A would jump through pi/2).
SphericalCaustic spherical_caustic(const SphericalCurve& gamma);

/// Unit tangent indicatrix t -> gamma'(t)/|gamma'(t)| as a spherical curve.
SphericalCurve tangent_indicatrix(const SphericalCurve& gamma);

/// Latitude circle xi_phi(t) = (cos t cos phi, sin t cos phi, sin phi).
SphericalCurve latitude_circle(double phi, int grid_n = SphericalCurve::kDefaultGrid);

}  // namespace flatfront
