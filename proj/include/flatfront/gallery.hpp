#pragma once

#include <optional>
#include <string>

#include "flatfront/quadruple.hpp"
#include "flatfront/space_curve.hpp"

namespace flatfront {

enum class GalleryName {
    Cone,
    CircleCosN,
    CardioidCylinder,
    TangentialExample54,
    TangentialCustom,
    RectifyingCustom,
    Plane,
};

const char* to_string(GalleryName name);
std::optional<GalleryName> gallery_name_from_string(const std::string& s);

struct GallerySpec {
    GalleryName name = GalleryName::Cone;
    double phi = 0.0;  // latitude angle for Cone / CircleCosN
    int n = 2;         // harmonic index for CircleCosN
    std::optional<SpaceCurve> curve;  // for the custom constructors
    int grid_n = SphericalCurve::kDefaultGrid;
};

/// Builds the named quadruple. Throws InvalidParameter on bad parameters.
Quadruple gallery_build(const GallerySpec& spec);

/// Tangential developable f(t, v) = c(t) + v c'(t) of a curve with
/// non-vanishing curvature: quadruple (|c'| dt, 0, c'/|c'|, binormal).
Quadruple tangential_developable(const SpaceCurve& c);

/// Rectifying developable (envelope of rectifying planes): ruled by the
/// Darboux direction (kappa e + tau b)/sqrt(kappa^2 + tau^2) with normal the
/// principal normal of c.
Quadruple rectifying_developable(const SpaceCurve& c);

/// The closed curve ((4 + cos 2t) cos t, (4 + cos 2t) sin t, sin 2t) with
/// non-vanishing curvature and torsion; its tangential developable is a
/// complete flat front with non-embedded ends, all cuspidal edges.
SpaceCurve example54_curve(int grid_n = SpaceCurve::kDefaultGrid);

/// Circular helix (r cos t, r sin t, p t).
SpaceCurve helix_curve(double r, double p, int grid_n = SpaceCurve::kDefaultGrid);

}  // namespace flatfront
