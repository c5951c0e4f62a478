#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "flatfront/errors.hpp"
#include "flatfront/spherical.hpp"
#include "flatfront/trig_series.hpp"

namespace testsupport {

// splitmix64: deterministic across platforms, seeded from FLATFRONT_SEED
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

inline flatfront::TrigSeries random_series(Rng& rng, int degree, double amp) {
    std::vector<double> cs(degree), ss(degree);
    for (int k = 0; k < degree; ++k) {
        cs[k] = rng.uniform(-amp, amp);
        ss[k] = rng.uniform(-amp, amp);
    }
    return flatfront::TrigSeries(rng.uniform(-amp, amp), std::move(cs), std::move(ss));
}

/// Random closed convex spherical curve near the latitude circle at base_phi,
/// accepted iff simple with min |kappa_g| above the floor and curvature of a
/// single sign. Perturbs harmonics k = 2..4 of every component.
inline flatfront::SphericalCurve random_convex_latitude(Rng& rng, double base_phi,
                                                        double min_kg = 0.05,
                                                        double amplitude = 0.05) {
    using namespace flatfront;
    for (int attempt = 0; attempt < 256; ++attempt) {
        TrigSeries comps[3];
        const double c = std::cos(base_phi), s = std::sin(base_phi);
        for (int i = 0; i < 3; ++i) {
            std::vector<double> cs(4, 0.0), ss(4, 0.0);
            for (int k = 2; k <= 4; ++k) {
                cs[k - 1] = rng.uniform(-amplitude, amplitude) / k;
                ss[k - 1] = rng.uniform(-amplitude, amplitude) / k;
            }
            double c0 = 0.0;
            if (i == 0) cs[0] = c;
            if (i == 1) ss[0] = c;
            if (i == 2) c0 = s;
            comps[i] = TrigSeries(c0, std::move(cs), std::move(ss));
        }
        SphericalCurve gamma(TrigCurve3(comps[0], comps[1], comps[2]));
        if (!gamma.is_regular()) continue;
        const Convexity conv = is_convex(gamma);
        if (!conv.simple || conv.min_abs_kappa_g <= min_kg) continue;
        const GeodesicCurvature kg = geodesic_curvature(gamma);
        if (kg.min_value * kg.max_value <= 0.0) continue;
        if ((kg.min_value > 0.0) != (std::tan(base_phi) > 0.0)) continue;
        return gamma;
    }
    throw flatfront::Error("random_convex_latitude: no acceptable curve in 256 attempts");
}

inline constexpr double kPi = std::numbers::pi;

}  // namespace testsupport
