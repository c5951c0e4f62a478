#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flatfront/quadruple.hpp"
#include "flatfront/vec3.hpp"

namespace flatfront {

enum class SingularClass {
    CuspidalEdge,
    Swallowtail,
    LinearCuspidalEdge,
    Degenerate,
    WholeRulingSingular,
};

const char* to_string(SingularClass c);

/// One classified point (t, v) of the singular set mu1(t) v + b(t) = 0,
/// with the criteria inputs as diagnostics.
struct SingularSample {
    double t = 0.0;
    double v = 0.0;
    SingularClass cls = SingularClass::Degenerate;
    bool whole_ruling = false;  // linear point: the whole ruling is singular
    double a = 0.0;
    double a_prime = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    // (b/mu1)' and (b/mu1)'' where mu1 != 0
    std::optional<double> b_over_mu1_prime;
    std::optional<double> b_over_mu1_second;
};

struct SingularReport {
    std::vector<SingularSample> samples;
    std::array<int, 5> counts{};  // indexed by SingularClass
    bool has_whole_rulings = false;
    double image_diameter = 0.0;
    std::optional<Vec3> cone_point;
    std::optional<int> noncusp;  // filled when the count has been computed
};

/// Singular locus of the front on an n_samples grid: for |mu1| > eps emits
/// (t, -b/mu1); for mu1 = b = 0 emits a whole singular ruling; rulings with
/// mu1 = 0, b != 0 are immersive and contribute nothing. A cone point is
/// reported when the locus image has diameter below 1e-8.
SingularReport singular_locus(const Quadruple& q, int n_samples);

/// Pointwise classification by the cuspidal-edge/swallowtail criteria. For a
/// linear point (whole singular ruling) the class at ruling coordinate
/// v_linear is reported. Throws NotOnSingularLocus when mu1(t0) = 0 but
/// b(t0) != 0.
SingularSample classify_singular(const Quadruple& q, double t0, double v_linear = 0.0);

struct SignChanges {
    int count = 0;
    std::vector<double> crossings;  // refined zero-crossing parameters
};

/// Sign changes of a over one period; intervals where |a| is below threshold
/// collapse to one crossing per sign transition.
SignChanges sign_changes_detail(const TrigSeries& a, double eps_scale = -1.0);
int sign_changes(const TrigSeries& a);

/// Number of maximal parameter components of the singular locus whose
/// classification is not CuspidalEdge / LinearCuspidalEdge.
/// Throws EmptySingularLocus when there is no singular point.
int noncusp_count(const Quadruple& q);

struct GammaSet {
    std::vector<double> deltas;
    bool whole_range = false;      // every delta is degenerate (e.g. cones)
    bool umbilic_degenerate = false;  // mu2 vanishes: every parallel degenerates
};

/// Parallel distances delta in [lo, hi] for which f_delta has a singular
/// point that is neither a cuspidal edge nor a swallowtail: double zeros of
/// phi_delta = a - delta (mu2/mu1)', located by a (delta, t) grid scan and
/// local 2-D refinement of the residual |phi_delta| + |phi_delta'|.
/// Requires normal-form data (b = 0); throws LinearSingularityPresent when mu1
/// vanishes.
GammaSet gamma_set(const Quadruple& q, double delta_lo, double delta_hi,
                   int resolution_delta = 512, int resolution_t = 2048);

}  // namespace flatfront
