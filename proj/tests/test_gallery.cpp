#include <doctest.h>

#include <cmath>

#include "flatfront/errors.hpp"
#include "flatfront/family.hpp"
#include "flatfront/front.hpp"
#include "flatfront/gallery.hpp"
#include "flatfront/singular.hpp"
#include "support.hpp"

using namespace flatfront;
using testsupport::kPi;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("every gallery quadruple passes validation below 1e-9") {
    std::vector<Quadruple> all;
    for (GalleryName name : {GalleryName::Cone, GalleryName::CircleCosN,
                             GalleryName::CardioidCylinder, GalleryName::TangentialExample54,
                             GalleryName::Plane}) {
        GallerySpec spec;
        spec.name = name;
        spec.phi = kPi / 4;
        all.push_back(gallery_build(spec));
    }
    all.push_back(rectifying_developable(helix_curve(0.5 * kSqrt2, 0.5 * kSqrt2)));
    for (const Quadruple& q : all) {
        const ValidationReport r = q.validate();
        CHECK(r.pass);
        CHECK(r.worst_value() < 1e-9);
    }
}

TEST_CASE("gallery parameter validation") {
    GallerySpec bad;
    bad.name = GalleryName::CircleCosN;
    bad.phi = kPi / 4;
    bad.n = 1;
    CHECK_THROWS_AS(gallery_build(bad), InvalidParameter);
    bad.n = 2;
    bad.phi = kPi / 2;
    CHECK_THROWS_AS(gallery_build(bad), InvalidParameter);
    GallerySpec missing;
    missing.name = GalleryName::TangentialCustom;
    CHECK_THROWS_AS(gallery_build(missing), InvalidParameter);
}

TEST_CASE("circle_cos_n: period condition and 2n swallowtails for n = 2, 3, 4") {
    for (int n : {2, 3, 4}) {
        GallerySpec spec;
        spec.name = GalleryName::CircleCosN;
        spec.phi = kPi / 4;
        spec.n = n;
        const Quadruple q = gallery_build(spec);
        CHECK(period_residual(q).norm() < 1e-12);

        // brute-force oracle at 8192 samples: refine the zeros of a = cos nt
        // and classify each; all must be swallowtails, 2n of them
        const SignChanges zeros = sign_changes_detail(q.a(), 1e-9);
        REQUIRE(zeros.count == 2 * n);
        for (double t : zeros.crossings)
            CHECK(classify_singular(q, t).cls == SingularClass::Swallowtail);
        CHECK(noncusp_count(q) == 2 * n);
    }
}

TEST_CASE("cone: singular image is the origin, curvature lines closed") {
    GallerySpec spec;
    spec.name = GalleryName::Cone;
    spec.phi = kPi / 4;
    const Quadruple q = gallery_build(spec);
    const SingularReport rep = singular_locus(q, 512);
    REQUIRE(rep.cone_point.has_value());
    CHECK(rep.cone_point->norm() < 1e-12);
    CHECK(curvature_line(q, 0.0, 1.0, 2).closed);
}

TEST_CASE("cardioid cylinder: construction facts") {
    GallerySpec spec;
    spec.name = GalleryName::CardioidCylinder;
    const Quadruple q = gallery_build(spec);

    // the quadruple reproduces the cylinder over the cardioid: sigma(s) = c(2s) - c(0)
    const FrontEvaluator f = build_front(q);
    CHECK_FALSE(f.period_defect_warning());
    auto cardioid = [](double t) {
        return Vec3{(1.0 - std::sin(t)) * std::cos(t), (1.0 - std::sin(t)) * std::sin(t), 0.0};
    };
    double sup = 0.0;
    for (int j = 0; j < 256; ++j) {
        const double s = 2.0 * kPi * j / 256;
        sup = std::max(sup, (f.sigma(s) - (cardioid(2.0 * s) - cardioid(0.0))).norm());
    }
    CHECK(sup < 1e-12);

    // b(s) = sigma' . eta reproduces the stored density
    const TrigCurve3 sigma_d = f.sigma_hat().derivative();
    for (double s : {0.0, 0.9, 2.5, 4.8})
        CHECK(q.b().eval(s) == doctest::Approx(sigma_d.eval(s).dot(q.eta(s))).epsilon(1e-12));

    // singular rulings at the cusp parameters are linear cuspidal edges
    const SingularReport rep = singular_locus(q, 2048);
    CHECK(rep.has_whole_rulings);
    for (const SingularSample& s : rep.samples) {
        CHECK(s.whole_ruling);
        CHECK(std::fabs(s.mu1) < 1e-12);
        const double d1 = std::fabs(s.t - kPi / 4), d2 = std::fabs(s.t - 5.0 * kPi / 4);
        CHECK(std::min(d1, d2) < 2.0 * kPi / 2048 + 1e-12);
        CHECK(classify_singular(q, s.t, 0.0).cls == SingularClass::LinearCuspidalEdge);
        CHECK(classify_singular(q, s.t, 7.5).cls == SingularClass::LinearCuspidalEdge);
    }
    CHECK(front_condition(q).front);
}

TEST_CASE("tangential developable: example54 and the planar circle") {
    GallerySpec spec;
    spec.name = GalleryName::TangentialExample54;
    const Quadruple q = gallery_build(spec);

    // singular locus is exactly v = 0 (the curve itself), all cuspidal edges
    const SingularReport rep = singular_locus(q, 1024);
    CHECK(rep.samples.size() == 1024);
    for (const SingularSample& s : rep.samples) {
        CHECK(std::fabs(s.v) < 1e-10);
        CHECK(s.cls == SingularClass::CuspidalEdge);
    }

    const CompletenessReport cr = completeness_report(q);
    CHECK(cr.complete);
    REQUIRE(cr.ends_embedded.has_value());
    CHECK_FALSE(*cr.ends_embedded);

    // mu1 = -|c'| kappa, mu2 = |c'| tau
    const SpaceCurve c = example54_curve();
    for (double t : {0.0, 1.2, 3.8}) {
        const FrenetFrame fr = frenet_data(c, t);
        CHECK(q.mu1().eval(t) == doctest::Approx(-c.speed(t) * fr.kappa).epsilon(1e-9));
        CHECK(q.mu2().eval(t) == doctest::Approx(c.speed(t) * fr.tau).epsilon(1e-9));
    }

    // a planar circle has zero torsion: the developable is not a front
    const SpaceCurve circle(
        TrigCurve3(TrigSeries::harmonic(1, 1, 0), TrigSeries::harmonic(1, 0, 1), TrigSeries(0.0)));
    const Quadruple qc = tangential_developable(circle);
    CHECK_FALSE(front_condition(qc).front);
}

TEST_CASE("rectifying developable: helix and planar circle reductions") {
    const Quadruple q = rectifying_developable(helix_curve(0.5 * kSqrt2, 0.5 * kSqrt2));
    // constant Darboux direction: the axis
    for (double t : {0.0, 1.0, 4.0})
        CHECK((q.xi().point(t) - Vec3{0, 0, 1}).norm() < 1e-9);
    CHECK(q.min_abs_mu1() < 1e-9);
    CHECK(std::fabs(q.b().eval(0.5) + 0.5 * kSqrt2) < 1e-9);  // b = -tau/sqrt(k^2+t^2)
    CHECK(singular_locus(q, 256).samples.empty());
    CHECK(front_condition(q).front);

    // planar circle: tau = 0, the rectifying planes envelope the vertical
    // cylinder over the circle, ruled by the binormal
    const SpaceCurve circle(
        TrigCurve3(TrigSeries::harmonic(1, 1, 0), TrigSeries::harmonic(1, 0, 1), TrigSeries(0.0)));
    const Quadruple qc = rectifying_developable(circle);
    CHECK(qc.a().sup_on_grid() < 1e-9);
    for (double t : {0.3, 2.0}) {
        CHECK((qc.xi().point(t) - Vec3{0, 0, 1}).norm() < 1e-9);
        CHECK(qc.b().eval(t) == doctest::Approx(-1.0).epsilon(1e-9));
    }
    CHECK(qc.validate().pass);
    CHECK(front_condition(qc).front);  // cylinders are fronts
    CHECK(singular_locus(qc, 128).samples.empty());

    // duality holds for a perturbed closed curve with kappa > 0
    testsupport::Rng rng(97);
    TrigCurve3 raw(TrigSeries(0.0, {3.0, 0.0, 0.12}, {0.0, 0.0, 0.0}),
                   TrigSeries(0.0, {0.0, 0.0, 0.0}, {3.0, 0.15, 0.0}),
                   TrigSeries(0.0, {0.0, 0.4, 0.0}, {0.0, 0.3, 0.1}));
    const SpaceCurve wavy(raw);
    REQUIRE(wavy.min_kappa() > 1e-3);
    CHECK(rectifying_developable(wavy).validate().pass);
}

TEST_CASE("rectifying and tangential constructors reject flat curvature") {
    // a straight line has kappa = 0 everywhere
    const SpaceCurve line(TrigCurve3(TrigSeries(1.0).antiderivative(), TrigSeries(0.0),
                                     TrigSeries(0.0)));
    CHECK_THROWS_AS(tangential_developable(line), VanishingCurvature);
    CHECK_THROWS_AS(rectifying_developable(line), VanishingCurvature);
}
