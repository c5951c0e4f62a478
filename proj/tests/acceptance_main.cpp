// Acceptance runner: executes the nine acceptance criteria and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flatfront/errors.hpp"
#include "flatfront/family.hpp"
#include "flatfront/front.hpp"
#include "flatfront/gallery.hpp"
#include "flatfront/io.hpp"
#include "flatfront/singular.hpp"
#include "support.hpp"

using namespace flatfront;
using testsupport::kPi;

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

Quadruple gallery(GalleryName name, double phi = kPi / 4, int n = 2) {
    GallerySpec spec;
    spec.name = name;
    spec.phi = phi;
    spec.n = n;
    return gallery_build(spec);
}

std::vector<std::pair<std::string, Quadruple>> full_gallery() {
    std::vector<std::pair<std::string, Quadruple>> out;
    out.emplace_back("cone(pi/4)", gallery(GalleryName::Cone));
    out.emplace_back("circle_cos_n(pi/4,2)", gallery(GalleryName::CircleCosN, kPi / 4, 2));
    out.emplace_back("circle_cos_n(pi/4,3)", gallery(GalleryName::CircleCosN, kPi / 4, 3));
    out.emplace_back("cardioid_cylinder", gallery(GalleryName::CardioidCylinder));
    out.emplace_back("tangential_example54", gallery(GalleryName::TangentialExample54));
    out.emplace_back("rectifying(helix)",
                     rectifying_developable(helix_curve(0.5 * kSqrt2, 0.5 * kSqrt2)));
    out.emplace_back("plane", gallery(GalleryName::Plane));
    return out;
}

double sup_coeff_diff(const TrigSeries& a, const TrigSeries& b) {
    return (a - b).max_abs_coeff();
}

double sup_curve_diff(const SphericalCurve& a, const SphericalCurve& b, int n = 512) {
    double sup = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        sup = std::max(sup, (a.point(t) - b.point(t)).norm());
    }
    return sup;
}

// ---- criterion 1: circle_cos_n(pi/4, 2) reproduction --------------------------------

void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const Quadruple q = gallery(GalleryName::CircleCosN, kPi / 4, 2);

    const SingularReport rep = singular_locus(q, 2048);
    std::vector<double> sw;
    int others_ce = 0;
    for (const SingularSample& s : rep.samples) {
        if (s.cls == SingularClass::Swallowtail)
            sw.push_back(s.t);
        else if (s.cls == SingularClass::CuspidalEdge)
            ++others_ce;
    }
    require(sw.size() == 4, "expected exactly 4 swallowtails, got " + std::to_string(sw.size()));
    require(others_ce == static_cast<int>(rep.samples.size()) - 4,
            "non-swallowtail samples must all be cuspidal edges");
    const double expect[4] = {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4};
    for (int i = 0; i < 4; ++i)
        require(std::fabs(sw[i] - expect[i]) < 1e-6, "swallowtail parameter off");

    const CompletenessReport cr = completeness_report(q);
    require(cr.complete, "complete = true expected");
    require(cr.ends_embedded.has_value() && *cr.ends_embedded, "ends_embedded = true expected");

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs < 5.0, "runtime " + std::to_string(secs) + " s exceeds 5 s");
}

// ---- criterion 2: four-vertex property suite --------------------------------

void criterion2() {
    const auto start = std::chrono::steady_clock::now();
    testsupport::Rng rng(env_seed());
    for (int trial = 0; trial < 100; ++trial) {
        const SphericalCurve xi = testsupport::random_convex_latitude(rng, kPi / 4, 0.05);
        const TrigSeries a = project_period(xi, testsupport::random_series(rng, 5, 1.0));
        const int sc = sign_changes(a);
        require(sc >= 4, "trial " + std::to_string(trial) + ": sign_changes(a) = " +
                             std::to_string(sc) + " < 4");
        const int nc = noncusp_count(Quadruple::with_dual(a, TrigSeries(0.0), xi));
        require(nc >= 4, "trial " + std::to_string(trial) + ": noncusp_count = " +
                             std::to_string(nc) + " < 4");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
}

// ---- criterion 3: embedded ends vs convex Gauss image ------------------------------------

void criterion3() {
    const Quadruple q52 = gallery(GalleryName::CircleCosN, kPi / 4, 2);
    require(is_convex(q52.xi()).convex, "circle_cos_n: xi must be convex");
    const CompletenessReport cr52 = completeness_report(q52);
    require(cr52.ends_embedded.has_value() && *cr52.ends_embedded,
            "circle_cos_n: ends_embedded = true expected");

    const Quadruple q54 = gallery(GalleryName::TangentialExample54);
    require(!is_convex(q54.xi()).convex, "tangential_example54: tangent indicatrix not convex");
    const CompletenessReport cr54 = completeness_report(q54);
    require(cr54.ends_embedded.has_value() && !*cr54.ends_embedded,
            "tangential_example54: ends_embedded = false expected");

    for (const auto& [name, q] : full_gallery()) {
        const CompletenessReport cr = completeness_report(q);
        if (!cr.ends_embedded.has_value()) continue;
        require(*cr.ends_embedded == is_convex(q.xi()).convex,
                name + ": ends_embedded must agree with the convexity predicate");
    }
}

// ---- criterion 4: quadruple calculus identities -----------------------------

void criterion4() {
    for (const auto& [name, q] : full_gallery()) {
        std::optional<CausticResult> base;
        try {
            base = caustic(q);
        } catch (const UmbilicDegenerate&) {
            // the plane has mu2 = 0: the refusal must be stable along parallels
        }
        for (double delta : {-1.0, 0.3, 2.0}) {
            const Quadruple par = parallel(q, delta);
            if (!base) {
                bool threw = false;
                try {
                    caustic(par);
                } catch (const UmbilicDegenerate&) {
                    threw = true;
                }
                require(threw, name + ": parallel caustic must be umbilic-degenerate too");
                continue;
            }
            const CausticResult moved = caustic(par);
            require(sup_coeff_diff(base->quadruple.a(), moved.quadruple.a()) < 1e-10,
                    name + ": caustic alpha changed along the parallel family");
            require(sup_coeff_diff(base->quadruple.b(), moved.quadruple.b()) < 1e-10,
                    name + ": caustic beta changed along the parallel family");
            require(sup_curve_diff(base->quadruple.xi(), moved.quadruple.xi()) < 1e-10,
                    name + ": caustic ruling direction changed");
            require(sup_curve_diff(base->quadruple.nu(), moved.quadruple.nu()) < 1e-10,
                    name + ": caustic normal changed");

            // rho_delta = rho - delta
            for (double t : {0.0, 1.3, 2.9, 5.1}) {
                for (double v : {-1.5, 0.0, 2.0}) {
                    const double lhs = curvature_radius(par, t, v);
                    const double rhs = curvature_radius(q, t, v) - delta;
                    require(std::fabs(lhs - rhs) < 1e-10, name + ": rho_delta != rho - delta");
                }
            }
        }
    }

    // regauge surface identity within 1e-9
    testsupport::Rng rng(env_seed() + 4);
    for (const char* which : {"cone", "circle"}) {
        const Quadruple q = which[0] == 'c' && which[1] == 'o'
                                ? gallery(GalleryName::Cone)
                                : gallery(GalleryName::CircleCosN, kPi / 4, 2);
        const TrigSeries phi = testsupport::random_series(rng, 3, 0.6);
        const FrontEvaluator f0 = build_front(q);
        const FrontEvaluator f1 = build_front(regauge(q, phi));
        const Vec3 shift = f1.eval(0.0, 0.0) - f0.eval(0.0, phi.eval(0.0));
        double sup = 0.0;
        for (int j = 0; j < 128; ++j) {
            const double t = 2.0 * kPi * j / 128;
            for (double v : {-1.0, 0.4, 2.2}) {
                sup = std::max(sup,
                               (f1.eval(t, v) - f0.eval(t, v + phi.eval(t)) - shift).norm());
            }
        }
        require(sup < 1e-9, std::string(which) + ": regauge surface identity residual " +
                                std::to_string(sup));
    }
}

// ---- criterion 5: duality and spherical caustic suite --------------------------------

void criterion5() {
    for (const auto& [name, q] : full_gallery()) {
        const ValidationReport r = q.validate();
        require(r.pass && r.worst_value() < 1e-9,
                name + ": validation residual " + std::to_string(r.worst_value()));
    }

    testsupport::Rng rng(env_seed() + 5);
    // dual(dual) = -id on curves of the positively curved det-convention branch
    std::vector<SphericalCurve> pos;
    pos.push_back(latitude_circle(kPi / 4));
    for (int i = 0; i < 5; ++i) pos.push_back(testsupport::random_convex_latitude(rng, kPi / 4));
    for (const SphericalCurve& gamma : pos) {
        const SphericalCurve dd = dual_curve(dual_curve(gamma).dual).dual;
        double sup = 0.0;
        for (int j = 0; j < 512; ++j) {
            const double t = 2.0 * kPi * j / 512;
            sup = std::max(sup, (dd.point(t) + gamma.point(t)).norm());
        }
        require(sup < 1e-9, "dual of dual differs from -id by " + std::to_string(sup));
    }

    const SphericalCaustic cc = spherical_caustic(latitude_circle(kPi / 4));
    require(cc.is_point && cc.diameter < 1e-8, "caustic of xi_{pi/4} must be a point");
    const double to_pole =
        std::min((cc.point - Vec3{0, 0, 1}).norm(), (cc.point + Vec3{0, 0, 1}).norm());
    require(to_pole < 1e-8, "caustic point must sit at (0, 0, +-1)");

    // caustic vs dual-of-tangent agreement on 20 random convex curves (positive
    // curvature branch, where the fixed sign conventions match exactly)
    for (int i = 0; i < 20; ++i) {
        const SphericalCurve gamma = testsupport::random_convex_latitude(rng, -kPi / 4);
        const SphericalCaustic c = spherical_caustic(gamma);
        const SphericalCurve dual_t = dual_curve(tangent_indicatrix(gamma)).dual;
        double sup = 0.0;
        for (int j = 0; j < 512; ++j) {
            const double t = 2.0 * kPi * j / 512;
            sup = std::max(sup, (dual_t.point(t) - c.curve.point(t)).norm());
        }
        require(sup < 1e-8,
                "caustic/dual-of-tangent residual " + std::to_string(sup) + " on random curve " +
                    std::to_string(i));
    }
}

// ---- criterion 6: cone degeneracy -------------------------------------------

void criterion6() {
    const Quadruple q = gallery(GalleryName::Cone);
    const SingularReport rep = singular_locus(q, 1024);
    require(rep.image_diameter < 1e-9, "cone singular image diameter too large");
    require(rep.cone_point.has_value(), "cone point not detected");
    require(rep.cone_point->norm() < 1e-9, "cone point must be the origin");
    for (const SingularSample& s : rep.samples)
        require(s.cls == SingularClass::Degenerate, "cone classifications must be Degenerate");

    const GammaSet g = gamma_set(q, -10.0, 10.0);
    require(g.whole_range, "gamma set of the cone must be the whole range");

    const CurvatureLine line = curvature_line(q, 0.2, 1.5, 2);
    require(line.closure_defect == 0.0, "cone curvature lines must close exactly");
    require(line.closed, "cone curvature line closed flag");
}

// ---- criterion 7: curvature line quantitative check -------------------------

void criterion7() {
    const Quadruple q = gallery(GalleryName::CircleCosN, kPi / 4, 2);  // a = cos 2t
    const CurvatureLine line = curvature_line(q, 0.0, 1.0, 1, 1024);
    double sup = 0.0;
    for (const auto& [t, v] : line.samples)
        sup = std::max(sup, std::fabs(v - (1.0 - 0.5 * std::sin(2.0 * t))));
    require(sup < 1e-10, "path error " + std::to_string(sup) + " exceeds 1e-10");

    const Quadruple drift(TrigSeries(1.0) + TrigSeries::harmonic(2, 1, 0), TrigSeries(0.0),
                          q.xi(), q.nu());
    const CurvatureLine d = curvature_line(drift, 0.0, 0.0, 1);
    require(std::fabs(d.closure_defect + 2.0 * kPi) < 1e-10,
            "per-turn drift must be -2 pi, got " + std::to_string(d.closure_defect));
    require(std::fabs((d.v_at(2.0 * kPi) - d.v_at(0.0)) + 2.0 * kPi) < 1e-10,
            "integrated drift over one turn must be -2 pi");
}

// ---- criterion 8: periodicity classification --------------------------------

void criterion8() {
    const PeriodicityClass card = periodicity_class(gallery(GalleryName::CardioidCylinder));
    require(card.covers_noncoorientable, "cardioid: nu must be anti-pi-periodic");
    require(card.noncoorientable_orientable, "cardioid: orientable sub-case expected");
    require(card.underlying_orientable && !card.underlying_coorientable,
            "cardioid: orientable and non-co-orientable expected");
    require(card.nu.residual_antiperiodic < 1e-8, "cardioid: anti-periodicity residual");

    const SphericalCurve eq = latitude_circle(1e-30);
    const SphericalCurve nu(TrigCurve3::constant({0, 0, -1}));
    const Quadruple qe(TrigSeries::harmonic(1, 1, 0), TrigSeries(0.0), eq, nu);
    const PeriodicityClass pe = periodicity_class(qe);
    require(pe.covers_nonorientable, "equator construction: covers_nonorientable expected");
    require(pe.nonorientable_coorientable, "equator construction: co-orientable sub-case");
    require(pe.xi.residual_antiperiodic < 1e-8 && pe.a.residual_antiperiodic < 1e-8,
            "equator construction: residual tolerance 1e-8");
}

// ---- criterion 9: determinism ------------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion9(const std::string& cli) {
    require(!cli.empty(), "CLI path not provided (--cli)");
    const std::string dir = "acceptance_tmp";
    require(std::system(("mkdir -p " + dir).c_str()) == 0, "cannot create " + dir);
    const std::string cfg = dir + "/config.json";
    {
        std::ofstream out(cfg);
        out << R"({"curve":{"kind":"gallery","name":"circle_cos_n","params":{"phi":0.7853981633974483,"n":2}},"grid":{"nt":48,"nv":9,"vmin":-2,"vmax":2}})";
    }
    auto run = [&](const std::string& obj, const std::string& rep) {
        const std::string cmd =
            cli + " build --config " + cfg + " --out " + obj + " --report " + rep;
        require(std::system(cmd.c_str()) == 0, "CLI build failed: " + cmd);
    };
    run(dir + "/a.obj", dir + "/a.json");
    run(dir + "/b.obj", dir + "/b.json");
    require(slurp(dir + "/a.obj") == slurp(dir + "/b.obj"), "OBJ outputs differ between runs");
    require(slurp(dir + "/a.json") == slurp(dir + "/b.json"), "JSON reports differ between runs");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    struct Entry {
        int id;
        const char* label;
        std::function<void()> run;
    };
    const std::vector<Entry> criteria = {
        {1, "circle_cos_n(pi/4, 2) reproduction (4 swallowtails, complete, embedded ends)", criterion1},
        {2, "four-vertex property suite (100 randomized trials)", criterion2},
        {3, "embedded ends vs convexity cross-check", criterion3},
        {4, "quadruple calculus identities (caustic/parallel, rho, regauge)", criterion4},
        {5, "duality and spherical caustic suite", criterion5},
        {6, "cone degeneracy", criterion6},
        {7, "curvature line quantitative check", criterion7},
        {8, "periodicity classification", criterion8},
        {9, "determinism of build outputs", [&] { criterion9(cli); }},
    };

    int failures = 0;
    for (const Entry& e : criteria) {
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run();
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::printf("criterion %d: PASS  (%.2fs)  %s\n", e.id, secs, e.label);
        } catch (const std::exception& ex) {
            ++failures;
            std::printf("criterion %d: FAIL  %s: %s\n", e.id, e.label, ex.what());
        }
        std::fflush(stdout);
    }
    return failures;
}
