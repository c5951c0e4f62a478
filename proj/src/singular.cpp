#include "flatfront/singular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flatfront/errors.hpp"
#include "flatfront/front.hpp"

namespace flatfront {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Series bundle for the classification criteria of a fixed quadruple.
struct Criteria {
    TrigSeries a, ap, b, bp, bpp, mu1, mu1p, mu1pp, mu2;
    double eps;

    static Criteria from(const Quadruple& q) {
        return Criteria{q.a(),   q.a().derivative(),    q.b(),
                        q.b().derivative(),             q.b().derivative(2),
                        q.mu1(), q.mu1().derivative(),  q.mu1().derivative(2),
                        q.mu2(), q.eps_zero()};
    }

    // (b/mu1)' and (b/mu1)'' by the quotient rule, valid where mu1 != 0;
    // avoids a global division when mu1 has zeros elsewhere.
    double q1(double t) const {
        const double m = mu1.eval(t);
        return (bp.eval(t) * m - b.eval(t) * mu1p.eval(t)) / (m * m);
    }
    double q2(double t) const {
        const double m = mu1.eval(t);
        const double m1p = mu1p.eval(t);
        return (bpp.eval(t) * m * m - b.eval(t) * mu1pp.eval(t) * m -
                2.0 * bp.eval(t) * m1p * m + 2.0 * b.eval(t) * m1p * m1p) /
               (m * m * m);
    }
    double zeta(double t) const { return a.eval(t) - q1(t); }

    SingularSample classify(double t0, double v_linear) const {
        SingularSample s;
        s.t = t0;
        s.a = a.eval(t0);
        s.a_prime = ap.eval(t0);
        s.mu1 = mu1.eval(t0);
        s.mu2 = mu2.eval(t0);
        if (std::fabs(s.mu1) > eps) {
            s.v = -b.eval(t0) / s.mu1;
            const double d1 = q1(t0), d2 = q2(t0);
            s.b_over_mu1_prime = d1;
            s.b_over_mu1_second = d2;
            const double z = s.a - d1, z2 = s.a_prime - d2;
            if (std::fabs(s.mu2) <= eps)
                s.cls = SingularClass::Degenerate;
            else if (std::fabs(z) > eps)
                s.cls = SingularClass::CuspidalEdge;
            else if (std::fabs(z2) > eps)
                s.cls = SingularClass::Swallowtail;
            else
                s.cls = SingularClass::Degenerate;
        } else {
            if (std::fabs(b.eval(t0)) > eps) {
                std::ostringstream os;
                os << "classify_singular: t = " << t0
                   << " is an immersive ruling (mu1 = 0, b != 0)";
                throw NotOnSingularLocus(os.str());
            }
            s.whole_ruling = true;
            s.v = v_linear;
            const double crit = v_linear * mu1p.eval(t0) + bp.eval(t0);
            // swallowtails never appear at linear singular points
            s.cls = (std::fabs(s.mu2) > eps && std::fabs(crit) > eps)
                        ? SingularClass::LinearCuspidalEdge
                        : SingularClass::Degenerate;
        }
        return s;
    }
};

int count_circular_runs(const std::vector<char>& p) {
    const int n = static_cast<int>(p.size());
    int runs = 0;
    bool all = true;
    for (int j = 0; j < n; ++j) {
        if (!p[j]) all = false;
        if (p[j] && !p[(j + n - 1) % n]) ++runs;
    }
    return all ? 1 : runs;
}

}  // namespace

const char* to_string(SingularClass c) {
    switch (c) {
        case SingularClass::CuspidalEdge: return "CuspidalEdge";
        case SingularClass::Swallowtail: return "Swallowtail";
        case SingularClass::LinearCuspidalEdge: return "LinearCuspidalEdge";
        case SingularClass::Degenerate: return "Degenerate";
        default: return "WholeRulingSingular";
    }
}

SingularReport singular_locus(const Quadruple& q, int n_samples) {
    const FrontEvaluator f = build_front(q);  // validates; DualityViolation propagates
    const Criteria c = Criteria::from(q);

    SingularReport rep;
    std::vector<Vec3> images;
    for (int j = 0; j < n_samples; ++j) {
        const double t = kTwoPi * j / n_samples;
        const double m1 = c.mu1.eval(t), bv = c.b.eval(t);
        if (std::fabs(m1) > c.eps) {
            SingularSample s = c.classify(t, 0.0);
            images.push_back(f.eval(s.t, s.v));
            rep.samples.push_back(s);
        } else if (std::fabs(bv) <= c.eps) {
            SingularSample s;
            s.t = t;
            s.v = 0.0;
            s.cls = SingularClass::WholeRulingSingular;
            s.whole_ruling = true;
            s.a = c.a.eval(t);
            s.a_prime = c.ap.eval(t);
            s.mu1 = m1;
            s.mu2 = c.mu2.eval(t);
            rep.samples.push_back(s);
            rep.has_whole_rulings = true;
        }
        // mu1 = 0, b != 0: immersive ruling, nothing to emit
    }
    for (const SingularSample& s : rep.samples) ++rep.counts[static_cast<int>(s.cls)];

    if (!rep.has_whole_rulings && !images.empty()) {
        double diam = 0.0;
        for (size_t i = 0; i < images.size(); ++i)
            for (size_t j = i + 1; j < images.size(); ++j)
                diam = std::max(diam, (images[i] - images[j]).norm());
        rep.image_diameter = diam;
        if (diam < 1e-8) {
            Vec3 centroid{0, 0, 0};
            for (const Vec3& p : images) centroid += p;
            rep.cone_point = centroid / static_cast<double>(images.size());
        }
    }
    return rep;
}

SingularSample classify_singular(const Quadruple& q, double t0, double v_linear) {
    return Criteria::from(q).classify(t0, v_linear);
}

SignChanges sign_changes_detail(const TrigSeries& a, double eps_scale) {
    const int m = 4096;
    double sup = 0.0;
    std::vector<double> v(m);
    for (int j = 0; j < m; ++j) {
        v[j] = a.eval(kTwoPi * j / m);
        sup = std::max(sup, std::fabs(v[j]));
    }
    const double eps = eps_scale > 0.0 ? eps_scale : 1e-8 * std::max(1.0, sup);

    SignChanges out;
    std::vector<int> idx;  // samples with a definite sign
    for (int j = 0; j < m; ++j)
        if (std::fabs(v[j]) > eps) idx.push_back(j);
    if (idx.empty()) return out;

    const int k = static_cast<int>(idx.size());
    for (int i = 0; i < k; ++i) {
        const int j0 = idx[i], j1 = idx[(i + 1) % k];
        if (v[j0] * v[j1] >= 0.0) continue;
        ++out.count;
        // bisection across the (possibly wrapped) gap
        double lo = kTwoPi * j0 / m;
        double hi = kTwoPi * j1 / m + (j1 > j0 ? 0.0 : kTwoPi);
        double flo = v[j0];
        for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
            const double mid = 0.5 * (lo + hi), fm = a.eval(mid);
            if (flo * fm <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        double t = 0.5 * (lo + hi);
        if (t >= kTwoPi) t -= kTwoPi;
        out.crossings.push_back(t);
    }
    return out;
}

int sign_changes(const TrigSeries& a) { return sign_changes_detail(a).count; }

int noncusp_count(const Quadruple& q) {
    q.require_valid("noncusp_count");
    const Criteria c = Criteria::from(q);
    const int m = std::max(2048, 2 * q.grid_size());

    enum { kOff = 0, kNonLinear = 1, kLinearRuling = 2 };
    std::vector<int> state(m);
    std::vector<double> zeta(m, 0.0), mu2v(m, 0.0);
    bool any = false;
    for (int j = 0; j < m; ++j) {
        const double t = kTwoPi * j / m;
        const double m1 = c.mu1.eval(t), bv = c.b.eval(t);
        if (std::fabs(m1) > c.eps) {
            state[j] = kNonLinear;
            zeta[j] = c.zeta(t);
            mu2v[j] = c.mu2.eval(t);
        } else if (std::fabs(bv) <= c.eps) {
            state[j] = kLinearRuling;
        }
        any = any || state[j] != kOff;
    }
    if (!any) throw EmptySingularLocus("noncusp_count: the singular locus is empty");

    int count = 0;

    // runs of non-linear locus points where the cuspidal-edge criterion fails
    std::vector<char> bad(m, 0);
    for (int j = 0; j < m; ++j)
        bad[j] = state[j] == kNonLinear &&
                 (std::fabs(zeta[j]) <= c.eps || std::fabs(mu2v[j]) <= c.eps);
    count += count_circular_runs(bad);

    // simple zero crossings of zeta between adjacent good non-linear points
    for (int j = 0; j < m; ++j) {
        const int jn = (j + 1) % m;
        if (state[j] != kNonLinear || state[jn] != kNonLinear) continue;
        if (bad[j] || bad[jn]) continue;
        if (zeta[j] * zeta[jn] < 0.0) ++count;
    }

    // whole singular rulings: one component per run, counted unless the run
    // consists of linear cuspidal edges
    std::vector<char> lin(m, 0);
    for (int j = 0; j < m; ++j) lin[j] = state[j] == kLinearRuling;
    const int n_lin_runs = count_circular_runs(lin);
    if (n_lin_runs > 0) {
        int seen = 0;
        for (int j = 0; j < m && seen < n_lin_runs; ++j) {
            if (lin[j] && !lin[(j + m - 1) % m]) {
                ++seen;
                const SingularSample s = c.classify(kTwoPi * j / m, 0.0);
                if (s.cls != SingularClass::LinearCuspidalEdge) ++count;
            }
        }
        if (n_lin_runs == 1 && lin[0] && lin[m - 1]) {
            // fully linear circle
            bool all = true;
            for (int j = 0; j < m; ++j) all = all && lin[j];
            if (all) {
                const SingularSample s = c.classify(0.0, 0.0);
                count = (s.cls != SingularClass::LinearCuspidalEdge) ? 1 : 0;
            }
        }
    }
    return count;
}

GammaSet gamma_set(const Quadruple& q, double delta_lo, double delta_hi, int resolution_delta,
                   int resolution_t) {
    q.require_valid("gamma_set");
    if (delta_hi <= delta_lo) throw InvalidParameter("gamma_set: empty delta range");
    const double eps = q.eps_zero();
    if (q.b().sup_on_grid(q.grid_size()) > eps)
        throw InvalidParameter("gamma_set requires normal-form data (b = 0)");
    if (q.min_abs_mu1() <= eps)
        throw LinearSingularityPresent("gamma_set: mu1 vanishes");

    GammaSet out;
    if (q.min_abs_mu2() <= eps) {
        // an inflection of nu makes every parallel carry a degenerate point
        out.whole_range = true;
        out.umbilic_degenerate = true;
        return out;
    }

    const int n = q.grid_size();
    const TrigSeries ratio = TrigSeries::project(
        n, [&](double t) { return q.mu2().eval(t) / q.mu1().eval(t); });
    const TrigSeries g = ratio.derivative();
    const TrigSeries gp = g.derivative();
    const TrigSeries a = q.a();
    const TrigSeries ap = a.derivative();

    const double sup_a = a.sup_on_grid(n), sup_ap = ap.sup_on_grid(n);
    const double sup_g = g.sup_on_grid(n), sup_gp = gp.sup_on_grid(n);

    if (sup_a <= eps && sup_g <= eps) {
        out.whole_range = true;  // phi_delta vanishes identically for every delta
        return out;
    }

    auto residual = [&](double dlt, double t) {
        return std::fabs(a.eval(t) - dlt * g.eval(t)) + std::fabs(ap.eval(t) - dlt * gp.eval(t));
    };
    auto accept_tol = [&](double dlt) {
        const double scale = std::max(
            {1.0, sup_a + std::fabs(dlt) * sup_g, sup_ap + std::fabs(dlt) * sup_gp});
        return 1e-8 * scale;
    };

    // precompute the t-grid values once; the scan is then O(1) per cell
    std::vector<double> av(resolution_t), apv(resolution_t), gv(resolution_t), gpv(resolution_t);
    for (int j = 0; j < resolution_t; ++j) {
        const double t = kTwoPi * j / resolution_t;
        av[j] = a.eval(t);
        apv[j] = ap.eval(t);
        gv[j] = g.eval(t);
        gpv[j] = gp.eval(t);
    }

    std::vector<double> mins(resolution_delta);
    std::vector<int> arg(resolution_delta);
    for (int i = 0; i < resolution_delta; ++i) {
        const double dlt =
            delta_lo + (delta_hi - delta_lo) * i / std::max(1, resolution_delta - 1);
        double best = std::fabs(av[0] - dlt * gv[0]) + std::fabs(apv[0] - dlt * gpv[0]);
        int bj = 0;
        for (int j = 1; j < resolution_t; ++j) {
            const double r = std::fabs(av[j] - dlt * gv[j]) + std::fabs(apv[j] - dlt * gpv[j]);
            if (r < best) {
                best = r;
                bj = j;
            }
        }
        mins[i] = best;
        arg[i] = bj;
    }

    int degenerate_grid = 0;
    for (int i = 0; i < resolution_delta; ++i) {
        const double dlt =
            delta_lo + (delta_hi - delta_lo) * i / std::max(1, resolution_delta - 1);
        if (mins[i] < accept_tol(dlt)) ++degenerate_grid;
    }
    if (degenerate_grid > (9 * resolution_delta) / 10) {
        out.whole_range = true;
        return out;
    }

    const double h_delta = (delta_hi - delta_lo) / std::max(1, resolution_delta - 1);
    const double h_t = kTwoPi / resolution_t;
    for (int i = 0; i < resolution_delta; ++i) {
        const bool local_min = (i == 0 || mins[i] <= mins[i - 1]) &&
                               (i == resolution_delta - 1 || mins[i] <= mins[i + 1]);
        if (!local_min) continue;
        double dlt = delta_lo + (delta_hi - delta_lo) * i / std::max(1, resolution_delta - 1);
        double t = kTwoPi * arg[i] / resolution_t;
        double hd = h_delta, ht = h_t;
        double best = residual(dlt, t);
        for (int it = 0; it < 120 && (hd > 1e-14 || ht > 1e-14); ++it) {
            bool improved = false;
            double bd = dlt, bt = t;
            for (int di = -1; di <= 1; ++di) {
                for (int tj = -1; tj <= 1; ++tj) {
                    if (di == 0 && tj == 0) continue;
                    const double cd = dlt + di * hd, ct = t + tj * ht;
                    if (cd < delta_lo - h_delta || cd > delta_hi + h_delta) continue;
                    const double r = residual(cd, ct);
                    if (r < best) {
                        best = r;
                        bd = cd;
                        bt = ct;
                        improved = true;
                    }
                }
            }
            dlt = bd;
            t = bt;
            if (!improved) {
                hd *= 0.5;
                ht *= 0.5;
            }
        }
        if (best < accept_tol(dlt) && dlt >= delta_lo - 1e-12 && dlt <= delta_hi + 1e-12) {
            bool dup = false;
            for (double seen : out.deltas)
                if (std::fabs(seen - dlt) < 0.25 * h_delta) dup = true;
            if (!dup) out.deltas.push_back(dlt);
        }
    }
    std::sort(out.deltas.begin(), out.deltas.end());
    return out;
}

}  // namespace flatfront
