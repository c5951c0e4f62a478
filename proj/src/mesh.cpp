#include "flatfront/mesh.hpp"

#include <cmath>
#include <numbers>

#include "flatfront/errors.hpp"
#include "flatfront/singular.hpp"

namespace flatfront {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double MeshGrid::t_at(int i) const { return kTwoPi * i / (nt - 1); }

double MeshGrid::v_at(int j) const {
    return nv == 1 ? v_min : v_min + (v_max - v_min) * j / (nv - 1);
}

MeshGrid build_mesh(const FrontEvaluator& f, int nt, int nv, double v_min, double v_max,
                    int singular_samples) {
    if (nt < 2 || nv < 2) throw InvalidParameter("build_mesh: need nt >= 2 and nv >= 2");
    if (!(v_max > v_min)) throw InvalidParameter("build_mesh: need v_max > v_min");

    MeshGrid m;
    m.nt = nt;
    m.nv = nv;
    m.v_min = v_min;
    m.v_max = v_max;
    m.vertices.reserve(static_cast<size_t>(nt) * nv);
    m.normals.reserve(static_cast<size_t>(nt) * nv);
    for (int i = 0; i < nt; ++i) {
        const double t = m.t_at(i);
        const Vec3 nu = f.normal(t);
        for (int j = 0; j < nv; ++j) {
            m.vertices.push_back(f.eval(t, m.v_at(j)));
            m.normals.push_back(nu);
        }
    }

    if (singular_samples > 0) {
        const SingularReport rep = singular_locus(f.quadruple(), singular_samples);
        std::vector<Vec3> chain;
        double prev_t = -1.0;
        const double gap = 2.5 * kTwoPi / singular_samples;
        for (const SingularSample& s : rep.samples) {
            if (s.whole_ruling) {
                if (chain.size() >= 2) m.singular_chains.push_back(std::move(chain));
                chain.clear();
                prev_t = -1.0;
                continue;
            }
            if (prev_t >= 0.0 && s.t - prev_t > gap && chain.size() >= 2) {
                m.singular_chains.push_back(std::move(chain));
                chain.clear();
            }
            chain.push_back(f.eval(s.t, s.v));
            prev_t = s.t;
        }
        if (chain.size() >= 2) {
            // close the loop when the locus covers the whole circle
            if (m.singular_chains.empty() && rep.samples.size() >= 2 && !rep.has_whole_rulings)
                chain.push_back(chain.front());
            m.singular_chains.push_back(std::move(chain));
        }
    }
    return m;
}

}  // namespace flatfront
