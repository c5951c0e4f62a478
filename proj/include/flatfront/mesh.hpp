#pragma once

#include <vector>

#include "flatfront/front.hpp"
#include "flatfront/vec3.hpp"

namespace flatfront {

/// Sampled surface grid: nt rows in t (row nt-1 sits at t = 2 pi and closes
/// the surface onto row 0), nv columns in v, vertices row-major with t outer.
struct MeshGrid {
    int nt = 0;
    int nv = 0;
    double v_min = 0.0;
    double v_max = 0.0;
    std::vector<Vec3> vertices;                      // nt * nv
    std::vector<Vec3> normals;                       // per vertex, nu(t_i)
    std::vector<std::vector<Vec3>> singular_chains;  // image polylines of the locus

    double t_at(int i) const;
    double v_at(int j) const;
    const Vec3& vertex(int i, int j) const { return vertices[i * nv + j]; }
};

/// Evaluates f on the grid; when singular_samples > 0 the singular locus is
/// traced and attached as image polylines (chains break at immersive or
/// wholly singular rulings).
MeshGrid build_mesh(const FrontEvaluator& f, int nt, int nv, double v_min, double v_max,
                    int singular_samples = 0);

}  // namespace flatfront
