#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "flatfront/family.hpp"
#include "flatfront/front.hpp"
#include "flatfront/gallery.hpp"
#include "flatfront/mesh.hpp"
#include "flatfront/quadruple.hpp"
#include "flatfront/singular.hpp"

namespace flatfront {

struct GridOptions {
    int nt = 128;
    int nv = 33;
    double v_min = -2.0;
    double v_max = 2.0;
};

/// A parsed run configuration: the quadruple (after optional period
/// projection), grid options, and the raw JSON echo for reports.
struct Config {
    Quadruple quadruple;
    GridOptions grid;
    bool project_period_flag = false;
    nlohmann::ordered_json echo;
};

/// Parses the JSON config schema:
///   {"curve": {"kind": "fourier" | "latitude" | "gallery", ...},
///    "alpha": {"const": c, "cos": [c1, ...], "sin": [s1, ...]},
///    "beta": optional, "nu": optional curve (default: dual of xi),
///    "grid": {"nt", "nv", "vmin", "vmax"}, "project_period": bool}
/// Fourier coefficient arrays are 1-based harmonics with a separate "const".
Config parse_config(const nlohmann::ordered_json& j);
Config load_config(const std::string& path);

/// Scalar series from the {"const", "cos", "sin"} schema.
TrigSeries series_from_json(const nlohmann::ordered_json& j, const std::string& where);
nlohmann::ordered_json series_to_json(const TrigSeries& s);

/// Curve from the curve schema (fourier / latitude / gallery not allowed here).
TrigCurve3 curve3_from_json(const nlohmann::ordered_json& j, const std::string& where);

/// OBJ text: "v x y z" with 9 significant digits, quad faces split into two
/// triangles in fixed (i, j) order, singular polylines as "l" chains.
/// Byte-identical for identical meshes.
std::string obj_text(const MeshGrid& mesh);
void export_obj(const MeshGrid& mesh, const std::string& path);

/// CSV columns: t,v,class,a,a_prime,mu1,mu2. Linear rulings are reported at
/// v = 0 with their pointwise class.
std::string singular_csv(const Quadruple& q, int n_samples);

/// CSV columns: t,v for a curvature line path, with the closure defect in a
/// trailing comment line.
std::string curvature_line_csv(const CurvatureLine& line);

struct RunReportOptions {
    int singular_samples = 512;
    bool with_noncusp = true;
};

/// Full JSON run report (versioned, seeded, round-trips losslessly).
nlohmann::ordered_json run_report(const Config& cfg, const RunReportOptions& opt = {});

/// Environment seed for randomized property trials (FLATFRONT_SEED, default 0).
uint64_t env_seed();

extern const char* const kVersion;

}  // namespace flatfront
