#include "flatfront/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "flatfront/errors.hpp"

namespace flatfront {

using json = nlohmann::ordered_json;

const char* const kVersion = "1.0.0";

namespace {

// signed zeros normalize to +0 so equal meshes print identically
double unsign_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", unsign_zero(v));
    return buf;
}

std::vector<double> number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where);
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw SchemaError(where);
        out.push_back(v.get<double>());
    }
    return out;
}

Vec3 vec3_from(const json& j, const std::string& where) {
    const auto a = number_array(j, where);
    if (a.size() != 3) throw SchemaError(where);
    return {a[0], a[1], a[2]};
}

SpaceCurve space_curve_from_params(const json& params, const std::string& where) {
    if (!params.contains("curve")) throw SchemaError(where + ".curve");
    return SpaceCurve(curve3_from_json(params.at("curve"), where + ".curve"));
}

}  // namespace

TrigSeries series_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where);
    double c0 = 0.0;
    if (j.contains("const")) {
        if (!j.at("const").is_number()) throw SchemaError(where + ".const");
        c0 = j.at("const").get<double>();
    }
    std::vector<double> cs, ss;
    if (j.contains("cos")) cs = number_array(j.at("cos"), where + ".cos");
    if (j.contains("sin")) ss = number_array(j.at("sin"), where + ".sin");
    return TrigSeries(c0, std::move(cs), std::move(ss));
}

json series_to_json(const TrigSeries& s) {
    json j;
    j["const"] = s.constant_term();
    json cs = json::array(), ss = json::array();
    for (int k = 1; k <= s.degree(); ++k) {
        cs.push_back(s.cos_coeff(k));
        ss.push_back(s.sin_coeff(k));
    }
    j["cos"] = std::move(cs);
    j["sin"] = std::move(ss);
    return j;
}

TrigCurve3 curve3_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where);
    Vec3 c0{0, 0, 0};
    if (j.contains("const")) c0 = vec3_from(j.at("const"), where + ".const");
    std::vector<Vec3> cs, ss;
    if (j.contains("cos")) {
        if (!j.at("cos").is_array()) throw SchemaError(where + ".cos");
        for (const auto& row : j.at("cos")) cs.push_back(vec3_from(row, where + ".cos"));
    }
    if (j.contains("sin")) {
        if (!j.at("sin").is_array()) throw SchemaError(where + ".sin");
        for (const auto& row : j.at("sin")) ss.push_back(vec3_from(row, where + ".sin"));
    }
    TrigSeries comp[3];
    for (int i = 0; i < 3; ++i) {
        std::vector<double> cc, sc;
        for (const Vec3& v : cs) cc.push_back(v[i]);
        for (const Vec3& v : ss) sc.push_back(v[i]);
        comp[i] = TrigSeries(c0[i], std::move(cc), std::move(sc));
    }
    return TrigCurve3(comp[0], comp[1], comp[2]);
}

Config parse_config(const json& j) {
    if (!j.is_object() || !j.contains("curve")) throw SchemaError("curve");
    const json& curve = j.at("curve");
    if (!curve.is_object() || !curve.contains("kind")) throw SchemaError("curve.kind");
    const std::string kind = curve.at("kind").get<std::string>();

    GridOptions grid;
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (!g.is_object()) throw SchemaError("grid");
        if (g.contains("nt")) grid.nt = g.at("nt").get<int>();
        if (g.contains("nv")) grid.nv = g.at("nv").get<int>();
        if (g.contains("vmin")) grid.v_min = g.at("vmin").get<double>();
        if (g.contains("vmax")) grid.v_max = g.at("vmax").get<double>();
    }
    bool project = false;
    if (j.contains("project_period")) {
        if (!j.at("project_period").is_boolean()) throw SchemaError("project_period");
        project = j.at("project_period").get<bool>();
    }

    auto finish = [&](Quadruple q) {
        if (project) q = Quadruple(project_period(q.xi(), q.a()), q.b(), q.xi(), q.nu());
        return Config{std::move(q), grid, project, j};
    };

    if (kind == "gallery") {
        if (!curve.contains("name")) throw SchemaError("curve.name");
        const auto name = gallery_name_from_string(curve.at("name").get<std::string>());
        if (!name) throw SchemaError("curve.name");
        GallerySpec spec;
        spec.name = *name;
        const json params = curve.contains("params") ? curve.at("params") : json::object();
        if (params.contains("phi")) spec.phi = params.at("phi").get<double>();
        if (params.contains("n")) spec.n = params.at("n").get<int>();
        if (spec.name == GalleryName::TangentialCustom ||
            spec.name == GalleryName::RectifyingCustom)
            spec.curve = space_curve_from_params(params, "curve.params");
        return finish(gallery_build(spec));
    }

    SphericalCurve xi = [&]() {
        if (kind == "latitude") {
            if (!curve.contains("phi")) throw SchemaError("curve.phi");
            return latitude_circle(curve.at("phi").get<double>());
        }
        if (kind == "fourier") return SphericalCurve(curve3_from_json(curve, "curve"));
        throw SchemaError("curve.kind");
    }();

    TrigSeries a(0.0), b(0.0);
    if (j.contains("alpha")) a = series_from_json(j.at("alpha"), "alpha");
    if (j.contains("beta")) b = series_from_json(j.at("beta"), "beta");

    if (j.contains("nu")) {
        SphericalCurve nu(curve3_from_json(j.at("nu"), "nu"));
        return finish(Quadruple(std::move(a), std::move(b), std::move(xi), std::move(nu)));
    }
    return finish(Quadruple::with_dual(std::move(a), std::move(b), xi));
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

std::string obj_text(const MeshGrid& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 40);
    for (const Vec3& v : mesh.vertices) {
        if (!v.all_finite()) throw NonFiniteVertex("obj export: non-finite vertex");
        out += "v " + fmt9(v.x) + " " + fmt9(v.y) + " " + fmt9(v.z) + "\n";
    }
    auto idx = [&](int i, int j) { return i * mesh.nv + j + 1; };
    for (int i = 0; i + 1 < mesh.nt; ++i) {
        for (int j = 0; j + 1 < mesh.nv; ++j) {
            const int a = idx(i, j), b = idx(i + 1, j), c = idx(i + 1, j + 1), d = idx(i, j + 1);
            out += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) +
                   "\n";
            out += "f " + std::to_string(a) + " " + std::to_string(c) + " " + std::to_string(d) +
                   "\n";
        }
    }
    int next = static_cast<int>(mesh.vertices.size());
    for (const auto& chain : mesh.singular_chains) {
        std::string line = "l";
        for (const Vec3& p : chain) {
            if (!p.all_finite()) throw NonFiniteVertex("obj export: non-finite polyline point");
            out += "v " + fmt9(p.x) + " " + fmt9(p.y) + " " + fmt9(p.z) + "\n";
            line += " " + std::to_string(++next);
        }
        out += line + "\n";
    }
    return out;
}

void export_obj(const MeshGrid& mesh, const std::string& path) {
    const std::string text = obj_text(mesh);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open output file: " + path);
    out << text;
    if (!out) throw IOError("write failed: " + path);
}

std::string singular_csv(const Quadruple& q, int n_samples) {
    const SingularReport rep = singular_locus(q, n_samples);
    std::string out = "t,v,class,a,a_prime,mu1,mu2\n";
    for (const SingularSample& s : rep.samples) {
        const SingularSample row = s.whole_ruling ? classify_singular(q, s.t, 0.0) : s;
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%s,%.12g,%.12g,%.12g,%.12g\n",
                      unsign_zero(row.t), unsign_zero(row.v), to_string(row.cls),
                      unsign_zero(row.a), unsign_zero(row.a_prime), unsign_zero(row.mu1),
                      unsign_zero(row.mu2));
        out += buf;
    }
    return out;
}

std::string curvature_line_csv(const CurvatureLine& line) {
    std::string out = "t,v\n";
    for (const auto& [t, v] : line.samples) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", unsign_zero(t), unsign_zero(v));
        out += buf;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "# closure_defect_per_turn,%.17g\n",
                  unsign_zero(line.closure_defect));
    out += buf;
    return out;
}

namespace {

json validation_json(const ValidationReport& r) {
    json j;
    j["nu_dot_xi"] = r.nu_dot_xi;
    j["nup_dot_xi"] = r.nup_dot_xi;
    j["nu_dot_xip"] = r.nu_dot_xip;
    j["frame_residual_xi"] = r.frame_residual_xi;
    j["frame_residual_nu"] = r.frame_residual_nu;
    j["pass"] = r.pass;
    return j;
}

json periodicity_fn_json(const FunctionPeriodicity& f) {
    json j;
    j["label"] = to_string(f.label);
    j["residual_periodic"] = f.residual_periodic;
    j["residual_antiperiodic"] = f.residual_antiperiodic;
    return j;
}

json completeness_json(const CompletenessReport& r) {
    json j;
    j["period_defect_norm"] = r.period_defect_norm;
    j["period_condition_ok"] = r.period_condition_ok;
    j["is_front"] = r.is_front;
    j["umbilic_branch"] = r.umbilic_branch;
    j["singular_set_nonempty"] = r.singular_set_nonempty;
    j["singular_set_compact"] = r.singular_set_compact;
    j["weakly_complete"] = r.weakly_complete;
    j["complete"] = r.complete;
    if (r.ends_embedded)
        j["ends_embedded"] = *r.ends_embedded;
    else
        j["ends_embedded"] = nullptr;
    j["min_abs_mu1"] = r.min_abs_mu1;
    j["min_abs_mu2"] = r.min_abs_mu2;
    return j;
}

}  // namespace

json run_report(const Config& cfg, const RunReportOptions& opt) {
    const Quadruple& q = cfg.quadruple;
    json j;
    j["version"] = kVersion;
    j["seed"] = env_seed();
    j["config"] = cfg.echo;
    j["validation"] = validation_json(q.validate());

    const Vec3 defect = period_residual(q);
    json period;
    period["defect"] = {defect.x, defect.y, defect.z};
    period["norm"] = defect.norm();
    period["ok"] = defect.norm() < 1e-8;
    j["period"] = std::move(period);

    const FrontCondition fc = front_condition(q);
    json front;
    front["front"] = fc.front;
    front["min_abs_nu_prime"] = fc.min_abs_nu_prime;
    front["umbilic_rulings"] = fc.umbilic_ruling_params.size();
    j["front"] = std::move(front);

    j["completeness"] = completeness_json(completeness_report(q));

    const PeriodicityClass pc = periodicity_class(q);
    json per;
    per["xi"] = periodicity_fn_json(pc.xi);
    per["nu"] = periodicity_fn_json(pc.nu);
    per["a"] = periodicity_fn_json(pc.a);
    per["b"] = periodicity_fn_json(pc.b);
    per["covers_nonorientable"] = pc.covers_nonorientable;
    per["covers_noncoorientable"] = pc.covers_noncoorientable;
    per["plain"] = pc.plain;
    per["orientable"] = pc.underlying_orientable;
    per["co_orientable"] = pc.underlying_coorientable;
    j["periodicity"] = std::move(per);

    const SingularReport rep = singular_locus(q, opt.singular_samples);
    json sing;
    sing["count"] = rep.samples.size();
    json counts;
    for (int k = 0; k < 5; ++k)
        counts[to_string(static_cast<SingularClass>(k))] = rep.counts[k];
    sing["counts"] = std::move(counts);
    sing["image_diameter"] = rep.image_diameter;
    if (rep.cone_point)
        sing["cone_point"] = {rep.cone_point->x, rep.cone_point->y, rep.cone_point->z};
    else
        sing["cone_point"] = nullptr;
    if (opt.with_noncusp && !rep.samples.empty())
        sing["noncusp_count"] = noncusp_count(q);
    else
        sing["noncusp_count"] = nullptr;
    j["singular"] = std::move(sing);
    return j;
}

uint64_t env_seed() {
    const char* s = std::getenv("FLATFRONT_SEED");
    if (!s || !*s) return 0;
    return std::strtoull(s, nullptr, 10);
}

}  // namespace flatfront
