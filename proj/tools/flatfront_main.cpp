#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "flatfront/errors.hpp"
#include "flatfront/io.hpp"

namespace ff = flatfront;
using json = nlohmann::ordered_json;

namespace {

struct CliExit {
    int code;
};

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ff::IOError("cannot open output file: " + path);
    out << text;
    if (!out) throw ff::IOError("write failed: " + path);
}

void emit_report(const json& report, const std::string& path) {
    write_text(path, report.dump(2) + "\n");
}

ff::MeshGrid mesh_for(const ff::Config& cfg, const ff::Quadruple& q, int singular_samples) {
    const ff::FrontEvaluator f = ff::build_front(q);
    return ff::build_mesh(f, cfg.grid.nt, cfg.grid.nv, cfg.grid.v_min, cfg.grid.v_max,
                          singular_samples);
}

json report_for(const ff::Config& cfg, const ff::Quadruple& q, const char* derived) {
    ff::Config derived_cfg{q, cfg.grid, cfg.project_period_flag, cfg.echo};
    if (derived) derived_cfg.echo["derived"] = derived;
    return ff::run_report(derived_cfg);
}

int run(int argc, char** argv) {
    CLI::App app{
        "flatfront: flat fronts in Euclidean 3-space from quadruple data "
        "(construction, singularities, parallels, caustics, completeness)"};
    app.require_subcommand(1);

    std::string config_path, out_path = "-", report_path;
    double delta = 0.0, t0 = 0.0, v0 = 0.0;
    int turns = 1, samples = 512;
    std::string name, params_text = "{}";
    bool list = false;

    auto* build = app.add_subcommand("build", "evaluate the front mesh and report");
    build->add_option("--config", config_path, "config JSON")->required();
    build->add_option("--out", out_path, "OBJ output path");
    build->add_option("--report", report_path, "report JSON path");
    build->add_option("--singular-samples", samples, "singular locus samples");

    auto* check = app.add_subcommand(
        "check", "validation / period / front / completeness verdicts (exit 0 iff all pass)");
    check->add_option("--config", config_path)->required();
    check->add_option("--report", report_path);

    auto* singular = app.add_subcommand("singular", "classified singular samples as CSV");
    singular->add_option("--config", config_path)->required();
    singular->add_option("--out", out_path);
    singular->add_option("--samples", samples);

    auto* caustic = app.add_subcommand("caustic", "mesh and report of the caustic");
    caustic->add_option("--config", config_path)->required();
    caustic->add_option("--out", out_path);
    caustic->add_option("--report", report_path);

    auto* par = app.add_subcommand("parallel", "mesh and report of the parallel front");
    par->add_option("--config", config_path)->required();
    par->add_option("--delta", delta, "parallel distance")->required();
    par->add_option("--out", out_path);
    par->add_option("--report", report_path);

    auto* curv = app.add_subcommand("curvline", "curvature line path as CSV");
    curv->add_option("--config", config_path)->required();
    curv->add_option("--t0", t0);
    curv->add_option("--v0", v0);
    curv->add_option("--turns", turns);
    curv->add_option("--out", out_path);

    auto* gallery = app.add_subcommand("gallery", "emit a config for a named gallery example");
    gallery->add_flag("--list", list, "list gallery names");
    gallery->add_option("--name", name, "gallery name");
    gallery->add_option("--params", params_text, "JSON parameters");
    gallery->add_option("--out", out_path);

    auto* project = app.add_subcommand("project",
                                       "rewrite alpha (and beta) to satisfy the period condition");
    project->add_option("--config", config_path)->required();
    project->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        throw CliExit{app.exit(e)};
    }

    if (build->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        ff::export_obj(mesh_for(cfg, cfg.quadruple, samples),
                       out_path == "-" ? "front.obj" : out_path);
        emit_report(report_for(cfg, cfg.quadruple, nullptr),
                    report_path.empty() ? "-" : report_path);
        return 0;
    }

    if (check->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        const json rep = report_for(cfg, cfg.quadruple, nullptr);
        emit_report(rep, report_path.empty() ? "-" : report_path);
        const bool validation_ok = rep["validation"]["pass"].get<bool>();
        const bool period_ok = rep["period"]["ok"].get<bool>();
        const bool front_ok = rep["front"]["front"].get<bool>();
        const bool complete_ok = rep["completeness"]["complete"].get<bool>();
        if (!validation_ok) throw ff::DualityViolation("check: duality validation failed");
        if (!period_ok)
            throw ff::PeriodConditionViolated("check: period defect " +
                                              std::to_string(rep["period"]["norm"].get<double>()));
        if (!front_ok) throw ff::Error("check: front condition failed");
        if (!complete_ok) throw ff::Error("check: completeness criteria failed");
        return 0;
    }

    if (singular->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        write_text(out_path, ff::singular_csv(cfg.quadruple, samples));
        return 0;
    }

    if (caustic->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        const ff::CausticResult c = ff::caustic(cfg.quadruple);
        if (c.degenerate_line)
            throw ff::DegenerateCausticExport(
                "the caustic degenerates to a straight line; there is no surface to export");
        ff::export_obj(mesh_for(cfg, c.quadruple, samples),
                       out_path == "-" ? "caustic.obj" : out_path);
        emit_report(report_for(cfg, c.quadruple, "caustic"),
                    report_path.empty() ? "-" : report_path);
        return 0;
    }

    if (par->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        const ff::Quadruple qd = ff::parallel(cfg.quadruple, delta);
        ff::export_obj(mesh_for(cfg, qd, samples), out_path == "-" ? "parallel.obj" : out_path);
        emit_report(report_for(cfg, qd, "parallel"), report_path.empty() ? "-" : report_path);
        return 0;
    }

    if (curv->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        write_text(out_path,
                   ff::curvature_line_csv(ff::curvature_line(cfg.quadruple, t0, v0, turns)));
        return 0;
    }

    if (gallery->parsed()) {
        if (list) {
            for (const char* g : {"cone", "circle_cos_n", "cardioid_cylinder",
                                  "tangential_example54", "tangential_custom",
                                  "rectifying_custom", "plane"})
                std::cout << g << "\n";
            return 0;
        }
        if (name.empty()) throw ff::InvalidParameter("gallery: --name or --list required");
        if (!ff::gallery_name_from_string(name))
            throw ff::InvalidParameter("gallery: unknown name " + name);
        json params;
        try {
            params = json::parse(params_text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ff::ParseError(std::string("--params parse error: ") + e.what());
        }
        json cfg;
        cfg["curve"] = {{"kind", "gallery"}, {"name", name}, {"params", params}};
        cfg["grid"] = {{"nt", 128}, {"nv", 33}, {"vmin", -2.0}, {"vmax", 2.0}};
        ff::parse_config(cfg);  // validate before emitting
        write_text(out_path, cfg.dump(2) + "\n");
        return 0;
    }

    if (project->parsed()) {
        const ff::Config cfg = ff::load_config(config_path);
        json out = cfg.echo;
        const double sup_b = cfg.quadruple.b().sup_on_grid(cfg.quadruple.grid_size());
        if (sup_b > cfg.quadruple.eps_zero()) {
            auto [a2, b2] = ff::project_period_joint(cfg.quadruple);
            out["alpha"] = ff::series_to_json(a2);
            out["beta"] = ff::series_to_json(b2);
        } else {
            out["alpha"] =
                ff::series_to_json(ff::project_period(cfg.quadruple.xi(), cfg.quadruple.a()));
        }
        out["project_period"] = false;
        write_text(out_path, out.dump(2) + "\n");
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliExit& e) {
        return e.code;
    } catch (const ff::Error& e) {
        json err;
        err["error"] = e.kind();
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "Error";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
