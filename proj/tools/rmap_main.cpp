#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rmap/fixtures.hpp"
#include "rmap/json_io.hpp"
#include "rmap/render.hpp"

using namespace rmap;

namespace {

struct RunConfig {
    std::string function_path;
    std::string map_path;
    std::string labelling_path;
    std::string embedded_path;
    std::string gamma = "auto"; // auto | real | default | path to JSON
    std::string out_path;
    std::string svg_path;
    std::string dot_path;
    std::string q_range; // "A..B"
    bool canonical = false;
    double tol = 1e-12;
    unsigned seed = 0; // reserved for randomized subcommands
};

void emit(const RunConfig& cfg, const Json& j) {
    if (cfg.out_path.empty())
        std::cout << dump(j);
    else
        save_json_file(cfg.out_path, j);
}

JordanPath make_gamma(const RunConfig& cfg, const RationalFunction& f, const CriticalData& cd) {
    (void)f;
    if (cfg.gamma == "real") return real_line_gamma(cd);
    if (cfg.gamma == "default" || cfg.gamma == "auto") {
        if (cfg.gamma == "auto") {
            try {
                return real_line_gamma(cd);
            } catch (const NotFortunate&) {
                // fall through to the default polygon
            }
        }
        auto order = default_cyclic_order(cd.critical_values);
        return polygonal_gamma(cd.critical_values, order);
    }
    return jordan_from_json(load_json_file(cfg.gamma));
}

int cmd_critical(const RunConfig& cfg) {
    RationalFunction f = rational_from_json(load_json_file(cfg.function_path));
    CriticalOptions opt;
    opt.root_tol = cfg.tol;
    CriticalData cd = critical_data(f, opt);
    Json report = to_json(cd);
    Json cocrit = Json::array();
    for (const auto& p : cocritical_points(f, cd, opt)) cocrit.push_back(to_json(p));
    report["cocritical_points"] = cocrit;
    emit(cfg, report);
    return 0;
}

int cmd_tessellate(const RunConfig& cfg) {
    RationalFunction f = rational_from_json(load_json_file(cfg.function_path));
    CriticalData cd = critical_data(f);
    JordanPath g = make_gamma(cfg, f, cd);
    EmbeddedRMap em = pullback_rmap(f, g);
    if (!cfg.svg_path.empty()) save_text_file(cfg.svg_path, render_svg(em));
    emit(cfg, to_json(em));
    return 0;
}

int cmd_labellings(const RunConfig& cfg) {
    CombinatorialMap m = map_from_json(load_json_file(cfg.map_path));
    QRange range = admissible_q_range(m);
    if (!cfg.q_range.empty()) {
        const auto dots = cfg.q_range.find("..");
        if (dots == std::string::npos) throw IoError("--q expects A..B");
        range.lo = std::stoi(cfg.q_range.substr(0, dots));
        range.hi = std::stoi(cfg.q_range.substr(dots + 2));
    }
    Json per_q = Json::array();
    for (int q = range.lo; q <= range.hi; ++q) {
        auto canonical = enumerate_labellings(m, q, true);
        Json entry{{"q", q},
                   {"canonical_count", canonical.size()},
                   {"total_count", q * canonical.size()},
                   {"automorphism_orbit_count", count_labellings_mod_automorphism(m, canonical)}};
        Json ls = Json::array();
        if (cfg.canonical) {
            for (const auto& L : canonical) ls.push_back(to_json(L));
        } else {
            for (const auto& L : enumerate_labellings(m, q, false)) ls.push_back(to_json(L));
        }
        entry["labellings"] = ls;
        per_q.push_back(entry);
    }
    emit(cfg, Json{{"admissible_q", Json::array({range.lo, range.hi})},
                   {"empty_range", range.empty()},
                   {"per_q", per_q}});
    return 0;
}

int cmd_realize(const RunConfig& cfg) {
    CombinatorialMap m = map_from_json(load_json_file(cfg.map_path));
    QLabelling L = m.has_labels() ? labels_of(m) : QLabelling{};
    if (!cfg.labelling_path.empty()) L = labelling_from_json(load_json_file(cfg.labelling_path));
    if (L.q == 0) throw InconsistentLabelling("no labelling given (map carries none)");
    Realization r = realize(m, L);
    emit(cfg, Json{{"genus", r.genus},
                   {"constellation", to_json(r.constellation)},
                   {"rmap", to_json(r.rmap)},
                   {"surgery", to_json(r.plan)}});
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    CombinatorialMap m = map_from_json(load_json_file(cfg.map_path));
    Classification cl = classify(m);
    Json out{{"kind", cl.kind == MapKind::TGraph  ? "t-graph"
                      : cl.kind == MapKind::RMap ? "R-map"
                                                 : "raw"},
             {"degree", cl.degree},
             {"gonality", cl.gonality},
             {"violations", cl.violations}};
    if (m.has_labels()) {
        ConsistencyVerdict v = check_consistent(m, labels_of(m));
        out["labelling_consistent"] = v.consistent;
        out["labelling_violations"] = v.violations;
        if (!v.consistent) cl.kind = MapKind::Raw;
    }
    emit(cfg, out);
    return (cl.kind == MapKind::Raw) ? 2 : 0;
}

int cmd_render(const RunConfig& cfg) {
    if (!cfg.embedded_path.empty()) {
        EmbeddedRMap em = embedded_from_json(load_json_file(cfg.embedded_path));
        if (!cfg.svg_path.empty()) save_text_file(cfg.svg_path, render_svg(em));
        if (!cfg.dot_path.empty()) save_text_file(cfg.dot_path, render_dot(em.map));
        if (cfg.svg_path.empty() && cfg.dot_path.empty()) std::cout << render_svg(em);
        return 0;
    }
    CombinatorialMap m = map_from_json(load_json_file(cfg.map_path));
    const std::string dot = render_dot(m);
    if (!cfg.dot_path.empty())
        save_text_file(cfg.dot_path, dot);
    else
        std::cout << dot;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tessellations of rational maps: forward tracing and combinatorial realization"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "numeric tolerance");
    app.add_option("--seed", cfg.seed, "seed for randomized runs");

    auto* critical = app.add_subcommand("critical", "critical points/values and RH check");
    critical->add_option("--function", cfg.function_path, "rational function JSON")->required();
    critical->add_option("--out", cfg.out_path, "output path (default stdout)");

    auto* tessellate = app.add_subcommand("tessellate", "trace the pullback tessellation");
    tessellate->add_option("--function", cfg.function_path)->required();
    tessellate->add_option("--gamma", cfg.gamma, "auto | real | default | path to JSON");
    tessellate->add_option("--out", cfg.out_path);
    tessellate->add_option("--svg", cfg.svg_path, "also write an SVG figure");

    auto* labellings = app.add_subcommand("labellings", "enumerate consistent labellings");
    labellings->add_option("--map", cfg.map_path)->required();
    labellings->add_option("--q", cfg.q_range, "override the q range, A..B");
    labellings->add_flag("--canonical", cfg.canonical, "emit one representative per shift orbit");
    labellings->add_option("--out", cfg.out_path);

    auto* realizec = app.add_subcommand("realize", "constellation + surgery from a labelled map");
    realizec->add_option("--map", cfg.map_path)->required();
    realizec->add_option("--labelling", cfg.labelling_path, "labelling JSON (default: map labels)");
    realizec->add_option("--out", cfg.out_path);

    auto* validate = app.add_subcommand("validate", "structural and labelling checks");
    validate->add_option("--map", cfg.map_path)->required();
    validate->add_option("--out", cfg.out_path);

    auto* render = app.add_subcommand("render", "SVG/DOT output");
    render->add_option("--map", cfg.map_path, "combinatorial map JSON (DOT output)");
    render->add_option("--embedded", cfg.embedded_path, "embedded map JSON (SVG output)");
    render->add_option("--svg", cfg.svg_path);
    render->add_option("--dot", cfg.dot_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (critical->parsed()) return cmd_critical(cfg);
        if (tessellate->parsed()) return cmd_tessellate(cfg);
        if (labellings->parsed()) return cmd_labellings(cfg);
        if (realizec->parsed()) return cmd_realize(cfg);
        if (validate->parsed()) return cmd_validate(cfg);
        if (render->parsed()) return cmd_render(cfg);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const NonConvergence& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const PathJump& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const AmbiguousSnap& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
