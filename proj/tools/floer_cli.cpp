// Batch interface: build complexes from grid files or pipelines, color them,
// derive the basepoint maps, and run the relation and theorem verifiers.
// Exit code 0 iff every executed check passed.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floer/io.hpp"

using namespace floer;

namespace {

struct Options {
    std::string emit = "text";
    int jobs = 1;
    int max_grid_size = 7;
    int degree = -1;
    bool no_solver = false;
    std::string out;
};

std::vector<std::string> g_failures;

void note_failure(const std::string& what) { g_failures.push_back(what); }

void emit_json(const Options& opt, const json& j) {
    if (!opt.out.empty())
        write_text_file(opt.out, j.dump(2) + "\n");
    else
        std::cout << j.dump(2) << "\n";
}

void print_report(const Options& opt, const Report& rep) {
    if (opt.emit == "json") {
        emit_json(opt, report_to_json(rep, true));
    } else {
        std::cout << rep.title << "\n";
        for (const CheckResult& c : rep.checks) {
            std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (" << c.status;
            if (c.status == "homotopic" || c.status == "unsat-certified")
                std::cout << ", unknowns=" << c.unknowns << ", rank=" << c.rank << ", "
                          << c.seconds << "s";
            std::cout << ")\n";
        }
    }
    for (const CheckResult& c : rep.checks)
        if (!c.pass) note_failure(rep.title + ": " + c.name);
}

std::string dir_of(const std::string& path) {
    auto p = std::filesystem::path(path).parent_path();
    return p.empty() ? std::string(".") : p.string();
}

Pipeline pipeline_from_file(const Options& opt, const std::string& file) {
    return load_pipeline(load_json_file(file), dir_of(file), opt.jobs, opt.max_grid_size);
}

// a complex argument may be a complex JSON, a pipeline JSON, or a grid file
CC complex_from_any(const Options& opt, const std::string& file) {
    json j = load_json_file(file);
    if (j.contains("generators")) return complex_from_json(j);
    if (j.contains("base")) return pipeline_from_file(opt, file).complex;
    if (j.contains("n")) return build_grid_complex(grid_from_json(j), opt.max_grid_size, opt.jobs);
    fail("ParseError", file + " holds neither a complex, a pipeline nor a grid");
}

void cmd_grid_complex(const Options& opt, const std::string& file) {
    GridDiagram g = grid_from_file(file);
    CC c = build_grid_complex(g, opt.max_grid_size, opt.jobs);
    Poly defect = d_squared_defect(*c);
    bool ok = defect == expected_defect(c->cfg);
    check_complex_grading(*c);
    if (!ok) note_failure("grid-complex: d^2 defect mismatch");
    if (opt.emit == "json") {
        json j = complex_to_json(*c);
        j["checks"] = {{"d_squared_matches_expected_defect", ok},
                       {"grading_law", true},
                       {"generators", c->size()}};
        emit_json(opt, j);
    } else {
        std::cout << "grid " << g.n << "x" << g.n << ": " << c->size() << " generators, "
                  << c->cfg.component_ids().size() << " component(s)\n";
        std::cout << "  d^2 defect " << defect.str() << "\n";
        std::cout << "  [" << (ok ? "PASS" : "FAIL") << "] d^2 = expected defect\n";
        std::cout << "  [PASS] grading law\n";
    }
}

void cmd_color(const Options& opt, const std::string& cfile, const std::string& colfile) {
    CC c = complex_from_any(opt, cfile);
    Coloring col = coloring_from_json(load_json_file(colfile));
    CC colored = apply_coloring(c, col);
    if (opt.emit == "json")
        emit_json(opt, complex_to_json(*colored));
    else
        std::cout << "colored complex: d^2 = 0 verified, " << colored->size()
                  << " generators\n";
}

void cmd_check_dsq(const Options& opt, const std::string& file) {
    CC c = complex_from_any(opt, file);
    Poly defect = d_squared_defect(*c);
    Poly want = c->coloring ? Poly::zero() : expected_defect(c->cfg);
    bool ok = defect == want;
    if (!ok) note_failure("check-dsq");
    if (opt.emit == "json")
        emit_json(opt, json{{"defect", poly_to_json(defect)},
                            {"expected", poly_to_json(want)},
                            {"pass", ok}});
    else
        std::cout << "[" << (ok ? "PASS" : "FAIL") << "] d^2 = "
                  << (c->coloring ? "0 (colored)" : "expected defect") << "\n";
}

void cmd_derive(const Options& opt, const std::string& kind, const std::string& file,
                const std::string& basepoint, const std::string& arcspec) {
    CC c = complex_from_any(opt, file);
    ChainMap f;
    std::string provenance;
    if (kind == "phi") {
        f = phi(c, basepoint);
        provenance = "phi(" + basepoint + ") = dU-derivative of the differential";
    } else if (kind == "psi") {
        f = psi(c, basepoint);
        provenance = "psi(" + basepoint + ") = dV-derivative of the differential";
    } else if (kind == "psi-arc") {
        auto c1 = arcspec.find(':');
        auto c2 = arcspec.find(':', c1 + 1);
        if (c1 == std::string::npos)
            fail("ParseError", "arc spec must be K or K:w_from:w_to");
        Arc a = c2 == std::string::npos
                    ? Arc::whole(arcspec.substr(0, c1))
                    : Arc::between(arcspec.substr(0, c1), arcspec.substr(c1 + 1, c2 - c1 - 1),
                                   arcspec.substr(c2 + 1));
        f = psi_arc(c, a);
        provenance = "psi_arc(" + arcspec + ") = sum of psi over the arc's z-basepoints";
    } else {
        fail("ParseError", "derive kind must be phi, psi or psi-arc");
    }
    emit_json(opt, chain_map_to_json(f, provenance));
}

void cmd_relations(const Options& opt, const std::string& file) {
    Pipeline p = pipeline_from_file(opt, file);
    print_report(opt, relation_suite(p.complex, !opt.no_solver, opt.degree));
}

void cmd_thm(const Options& opt, const std::string& file, bool thm_b,
             const std::string& component) {
    Pipeline p = pipeline_from_file(opt, file);
    std::string k = !component.empty() ? component : p.component;
    if (k.empty()) k = p.complex->cfg.component_ids()[0];
    print_report(opt, thm_b ? thm_b_verify(p.complex, k, opt.degree)
                            : thm_d_verify(p.complex, k, opt.degree));
}

void cmd_homology(const Options& opt, const std::string& file) {
    CC c = complex_from_any(opt, file);
    if (!c->coloring) c = apply_coloring(c, c->cfg.trivial_coloring());
    auto ranks = f2_homology_ranks(*c);
    if (opt.emit == "json") {
        json arr = json::array();
        for (const auto& [k, r] : ranks) {
            json alex = json::object();
            for (const auto& [cid, a] : k.alex) alex[cid] = a;
            arr.push_back({{"gr_w", k.grw}, {"alexander", alex}, {"rank", r}});
        }
        emit_json(opt, json{{"ranks", arr}});
    } else {
        std::cout << "tilde homology ranks (doubled gradings):\n";
        for (const auto& [k, r] : ranks) {
            std::cout << "  gr_w=" << k.grw << " A=(";
            for (size_t i = 0; i < k.alex.size(); ++i)
                std::cout << (i ? "," : "") << k.alex[i].second;
            std::cout << "): " << r << "\n";
        }
    }
}

void cmd_homotopy(const Options& opt, const std::string& ffile, const std::string& gfile) {
    ChainMap f = chain_map_from_json(load_json_file(ffile));
    ChainMap g = chain_map_from_json(load_json_file(gfile));
    HomotopyResult r = solve_homotopy(f, g, opt.degree);
    if (r.solved) {
        if (opt.emit == "json")
            emit_json(opt, json{{"status", "homotopic"},
                                {"homotopy", chain_map_to_json(r.h, "solver certificate")}});
        else
            std::cout << "[PASS] homotopic (unknowns=" << r.unknowns << ", rank=" << r.rank
                      << ")\n";
    } else {
        note_failure("homotopy: not homotopic");
        json cert{{"status", r.complete ? "unsat-certified" : "unsat-incomplete"},
                  {"unknowns", r.unknowns},
                  {"equations", r.equations},
                  {"rank", r.rank},
                  {"degree_used", r.degree_used},
                  {"degree_needed", r.degree_needed}};
        if (opt.emit == "json")
            emit_json(opt, cert);
        else
            std::cout << "[FAIL] " << cert.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"full link Floer complexes over F2[U,V]: construction, basepoint maps, "
                 "and machine verification of the relation calculus"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--emit", opt.emit, "output form: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "parallel workers for construction");
    app.add_option("--max-grid-size", opt.max_grid_size, "grid enumeration cap (default 7)");

    std::string file, second, basepoint, arcspec, component, kind;

    auto* gc = app.add_subcommand("grid-complex", "build a grid complex and check its d^2");
    gc->add_option("file", file)->required();
    gc->add_option("-o,--out", opt.out);

    auto* co = app.add_subcommand("color", "apply a coloring to a complex");
    co->add_option("complex", file)->required();
    co->add_option("coloring", second)->required();
    co->add_option("-o,--out", opt.out);

    auto* dq = app.add_subcommand("check-dsq", "verify the d^2 defect law");
    dq->add_option("file", file)->required();

    auto* de = app.add_subcommand("derive", "emit phi, psi or an arc map");
    de->add_option("kind", kind)->required()->check(CLI::IsMember({"phi", "psi", "psi-arc"}));
    de->add_option("complex", file)->required();
    de->add_option("--basepoint", basepoint);
    de->add_option("--arc", arcspec);
    de->add_option("-o,--out", opt.out);

    auto* re = app.add_subcommand("relations", "run the relation suite on a pipeline");
    re->add_option("pipeline", file)->required();
    re->add_flag("--no-solver", opt.no_solver);
    re->add_option("--degree", opt.degree);

    auto* tb = app.add_subcommand("verify-thm-b", "certify the full-twist formula");
    tb->add_option("pipeline", file)->required();
    tb->add_option("--component", component);
    tb->add_option("--degree", opt.degree);

    auto* td = app.add_subcommand("verify-thm-d", "certify the partial-twist formula");
    td->add_option("pipeline", file)->required();
    td->add_option("--component", component);
    td->add_option("--degree", opt.degree);

    auto* ho = app.add_subcommand("homology-tilde", "variables-to-zero homology ranks");
    ho->add_option("file", file)->required();

    auto* hm = app.add_subcommand("homotopy", "decide F ~ G with a certificate");
    hm->add_option("F", file)->required();
    hm->add_option("G", second)->required();
    hm->add_option("--degree", opt.degree);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gc->parsed()) cmd_grid_complex(opt, file);
        if (co->parsed()) cmd_color(opt, file, second);
        if (dq->parsed()) cmd_check_dsq(opt, file);
        if (de->parsed()) cmd_derive(opt, kind, file, basepoint, arcspec);
        if (re->parsed()) cmd_relations(opt, file);
        if (tb->parsed()) cmd_thm(opt, file, true, component);
        if (td->parsed()) cmd_thm(opt, file, false, component);
        if (ho->parsed()) cmd_homology(opt, file);
        if (hm->parsed()) cmd_homotopy(opt, file, second);
    } catch (const std::exception& e) {
        std::cerr << "{\"failures\": [\"" << e.what() << "\"]}\n";
        return 2;
    }

    if (!g_failures.empty()) {
        json j{{"failures", g_failures}};
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 0;
}
