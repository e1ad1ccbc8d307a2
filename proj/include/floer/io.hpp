#pragma once

// JSON (de)serialization for every artifact: polynomials, link
// configurations, colorings, complexes, chain maps, grids, pipelines and
// verification reports. Orderings are canonical so identical inputs always
// produce identical bytes.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "floer/complex.hpp"
#include "floer/grid.hpp"
#include "floer/models.hpp"
#include "floer/stabilize.hpp"
#include "floer/verify.hpp"

namespace floer {

using json = nlohmann::ordered_json;

// --- polynomials -----------------------------------------------------------

inline json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const Mon& m : p.terms()) {
        json mon = json::array();
        for (const auto& [v, k] : m.factors()) mon.push_back(json::array({v.str(), k}));
        terms.push_back(mon);
    }
    return terms;
}

inline VarId var_from_string(const std::string& s) {
    if (s.size() < 3 || s[1] != '_') fail("ParseError", "bad variable name " + s);
    std::string name = s.substr(2);
    switch (s[0]) {
        case 'U': return VarId::u(name);
        case 'V': return VarId::v(name);
        case 'P': return VarId::color(name);
        default: fail("ParseError", "bad variable prefix in " + s);
    }
}

inline Poly poly_from_json(const json& j) {
    std::vector<Mon> terms;
    for (const json& mon : j) {
        Mon::Factors f;
        for (const json& pair : mon)
            f.emplace_back(var_from_string(pair.at(0).get<std::string>()), pair.at(1).get<int>());
        terms.push_back(Mon(std::move(f)));
    }
    return Poly::from_terms(std::move(terms));
}

// --- link configuration ------------------------------------------------------

inline json link_config_to_json(const LinkConfig& cfg) {
    json comps = json::array();
    for (const std::string& cid : cfg.component_ids()) {
        json bps = json::array();
        for (const Basepoint& b : cfg.component(cid))
            bps.push_back({{"id", b.id}, {"kind", std::string(1, b.kind)}});
        comps.push_back({{"id", cid}, {"basepoints", bps}});
    }
    return {{"components", comps}};
}

inline LinkConfig link_config_from_json(const json& j) {
    std::vector<std::pair<std::string, std::vector<Basepoint>>> comps;
    for (const json& c : j.at("components")) {
        std::vector<Basepoint> bps;
        for (const json& b : c.at("basepoints"))
            bps.push_back({b.at("id").get<std::string>(), b.at("kind").get<std::string>()[0]});
        comps.emplace_back(c.at("id").get<std::string>(), std::move(bps));
    }
    return LinkConfig::from_components(std::move(comps));
}

inline json coloring_to_json(const Coloring& c) {
    json sigma = json::object();
    for (const auto& [bp, col] : c.sigma) sigma[bp] = col;
    return {{"sigma", sigma}};
}

inline Coloring coloring_from_json(const json& j) {
    Coloring c;
    for (auto& [bp, col] : j.at("sigma").items()) {
        c.sigma[bp] = col.get<std::string>();
        c.palette.insert(col.get<std::string>());
    }
    return c;
}

// --- complexes ---------------------------------------------------------------

inline json complex_to_json(const ChainComplex& c) {
    json gens = json::array();
    for (const Generator& g : c.gens) {
        json alex = json::object();
        for (const auto& [cid, a] : g.gr.alex) alex[cid] = a;
        gens.push_back({{"id", g.id}, {"gr_w", g.gr.grw}, {"gr_z", g.gr.grz}, {"alexander", alex}});
    }
    json diff = json::array();
    for (int j = 0; j < c.size(); ++j)
        for (const auto& [i, p] : c.raw[j])
            diff.push_back(
                {{"from", c.gens[j].id}, {"to", c.gens[i].id}, {"poly", poly_to_json(p)}});
    json out = {{"cfg", link_config_to_json(c.cfg)}, {"generators", gens}, {"diff", diff}};
    if (c.coloring) out["coloring"] = coloring_to_json(*c.coloring);
    return out;
}

inline CC complex_from_json(const json& j) {
    LinkConfig cfg = link_config_from_json(j.at("cfg"));
    std::vector<Generator> gens;
    for (const json& g : j.at("generators")) {
        Grading gr;
        gr.grw = g.at("gr_w").get<int>();
        gr.grz = g.at("gr_z").get<int>();
        for (auto& [cid, a] : g.at("alexander").items()) gr.alex[cid] = a.get<int>();
        gens.push_back({g.at("id").get<std::string>(), gr});
    }
    auto index_of = [&](const std::string& id) {
        for (int i = 0; i < static_cast<int>(gens.size()); ++i)
            if (gens[i].id == id) return i;
        fail("ParseError", "diff references unknown generator " + id);
    };
    std::vector<Column> raw(gens.size());
    for (const json& e : j.at("diff"))
        column_insert(raw[index_of(e.at("from").get<std::string>())],
                      index_of(e.at("to").get<std::string>()), poly_from_json(e.at("poly")));
    CC c = make_complex(std::move(cfg), std::move(gens), std::move(raw));
    if (j.contains("coloring")) c = apply_coloring(c, coloring_from_json(j.at("coloring")));
    return c;
}

// --- chain maps -------------------------------------------------------------

inline json chain_map_to_json(const ChainMap& f, const std::string& provenance = "") {
    json entries = json::array();
    for (int j = 0; j < static_cast<int>(f.cols.size()); ++j)
        for (const auto& [i, p] : f.cols[j])
            entries.push_back({{"from", f.src->gens[j].id},
                               {"to", f.tgt->gens[i].id},
                               {"poly", poly_to_json(p)}});
    json out = {{"shift", json::array({f.sw, f.sz})},
                {"filtered", f.filtered},
                {"entries", entries},
                {"source", complex_to_json(*f.src)},
                {"target", complex_to_json(*f.tgt)}};
    if (!provenance.empty()) out["provenance"] = provenance;
    return out;
}

inline ChainMap chain_map_from_json(const json& j) {
    CC src = complex_from_json(j.at("source"));
    CC tgt = complex_from_json(j.at("target"));
    ChainMap f = zero_map(src, tgt, j.at("shift").at(0).get<int>(), j.at("shift").at(1).get<int>());
    f.filtered = j.at("filtered").get<bool>();
    for (const json& e : j.at("entries"))
        column_insert(f.cols[src->index_of(e.at("from").get<std::string>())],
                      tgt->index_of(e.at("to").get<std::string>()),
                      poly_from_json(e.at("poly")));
    check_map_grading(f);
    return f;
}

// --- grids -------------------------------------------------------------------

inline json grid_to_json(const GridDiagram& g) {
    return {{"n", g.n}, {"O", g.O}, {"X", g.X}};
}

inline GridDiagram grid_from_json(const json& j) {
    return GridDiagram::make(j.at("n").get<int>(), j.at("O").get<std::vector<int>>(),
                             j.at("X").get<std::vector<int>>());
}

// Compact text form: "n / O-permutation / X-permutation",
// e.g. "2 / 0 1 / 1 0".
inline GridDiagram grid_from_text(const std::string& text) {
    std::vector<std::vector<int>> parts(1);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "/") {
            parts.emplace_back();
            continue;
        }
        try {
            parts.back().push_back(std::stoi(tok));
        } catch (...) {
            fail("ParseError", "bad token '" + tok + "' in grid text");
        }
    }
    if (parts.size() != 3 || parts[0].size() != 1)
        fail("ParseError", "grid text must be 'n / O / X'");
    return GridDiagram::make(parts[0][0], parts[1], parts[2]);
}

inline GridDiagram grid_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("NotFound", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return grid_from_json(json::parse(text));
    return grid_from_text(text);
}

// --- reports ------------------------------------------------------------------

inline json report_to_json(const Report& rep, bool include_certificates = false) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        json e = {{"name", c.name}, {"status", c.status}, {"pass", c.pass}};
        if (c.status == "homotopic" || c.status == "unsat-certified") {
            e["unknowns"] = c.unknowns;
            e["equations"] = c.equations;
            e["rank"] = c.rank;
            e["degree_bound"] = c.degree;
            e["seconds"] = c.seconds;
        }
        if (include_certificates && c.certificate)
            e["homotopy"] = chain_map_to_json(*c.certificate);
        checks.push_back(e);
    }
    return {{"title", rep.title}, {"pass", rep.all_pass()}, {"checks", checks}};
}

// --- pipelines -----------------------------------------------------------------

// A pipeline describes a reproducible complex: a base (grid file or named
// model), a coloring, and an ordered list of quasi-stabilizations.
struct Pipeline {
    CC complex;
    std::string component;  // the distinguished component, when named
};

inline Pipeline load_pipeline(const json& j, const std::string& basedir = ".", int jobs = 1,
                              int size_cap = 7) {
    CC c;
    const json& base = j.at("base");
    const std::string kind = base.at("kind").get<std::string>();
    if (kind == "grid") {
        GridDiagram g = grid_from_file(basedir + "/" + base.at("file").get<std::string>());
        c = build_grid_complex(g, size_cap, jobs);
    } else if (kind == "model") {
        c = model_by_name(base.at("name").get<std::string>());
    } else if (kind == "complex") {
        std::ifstream in(basedir + "/" + base.at("file").get<std::string>());
        if (!in) fail("NotFound", "cannot open complex file");
        c = complex_from_json(json::parse(in));
    } else {
        fail("ParseError", "unknown pipeline base kind " + kind);
    }

    if (j.contains("coloring")) {
        const json& col = j.at("coloring");
        if (col.is_string()) {
            std::string s = col.get<std::string>();
            if (s == "trivial")
                c = apply_coloring(c, c->cfg.trivial_coloring());
            else if (s.rfind("merged-w:", 0) == 0)
                c = apply_coloring(c, c->cfg.merged_w_coloring(s.substr(9)));
            else if (s != "none")
                fail("ParseError", "unknown coloring spec " + s);
        } else {
            c = apply_coloring(c, coloring_from_json(col));
        }
    }

    for (const json& ins : j.value("insertions", json::array())) {
        Stabilization st = quasi_stabilize(
            c, ins.at("component").get<std::string>(), ins.at("after").get<std::string>(),
            ins.value("z", std::string()), ins.value("w", std::string()),
            ins.value("w_color", std::string()));
        c = st.complex;
    }

    Pipeline p;
    p.complex = c;
    p.component = j.value("component", std::string());
    return p;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("NotFound", "cannot open " + path);
    return json::parse(in);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace floer
