#pragma once

// Sparse chain complexes over F2[U_w, V_z] (or a colored ring F2[U_P]) with
// bigradings, the d^2 defect computation, coloring, and chain maps.
//
// Grading conventions, stored doubled so half-integer Alexander gradings of
// links stay integral:
//   - gr_w drops by 1 under d; U-variables have (gr_w, gr_z)-degree (-2, 0).
//   - gr_z drops by 1 under d; V-variables have degree (0, -2).
//   - Per component K, alexander_K = (gr_w - gr_z)/2 localized to K's
//     variables: U_w lowers it by 1 and V_z raises it by 1 for basepoints
//     on K.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "floer/gf2.hpp"
#include "floer/link.hpp"
#include "floer/poly.hpp"

namespace floer {

struct Grading {
    int grw = 0;                       // doubled Maslov (w-grading)
    int grz = 0;                       // doubled z-grading
    std::map<std::string, int> alex;   // doubled Alexander grading per component

    friend auto operator<=>(const Grading&, const Grading&) = default;
};

struct Generator {
    std::string id;
    Grading gr;
};

// One column of a sparse matrix over the polynomial ring: (row index, entry)
// pairs sorted by row, zero entries omitted.
using Column = std::vector<std::pair<int, Poly>>;

inline void column_insert(Column& col, int row, const Poly& p) {
    if (p.is_zero()) return;
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == row) {
        it->second += p;
        if (it->second.is_zero()) col.erase(it);
    } else {
        col.insert(it, {row, p});
    }
}

inline const Poly& column_at(const Column& col, int row) {
    static const Poly kZero;
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    return (it != col.end() && it->first == row) ? it->second : kZero;
}

class ChainComplex;
using CC = std::shared_ptr<const ChainComplex>;

// Provenance record for a complex built by quasi-stabilization: the base
// complex, the inserted pair, and the neighbor basepoints at insertion time.
struct StabInfo {
    CC base;
    std::string component;
    std::string after_w;
    std::string z_id, w_id;
    std::string w_prev, z_next;     // final neighbors at insertion time
    // generator index maps: base gen i -> theta^+ / theta^- generators
    std::vector<int> plus_of, minus_of;
};

// Degree bookkeeping for the variables of a complex: (gr_w, gr_z) bidegree
// per unit exponent, and the component a variable is attributable to (used
// by the per-component Alexander law; colors mixing kinds or components
// forfeit the corresponding checks).
struct VarDegrees {
    struct Info {
        int dw = 0, dz = 0;                    // doubled, per unit exponent
        int da = 0;                            // doubled alexander shift per unit exponent
        std::optional<std::string> component;  // attribution, when unique
    };
    std::map<VarId, Info> info;

    const Info& of(const VarId& v) const {
        auto it = info.find(v);
        if (it == info.end())
            fail("UnknownVariable", "variable " + v.str() + " has no degree data");
        return it->second;
    }

    // (deg_w, deg_z) of a monomial, doubled.
    std::pair<int, int> bidegree(const Mon& m) const {
        int dw = 0, dz = 0;
        for (const auto& [v, k] : m.factors()) {
            const Info& i = of(v);
            dw += i.dw * k;
            dz += i.dz * k;
        }
        return {dw, dz};
    }

    // Per-component alexander shift of a monomial, doubled; nullopt when some
    // variable lacks a component attribution.
    std::optional<std::map<std::string, int>> alex_shift(const Mon& m) const {
        std::map<std::string, int> out;
        for (const auto& [v, k] : m.factors()) {
            const Info& i = of(v);
            if (!i.component) return std::nullopt;
            out[*i.component] += i.da * k;
        }
        return out;
    }
};

inline VarDegrees make_var_degrees(const LinkConfig& cfg, const std::optional<Coloring>& col) {
    VarDegrees d;
    for (const std::string& cid : cfg.component_ids()) {
        for (const Basepoint& b : cfg.component(cid)) {
            VarDegrees::Info i;
            if (b.kind == 'w') {
                i = {-4, 0, -2, cid};
                d.info[VarId::u(b.id)] = i;
            } else {
                i = {0, -4, +2, cid};
                d.info[VarId::v(b.id)] = i;
            }
        }
    }
    if (col) {
        // A color inherits the common kind of its basepoints; mixed-kind
        // colors have no bidegree and poison grading checks that touch them.
        std::map<std::string, std::vector<std::string>> members;
        for (const auto& [bp, c] : col->sigma) members[c].push_back(bp);
        for (const auto& [c, bps] : members) {
            char kind = 0;
            std::optional<std::string> comp;
            bool first = true;
            bool uniform_kind = true, uniform_comp = true;
            for (const std::string& bp : bps) {
                const Basepoint& b = cfg.basepoint(bp);
                const std::string& bc = cfg.component_of(bp);
                if (first) {
                    kind = b.kind;
                    comp = bc;
                    first = false;
                } else {
                    if (b.kind != kind) uniform_kind = false;
                    if (comp && *comp != bc) uniform_comp = false;
                }
            }
            VarDegrees::Info i;
            if (uniform_kind)
                i = kind == 'w' ? VarDegrees::Info{-4, 0, -2, {}} : VarDegrees::Info{0, -4, +2, {}};
            else
                continue;  // no entry: grading-sensitive ops will reject it
            if (uniform_comp) i.component = comp;
            d.info[VarId::color(c)] = i;
        }
    }
    return d;
}

class ChainComplex {
  public:
    LinkConfig cfg;
    std::optional<Coloring> coloring;
    std::vector<Generator> gens;
    std::vector<Column> raw;   // uncolored differential (always kept)
    std::vector<Column> diff;  // effective differential (= raw when uncolored)
    std::shared_ptr<const StabInfo> stab;  // set when built by quasi-stabilization

    int size() const { return static_cast<int>(gens.size()); }

    int index_of(const std::string& gen_id) const {
        for (int i = 0; i < size(); ++i)
            if (gens[i].id == gen_id) return i;
        fail("NotFound", "no generator " + gen_id);
    }

    VarDegrees raw_degrees() const { return make_var_degrees(cfg, std::nullopt); }
    VarDegrees effective_degrees() const { return make_var_degrees(cfg, coloring); }
};

inline CC make_complex(LinkConfig cfg, std::vector<Generator> gens, std::vector<Column> raw,
                       std::shared_ptr<const StabInfo> stab = nullptr);

struct ChainMap {
    CC src, tgt;
    int sw = 0, sz = 0;  // doubled grading shift
    bool filtered = true;
    std::vector<Column> cols;  // indexed by source generator

    const Poly& entry(int src_gen, int tgt_gen) const { return column_at(cols[src_gen], tgt_gen); }

    bool is_zero() const {
        for (const Column& c : cols)
            if (!c.empty()) return false;
        return true;
    }
};

inline bool same_generators(const CC& a, const CC& b) {
    if (a == b) return true;
    if (a->size() != b->size()) return false;
    for (int i = 0; i < a->size(); ++i)
        if (a->gens[i].id != b->gens[i].id) return false;
    return true;
}

inline ChainMap zero_map(CC src, CC tgt, int sw, int sz) {
    ChainMap f;
    f.src = std::move(src);
    f.tgt = std::move(tgt);
    f.sw = sw;
    f.sz = sz;
    f.cols.resize(f.src->size());
    return f;
}

inline ChainMap identity_map(CC c) {
    ChainMap f = zero_map(c, c, 0, 0);
    for (int i = 0; i < c->size(); ++i) f.cols[i] = {{i, Poly::one()}};
    return f;
}

// The differential of a complex viewed as a chain map of shift (-1, -1).
inline ChainMap differential_map(CC c) {
    ChainMap f = zero_map(c, c, -2, -2);
    f.cols = c->diff;
    return f;
}

inline ChainMap map_add(const ChainMap& a, const ChainMap& b) {
    if (!same_generators(a.src, b.src) || !same_generators(a.tgt, b.tgt) || a.sw != b.sw ||
        a.sz != b.sz)
        fail("ShapeMismatch", "map addition needs equal sources, targets and shifts");
    ChainMap r = a;
    r.filtered = a.filtered && b.filtered;
    for (int j = 0; j < static_cast<int>(b.cols.size()); ++j)
        for (const auto& [i, p] : b.cols[j]) column_insert(r.cols[j], i, p);
    return r;
}

// compose(F, G) = F after G.
inline ChainMap compose(const ChainMap& f, const ChainMap& g) {
    if (!same_generators(g.tgt, f.src))
        fail("ShapeMismatch", "compose: inner complexes do not match");
    ChainMap r = zero_map(g.src, f.tgt, f.sw + g.sw, f.sz + g.sz);
    r.filtered = f.filtered && g.filtered;
    for (int j = 0; j < static_cast<int>(g.cols.size()); ++j)
        for (const auto& [k, p] : g.cols[j])
            for (const auto& [i, q] : f.cols[k]) column_insert(r.cols[j], i, q * p);
    return r;
}

inline ChainMap scalar_map(CC c, const Poly& p, int sw, int sz) {
    ChainMap f = zero_map(c, c, sw, sz);
    if (!p.is_zero())
        for (int i = 0; i < c->size(); ++i) f.cols[i] = {{i, p}};
    return f;
}

inline bool map_equal(const ChainMap& a, const ChainMap& b) {
    return same_generators(a.src, b.src) && same_generators(a.tgt, b.tgt) && a.sw == b.sw &&
           a.sz == b.sz && a.cols == b.cols;
}

// dF + Fd; F is a chain map iff the defect vanishes.
inline std::pair<bool, ChainMap> chain_map_defect(const ChainMap& f) {
    ChainMap d = map_add(compose(differential_map(f.tgt), f), compose(f, differential_map(f.src)));
    return {d.is_zero(), d};
}

inline bool is_chain_map(const ChainMap& f) { return chain_map_defect(f).first; }

// When F = p * identity for a single polynomial p, returns p.
inline std::optional<Poly> as_scalar(const ChainMap& f) {
    if (!same_generators(f.src, f.tgt)) return std::nullopt;
    Poly s;
    bool found = false;
    for (int j = 0; j < static_cast<int>(f.cols.size()); ++j) {
        Poly diag;
        for (const auto& [i, p] : f.cols[j]) {
            if (i != j) return std::nullopt;
            diag = p;
        }
        if (!found) {
            s = diag;
            found = true;
        } else if (!(s == diag)) {
            return std::nullopt;
        }
    }
    return s;
}

// --- validation ---------------------------------------------------------

inline void check_filtered(const ChainMap& f) {
    if (!f.filtered) return;
    for (const Column& col : f.cols)
        for (const auto& [i, p] : col)
            for (const Mon& m : p.terms())
                for (const auto& [v, k] : m.factors())
                    if (k < 0) fail("FilteredViolation", "negative exponent in filtered map");
}

// Per-entry grading law for a matrix of declared shift (sw, sz) between
// graded generator lists.
inline void check_entry_grading(const std::vector<Generator>& src,
                                const std::vector<Generator>& tgt,
                                const std::vector<Column>& cols, int sw, int sz,
                                const VarDegrees& deg, bool check_alex) {
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        for (const auto& [i, p] : cols[j]) {
            for (const Mon& m : p.terms()) {
                auto [dw, dz] = deg.bidegree(m);
                if (tgt[i].gr.grw + dw != src[j].gr.grw + sw ||
                    tgt[i].gr.grz + dz != src[j].gr.grz + sz)
                    fail("GradingViolation", "entry " + src[j].id + " -> " + tgt[i].id +
                                                 " monomial " + m.str() +
                                                 " violates the grading law");
                if (check_alex) {
                    if (auto shift = deg.alex_shift(m)) {
                        std::map<std::string, int> want = src[j].gr.alex;
                        for (const auto& [cid, s] : *shift) want[cid] -= s;
                        std::map<std::string, int> got = tgt[i].gr.alex;
                        // the map shift in alexander is (sw - sz)/2 localized:
                        // only enforced for the differential (sw == sz), where
                        // it must vanish.
                        if (sw == sz && want != got)
                            fail("GradingViolation",
                                 "entry " + src[j].id + " -> " + tgt[i].id +
                                     " violates the per-component Alexander law");
                    }
                }
            }
        }
    }
}

inline void check_complex_grading(const ChainComplex& c) {
    check_entry_grading(c.gens, c.gens, c.raw, -2, -2, c.raw_degrees(), true);
    if (c.coloring)
        check_entry_grading(c.gens, c.gens, c.diff, -2, -2, c.effective_degrees(), true);
}

inline void check_map_grading(const ChainMap& f) {
    VarDegrees deg = f.tgt->effective_degrees();
    // maps between differently-colored complexes may also mention source vars
    VarDegrees sdeg = f.src->effective_degrees();
    deg.info.insert(sdeg.info.begin(), sdeg.info.end());
    check_entry_grading(f.src->gens, f.tgt->gens, f.cols, f.sw, f.sz, deg, false);
    check_filtered(f);
}

// --- construction and coloring -------------------------------------------

inline std::vector<Column> compose_columns(const std::vector<Column>& a,
                                           const std::vector<Column>& b) {
    // (a . b): apply b then a
    std::vector<Column> r(b.size());
    for (int j = 0; j < static_cast<int>(b.size()); ++j)
        for (const auto& [k, p] : b[j])
            for (const auto& [i, q] : a[k]) column_insert(r[j], i, q * p);
    return r;
}

inline CC make_complex(LinkConfig cfg, std::vector<Generator> gens, std::vector<Column> raw,
                       std::shared_ptr<const StabInfo> stab) {
    auto c = std::make_shared<ChainComplex>();
    c->cfg = std::move(cfg);
    c->gens = std::move(gens);
    c->raw = std::move(raw);
    c->raw.resize(c->gens.size());
    c->diff = c->raw;
    c->stab = std::move(stab);
    for (const Column& col : c->raw)
        for (const auto& [i, p] : col) {
            if (i < 0 || i >= c->size()) fail("ShapeMismatch", "differential row out of range");
            for (const Mon& m : p.terms())
                for (const auto& [v, k] : m.factors())
                    if (v.kind == VarKind::P)
                        fail("ShapeMismatch", "raw differential must be uncolored");
        }
    check_complex_grading(*c);
    return c;
}

// The cyclic sum over each component's adjacent (w, z) pairs; this is what
// d^2 of any uncolored complex of the configuration must equal.
inline Poly expected_defect(const LinkConfig& cfg) {
    std::vector<Mon> terms;
    for (const std::string& cid : cfg.component_ids()) {
        const auto& bps = cfg.component(cid);
        int n = static_cast<int>(bps.size());
        for (int i = 0; i < n; ++i) {
            const Basepoint& a = bps[i];
            const Basepoint& b = bps[(i + 1) % n];
            const std::string& w = a.kind == 'w' ? a.id : b.id;
            const std::string& z = a.kind == 'z' ? a.id : b.id;
            terms.push_back(Mon::var(VarId::u(w)) * Mon::var(VarId::v(z)));
        }
    }
    return Poly::from_terms(std::move(terms));
}

// Verifies d^2 = defect * identity on the effective differential and returns
// the defect; anything else signals a corrupted complex.
inline Poly d_squared_defect(const ChainComplex& c) {
    std::vector<Column> sq = compose_columns(c.diff, c.diff);
    ChainMap m;
    Poly diag;
    bool have = false;
    for (int j = 0; j < static_cast<int>(sq.size()); ++j) {
        Poly d;
        for (const auto& [i, p] : sq[j]) {
            if (i != j) fail("NotScalar", "d^2 has off-diagonal entry at " + c.gens[j].id);
            d = p;
        }
        if (!have) {
            diag = d;
            have = true;
        } else if (!(diag == d)) {
            fail("NotScalar", "d^2 diagonal depends on the generator");
        }
    }
    return diag;
}

inline CC apply_coloring(const CC& c, const Coloring& col) {
    c->cfg.validate_coloring(col);
    std::map<VarId, VarId> rename;
    for (const std::string& cid : c->cfg.component_ids())
        for (const Basepoint& b : c->cfg.component(cid))
            rename[c->cfg.var_of(b.id)] = VarId::color(col.color_of(b.id));
    auto out = std::make_shared<ChainComplex>(*c);
    out->coloring = col;
    out->diff.assign(c->raw.size(), {});
    for (int j = 0; j < static_cast<int>(c->raw.size()); ++j)
        for (const auto& [i, p] : c->raw[j]) column_insert(out->diff[j], i, substitute(p, rename));
    Poly defect = d_squared_defect(*out);
    if (!defect.is_zero())
        fail("DifferentialNotSquareZero", "colored differential does not square to zero");
    check_complex_grading(*out);
    return out;
}

inline CC uncolored(const CC& c) {
    if (!c->coloring) return c;
    auto out = std::make_shared<ChainComplex>(*c);
    out->coloring.reset();
    out->diff = out->raw;
    return out;
}

// --- tilde flavor ---------------------------------------------------------

// Drops every differential term with a nonconstant monomial, leaving a
// finite-dimensional F2 complex.
inline std::vector<Column> tilde_columns(const ChainComplex& c) {
    std::vector<Column> t(c.diff.size());
    for (int j = 0; j < static_cast<int>(c.diff.size()); ++j)
        for (const auto& [i, p] : c.diff[j])
            if (p.contains(Mon::one())) t[j].push_back({i, Poly::one()});
    return t;
}

struct HomologyKey {
    int grw = 0;                                      // doubled
    std::vector<std::pair<std::string, int>> alex;    // doubled, sorted by component
    friend auto operator<=>(const HomologyKey&, const HomologyKey&) = default;
};

// Ranks of the homology of the variables-to-zero specialization, keyed by
// (gr_w, alexander multigrading).
inline std::map<HomologyKey, int> f2_homology_ranks(const ChainComplex& c) {
    std::vector<Column> t = tilde_columns(c);
    // tilde differential must square to zero even when the complex itself is
    // uncolored (the defect has no constant term)
    std::vector<Column> sq = compose_columns(t, t);
    for (const Column& col : sq)
        if (!col.empty()) fail("DifferentialNotSquareZero", "tilde differential squared != 0");

    auto key_of = [&](int i) {
        HomologyKey k;
        k.grw = c.gens[i].gr.grw;
        k.alex.assign(c.gens[i].gr.alex.begin(), c.gens[i].gr.alex.end());
        return k;
    };
    auto level_of = [&](int i) {
        HomologyKey k = key_of(i);
        k.grw = 0;
        return std::make_pair(k, c.gens[i].gr.grw);
    };

    // group generators by alexander class, then by gr_w level
    std::map<HomologyKey, std::map<int, std::vector<int>>> groups;
    for (int i = 0; i < c.size(); ++i) {
        auto [k, m] = level_of(i);
        groups[k][m].push_back(i);
    }

    std::map<HomologyKey, int> ranks;
    for (const auto& [ak, levels] : groups) {
        // boundary rank from level m to m-2 (doubled units)
        std::map<int, int> brank;
        for (const auto& [m, srcs] : levels) {
            auto itlo = levels.find(m - 2);
            if (itlo == levels.end()) continue;
            std::map<int, int> rowpos;
            for (size_t r = 0; r < itlo->second.size(); ++r) rowpos[itlo->second[r]] = (int)r;
            gf2::Matrix a(srcs.size(), itlo->second.size());
            for (size_t cidx = 0; cidx < srcs.size(); ++cidx)
                for (const auto& [i, p] : t[srcs[cidx]]) {
                    auto it = rowpos.find(i);
                    if (it == rowpos.end())
                        fail("GradingViolation", "tilde entry crosses alexander classes");
                    a.set(cidx, it->second);
                }
            brank[m] = gf2::rank(a);
        }
        for (const auto& [m, gens_m] : levels) {
            int r = static_cast<int>(gens_m.size());
            auto bi = brank.find(m);
            if (bi != brank.end()) r -= bi->second;
            bi = brank.find(m + 2);
            if (bi != brank.end()) r -= bi->second;
            if (r) {
                HomologyKey k = ak;
                k.grw = m;
                ranks[k] = r;
            }
        }
    }
    return ranks;
}

// The relative-Spin^c / Alexander class of x * m: per component,
// alexander(x) - (U exponents on it) + (V exponents on it), doubled.
inline std::map<std::string, int> alexander_class(const ChainComplex& c, int gen,
                                                  const Mon& m) {
    VarDegrees deg = c.effective_degrees();
    std::map<std::string, int> cls = c.gens[gen].gr.alex;
    for (const auto& [v, k] : m.factors()) {
        const auto& i = deg.of(v);
        if (!i.component)
            fail("UnknownVariable", "variable " + v.str() + " has no component attribution");
        cls[*i.component] += i.da * k;
    }
    return cls;
}

}  // namespace floer
