#pragma once

// End-to-end verification: the S/Phi/Psi relation suite on stabilization
// towers, elementary basepoint moves, and the certificate checks for the
// full-twist and partial-twist formulas.

#include <chrono>
#include <string>
#include <vector>

#include "floer/homotopy.hpp"
#include "floer/maps.hpp"
#include "floer/stabilize.hpp"

namespace floer {

struct CheckResult {
    std::string name;
    std::string status;  // exact | homotopic | unsat-certified | FAILED | error
    bool pass = false;
    int unknowns = 0, equations = 0, rank = 0, degree = 0;
    double seconds = 0;
    std::shared_ptr<ChainMap> certificate;  // homotopy, when one was found
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

inline CheckResult check_exact(const std::string& name, const ChainMap& a, const ChainMap& b) {
    CheckResult r;
    r.name = name;
    r.pass = map_equal(a, b);
    r.status = r.pass ? "exact" : "FAILED";
    return r;
}

inline CheckResult check_zero(const std::string& name, const ChainMap& a) {
    CheckResult r;
    r.name = name;
    r.pass = a.is_zero();
    r.status = r.pass ? "exact" : "FAILED";
    return r;
}

inline CheckResult check_chain_map(const std::string& name, const ChainMap& f) {
    CheckResult r;
    r.name = name;
    auto [ok, defect] = chain_map_defect(f);
    check_filtered(f);
    r.pass = ok;
    r.status = ok ? "exact" : "FAILED";
    return r;
}

// expect_homotopic = false asserts a certified UNSAT instead.
inline CheckResult check_homotopic(const std::string& name, const ChainMap& f, const ChainMap& g,
                                   bool expect_homotopic = true, int degree = -1) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    HomotopyResult hr = solve_homotopy(f, g, degree);
    r.seconds = detail::seconds_since(t0);
    r.unknowns = hr.unknowns;
    r.equations = hr.equations;
    r.rank = hr.rank;
    r.degree = hr.degree_used;
    if (expect_homotopic) {
        r.pass = hr.solved;
        r.status = hr.solved ? "homotopic" : "FAILED";
        if (hr.solved) r.certificate = std::make_shared<ChainMap>(hr.h);
    } else {
        r.pass = hr.certified_unsat();
        r.status = r.pass ? "unsat-certified" : "FAILED";
    }
    return r;
}

// --- structural re-indexing between towers --------------------------------

// Generator bijection between two towers over the same ultimate base with
// the same inserted pairs (matched by w-basepoint id).
inline std::vector<int> tower_bijection(const CC& from, const CC& to) {
    auto [frecs, fbase] = detail::tower_of(from);
    auto [trecs, tbase] = detail::tower_of(to);
    if (!same_generators(fbase, tbase) || frecs.size() != trecs.size())
        fail("ShapeMismatch", "towers are not comparable");
    std::vector<std::string> forder, torder;  // innermost first
    for (auto it = frecs.rbegin(); it != frecs.rend(); ++it) forder.push_back((*it)->w_id);
    for (auto it = trecs.rbegin(); it != trecs.rend(); ++it) torder.push_back((*it)->w_id);
    const int levels = static_cast<int>(forder.size());
    std::vector<int> fpos_of_tlevel(levels);
    bool by_name = true;
    for (int l = 0; l < levels && by_name; ++l) {
        int at = -1;
        for (int k = 0; k < levels; ++k)
            if (forder[k] == torder[l]) at = k;
        if (at < 0)
            by_name = false;  // different pair names: identify levels positionally
        else
            fpos_of_tlevel[l] = at;
    }
    if (!by_name)
        for (int l = 0; l < levels; ++l) fpos_of_tlevel[l] = l;
    const int m0 = fbase->size();
    std::vector<int> out(from->size());
    for (int g = 0; g < from->size(); ++g) {
        int gg = g;
        std::vector<int> signs(levels);
        int size = m0 << levels;
        for (int l = levels - 1; l >= 0; --l) {
            size >>= 1;
            signs[l] = gg >= size;
            gg -= signs[l] * size;
        }
        int idx = gg;
        size = m0;
        for (int l = 0; l < levels; ++l) {
            idx += signs[fpos_of_tlevel[l]] * size;
            size <<= 1;
        }
        out[g] = idx;
    }
    return out;
}

// Rewrites F along structural bijections onto the given source and target.
inline ChainMap transport(const ChainMap& f, const CC& src2, const CC& tgt2) {
    std::vector<int> ps = same_generators(f.src, src2) ? std::vector<int>()
                                                       : tower_bijection(f.src, src2);
    std::vector<int> pt = same_generators(f.tgt, tgt2) ? std::vector<int>()
                                                       : tower_bijection(f.tgt, tgt2);
    ChainMap out = zero_map(src2, tgt2, f.sw, f.sz);
    out.filtered = f.filtered;
    for (int j = 0; j < static_cast<int>(f.cols.size()); ++j) {
        int j2 = ps.empty() ? j : ps[j];
        for (const auto& [i, p] : f.cols[j]) column_insert(out.cols[j2], pt.empty() ? i : pt[i], p);
    }
    return out;
}

// --- elementary basepoint move --------------------------------------------

struct MoveResult {
    ChainMap map;  // C -> dest
    CC dest;
};

// Moves the registered pair with w-basepoint `pair_w` to the slot after
// `after_w`: stabilize there, apply Psi at the new z, destabilize the old
// pair.
inline MoveResult elementary_move(const CC& c, const std::string& pair_w,
                                  const std::string& after_w, std::string z_new = "",
                                  std::string w_new = "") {
    const std::string& comp = c->cfg.component_of(pair_w);
    if (c->cfg.component_of(after_w) != comp)
        fail("NotFound", "move target lies on a different component");
    std::string w_color;
    if (c->coloring) w_color = c->coloring->color_of(pair_w);
    Stabilization st = quasi_stabilize(c, comp, after_w, z_new, w_new, w_color);
    const std::string z_added = st.complex->stab->z_id;
    ChainMap mid = psi(st.complex, z_added);
    auto [dest, sm] = destabilize(st.complex, pair_w);
    return {compose(sm, compose(mid, st.s_plus)), dest};
}

// --- relation suite --------------------------------------------------------

namespace detail {

// the complexes of a tower, ultimate base first
inline std::vector<CC> tower_complexes(const CC& top) {
    std::vector<CC> chain;
    CC cur = top;
    chain.push_back(cur);
    while (cur->stab) {
        cur = cur->stab->base;
        chain.push_back(cur);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace detail

inline ChainMap s_plus_of(const CC& top) {
    if (!top->stab) fail("UnregisteredPair", "complex is not a quasi-stabilization");
    return detail::make_s_plus(top->stab->base, top);
}

inline ChainMap s_minus_of(const CC& top) {
    if (!top->stab) fail("UnregisteredPair", "complex is not a quasi-stabilization");
    return detail::make_s_minus(top, top->stab->base);
}

// Exact relation checks at one stabilization level: S+S- = Phi_w, S-S+ = 0,
// the trivial-strand identities, and commutation with Psi/Phi at the other
// basepoints.
inline void level_relations(Report& rep, const CC& cur, const std::string& tag) {
    const auto& st = *cur->stab;
    CC base = st.base;
    ChainMap sp = s_plus_of(cur), sm = s_minus_of(cur);

    rep.add(check_exact(tag + " S+S- = Phi_" + st.w_id, compose(sp, sm), phi(cur, st.w_id)));
    rep.add(check_zero(tag + " S-S+ = 0", compose(sm, sp)));

    for (const std::string& zp : {st.z_id, st.z_next})
        rep.add(check_exact(tag + " S-Psi_" + zp + "S+ = 1",
                            compose(sm, compose(psi(cur, zp), sp)), identity_map(base)));

    for (const Basepoint& b : cur->cfg.component(st.component)) {
        if (b.kind == 'z' && b.id != st.z_id) {
            if (b.id == st.z_next && cur->cfg.pair_count(st.component) > 1) {
                ChainMap both = map_add(psi(cur, b.id), psi(cur, st.z_id));
                rep.add(check_exact(tag + " S+Psi_" + b.id + " = (Psi_" + b.id + "+Psi_" +
                                        st.z_id + ")S+",
                                    compose(sp, psi(base, b.id)), compose(both, sp)));
                rep.add(check_exact(tag + " Psi_" + b.id + "S- = S-(Psi_" + b.id + "+Psi_" +
                                        st.z_id + ")",
                                    compose(psi(cur, b.id), sm), compose(sm, both)));
            } else if (b.id != st.z_next) {
                rep.add(check_exact(tag + " S+Psi_" + b.id + " = Psi_" + b.id + "S+",
                                    compose(sp, psi(base, b.id)), compose(psi(cur, b.id), sp)));
                rep.add(check_exact(tag + " Psi_" + b.id + "S- = S-Psi_" + b.id,
                                    compose(psi(cur, b.id), sm), compose(sm, psi(base, b.id))));
            }
        }
        if (b.kind == 'w' && b.id != st.w_id) {
            rep.add(check_exact(tag + " S+Phi_" + b.id + " = Phi_" + b.id + "S+",
                                compose(sp, phi(base, b.id)), compose(phi(cur, b.id), sp)));
            rep.add(check_exact(tag + " Phi_" + b.id + "S- = S-Phi_" + b.id,
                                compose(phi(cur, b.id), sm), compose(sm, phi(base, b.id))));
        }
    }
}

// Exact commutation of the two outermost stabilizations (valid for disjoint
// pairs, e.g. on different components).
inline void commutation_relations(Report& rep, const CC& top) {
    auto [recs, base0] = detail::tower_of(top);
    if (recs.size() < 2) return;
    const StabInfo& p = *recs[0];  // outermost
    const StabInfo& q = *recs[1];
    if (p.component == q.component) return;  // exact commutation needs disjoint pairs
    CC cq = recs[0]->base;  // has q, not p
    CC c0 = recs[1]->base;

    auto color_of = [&](const std::string& w) {
        return top->coloring ? top->coloring->color_of(w) : std::string();
    };
    Stabilization xp = quasi_stabilize(c0, p.component, p.after_w, p.z_id, p.w_id, color_of(p.w_id));
    Stabilization xpq =
        quasi_stabilize(xp.complex, q.component, q.after_w, q.z_id, q.w_id, color_of(q.w_id));
    Stabilization xq = quasi_stabilize(c0, q.component, q.after_w, q.z_id, q.w_id, color_of(q.w_id));
    // the given tower is stab(stab(c0, q), p); xq.complex must match cq
    ChainMap sp_top = s_plus_of(top), sm_top = s_minus_of(top);

    rep.add(check_exact("S+_" + p.w_id + "S+_" + q.w_id + " commute",
                        compose(sp_top, xq.s_plus),
                        transport(compose(xpq.s_plus, xp.s_plus), c0, top)));
    rep.add(check_exact("S-_" + q.w_id + "S-_" + p.w_id + " commute",
                        compose(xq.s_minus, sm_top),
                        transport(compose(xp.s_minus, xpq.s_minus), top, c0)));
    {
        // S+_p S-_q vs S-_q S+_p : cq -> xp
        ChainMap route1 = compose(xp.s_plus, xq.s_minus);
        auto [dest, smq] = destabilize(top, q.w_id);
        ChainMap route2 = compose(smq, transport(sp_top, xq.complex, top));
        rep.add(check_exact("S+_" + p.w_id + "S-_" + q.w_id + " commute", route1,
                            transport(route2, xq.complex, xp.complex)));
    }
    {
        // S-_p S+_q vs S+_q S-_p : xp -> cq
        auto [destb, smp] = destabilize(xpq.complex, p.w_id);
        ChainMap route1 = compose(smp, xpq.s_plus);
        ChainMap route2 = compose(xq.s_plus, xp.s_minus);
        rep.add(check_exact("S-_" + p.w_id + "S+_" + q.w_id + " commute",
                            transport(route1, xp.complex, xq.complex), route2));
    }
}

// The derivative-map relation suite on a single complex: chain-map defects
// (exact) and the homotopy-level commutators decided by the solver.
inline void derivative_relations(Report& rep, const CC& c, bool solver_checks = true,
                                 int degree = -1) {
    const bool colored = c->coloring.has_value();
    for (const std::string& cid : c->cfg.component_ids()) {
        for (const std::string& w : c->cfg.basepoints_of_kind(cid, 'w')) {
            auto [zp, zn] = c->cfg.adjacent_z_of_w(w);
            ChainMap defect = chain_map_defect(phi(c, w)).second;
            Poly expect;
            if (!colored) expect = Poly::var(VarId::v(zp)) + Poly::var(VarId::v(zn));
            // colored: z's of one component share a color, so the defect dies
            rep.add(check_exact("dPhi_" + w + " + Phi_" + w + "d = " +
                                    (expect.is_zero() ? std::string("0") : expect.str()),
                                defect, scalar_map(c, expect, 0, -4)));
        }
        for (const std::string& z : c->cfg.basepoints_of_kind(cid, 'z')) {
            auto [wp, wn] = c->cfg.adjacent_w_of_z(z);
            ChainMap defect = chain_map_defect(psi(c, z)).second;
            Poly expect;
            if (!colored) {
                expect = Poly::var(VarId::u(wp)) + Poly::var(VarId::u(wn));
            } else {
                std::map<VarId, VarId> ren;
                ren[VarId::u(wp)] = VarId::color(c->coloring->color_of(wp));
                ren[VarId::u(wn)] = VarId::color(c->coloring->color_of(wn));
                expect = substitute(Poly::var(VarId::u(wp)) + Poly::var(VarId::u(wn)), ren);
            }
            rep.add(check_exact("dPsi_" + z + " + Psi_" + z + "d = " +
                                    (expect.is_zero() ? std::string("0") : expect.str()),
                                defect, scalar_map(c, expect, -4, 0)));
        }
    }

    if (!solver_checks || !colored) return;

    for (const std::string& cid : c->cfg.component_ids()) {
        auto ws = c->cfg.basepoints_of_kind(cid, 'w');
        auto zs = c->cfg.basepoints_of_kind(cid, 'z');
        for (const std::string& w : ws)
            rep.add(check_homotopic("Phi_" + w + "^2 ~ 0", compose(phi(c, w), phi(c, w)),
                                    zero_map(c, c, 4, -4), true, degree));
        for (const std::string& z : zs)
            rep.add(check_homotopic("Psi_" + z + "^2 ~ 0", compose(psi(c, z), psi(c, z)),
                                    zero_map(c, c, -4, 4), true, degree));
        for (const std::string& w : ws)
            for (const std::string& z : zs) {
                ChainMap comm =
                    map_add(compose(phi(c, w), psi(c, z)), compose(psi(c, z), phi(c, w)));
                bool adjacent = c->cfg.adjacent(w, z);
                bool only_pair = c->cfg.pair_count(cid) == 1;
                bool expect_id = adjacent && !only_pair;
                rep.add(check_homotopic(
                    "Phi_" + w + "Psi_" + z + " + Psi_" + z + "Phi_" + w + " ~ " +
                        (expect_id ? "1" : "0"),
                    comm, expect_id ? identity_map(c) : zero_map(c, c, 0, 0), true, degree));
            }
        // anticommutators across distinct basepoints
        for (size_t i = 0; i + 1 < zs.size(); ++i)
            rep.add(check_homotopic(
                "Psi_" + zs[i] + "Psi_" + zs[i + 1] + " + Psi_" + zs[i + 1] + "Psi_" + zs[i] +
                    " ~ 0",
                map_add(compose(psi(c, zs[i]), psi(c, zs[i + 1])),
                        compose(psi(c, zs[i + 1]), psi(c, zs[i]))),
                zero_map(c, c, -4, 4), true, degree));
        for (size_t i = 0; i + 1 < ws.size(); ++i)
            rep.add(check_homotopic(
                "Phi_" + ws[i] + "Phi_" + ws[i + 1] + " + Phi_" + ws[i + 1] + "Phi_" + ws[i] +
                    " ~ 0",
                map_add(compose(phi(c, ws[i]), phi(c, ws[i + 1])),
                        compose(phi(c, ws[i + 1]), phi(c, ws[i]))),
                zero_map(c, c, 4, -4), true, degree));
    }
}

// Arc-calculus checks; the complex must be colored with same-colored w's on
// the component for proper arcs to be chain maps.
inline void arc_relations(Report& rep, const CC& c, const std::string& k, bool solver_checks,
                          int degree = -1) {
    auto ws = c->cfg.basepoints_of_kind(k, 'w');
    ChainMap psi_k = psi_component(c, k);
    if (ws.size() >= 2) {
        Arc a = Arc::between(k, ws[0], ws[1]);
        Arc ca = c->cfg.complement(a);
        ChainMap pa = psi_arc(c, a), pca = psi_arc(c, ca);
        rep.add(check_exact("Psi_" + k + " = Psi_A + Psi_c(A)", psi_k, map_add(pa, pca)));
        rep.add(check_exact("Psi_KPsi_A = Psi_c(A)Psi_A", compose(psi_k, pa), compose(pca, pa)));
        if (solver_checks) {
            rep.add(check_homotopic("Psi_A^2 ~ 0", compose(pa, pa), zero_map(c, c, -4, 4), true,
                                    degree));
            rep.add(check_homotopic("Psi_APsi_c(A) + Psi_c(A)Psi_A ~ 0",
                                    map_add(compose(pa, pca), compose(pca, pa)),
                                    zero_map(c, c, -4, 4), true, degree));
            for (const std::string& w : ws) {
                bool endpoint = c->cfg.is_endpoint(a, w);
                ChainMap comm = map_add(compose(psi_arc(c, a), phi(c, w)),
                                        compose(phi(c, w), psi_arc(c, a)));
                rep.add(check_homotopic(
                    "Psi_APhi_" + w + " + Phi_" + w + "Psi_A ~ " + (endpoint ? "1" : "0"),
                    comm, endpoint ? identity_map(c) : zero_map(c, c, 0, 0), true, degree));
            }
        }
    }
    if (solver_checks)
        rep.add(check_homotopic("Psi_" + k + "^2 ~ 0", compose(psi_k, psi_k),
                                zero_map(c, c, -4, 4), true, degree));
}

// Full relation suite over a stabilization tower (or a plain complex).
inline Report relation_suite(const CC& top, bool solver_checks = true, int degree = -1) {
    Report rep;
    rep.title = "relation suite";
    std::vector<CC> chain = detail::tower_complexes(top);
    for (size_t i = 1; i < chain.size(); ++i)
        level_relations(rep, chain[i], "[" + chain[i]->stab->w_id + "]");
    commutation_relations(rep, top);
    derivative_relations(rep, top, solver_checks, degree);
    if (top->coloring)
        for (const std::string& cid : top->cfg.component_ids()) {
            // proper arcs need same-colored endpoint w's
            auto ws = top->cfg.basepoints_of_kind(cid, 'w');
            bool same = true;
            for (const std::string& w : ws)
                if (top->coloring->color_of(w) != top->coloring->color_of(ws[0])) same = false;
            if (same && ws.size() >= 2)
                arc_relations(rep, top, cid, solver_checks, degree);
        }
    return rep;
}

// --- theorem certificates ---------------------------------------------------

namespace detail {

// Labels the pairs of K as in the full-twist computation: w_1 is any w; the
// pairs (z_j, w_j) are indexed in reverse orientation order, so walking
// forward from w_1 one reads z_n, w_n, ..., z_1, w_1; the primed pairs are
// inserted in the interval between w_1 and z_n.
struct TwistLabels {
    std::vector<std::string> w, z;  // 1-based labels stored at [0..n-1]: w[j-1] = w_j
};

inline TwistLabels reverse_labels(const LinkConfig& cfg, const std::string& k) {
    TwistLabels out;
    int n = cfg.pair_count(k);
    std::string w1;
    for (const Basepoint& b : cfg.component(k))
        if (b.kind == 'w') {
            w1 = b.id;
            break;
        }
    out.w.resize(n);
    out.z.resize(n);
    out.w[0] = w1;
    std::string cur = w1;
    for (int j = n; j >= 1; --j) {
        std::string zj = cfg.next(cur).id;   // z_j sits right after w_{j+1 mod}
        std::string wj = cfg.next(zj).id;
        out.z[j - 1] = zj;
        if (j > 1) out.w[j - 1] = wj;
        cur = wj;
    }
    return out;
}

}  // namespace detail

// Theorem-B-style certificate: builds the proof's composite
//   E = S-_{primed} (prod Psi_{c(A_j)}) (prod Phi_{w_j}) (prod Psi_{A_j}) S+_{primed}
// with n primed pairs inserted between z_n and w_1 (each w_j' colored like
// w_j), and certifies E ~ 1 + Phi_K Psi_K together with the trivial-strand
// product and the involution identity.
inline Report thm_b_verify(const CC& c, const std::string& k, int degree = -1) {
    Report rep;
    rep.title = "full-twist formula on " + k;
    if (!c->coloring) fail("ColorPrecondition", "certificate needs a colored complex");
    const int n = c->cfg.pair_count(k);
    detail::TwistLabels lab = detail::reverse_labels(c->cfg, k);

    // stabilize: pair j' inserted after w_1 (j = 1) resp. w_{j-1}'
    std::vector<Stabilization> st;
    std::vector<CC> levels{c};
    std::string anchor = lab.w[0];
    for (int j = 1; j <= n; ++j) {
        std::string zp = "z'" + std::to_string(j), wp = "w'" + std::to_string(j);
        st.push_back(quasi_stabilize(levels.back(), k, anchor, zp, wp,
                                     c->coloring->color_of(lab.w[j - 1])));
        levels.push_back(st.back().complex);
        anchor = wp;
    }
    CC top = levels.back();

    ChainMap s_plus = st[0].s_plus;
    for (int j = 1; j < n; ++j) s_plus = compose(st[j].s_plus, s_plus);
    ChainMap s_minus = st[0].s_minus;
    for (int j = 1; j < n; ++j) s_minus = compose(s_minus, st[j].s_minus);
    rep.add(check_chain_map("S+_{primed} is a chain map", s_plus));
    rep.add(check_chain_map("S-_{primed} is a chain map", s_minus));

    auto arc = [&](int j) { return Arc::between(k, lab.w[j - 1], "w'" + std::to_string(j)); };
    ChainMap prod_psi_a = psi_arc(top, arc(1));
    ChainMap prod_phi = phi(top, lab.w[0]);
    ChainMap prod_psi_ca = psi_arc(top, top->cfg.complement(arc(1)));
    for (int j = 2; j <= n; ++j) {
        prod_psi_a = compose(prod_psi_a, psi_arc(top, arc(j)));
        prod_phi = compose(prod_phi, phi(top, lab.w[j - 1]));
        prod_psi_ca = compose(prod_psi_ca, psi_arc(top, top->cfg.complement(arc(j))));
    }
    for (int j = 1; j <= n; ++j)
        rep.add(check_chain_map("Psi_{A_" + std::to_string(j) + "} is a chain map",
                                psi_arc(top, arc(j))));

    ChainMap e = compose(s_minus,
                         compose(prod_psi_ca, compose(prod_phi, compose(prod_psi_a, s_plus))));
    rep.add(check_chain_map("E is a chain map", e));

    ChainMap rhs = sarkar_map(c, k);
    rep.add(check_chain_map("1 + Phi_KPsi_K is a chain map", rhs));
    rep.add(check_homotopic("E ~ 1 + Phi_KPsi_K", e, rhs, true, degree));

    // trivial-strand product: each factor on a single stabilization of c
    ChainMap strand = identity_map(c);
    for (int j = 1; j <= n; ++j) {
        Stabilization sj = quasi_stabilize(c, k, lab.w[0], "z'" + std::to_string(j),
                                           "w'" + std::to_string(j),
                                           c->coloring->color_of(lab.w[j - 1]));
        ChainMap factor = compose(
            sj.s_minus, compose(psi_arc(sj.complex, Arc::between(k, lab.w[j - 1],
                                                                 "w'" + std::to_string(j))),
                                sj.s_plus));
        strand = j == 1 ? factor : compose(strand, factor);
    }
    rep.add(check_homotopic("prod_j S-Psi_{A_j}S+ ~ 1", strand, identity_map(c), true, degree));

    rep.add(check_homotopic("(1 + Phi_KPsi_K)^2 ~ 1", compose(rhs, rhs), identity_map(c), true,
                            degree));
    return rep;
}

// Theorem-D-style certificate: with one auxiliary pair (z', w') between w_n
// and z_1, builds
//   E_tau = S-_{w'} Psi_{A''} Phi_{w_1} Psi_{A_1} ... Phi_{w_n} Psi_{A'} S+_{w'}
// and certifies E_tau ~ tau and tau^n ~ 1 + Phi_K Psi_K.
inline Report thm_d_verify(const CC& c, const std::string& k, int degree = -1) {
    Report rep;
    rep.title = "partial-twist formula on " + k;
    const int n = c->cfg.pair_count(k);
    ChainMap tau = tau_map(c, k);  // validates the coloring precondition

    // pairs (z_i, w_i) in forward order, z_1 the first z of the component
    std::vector<std::string> w(n), z(n);
    {
        std::string zc;
        for (const Basepoint& b : c->cfg.component(k))
            if (b.kind == 'z') {
                zc = b.id;
                break;
            }
        for (int i = 0; i < n; ++i) {
            z[i] = zc;
            w[i] = c->cfg.next(zc).id;
            zc = c->cfg.next(w[i]).id;
        }
    }

    std::string wcolor = c->coloring->color_of(w[0]);
    Stabilization st = quasi_stabilize(c, k, w[n - 1], "z'", "w'", wcolor);
    CC top = st.complex;

    Arc a_second = Arc::between(k, "w'", w[0]);   // A'': w' -> w_1
    Arc a_prime = Arc::between(k, w[n - 1], "w'");  // A': w_n -> w'
    ChainMap e = psi_arc(top, a_second);
    for (int i = 1; i <= n; ++i) {
        e = compose(e, phi(top, w[i - 1]));
        if (i < n) e = compose(e, psi_arc(top, Arc::between(k, w[i - 1], w[i])));
    }
    e = compose(st.s_minus, compose(e, compose(psi_arc(top, a_prime), st.s_plus)));
    rep.add(check_chain_map("E_tau is a chain map", e));
    rep.add(check_chain_map("tau is a chain map", tau));
    rep.add(check_homotopic("E_tau ~ tau", e, tau, true, degree));

    ChainMap tau_n = tau;
    for (int i = 1; i < n; ++i) tau_n = compose(tau_n, tau);
    rep.add(check_homotopic("tau^n ~ 1 + Phi_KPsi_K", tau_n, sarkar_map(c, k), true, degree));
    return rep;
}

}  // namespace floer
