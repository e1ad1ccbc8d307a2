#pragma once

// The endomorphisms Phi_w and Psi_z (formal derivatives of the uncolored
// differential, colored afterwards), arc and component sums, and the
// closed-form basepoint-moving maps built from them.

#include <string>

#include "floer/complex.hpp"

namespace floer {

namespace detail {

inline std::map<VarId, VarId> coloring_rename(const ChainComplex& c) {
    std::map<VarId, VarId> rename;
    if (!c.coloring) return rename;
    for (const std::string& cid : c.cfg.component_ids())
        for (const Basepoint& b : c.cfg.component(cid))
            rename[c.cfg.var_of(b.id)] = VarId::color(c.coloring->color_of(b.id));
    return rename;
}

// d/dv of the raw differential, then colored. The derivative must be taken
// before the coloring identifies variables.
inline ChainMap derivative_of_differential(const CC& c, const VarId& v, int sw, int sz) {
    ChainMap f = zero_map(c, c, sw, sz);
    std::map<VarId, VarId> rename = coloring_rename(*c);
    for (int j = 0; j < c->size(); ++j)
        for (const auto& [i, p] : c->raw[j]) {
            Poly d = derivative(p, v);
            if (d.is_zero()) continue;
            if (!rename.empty()) d = substitute(d, rename);
            column_insert(f.cols[j], i, d);
        }
    return f;
}

}  // namespace detail

inline ChainMap phi(const CC& c, const std::string& w) {
    if (c->cfg.basepoint(w).kind != 'w') fail("NotABasepoint", w + " is not a w-basepoint");
    return detail::derivative_of_differential(c, VarId::u(w), +2, -2);
}

inline ChainMap psi(const CC& c, const std::string& z) {
    if (c->cfg.basepoint(z).kind != 'z') fail("NotABasepoint", z + " is not a z-basepoint");
    return detail::derivative_of_differential(c, VarId::v(z), -2, +2);
}

// Psi_A = sum of Psi_z over the z-basepoints inside the arc. As a chain map
// this needs the endpoint w's to share a color.
inline ChainMap psi_arc(const CC& c, const Arc& a) {
    if (!a.is_whole()) {
        if (!c->coloring)
            fail("ColorMismatch", "arc maps need a colored complex");
        if (c->coloring->color_of(*a.from_w) != c->coloring->color_of(*a.to_w))
            fail("ColorMismatch", "arc endpoints " + *a.from_w + ", " + *a.to_w +
                                      " carry different colors");
    }
    ChainMap f = zero_map(c, c, -2, +2);
    for (const std::string& z : c->cfg.arc_z_basepoints(a)) f = map_add(f, psi(c, z));
    return f;
}

inline ChainMap phi_component(const CC& c, const std::string& k) {
    ChainMap f = zero_map(c, c, +2, -2);
    for (const std::string& w : c->cfg.basepoints_of_kind(k, 'w')) f = map_add(f, phi(c, w));
    return f;
}

inline ChainMap psi_component(const CC& c, const std::string& k) {
    ChainMap f = zero_map(c, c, -2, +2);
    for (const std::string& z : c->cfg.basepoints_of_kind(k, 'z')) f = map_add(f, psi(c, z));
    return f;
}

// The full-twist (Sarkar) map around K: 1 + Phi_K Psi_K.
inline ChainMap sarkar_map(const CC& c, const std::string& k) {
    return map_add(identity_map(c), compose(phi_component(c, k), psi_component(c, k)));
}

// The 1/n-twist map around K:
//   (Psi_{z1} Phi_{w1} Psi_{z2} ... Psi_{zn} Phi_{wn}) + (Phi_{w1} Psi_{z2} ... Psi_{zn}),
// with pairs indexed along the cyclic order starting at start_z.
inline ChainMap tau_map(const CC& c, const std::string& k, const std::string& start_z = "") {
    int n = c->cfg.pair_count(k);
    if (n <= 1) fail("TooFewPairs", "the partial twist needs more than one pair on " + k);
    if (!c->coloring) fail("ColorPrecondition", "the partial twist needs a colored complex");
    std::string wcolor;
    for (const std::string& w : c->cfg.basepoints_of_kind(k, 'w')) {
        const std::string& col = c->coloring->color_of(w);
        if (wcolor.empty())
            wcolor = col;
        else if (wcolor != col)
            fail("ColorPrecondition", "all w-basepoints on " + k + " must share a color");
    }

    // pairs (z_i, w_i) in cyclic order starting from start_z
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string z0 = start_z;
    if (z0.empty()) {
        for (const Basepoint& b : c->cfg.component(k))
            if (b.kind == 'z') {
                z0 = b.id;
                break;
            }
    }
    std::string z = z0;
    for (int i = 0; i < n; ++i) {
        std::string w = c->cfg.next(z).id;
        pairs.push_back({z, w});
        z = c->cfg.next(w).id;
    }

    ChainMap big = psi(c, pairs[0].first);
    for (int i = 0; i < n; ++i) {
        big = compose(big, phi(c, pairs[i].second));
        if (i + 1 < n) big = compose(big, psi(c, pairs[i + 1].first));
    }
    ChainMap small = phi(c, pairs[0].second);
    for (int i = 1; i < n; ++i) {
        small = compose(small, psi(c, pairs[i].first));
        if (i + 1 <= n - 1) small = compose(small, phi(c, pairs[i].second));
    }
    return map_add(big, small);
}

// Corollary-style involution for a one-pair knot complex: decompose the raw
// differential by (U-exponent, V-exponent) and form
//   1 + (odd-U part with one U stripped) . (odd-V part with one V stripped).
// Over F2 the stripped parts coincide with Phi_w and Psi_z.
inline ChainMap cfk_involution(const CC& c) {
    if (c->cfg.component_ids().size() != 1)
        fail("NotOnePairKnot", "involution needs a knot complex");
    const std::string& k = c->cfg.component_ids()[0];
    if (c->cfg.pair_count(k) != 1)
        fail("NotOnePairKnot", "involution needs exactly one basepoint pair");
    std::string w = c->cfg.basepoints_of_kind(k, 'w')[0];
    std::string z = c->cfg.basepoints_of_kind(k, 'z')[0];
    VarId uw = VarId::u(w), vz = VarId::v(z);

    std::map<VarId, VarId> rename = detail::coloring_rename(*c);
    auto strip = [&](const VarId& v, bool odd_u) {
        ChainMap f = zero_map(c, c, odd_u ? +2 : -2, odd_u ? -2 : +2);
        for (int j = 0; j < c->size(); ++j)
            for (const auto& [i, p] : c->raw[j]) {
                std::vector<Mon> kept;
                for (const Mon& m : p.terms()) {
                    int e = m.exponent(v);
                    if (e % 2 == 0) continue;
                    Mon::Factors fac;
                    for (const auto& [vv, kk] : m.factors()) {
                        if (vv == v) {
                            if (kk > 1) fac.emplace_back(vv, kk - 1);
                        } else {
                            fac.emplace_back(vv, kk);
                        }
                    }
                    kept.push_back(Mon(std::move(fac)));
                }
                Poly q = Poly::from_terms(std::move(kept));
                if (q.is_zero()) continue;
                if (!rename.empty()) q = substitute(q, rename);
                column_insert(f.cols[j], i, q);
            }
        return f;
    };

    return map_add(identity_map(c), compose(strip(uw, true), strip(vz, false)));
}

}  // namespace floer
