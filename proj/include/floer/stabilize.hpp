#pragma once

// Quasi-stabilization: the abstract block construction doubling a complex
// along a new basepoint pair, the maps S^+/S^-, and destabilization of any
// registered pair in a stabilization tower.
//
// For a pair (z, w) inserted after w' with following z-basepoint z', the
// uncolored differential of the stabilized complex is
//     d(x * theta^+) = (dx) * theta^+ + (V_z + V_{z'}) x * theta^-
//     d(x * theta^-) = (dx) * theta^- + (U_w + U_{w'}) x * theta^+ ,
// with gr(x * theta^+) = gr(x) and gr(x * theta^-) = gr(x) + (-1, +1).

#include <string>
#include <vector>

#include "floer/complex.hpp"

namespace floer {

struct Stabilization {
    CC complex;
    ChainMap s_plus;   // base -> stabilized, x -> x * theta^+
    ChainMap s_minus;  // stabilized -> base, x * theta^- -> x
};

namespace detail {

inline std::string fresh_id(const LinkConfig& cfg, const std::string& stem) {
    for (int i = 0;; ++i) {
        std::string cand = stem + std::to_string(i);
        if (!cfg.has_basepoint(cand)) return cand;
    }
}

inline ChainMap make_s_plus(const CC& base, const CC& top) {
    ChainMap f = zero_map(base, top, 0, 0);
    for (int i = 0; i < base->size(); ++i) f.cols[i] = {{top->stab->plus_of[i], Poly::one()}};
    return f;
}

inline ChainMap make_s_minus(const CC& top, const CC& base) {
    ChainMap f = zero_map(top, base, +2, -2);
    for (int i = 0; i < base->size(); ++i) f.cols[top->stab->minus_of[i]] = {{i, Poly::one()}};
    return f;
}

}  // namespace detail

// Insert a new pair (z, w) immediately after `after_w` and build the doubled
// complex. Ids default to fresh ones; when the base is colored the new z
// takes the component's z-color and the new w takes `w_color` (its own id by
// default, as in the trivial coloring).
inline Stabilization quasi_stabilize(const CC& base, const std::string& component,
                                     const std::string& after_w, std::string z_id = "",
                                     std::string w_id = "", std::string w_color = "") {
    if (z_id.empty()) z_id = detail::fresh_id(base->cfg, "zq");
    if (w_id.empty()) w_id = detail::fresh_id(base->cfg, "wq");
    LinkConfig cfg = base->cfg.insert_pair(component, after_w, z_id, w_id);
    const std::string w_prev = after_w;
    const std::string z_next = cfg.next(w_id).id;

    const int m = base->size();
    auto info = std::make_shared<StabInfo>();
    info->base = base;
    info->component = component;
    info->after_w = after_w;
    info->z_id = z_id;
    info->w_id = w_id;
    info->w_prev = w_prev;
    info->z_next = z_next;
    info->plus_of.resize(m);
    info->minus_of.resize(m);
    for (int i = 0; i < m; ++i) {
        info->plus_of[i] = i;
        info->minus_of[i] = m + i;
    }

    std::vector<Generator> gens(2 * m);
    for (int i = 0; i < m; ++i) {
        Grading g = base->gens[i].gr;
        gens[i] = {base->gens[i].id + "|" + w_id + "+", g};
        g.grw -= 2;
        g.grz += 2;
        g.alex[component] -= 2;
        gens[m + i] = {base->gens[i].id + "|" + w_id + "-", g};
    }

    Poly vterm = Poly::var(VarId::v(z_id)) + Poly::var(VarId::v(z_next));
    Poly uterm = Poly::var(VarId::u(w_id)) + Poly::var(VarId::u(w_prev));
    std::vector<Column> raw(2 * m);
    for (int i = 0; i < m; ++i) {
        for (const auto& [j, p] : base->raw[i]) {
            column_insert(raw[i], j, p);
            column_insert(raw[m + i], m + j, p);
        }
        column_insert(raw[i], m + i, vterm);
        column_insert(raw[m + i], i, uterm);
    }

    CC top = make_complex(std::move(cfg), std::move(gens), std::move(raw), info);
    if (base->coloring) {
        Coloring col = *base->coloring;
        std::string zc;
        for (const Basepoint& b : base->cfg.component(component))
            if (b.kind == 'z') {
                zc = col.color_of(b.id);
                break;
            }
        col.sigma[z_id] = zc;
        col.sigma[w_id] = w_color.empty() ? w_id : w_color;
        col.palette.insert(col.sigma[z_id]);
        col.palette.insert(col.sigma[w_id]);
        top = apply_coloring(top, col);
    } else if (!w_color.empty()) {
        fail("ColorPrecondition", "cannot color a pair added to an uncolored complex");
    }

    return {top, detail::make_s_plus(base, top), detail::make_s_minus(top, base)};
}

namespace detail {

// The stabilization records of a tower, outermost first, plus the ultimate
// base.
inline std::pair<std::vector<std::shared_ptr<const StabInfo>>, CC> tower_of(const CC& top) {
    std::vector<std::shared_ptr<const StabInfo>> recs;
    CC cur = top;
    while (cur->stab) {
        recs.push_back(std::const_pointer_cast<const StabInfo>(
            std::shared_ptr<const StabInfo>(cur->stab)));
        cur = cur->stab->base;
    }
    return {recs, cur};
}

}  // namespace detail

// S^- for any registered pair of a stabilization tower. For the outermost
// pair the destination is the stored base itself; for inner pairs the
// destination tower is rebuilt without the pair, re-anchoring insertions
// that sat immediately after the removed w.
inline std::pair<CC, ChainMap> destabilize(const CC& top, const std::string& w_id) {
    if (!top->stab) fail("UnregisteredPair", "complex carries no stabilization records");
    if (top->stab->w_id == w_id) return {top->stab->base, detail::make_s_minus(top, top->stab->base)};

    auto [recs, base0] = detail::tower_of(top);
    // application order: innermost first
    std::vector<std::shared_ptr<const StabInfo>> order(recs.rbegin(), recs.rend());
    int removed = -1;
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        if (order[i]->w_id == w_id) removed = i;
    if (removed < 0) fail("UnregisteredPair", "pair with w-basepoint " + w_id + " not registered");

    struct Ins {
        std::string component, after_w, z_id, w_id;
    };
    std::vector<Ins> rebuilt;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        if (i == removed) continue;
        Ins ins{order[i]->component, order[i]->after_w, order[i]->z_id, order[i]->w_id};
        if (ins.after_w == w_id) ins.after_w = order[removed]->after_w;
        rebuilt.push_back(ins);
    }

    CC dest = base0;
    for (const Ins& ins : rebuilt) {
        std::string w_color;
        if (top->coloring) w_color = top->coloring->color_of(ins.w_id);
        dest = quasi_stabilize(dest, ins.component, ins.after_w, ins.z_id, ins.w_id, w_color)
                   .complex;
    }

    // index arithmetic: level L doubles the complex, minus-block last
    const int levels = static_cast<int>(order.size());
    const int m0 = base0->size();
    auto decompose = [&](int g) {
        std::vector<int> signs(levels);
        int size = m0 << levels;
        for (int l = levels - 1; l >= 0; --l) {
            size >>= 1;
            signs[l] = g >= size;
            g -= signs[l] * size;
        }
        return std::make_pair(g, signs);
    };

    ChainMap f = zero_map(top, dest, +2, -2);
    for (int g = 0; g < top->size(); ++g) {
        auto [b, signs] = decompose(g);
        if (!signs[removed]) continue;
        int idx = b;
        int size = m0;
        for (int l = 0; l < levels; ++l) {
            if (l == removed) continue;
            idx += signs[l] * size;
            size <<= 1;
        }
        f.cols[g] = {{idx, Poly::one()}};
    }
    return {dest, f};
}

}  // namespace floer
