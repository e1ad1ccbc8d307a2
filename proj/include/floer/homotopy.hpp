#pragma once

// Decides F ~ G (filtered, equivariant chain homotopy) by exact F2 linear
// algebra. Unknowns are the F2 coefficients of the monomials that can occur
// in each entry of a grading-homogeneous H with dH + Hd = F + G; the grading
// law pins the total U- and V-degree of every entry, so with an adequate
// degree cap the search space is exhaustive and UNSAT is a certificate.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "floer/complex.hpp"
#include "floer/gf2.hpp"

namespace floer {

struct HomotopyResult {
    bool solved = false;
    bool complete = true;  // search space covered every admissible monomial
    ChainMap h;
    int unknowns = 0;
    int equations = 0;
    int rank = 0;
    int degree_used = 0;
    int degree_needed = 0;

    bool certified_unsat() const { return !solved && complete; }
};

namespace detail {

struct HomotopySpace {
    std::vector<VarId> uvars, vvars;  // ring variables by kind

    // total U/V exponents forced on an H-entry from x to y, or nullopt
    static std::optional<std::pair<int, int>> pinned_totals(const Generator& x,
                                                            const Generator& y, int sw, int sz) {
        int du = y.gr.grw - x.gr.grw - sw;
        int dv = y.gr.grz - x.gr.grz - sz;
        if (du % 4 || dv % 4) return std::nullopt;
        int u = du / 4, v = dv / 4;
        if (u < 0 || v < 0) return std::nullopt;
        return {{u, v}};
    }
};

inline HomotopySpace ring_variables(const CC& a, const CC& b) {
    HomotopySpace s;
    VarDegrees deg = a->effective_degrees();
    VarDegrees dt = b->effective_degrees();
    deg.info.insert(dt.info.begin(), dt.info.end());
    const bool colored = a->coloring || b->coloring;
    for (const auto& [v, i] : deg.info) {
        if ((v.kind == VarKind::P) != colored) continue;
        if (i.dw < 0)
            s.uvars.push_back(v);
        else
            s.vvars.push_back(v);
    }
    return s;
}

// all monomials in `vars` of total degree exactly d
inline void monomials_of_degree(const std::vector<VarId>& vars, int d, size_t at, Mon cur,
                                std::vector<Mon>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (at >= vars.size()) return;
    if (at + 1 == vars.size()) {
        out.push_back(cur * Mon::var(vars[at], d));
        return;
    }
    for (int k = 0; k <= d; ++k) {
        Mon next = k ? cur * Mon::var(vars[at], k) : cur;
        monomials_of_degree(vars, d - k, at + 1, next, out);
    }
}

}  // namespace detail

// Upper bound, from the grading spread, on the entry degree of any
// grading-homogeneous filtered homotopy between f and g; searching up to
// this bound makes the solver complete.
inline int grading_degree_bound(const ChainMap& f, const ChainMap& g) {
    (void)g;
    int sw = f.sw + 2, sz = f.sz + 2;
    int best = 0;
    for (const Generator& x : f.src->gens)
        for (const Generator& y : f.tgt->gens)
            if (auto t = detail::HomotopySpace::pinned_totals(x, y, sw, sz))
                best = std::max(best, t->first + t->second);
    return best;
}

// Finds a filtered, equivariant, grading-homogeneous H with dH + Hd = F + G,
// or certifies that none exists. `degree` caps the per-entry total degree;
// degree < 0 means the completeness bound.
inline HomotopyResult solve_homotopy(const ChainMap& f, const ChainMap& g, int degree = -1) {
    if (!same_generators(f.src, g.src) || !same_generators(f.tgt, g.tgt) || f.sw != g.sw ||
        f.sz != g.sz)
        fail("ShapeMismatch", "homotopy problem needs equal sources, targets and shifts");
    if (!d_squared_defect(*f.src).is_zero() || !d_squared_defect(*f.tgt).is_zero())
        fail("DifferentialNotSquareZero", "homotopy solving needs d^2 = 0");

    HomotopyResult res;
    res.degree_needed = grading_degree_bound(f, g);
    res.degree_used = degree < 0 ? res.degree_needed : degree;
    if (res.degree_used < res.degree_needed) res.complete = false;

    ChainMap r = map_add(f, g);
    const int sw = f.sw + 2, sz = f.sz + 2;
    const CC& A = f.src;
    const CC& B = f.tgt;

    if (r.is_zero()) {
        res.solved = true;
        res.h = zero_map(A, B, sw, sz);
        return res;
    }

    detail::HomotopySpace space = detail::ring_variables(A, B);

    // unknowns: (source gen, target gen, monomial)
    std::map<std::tuple<int, int, Mon>, int> uindex;
    std::vector<std::tuple<int, int, Mon>> ulist;
    for (int x = 0; x < A->size(); ++x) {
        for (int y = 0; y < B->size(); ++y) {
            auto t = detail::HomotopySpace::pinned_totals(A->gens[x], B->gens[y], sw, sz);
            if (!t) continue;
            auto [ud, vd] = *t;
            if (ud + vd > res.degree_used) continue;
            std::vector<Mon> us, vs;
            detail::monomials_of_degree(space.uvars, ud, 0, Mon::one(), us);
            detail::monomials_of_degree(space.vvars, vd, 0, Mon::one(), vs);
            for (const Mon& mu : us)
                for (const Mon& mv : vs) {
                    Mon m = mu * mv;
                    uindex[{x, y, m}] = static_cast<int>(ulist.size());
                    ulist.push_back({x, y, m});
                }
        }
    }

    // reverse adjacency of the source differential (for Hd)
    std::vector<std::vector<std::pair<int, const Poly*>>> into(A->size());
    for (int xp = 0; xp < A->size(); ++xp)
        for (const auto& [x, p] : A->diff[xp]) into[x].push_back({xp, &p});

    // equations: (source gen, target gen, monomial) of dH + Hd + R = 0
    std::map<std::tuple<int, int, Mon>, int> eindex;
    std::vector<std::vector<int>> erows;
    std::vector<uint8_t> erhs;
    auto eq_at = [&](int x, int y, const Mon& m) {
        auto key = std::make_tuple(x, y, m);
        auto it = eindex.find(key);
        if (it != eindex.end()) return it->second;
        int id = static_cast<int>(erows.size());
        eindex[key] = id;
        erows.emplace_back();
        erhs.push_back(0);
        return id;
    };

    for (int x = 0; x < A->size(); ++x)
        for (const auto& [y, p] : r.cols[x])
            for (const Mon& m : p.terms()) erhs[eq_at(x, y, m)] ^= 1;

    for (int ui = 0; ui < static_cast<int>(ulist.size()); ++ui) {
        auto& [x, y, m] = ulist[ui];
        for (const auto& [y2, p] : B->diff[y])
            for (const Mon& q : p.terms()) erows[eq_at(x, y2, m * q)].push_back(ui);
        for (const auto& [x2, p] : into[x])
            for (const Mon& q : p->terms()) erows[eq_at(x2, y, m * q)].push_back(ui);
    }

    gf2::SparseSystem sys;
    sys.n_vars = static_cast<int>(ulist.size());
    for (size_t i = 0; i < erows.size(); ++i) sys.add_row(std::move(erows[i]), erhs[i]);

    res.unknowns = sys.n_vars;
    res.equations = static_cast<int>(sys.rows.size());
    gf2::SolveResult sol = gf2::solve(std::move(sys));
    res.rank = sol.rank;
    if (!sol.consistent) return res;

    res.h = zero_map(A, B, sw, sz);
    for (int ui = 0; ui < static_cast<int>(ulist.size()); ++ui) {
        if (!sol.solution[ui]) continue;
        auto& [x, y, m] = ulist[ui];
        column_insert(res.h.cols[x], y, Poly(m));
    }

    // soundness: re-verify the defining equation exactly
    ChainMap check = map_add(compose(differential_map(B), res.h),
                             compose(res.h, differential_map(A)));
    if (!map_equal(check, r)) fail("SolverInternal", "homotopy failed re-verification");
    check_map_grading(res.h);
    res.solved = true;
    return res;
}

}  // namespace floer
