#pragma once

// Hand-built model complexes used as fixtures: small one-pair knot complexes
// validated by d^2 = 0 and the grading law at construction.

#include <string>

#include "floer/complex.hpp"

namespace floer {

// Unknot with a single basepoint pair: one generator, zero differential.
inline CC one_pair_unknot() {
    LinkConfig cfg = LinkConfig::from_components(
        {{"K0", {Basepoint{"z0", 'z'}, Basepoint{"w0", 'w'}}}});
    return make_complex(std::move(cfg), {{"x", Grading{0, 0, {{"K0", 0}}}}}, {{}});
}

// Two split unknot components, one pair each; used for disjoint-pair checks.
inline CC two_unknots() {
    LinkConfig cfg = LinkConfig::from_components(
        {{"K0", {Basepoint{"z0", 'z'}, Basepoint{"w0", 'w'}}},
         {"K1", {Basepoint{"z1", 'z'}, Basepoint{"w1", 'w'}}}});
    return make_complex(std::move(cfg), {{"x", Grading{0, 0, {{"K0", 0}, {"K1", 0}}}}}, {{}});
}

// The standard trefoil-shaped complex: db = U a + V c.
inline CC three_gen_trefoil() {
    LinkConfig cfg = LinkConfig::from_components(
        {{"K0", {Basepoint{"z0", 'z'}, Basepoint{"w0", 'w'}}}});
    std::vector<Generator> gens = {
        {"a", Grading{0, -4, {{"K0", 2}}}},
        {"b", Grading{-2, -2, {{"K0", 0}}}},
        {"c", Grading{-4, 0, {{"K0", -2}}}},
    };
    std::vector<Column> raw(3);
    column_insert(raw[1], 0, Poly::var(VarId::u("w0")));
    column_insert(raw[1], 2, Poly::var(VarId::v("z0")));
    return make_complex(std::move(cfg), std::move(gens), std::move(raw));
}

// (2,5)-torus-knot-shaped staircase: db1 = U a0 + V a1, db2 = U a1 + V a2.
inline CC t25_staircase() {
    LinkConfig cfg = LinkConfig::from_components(
        {{"K0", {Basepoint{"z0", 'z'}, Basepoint{"w0", 'w'}}}});
    std::vector<Generator> gens = {
        {"a0", Grading{0, -8, {{"K0", 4}}}},  {"b1", Grading{-2, -6, {{"K0", 2}}}},
        {"a1", Grading{-4, -4, {{"K0", 0}}}}, {"b2", Grading{-6, -2, {{"K0", -2}}}},
        {"a2", Grading{-8, 0, {{"K0", -4}}}},
    };
    std::vector<Column> raw(5);
    column_insert(raw[1], 0, Poly::var(VarId::u("w0")));
    column_insert(raw[1], 2, Poly::var(VarId::v("z0")));
    column_insert(raw[3], 2, Poly::var(VarId::u("w0")));
    column_insert(raw[3], 4, Poly::var(VarId::v("z0")));
    return make_complex(std::move(cfg), std::move(gens), std::move(raw));
}

// A one-pair complex whose involution is genuinely nontrivial:
//   dx = V y + U y',  dy = U z,  dy' = V z,
// so (odd-U stripped) . (odd-V stripped) sends x to z.
inline CC box_complex() {
    LinkConfig cfg = LinkConfig::from_components(
        {{"K0", {Basepoint{"z0", 'z'}, Basepoint{"w0", 'w'}}}});
    std::vector<Generator> gens = {
        {"x", Grading{0, 0, {{"K0", 0}}}},
        {"y", Grading{-2, 2, {{"K0", -2}}}},
        {"yp", Grading{2, -2, {{"K0", 2}}}},
        {"z", Grading{0, 0, {{"K0", 0}}}},
    };
    std::vector<Column> raw(4);
    column_insert(raw[0], 1, Poly::var(VarId::v("z0")));
    column_insert(raw[0], 2, Poly::var(VarId::u("w0")));
    column_insert(raw[1], 3, Poly::var(VarId::u("w0")));
    column_insert(raw[2], 3, Poly::var(VarId::v("z0")));
    return make_complex(std::move(cfg), std::move(gens), std::move(raw));
}

inline CC model_by_name(const std::string& name) {
    if (name == "one_pair_unknot") return one_pair_unknot();
    if (name == "two_unknots") return two_unknots();
    if (name == "three_gen_trefoil") return three_gen_trefoil();
    if (name == "t25_staircase") return t25_staircase();
    if (name == "box") return box_complex();
    fail("NotFound", "no model named " + name);
}

}  // namespace floer
