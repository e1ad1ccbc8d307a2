#include <catch2/catch_amalgamated.hpp>

#include "floer/grid.hpp"
#include "floer/models.hpp"
#include "floer/verify.hpp"

using namespace floer;

namespace {

CC colored(const CC& c) { return apply_coloring(c, c->cfg.trivial_coloring()); }

CC two_pair_block() {
    return quasi_stabilize(colored(one_pair_unknot()), "K0", "w0", "z1", "w1").complex;
}

CC three_pair_block() {
    return quasi_stabilize(two_pair_block(), "K0", "w1", "z2", "w2").complex;
}

}  // namespace

TEST_CASE("relation suite on the two-pair unknot block") {
    Report rep = relation_suite(two_pair_block());
    for (const CheckResult& c : rep.checks) {
        INFO(c.name << ": " << c.status);
        CHECK(c.pass);
    }
}

TEST_CASE("relation suite on the three-pair unknot block") {
    Report rep = relation_suite(three_pair_block());
    for (const CheckResult& c : rep.checks) {
        INFO(c.name << ": " << c.status);
        CHECK(c.pass);
    }
}

TEST_CASE("arc relations with merged w-colors") {
    CC base = apply_coloring(one_pair_unknot(),
                             one_pair_unknot()->cfg.merged_w_coloring("K0"));
    std::string col = base->coloring->color_of("w0");
    CC c = quasi_stabilize(base, "K0", "w0", "z1", "w1", col).complex;
    c = quasi_stabilize(c, "K0", "w1", "z2", "w2", col).complex;
    Report rep;
    arc_relations(rep, c, "K0", true);
    for (const CheckResult& r : rep.checks) {
        INFO(r.name << ": " << r.status);
        CHECK(r.pass);
    }
}

TEST_CASE("S-maps commute for pairs on disjoint components") {
    CC base = apply_coloring(two_unknots(), two_unknots()->cfg.trivial_coloring());
    CC c = quasi_stabilize(base, "K0", "w0", "za", "wa").complex;
    c = quasi_stabilize(c, "K1", "w1", "zb", "wb").complex;
    Report rep;
    commutation_relations(rep, c);
    REQUIRE(rep.checks.size() == 4);
    for (const CheckResult& r : rep.checks) {
        INFO(r.name << ": " << r.status);
        CHECK(r.pass);
    }
}

TEST_CASE("degenerate elementary move: add and remove the same pair") {
    CC c = two_pair_block();
    Stabilization st = quasi_stabilize(c, "K0", "w1", "zm", "wm",
                                       c->coloring->color_of("w1"));
    for (const std::string& z : {std::string("zm"), st.complex->stab->z_next}) {
        ChainMap round = compose(st.s_minus, compose(psi(st.complex, z), st.s_plus));
        CHECK(map_equal(round, identity_map(c)));
    }
}

TEST_CASE("elementary move is a chain map") {
    CC c = two_pair_block();
    MoveResult mv = elementary_move(c, "w1", "w1");
    CHECK(is_chain_map(mv.map));
    CHECK(mv.map.sw == 0);
    CHECK(mv.map.sz == 0);
    CHECK(mv.dest->cfg.pair_count("K0") == 2);
}

TEST_CASE("moving a pair around a two-pair component is the sarkar-type map") {
    CC c = two_pair_block();
    MoveResult m1 = elementary_move(c, "w1", "w1", "zM", "wM");
    MoveResult m2 = elementary_move(m1.dest, "wM", "wM", "zN", "wN");
    ChainMap round = transport(compose(m2.map, m1.map), c, c);
    CHECK(is_chain_map(round));

    // the round trip is homotopic to 1 + Phi_w Psi_z for the moved pair
    ChainMap rhs = map_add(identity_map(c), compose(phi(c, "w1"), psi(c, "z1")));
    HomotopyResult r = solve_homotopy(round, rhs);
    CHECK(r.solved);
}

TEST_CASE("full-twist certificate on the two-pair unknot") {
    Report rep = thm_b_verify(two_pair_block(), "K0");
    for (const CheckResult& c : rep.checks) {
        INFO(c.name << ": " << c.status);
        CHECK(c.pass);
    }
    // on this model 1 + Phi_K Psi_K is the identity
    CC c = two_pair_block();
    CHECK(map_equal(sarkar_map(c, "K0"), identity_map(c)));
}

TEST_CASE("full-twist certificate on a single-pair component") {
    Report rep = thm_b_verify(colored(three_gen_trefoil()), "K0");
    for (const CheckResult& c : rep.checks) {
        INFO(c.name << ": " << c.status);
        CHECK(c.pass);
    }
}

TEST_CASE("partial-twist certificate on the two-pair unknot with merged colors") {
    CC base = apply_coloring(one_pair_unknot(),
                             one_pair_unknot()->cfg.merged_w_coloring("K0"));
    CC c = quasi_stabilize(base, "K0", "w0", "z1", "w1",
                           base->coloring->color_of("w0")).complex;
    Report rep = thm_d_verify(c, "K0");
    for (const CheckResult& r : rep.checks) {
        INFO(r.name << ": " << r.status);
        CHECK(r.pass);
    }
}
