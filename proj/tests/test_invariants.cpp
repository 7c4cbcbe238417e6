#include "chibound/enumerate.hpp"
#include "chibound/error.hpp"
#include "chibound/invariants.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

using namespace chibound;

TEST_CASE("clique_number examples")
{
    CHECK(clique_number(named::complete(4)) == 4);
    CHECK(clique_number(named::cycle(5)) == 2);
    const Graph pc = complement(named::petersen());
    CHECK(clique_number(pc) == 4);
    CHECK(ref::brute_clique_number(pc) == 4);
    const auto r = max_clique(pc);
    CHECK(r.size == 4);
    CHECK(r.members.size() == 4);
    CHECK(is_clique(pc, r.members));
    CHECK(clique_number(named::empty(1)) == 1);
    CHECK(clique_number(named::empty(6)) == 1);
}

TEST_CASE("independence_number examples")
{
    CHECK(independence_number(named::cycle(5)) == 2);
    CHECK(independence_number(named::complete(4)) == 1);
    CHECK(independence_number(named::petersen()) == 4);
    CHECK(ref::brute_independence_number(named::petersen()) == 4);
    const auto r = max_independent_set(named::petersen());
    CHECK(is_independent(named::petersen(), r.members));
}

TEST_CASE("chromatic_number examples")
{
    CHECK(chromatic_number(named::cycle(5)).chi == 3);
    CHECK(chromatic_number(named::complete(4)).chi == 4);
    CHECK(chromatic_number(named::petersen()).chi == 3);
    CHECK(chibound::oracle::is_k_colorable(named::petersen(), 3));
    CHECK_FALSE(chibound::oracle::is_k_colorable(named::petersen(), 2));
    CHECK(chromatic_number(named::empty(7)).chi == 1);
    CHECK(chromatic_number(named::cycle(64)).chi == 2);
    for (auto method : {ChromaticMethod::Auto, ChromaticMethod::BranchAndBound}) {
        const auto r = chromatic_number(complement(named::petersen()), method);
        CHECK(r.chi == 5);
        CHECK(r.coloring.is_proper_for(complement(named::petersen())));
        CHECK(r.coloring.count() == 5);
    }
}

TEST_CASE("max_matching examples")
{
    CHECK(max_matching(named::cycle(5)).size() == 2);
    CHECK(max_matching(named::complete(4)).size() == 2);
    const auto m = max_matching(named::petersen());
    CHECK(m.size() == 5);
    CHECK(m.is_valid_for(named::petersen()));
    CHECK(ref::brute_matching(named::petersen()) == 5);
    CHECK(max_matching(named::empty(3)).size() == 0);
}

TEST_CASE("chromatic_alpha2 examples and precondition")
{
    CHECK(chromatic_alpha2(named::cycle(5)) == 3);
    CHECK(chromatic_alpha2(named::complete(4)) == 4);
    CHECK(chromatic_alpha2(complement(named::petersen())) == 5);
    const Coloring c = alpha2_coloring(complement(named::petersen()));
    CHECK(c.is_proper_for(complement(named::petersen())));
    CHECK(c.count() == 5);
    try {
        chromatic_alpha2(named::petersen());
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionViolated);
    }
}

TEST_CASE("is_k_colorable oracle examples")
{
    CHECK_FALSE(chibound::oracle::is_k_colorable(named::cycle(5), 2));
    CHECK(chibound::oracle::is_k_colorable(named::cycle(5), 3));
    CHECK_FALSE(chibound::oracle::is_k_colorable(named::complete(4), 3));
    try {
        chibound::oracle::is_k_colorable(named::cycle(13), 3);
        FAIL("expected OracleScaleExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OracleScaleExceeded);
    }
}

TEST_CASE("Coloring validates its colour range")
{
    CHECK_THROWS_AS(Coloring({1, 3}), Error);
    CHECK_THROWS_AS(Coloring({0, 1}), Error);
    const Coloring c({2, 1, 2});
    CHECK(c.count() == 2);
    CHECK(c.class_size(2) == 2);
    CHECK(c.color_class(2).to_vector() == std::vector<int>{0, 2});
}

TEST_CASE("property: invariants agree with brute force on random graphs")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const Graph g = ref::random_graph(rng, n, (trial % 9 + 1) / 10.0);
        const int omega = clique_number(g);
        const int alpha = independence_number(g);
        CHECK(omega == ref::brute_clique_number(g));
        CHECK(alpha == ref::brute_independence_number(g));
        CHECK(alpha == clique_number(complement(g)));
        CHECK(is_clique(g, max_clique(g).members));

        const auto chi = chromatic_number(g);
        const auto bnb = chromatic_number(g, ChromaticMethod::BranchAndBound);
        CHECK(chi.chi == bnb.chi);
        CHECK(chi.chi == ref::brute_chromatic_number(g));
        CHECK(chi.coloring.is_proper_for(g));
        CHECK(bnb.coloring.is_proper_for(g));
        CHECK(chi.coloring.count() == chi.chi);
        CHECK(omega <= chi.chi);
        CHECK(chi.chi <= max_degree(g) + 1);
        // least k accepted by the oracle
        CHECK(chibound::oracle::is_k_colorable(g, chi.chi));
        if (chi.chi > 1)
            CHECK_FALSE(chibound::oracle::is_k_colorable(g, chi.chi - 1));

        const auto m = max_matching(g);
        CHECK(m.is_valid_for(g));
        CHECK(m.size() == ref::brute_matching(g));
    }
}

TEST_CASE("property: complements of triangle-free graphs use classes of size at most two")
{
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : triangle_free_graphs(n)) {
            const Graph g = complement(t);
            REQUIRE(independence_number(g) <= 2);
            const auto r = chromatic_number(g);
            int singles = 0;
            for (int c = 1; c <= r.chi; ++c) {
                CHECK(r.coloring.class_size(c) <= 2);
                singles += r.coloring.class_size(c) == 1 ? 1 : 0;
            }
            CHECK(g.order() == 2 * r.chi - singles);
            CHECK(chromatic_alpha2(g) == r.chi);
            CHECK(chromatic_number(g, ChromaticMethod::BranchAndBound).chi == r.chi);
        }
}

TEST_CASE("blossom matching on dense non-bipartite graphs up to 64 vertices")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 13);
        const Graph g = ref::random_graph(rng, n, 0.15);
        CHECK(max_matching(g).size() == ref::brute_matching(g));
    }
    const auto big = max_matching(named::cycle(63));
    CHECK(big.size() == 31);
    CHECK(max_matching(named::complete(64)).size() == 32);
}
