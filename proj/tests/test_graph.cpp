#include "chibound/error.hpp"
#include "chibound/graph.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

using namespace chibound;

namespace {

Errc error_code(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::InternalConsistency;
}

} // namespace

TEST_CASE("make_graph examples")
{
    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5 == named::cycle(5));

    const Graph three = Graph::from_edges(3, {});
    CHECK(three.edge_count() == 0);

    const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == named::complete(4));
}

TEST_CASE("make_graph collapses duplicates and keeps rows symmetric")
{
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 0}, {0, 1}, {2, 3}});
    CHECK(g.edge_count() == 2);
    for (int i = 0; i < 4; ++i) {
        CHECK_FALSE(g.adjacent(i, i));
        for (int j = 0; j < 4; ++j)
            CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
}

TEST_CASE("make_graph errors")
{
    CHECK(error_code([] { Graph::from_edges(65, {}); }) == Errc::CapacityExceeded);
    CHECK(error_code([] { Graph::from_edges(0, {}); }) == Errc::CapacityExceeded);
    CHECK(error_code([] { Graph::from_edges(3, {{1, 1}}); }) == Errc::InvalidEdge);
    CHECK(error_code([] { Graph::from_edges(3, {{0, 3}}); }) == Errc::InvalidEdge);
    CHECK(error_code([] { Graph::from_edges(3, {{-1, 2}}); }) == Errc::InvalidEdge);

    const Word asym[2] = {0b10, 0b00};
    CHECK(error_code([&] { Graph::from_rows(2, asym); }) == Errc::InvalidEdge);
    const Word loop[2] = {0b01, 0b00};
    CHECK(error_code([&] { Graph::from_rows(2, loop); }) == Errc::InvalidEdge);
}

TEST_CASE("64 vertices fit in one word per row")
{
    const Graph k64 = named::complete(64);
    CHECK(k64.edge_count() == 64 * 63 / 2);
    CHECK(k64.degree(63) == 63);
    CHECK(complement(k64).edge_count() == 0);
}

TEST_CASE("complement examples")
{
    CHECK(complement(named::complete(4)).edge_count() == 0);
    const Graph c5c = complement(named::cycle(5));
    CHECK(c5c.edge_count() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5c.degree(v) == 2);
    // 0-2-4-1-3-0 is the complementary cycle
    const int order[5] = {0, 2, 4, 1, 3};
    for (int i = 0; i < 5; ++i)
        CHECK(c5c.adjacent(order[i], order[(i + 1) % 5]));
}

TEST_CASE("induced_subgraph examples")
{
    const Graph p3 = induced_subgraph(named::cycle(5), VertexSet::of({0, 1, 2}));
    CHECK(p3 == named::path(3));
    CHECK(induced_subgraph(named::complete(4), VertexSet::of({0, 2, 3})) == named::complete(3));

    const Graph outer = induced_subgraph(named::petersen(), VertexSet::of({0, 1, 2, 3, 4}));
    CHECK(outer == named::cycle(5));
    const Graph inner = induced_subgraph(named::petersen(), VertexSet::of({5, 6, 7, 8, 9}));
    CHECK(inner.edge_count() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(inner.degree(v) == 2);

    CHECK(error_code([] { induced_subgraph(named::cycle(5), VertexSet()); }) == Errc::EmptySet);
}

TEST_CASE("max_degree_vertex examples")
{
    const auto c5 = max_degree_vertex(named::cycle(5));
    CHECK(c5.vertex == 0);
    CHECK(c5.degree == 2);
    const auto star = max_degree_vertex(named::star(3));
    CHECK(star.vertex == 0);
    CHECK(star.degree == 3);
    const auto k4 = max_degree_vertex(named::complete(4));
    CHECK(k4.vertex == 0);
    CHECK(k4.degree == 3);
    const auto p4 = max_degree_vertex(named::path(4));
    CHECK(p4.vertex == 1);
    CHECK(max_degree_vertex(named::empty(1)).degree == 0);
}

TEST_CASE("triangle and independent-triple tests")
{
    CHECK_FALSE(is_triangle_free(named::complete(3)));
    CHECK(is_triangle_free(named::cycle(5)));
    CHECK(is_triangle_free(named::petersen()));
    CHECK(count_triangles(named::complete(4)) == 4);
    CHECK(count_triangles(named::petersen()) == 0);

    CHECK(is_3k1_free(named::cycle(5)));
    CHECK_FALSE(is_3k1_free(named::empty(3)));
    CHECK_FALSE(is_3k1_free(named::petersen()));
    // 0, 2 and 6 are pairwise non-adjacent in the Petersen graph
    CHECK(is_independent(named::petersen(), VertexSet::of({0, 2, 6})));
}

TEST_CASE("Petersen graph matches its definition")
{
    const Graph p = named::petersen();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);
    // Every two non-adjacent vertices share exactly one neighbour.
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            const int common = (p.neighbors(a) & p.neighbors(b)).size();
            CHECK(common == (p.adjacent(a, b) ? 0 : 1));
        }
}

TEST_CASE("with_edge_toggled returns a fresh value")
{
    const Graph c5 = named::cycle(5);
    const Graph g = c5.with_edge_toggled(0, 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.edge_count() == 6);
    CHECK_FALSE(c5.adjacent(0, 2));
    CHECK(g.with_edge_toggled(2, 0) == c5);
}

TEST_CASE("VertexSet basics")
{
    const VertexSet s = VertexSet::of({1, 4, 7});
    CHECK(s.size() == 3);
    CHECK(s.front() == 1);
    CHECK(s.to_vector() == std::vector<int>{1, 4, 7});
    CHECK((s - VertexSet::of({4})).to_vector() == std::vector<int>{1, 7});
    CHECK((s | VertexSet::of({0})).front() == 0);
    CHECK((s & VertexSet::range(5)).size() == 2);
    CHECK(VertexSet::range(64).size() == 64);
}

TEST_CASE("property: complement, relabel and degree laws on random graphs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = ref::random_graph(rng, n, 0.1 + 0.8 * (trial % 10) / 10.0);
        const Graph c = complement(g);
        CHECK(complement(c) == g);
        CHECK(c.order() == n);
        CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
        CHECK(is_3k1_free(g) == is_triangle_free(c));
        CHECK(is_triangle_free(g) == ref::brute_triangle_free(g));
        CHECK(induced_subgraph(g, g.vertices()) == g);
        CHECK(max_degree_vertex(g).degree == ref::brute_max_degree(g));

        int popcount = 0;
        for (Word row : g.rows())
            popcount += std::popcount(row);
        CHECK(popcount == 2 * g.edge_count());

        const auto perm = ref::random_permutation(rng, n);
        const Graph h = relabel(g, perm);
        CHECK(h.edge_count() == g.edge_count());
        for (auto [a, b] : g.edges())
            CHECK(h.adjacent(perm[a], perm[b]));
    }
}
