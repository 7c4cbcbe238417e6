#include "chibound/enumerate.hpp"
#include "chibound/invariants.hpp"
#include "chibound/sweep.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

using namespace chibound;

namespace {

std::vector<Graph> sample()
{
    std::vector<Graph> out;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : triangle_free_graphs(n))
            out.push_back(complement(t));
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i)
        out.push_back(ref::random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.5));
    return out;
}

} // namespace

TEST_CASE("parallel_map keeps input order")
{
    std::vector<int> xs(1000);
    for (int i = 0; i < 1000; ++i)
        xs[i] = i;
    const auto serial = parallel_map(std::span<const int>(xs), 1, [](int x) { return x * x; });
    const auto parallel = parallel_map(std::span<const int>(xs), 4, [](int x) { return x * x; });
    CHECK(serial == parallel);
    CHECK(serial[999] == 999 * 999);
    CHECK(parallel_map(std::span<const int>(), 4, [](int x) { return x; }).empty());
}

TEST_CASE("compute_stats")
{
    const auto s = compute_stats(named::cycle(5));
    CHECK(s.n == 5);
    CHECK(s.m == 5);
    CHECK(s.omega == 2);
    CHECK(s.alpha == 2);
    CHECK(s.chi == 3);
    CHECK(s.delta == 2);
    CHECK(s.three_k1_free);
}

TEST_CASE("property: parallel sweeps equal the serial reference")
{
    const auto graphs = sample();
    const auto s1 = stats_sweep(graphs, 1);
    const auto s4 = stats_sweep(graphs, 4);
    REQUIRE(s1.size() == s4.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].chi == s4[i].chi);
        CHECK(s1[i].omega == s4[i].omega);
        CHECK(s1[i].alpha == s4[i].alpha);
    }

    const auto b1 = bounds_sweep(graphs, 1);
    const auto b4 = bounds_sweep(graphs, 4);
    REQUIRE(b1.size() == b4.size());
    for (std::size_t i = 0; i < b1.size(); ++i) {
        REQUIRE(b1[i].entries.size() == b4[i].entries.size());
        for (std::size_t e = 0; e < b1[i].entries.size(); ++e) {
            CHECK(b1[i].entries[e].name == b4[i].entries[e].name);
            CHECK(b1[i].entries[e].slack == b4[i].entries[e].slack);
        }
    }

    const auto l1 = lemma_sweep(graphs, 1);
    const auto l4 = lemma_sweep(graphs, 4);
    REQUIRE(l1.size() == l4.size());
    for (std::size_t i = 0; i < l1.size(); ++i) {
        CHECK(l1[i].applicable == l4[i].applicable);
        CHECK(l1[i].partition.has_value() == l4[i].partition.has_value());
        if (l1[i].partition && l4[i].partition) {
            CHECK(l1[i].partition->coloring.colors() == l4[i].partition->coloring.colors());
            CHECK(l1[i].partition->v_k == l4[i].partition->v_k);
        }
    }
}
