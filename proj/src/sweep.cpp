#include "chibound/sweep.hpp"

#include "chibound/invariants.hpp"

#include <algorithm>
#include <thread>

namespace chibound {

int default_jobs()
{
#ifdef _OPENMP
    return std::max(1, omp_get_max_threads());
#else
    return std::max(1u, std::thread::hardware_concurrency());
#endif
}

GraphStats compute_stats(const Graph& g)
{
    GraphStats s;
    s.n = g.order();
    s.m = g.edge_count();
    s.omega = clique_number(g);
    s.alpha = independence_number(g);
    s.chi = chromatic_number(g).chi;
    s.delta = max_degree(g);
    s.three_k1_free = s.alpha <= 2;
    return s;
}

std::vector<GraphStats> stats_sweep(std::span<const Graph> graphs, int jobs)
{
    return parallel_map(graphs, jobs, [](const Graph& g) { return compute_stats(g); });
}

std::vector<BoundReport> bounds_sweep(std::span<const Graph> graphs, int jobs)
{
    return parallel_map(graphs, jobs, [](const Graph& g) { return evaluate_graph(g); });
}

std::vector<LemmaReplay> lemma_sweep(std::span<const Graph> graphs, int jobs)
{
    return parallel_map(graphs, jobs, [](const Graph& g) { return replay_lemma(g); });
}

} // namespace chibound
