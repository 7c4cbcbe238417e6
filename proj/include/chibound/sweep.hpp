#pragma once

#include "chibound/bounds.hpp"
#include "chibound/graph.hpp"
#include "chibound/lemma.hpp"

#include <optional>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chibound {

/// Worker count used when the caller does not choose one.
int default_jobs();

/// out[i] = fn(items[i]). jobs <= 1 is the serial reference loop; larger
/// values split the index range across OpenMP threads. Output order never
/// depends on jobs.
template <typename T, typename Fn>
auto parallel_map(std::span<const T> items, int jobs, Fn&& fn)
{
    using R = decltype(fn(items[0]));
    std::vector<R> out;
    if (jobs <= 1) {
        out.reserve(items.size());
        for (const auto& item : items)
            out.push_back(fn(item));
        return out;
    }
    std::vector<std::optional<R>> slots(items.size());
    const long long count = static_cast<long long>(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
#endif
    for (long long i = 0; i < count; ++i)
        slots[i].emplace(fn(items[i]));
    out.reserve(items.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

struct GraphStats {
    int n = 0;
    int m = 0;
    int omega = 0;
    int alpha = 0;
    int chi = 0;
    int delta = 0;
    bool three_k1_free = false;
};

GraphStats compute_stats(const Graph& g);

std::vector<GraphStats> stats_sweep(std::span<const Graph> graphs, int jobs);
std::vector<BoundReport> bounds_sweep(std::span<const Graph> graphs, int jobs);
std::vector<LemmaReplay> lemma_sweep(std::span<const Graph> graphs, int jobs);

} // namespace chibound
