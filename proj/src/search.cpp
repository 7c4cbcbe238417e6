#include "chibound/search.hpp"

#include "chibound/error.hpp"
#include "chibound/invariants.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chibound {

std::string provenance_kind(const Provenance& p)
{
    struct Visitor {
        std::string operator()(const Enumerated&) const { return "enumerated"; }
        std::string operator()(const Searched&) const { return "searched"; }
        std::string operator()(const Constructed&) const { return "constructed"; }
    };
    return std::visit(Visitor{}, p);
}

RamseyWitness::RamseyWitness(Graph g, int k, Provenance provenance)
    : graph_(std::move(g)), k_(k), provenance_(std::move(provenance))
{
    if (!verify_witness(graph_, k_))
        throw Error(Errc::PreconditionViolated,
                    "graph is not a Ramsey(3," + std::to_string(k_) + ") witness");
    if (graph_.order() <= kMaxCanonOrder)
        canonical_ = canonical_form(graph_);
}

namespace {

std::int64_t count_independent(const std::array<Word, kMaxVertices>& adj, Word candidates, int size)
{
    if (size == 0)
        return 1;
    if (std::popcount(candidates) < size)
        return 0;
    std::int64_t total = 0;
    for (Word rest = candidates; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Word later = rest & ~bit(v);
        total += count_independent(adj, later & ~adj[v], size - 1);
    }
    return total;
}

std::array<Word, kMaxVertices> rows_of(const Graph& g)
{
    std::array<Word, kMaxVertices> adj{};
    for (int v = 0; v < g.order(); ++v)
        adj[v] = g.row(v);
    return adj;
}

} // namespace

std::int64_t witness_cost(const Graph& g, int k)
{
    if (k < 1)
        throw Error(Errc::InvalidParams, "k must be positive");
    return count_triangles(g) + count_independent(rows_of(g), g.vertices().bits(), k);
}

bool verify_witness(const Graph& g, int k)
{
    return is_triangle_free(g) && independence_number(g) < k;
}

Graph circulant(int n, const std::set<int>& differences)
{
    std::vector<std::pair<int, int>> edges;
    for (int d : differences) {
        if (d < 1 || d > n / 2)
            throw Error(Errc::InvalidDifference,
                        "difference " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int gap = j - i;
            if (differences.contains(gap) || differences.contains(n - gap))
                edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

void SearchParams::validate() const
{
    auto fail = [](const std::string& what) { throw Error(Errc::InvalidParams, what); };
    if (n < 1 || n > 39)
        fail("n must lie in 1..39");
    if (k < 2 || k > 6)
        fail("k must lie in 2..6");
    if (max_iterations <= 0)
        fail("max_iterations must be positive");
    if (!(initial_temperature > 0.0))
        fail("initial temperature must be positive");
    if (!(cooling > 0.0 && cooling < 1.0))
        fail("cooling factor must lie in (0, 1)");
    if (restarts <= 0)
        fail("restarts must be positive");
}

WitnessCostTracker::WitnessCostTracker(const Graph& g, int k) : n_(g.order()), k_(k), adj_(rows_of(g))
{
    cost_ = witness_cost(g, k);
}

std::int64_t WitnessCostTracker::independent_sets_in(Word candidates, int size) const
{
    return count_independent(adj_, candidates, size);
}

std::int64_t WitnessCostTracker::delta(int u, int v) const
{
    const std::int64_t common = std::popcount(adj_[u] & adj_[v]);
    // Independent k-sets through both u and v: (k-2)-sets avoiding N[u] and N[v].
    const Word outside = low_mask(n_) & ~adj_[u] & ~adj_[v] & ~bit(u) & ~bit(v);
    const std::int64_t through = k_ >= 2 ? independent_sets_in(outside, k_ - 2) : 0;
    const bool adjacent = (adj_[u] >> v) & 1U;
    return adjacent ? through - common : common - through;
}

void WitnessCostTracker::toggle(int u, int v)
{
    cost_ += delta(u, v);
    adj_[u] ^= bit(v);
    adj_[v] ^= bit(u);
}

Graph WitnessCostTracker::graph() const
{
    return Graph::from_rows(n_, std::span<const Word>(adj_.data(), n_));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

// Portable draws from mt19937_64: the standard fixes the engine's output but
// not the distributions, so both mappings are spelled out here.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::optional<Graph> run_restart(const SearchParams& params, int restart, std::int64_t* iterations_used,
                                 const std::function<bool()>& should_stop)
{
    const int n = params.n;
    std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(restart) + 1)));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);

    std::vector<std::pair<int, int>> start;
    for (auto p : pairs)
        if (uniform_unit(rng) < 0.5)
            start.push_back(p);
    WitnessCostTracker tracker(Graph::from_edges(n, start), params.k);

    const std::int64_t batch = std::max<std::int64_t>(1, static_cast<std::int64_t>(pairs.size()));
    double temperature = params.initial_temperature;
    std::int64_t it = 0;
    for (; it < params.max_iterations && tracker.cost() != 0; ++it) {
        if ((it & 4095) == 0 && should_stop && should_stop())
            break;
        const auto [u, v] = pairs[uniform_below(rng, pairs.size())];
        const std::int64_t d = tracker.delta(u, v);
        if (d <= 0 || uniform_unit(rng) < std::exp(-static_cast<double>(d) / temperature))
            tracker.toggle(u, v);
        if ((it + 1) % batch == 0)
            temperature *= params.cooling;
    }
    if (iterations_used)
        *iterations_used = it;
    if (tracker.cost() != 0)
        return std::nullopt;
    Graph g = tracker.graph();
    if (!verify_witness(g, params.k))
        throw Error(Errc::InternalConsistency, "zero-cost graph failed exact verification");
    return g;
}

} // namespace

std::optional<Graph> anneal_restart(const SearchParams& params, int restart, std::int64_t* iterations_used)
{
    params.validate();
    return run_restart(params, restart, iterations_used, {});
}

SearchOutcome anneal_search(const SearchParams& params, int jobs)
{
    params.validate();
    const int restarts = params.restarts;
    std::vector<std::optional<Graph>> found(restarts);
    std::vector<std::int64_t> used(restarts, 0);

    if (jobs <= 1) {
        for (int r = 0; r < restarts; ++r) {
            found[r] = run_restart(params, r, &used[r], {});
            if (found[r])
                break;
        }
    } else {
        std::atomic<int> winner{restarts};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
        for (int r = 0; r < restarts; ++r) {
            if (r > winner.load())
                continue;
            found[r] = run_restart(params, r, &used[r], [&] { return winner.load() < r; });
            if (found[r]) {
                int current = winner.load();
                while (r < current && !winner.compare_exchange_weak(current, r)) {
                }
            }
        }
    }

    SearchOutcome out;
    for (int r = 0; r < restarts; ++r) {
        out.restarts_run = r + 1;
        out.iterations += used[r];
        if (found[r]) {
            out.witness.emplace(*found[r], params.k,
                                Searched{params.seed, r, used[r]});
            return out;
        }
    }
    return out;
}

} // namespace chibound
