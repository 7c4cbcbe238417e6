#pragma once

#include "chibound/canonical.hpp"
#include "chibound/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>

namespace chibound {

struct Enumerated {};

struct Searched {
    std::uint64_t seed = 0;
    int restart = 0;
    std::int64_t iterations = 0;
};

struct Constructed {
    std::string name;
};

using Provenance = std::variant<Enumerated, Searched, Constructed>;

std::string provenance_kind(const Provenance& p);

/// Triangle-free graph with independence number < k, certifying R(3,k) > n.
/// The invariant is re-verified on construction.
class RamseyWitness {
public:
    /// Throws PreconditionViolated if g is not a witness for k.
    RamseyWitness(Graph g, int k, Provenance provenance);

    const Graph& graph() const noexcept { return graph_; }
    int k() const noexcept { return k_; }
    const Provenance& provenance() const noexcept { return provenance_; }
    /// Absent beyond the canonical labelling limit of 16 vertices.
    const std::optional<CanonicalForm>& canonical() const noexcept { return canonical_; }

private:
    Graph graph_;
    int k_;
    std::optional<CanonicalForm> canonical_;
    Provenance provenance_;
};

/// Triangles plus independent k-sets; zero iff verify_witness(g, k).
std::int64_t witness_cost(const Graph& g, int k);

bool verify_witness(const Graph& g, int k);

/// i ~ j iff (i - j) mod n or (j - i) mod n lies in differences.
/// Throws InvalidDifference for differences outside 1..n/2.
Graph circulant(int n, const std::set<int>& differences);

struct SearchParams {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 20120917;
    std::int64_t max_iterations = 2'000'000; // per restart
    double initial_temperature = 2.0;
    double cooling = 0.95;                    // applied every n(n-1)/2 iterations
    int restarts = 8;

    /// Throws InvalidParams unless all fields are positive, cooling lies in
    /// (0, 1), 2 <= k <= 6 and 1 <= n <= 39.
    void validate() const;
};

inline constexpr std::uint64_t kDefaultSearchSeed = 20120917;

struct SearchOutcome {
    std::optional<RamseyWitness> witness; // empty means Exhausted
    int restarts_run = 0;
    std::int64_t iterations = 0;          // summed over restarts that ran
};

/// Simulated annealing over labelled graphs on n vertices. Restart r uses
/// its own mt19937_64 stream seeded from splitmix64(seed, r); the lowest
/// restart index that reaches cost zero wins, so the outcome depends only
/// on params (and not on jobs).
SearchOutcome anneal_search(const SearchParams& params, int jobs = 1);

/// Single restart; exposed for tests and the benchmark.
std::optional<Graph> anneal_restart(const SearchParams& params, int restart, std::int64_t* iterations_used = nullptr);

/// Incrementally maintained cost, public so tests can compare it against
/// witness_cost after every move.
class WitnessCostTracker {
public:
    WitnessCostTracker(const Graph& g, int k);

    std::int64_t cost() const noexcept { return cost_; }
    /// Change in cost if pair {u, v} were toggled.
    std::int64_t delta(int u, int v) const;
    void toggle(int u, int v);
    Graph graph() const;

private:
    std::int64_t independent_sets_in(Word candidates, int size) const;

    int n_;
    int k_;
    std::array<Word, kMaxVertices> adj_{};
    std::int64_t cost_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace chibound
