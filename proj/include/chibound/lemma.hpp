#pragma once

#include "chibound/graph.hpp"
#include "chibound/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chibound {

/// Decomposition of a graph with no independent triple around a
/// maximum-degree vertex u, given an optimal colouring in which u is alone
/// in its colour class (every class then has one or two vertices):
///
///   v_r   vertices in singleton classes (u included), r = |v_r|
///   v_s   neighbours of u whose partner is a non-neighbour of u, s = |v_s|
///   v_sp  those partners
///   v_tp  remaining vertices missing some vertex of v_r - u, t = |v_tp|
///   v_t   their partners
///   v_k   everything else, 2k = |v_k|
///
/// Assignment precedence is v_r, then v_s/v_sp, then v_tp/v_t, then v_k.
/// When both members of a remaining pair miss v_r - u, the lower index goes
/// to v_tp and `rerouted` counts the pair.
struct LemmaPartition {
    Graph graph;
    int u = 0;
    Coloring coloring;
    VertexSet v_r, v_s, v_sp, v_t, v_tp, v_k;
    int r = 0, s = 0, t = 0, k = 0;
    int p = 0;     // graph order
    int delta = 0; // maximum degree
    int chi = 0;   // colours used
    int rerouted = 0;
};

/// Optimal colouring with u alone in colour chi, or nullopt when no optimal
/// colouring isolates u (exactly when chi(g - u) == chi(g)). Singleton
/// classes take the lowest colours, then pairs by lowest vertex.
/// Throws PreconditionViolated if g has an independent triple.
std::optional<Coloring> singleton_coloring(const Graph& g, int u);

/// Throws PreconditionViolated (independent triple), InvalidColoring (not
/// proper, not optimal, u not alone) or NotMaxDegree.
LemmaPartition compute_partition(const Graph& g, const Coloring& coloring, int u);

struct IdentityCheck {
    std::string name;
    bool definitional; // must hold for every valid partition
    std::string relation; // "=", "<=" or ">="
    std::int64_t lhs;
    std::int64_t rhs;
    bool holds;
};

/// II, III and p = 2chi - r are definitional; IV, V.a, V.b and
/// v_sp == V - N[u] are reported with their slack.
std::vector<IdentityCheck> verify_identities(const LemmaPartition& lp);

enum class ClaimStatus { Holds, Fails, Vacuous };

const char* claim_status_name(ClaimStatus s) noexcept;

struct ClaimResult {
    std::string name;
    ClaimStatus status = ClaimStatus::Vacuous;
    std::vector<int> witness; // layout depends on the claim, see check_claims
};

struct ClaimReport {
    std::vector<ClaimResult> claims;
    const ClaimResult* find(const std::string& name) const;
};

/// claim1  every v in v_r is adjacent to all of v_s + v_t      witness {v, w}
/// claim2  every v in v_s is adjacent to all of v_t            witness {v, w}
/// claim3  a vertex of v_s with a non-neighbour in v_s is
///         adjacent to all of v_r                              witness {x, y, v}
/// claim4  a', b' in v_tp missing distinct u_i, u_j in v_r - u
///         have adjacent partners                              witness {a', b', u_i, u_j, a, b}
/// V.a     r + w<v_s> + w<v_t> <= w                            witness: the cliques
/// V.b     r + w<v_s + v_t + v_k> <= w                         witness: the cliques
/// Failures are measurements, not errors: the claims are facts about a
/// minimal counterexample and need not hold on arbitrary graphs.
ClaimReport check_claims(const LemmaPartition& lp);

/// Re-derives a reported failure from the graph alone.
bool confirm_failure(const LemmaPartition& lp, const ClaimResult& claim);

struct LemmaReplay {
    bool applicable = false;          // graph has no independent triple
    std::vector<int> tried;           // max-degree vertices attempted, in order
    std::optional<LemmaPartition> partition;
    std::vector<IdentityCheck> identities;
    ClaimReport claims;
};

/// Tries each maximum-degree vertex in index order until one can be
/// isolated in an optimal colouring, then builds and checks the partition.
LemmaReplay replay_lemma(const Graph& g);

} // namespace chibound
