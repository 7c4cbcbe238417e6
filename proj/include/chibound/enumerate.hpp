#pragma once

#include "chibound/graph.hpp"
#include "chibound/search.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chibound {

inline constexpr int kMaxTriangleFreeOrder = 11;
inline constexpr int kMaxRamseyOrder = 16;
inline constexpr int kMaxOracleOrder = 7;

struct EnumStats {
    int n = 0;
    std::string predicate;
    long long count = 0;
    double seconds = 0.0;
    long long nodes = 0; // generation-tree nodes at every level <= n
};

struct EnumerateOptions {
    int jobs = 1; // 1 runs the serial reference path
};

using GraphSink = std::function<void(const Graph&)>;

/// One canonical representative per isomorphism class of triangle-free
/// graphs on n vertices, by canonical augmentation. Emission order is the
/// generation-tree order with siblings sorted by canonical form, and is the
/// same for every jobs value. Throws ScaleExceeded outside 1..11.
EnumStats enumerate_triangle_free(int n, const GraphSink& sink, const EnumerateOptions& options = {});

std::vector<Graph> triangle_free_graphs(int n, const EnumerateOptions& options = {});

/// Triangle-free graphs on n vertices with independence number < k, up to
/// isomorphism. The filter is hereditary, so it prunes every level of the
/// tree. Throws ScaleExceeded for n > 16, or n > 11 with k > 5.
EnumStats enumerate_ramsey(int n, int k, const std::function<void(const RamseyWitness&)>& sink,
                           const EnumerateOptions& options = {});

std::vector<RamseyWitness> ramsey_graphs(int n, int k, const EnumerateOptions& options = {});

/// Children of a canonical parent: every triangle-free one-vertex extension
/// passing `keep` whose designated parent is `parent`, deduplicated and
/// sorted by canonical form.
std::vector<Graph> canonical_children(const Graph& parent, const std::function<bool(const Graph&)>& keep);

/// Iterates all 2^(n(n-1)/2) labelled graphs, filters by predicate and
/// counts classes by canonical form. Shares no generation code with the
/// augmentation enumerator. Throws OracleScaleExceeded for n > 7.
long long bruteforce_count_oracle(int n, const std::function<bool(const Graph&)>& predicate);

} // namespace chibound
