#pragma once

#include "chibound/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace chibound {

inline constexpr int kMaxCanonOrder = 16;

/// graph6 string of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
    std::string bytes;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    std::vector<int> position;                 // vertex -> canonical index
    Graph graph;                               // g relabelled by position
    std::vector<int> orbit;                    // vertex -> least vertex of its Aut(g) orbit
    std::vector<std::vector<int>> generators;  // automorphisms found, as vertex maps
    long long leaves = 0;                      // search-tree leaves visited
};

/// Canonical labelling by equitable-partition refinement followed by an
/// individualisation search that keeps the lexicographically least
/// relabelled adjacency. Automorphisms found at the leaves prune the search
/// and generate the full automorphism group, so orbit is exact.
/// Throws CanonScaleExceeded for n > 16.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

} // namespace chibound
