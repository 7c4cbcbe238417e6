#pragma once

#include "chibound/graph.hpp"

#include <utility>
#include <vector>

namespace chibound {

struct CliqueResult {
    int size = 0;
    VertexSet members;
};

/// Proper vertex colouring with colours 1..count, every colour used.
class Coloring {
public:
    Coloring() = default;

    /// Normalises nothing: colours must already be 1..count with every
    /// colour used. Throws InvalidColoring otherwise.
    explicit Coloring(std::vector<int> colors);

    int count() const noexcept { return count_; }
    int color(int v) const noexcept { return colors_[v]; }
    const std::vector<int>& colors() const noexcept { return colors_; }
    int order() const noexcept { return static_cast<int>(colors_.size()); }

    /// Vertices carrying colour c (1-based).
    VertexSet color_class(int c) const;
    int class_size(int c) const { return class_sizes_[c - 1]; }

    bool is_proper_for(const Graph& g) const;

private:
    std::vector<int> colors_;
    std::vector<int> class_sizes_;
    int count_ = 0;
};

struct Matching {
    std::vector<std::pair<int, int>> pairs; // each pair (a, b) with a < b, sorted
    int size() const noexcept { return static_cast<int>(pairs.size()); }
    bool is_valid_for(const Graph& g) const;
};

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

enum class ChromaticMethod {
    Auto,           // matching route when alpha <= 2, branch and bound otherwise
    BranchAndBound, // saturation-ordered branch and bound only
};

CliqueResult max_clique(const Graph& g);
int clique_number(const Graph& g);

CliqueResult max_independent_set(const Graph& g);
int independence_number(const Graph& g);

ChromaticResult chromatic_number(const Graph& g, ChromaticMethod method = ChromaticMethod::Auto);

/// Maximum-cardinality matching in a general graph (blossom contraction).
Matching max_matching(const Graph& g);

/// n - |maximum matching of the complement|; exact whenever alpha(g) <= 2.
/// Throws PreconditionViolated if g has an independent triple.
int chromatic_alpha2(const Graph& g);

/// Colouring with n - |M| colours built from a maximum matching M of the
/// complement. Same precondition as chromatic_alpha2.
Coloring alpha2_coloring(const Graph& g);

namespace oracle {

/// Plain exhaustive backtracking k-colourability test. Only properness
/// prunes. Throws OracleScaleExceeded for n > 12.
bool is_k_colorable(const Graph& g, int k);

} // namespace oracle

} // namespace chibound
