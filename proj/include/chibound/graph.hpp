#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chibound {

using Word = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Word bit(int v) noexcept { return Word{1} << v; }

constexpr Word low_mask(int n) noexcept { return n >= 64 ? ~Word{0} : (bit(n) - 1); }

/// A set of vertices of one graph, stored as a single bit row.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(Word rest) : rest_(rest) {}

        int operator*() const noexcept { return std::countr_zero(rest_); }
        iterator& operator++() noexcept
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) noexcept
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        Word rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Word bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices);
    static VertexSet range(int n) { return VertexSet(low_mask(n)); }

    constexpr Word bits() const noexcept { return bits_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    VertexSet with(int v) const noexcept { return VertexSet(bits_ | bit(v)); }
    VertexSet without(int v) const noexcept { return VertexSet(bits_ & ~bit(v)); }

    /// Lowest member; the set must be nonempty.
    int front() const noexcept { return std::countr_zero(bits_); }

    iterator begin() const noexcept { return iterator(bits_); }
    iterator end() const noexcept { return iterator(0); }

    std::vector<int> to_vector() const;

    friend VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet, VertexSet) = default;

private:
    Word bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1 with n <= 64.
/// Row i holds the neighbourhood of vertex i as a bit mask.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    /// Throws CapacityExceeded for n outside 1..64 and InvalidEdge for
    /// loops or out-of-range endpoints.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Builds a graph from adjacency rows, validating symmetry, loops and range.
    static Graph from_rows(int n, std::span<const Word> rows);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    Word row(int v) const noexcept { return adj_[v]; }
    std::span<const Word> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }
    VertexSet neighbors(int v) const noexcept { return VertexSet(adj_[v]); }
    VertexSet vertices() const noexcept { return VertexSet::range(n_); }
    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    int degree(int v) const noexcept { return std::popcount(adj_[v]); }

    std::vector<std::pair<int, int>> edges() const;

    /// Fresh graph equal to this one with the pair {u, v} flipped.
    Graph with_edge_toggled(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept;

private:
    Graph() = default;

    int n_ = 0;
    int m_ = 0;
    std::array<Word, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);

/// Subgraph induced by s, relabelled 0..|s|-1 in ascending original order.
/// Throws EmptySet when s has no members.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Relabels g so that vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

struct DegreeWitness {
    int vertex;
    int degree;
};

/// Lowest-index vertex attaining the maximum degree.
DegreeWitness max_degree_vertex(const Graph& g);
int max_degree(const Graph& g);

bool is_triangle_free(const Graph& g);
std::int64_t count_triangles(const Graph& g);

/// True iff g has no independent set of size 3.
bool is_3k1_free(const Graph& g);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

namespace named {

Graph complete(int n);
Graph empty(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph petersen();

} // namespace named

} // namespace chibound
