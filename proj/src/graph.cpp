#include "chibound/graph.hpp"

#include "chibound/error.hpp"

#include <algorithm>
#include <string>

namespace chibound {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::EmptySet: return "EmptySet";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::BadLength: return "BadLength";
    case Errc::BadByte: return "BadByte";
    case Errc::Sparse6Unsupported: return "Sparse6Unsupported";
    case Errc::Digraph6Unsupported: return "Digraph6Unsupported";
    case Errc::ParseError: return "ParseError";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::OracleScaleExceeded: return "OracleScaleExceeded";
    case Errc::ParityError: return "ParityError";
    case Errc::OutOfTable: return "OutOfTable";
    case Errc::UnknownRamsey: return "UnknownRamsey";
    case Errc::ConfigError: return "ConfigError";
    case Errc::CanonScaleExceeded: return "CanonScaleExceeded";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::InvalidColoring: return "InvalidColoring";
    case Errc::NotMaxDegree: return "NotMaxDegree";
    case Errc::InvalidDifference: return "InvalidDifference";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

VertexSet VertexSet::of(std::initializer_list<int> vertices)
{
    Word bits = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices)
            throw Error(Errc::InvalidEdge, "vertex " + std::to_string(v) + " out of range");
        bits |= bit(v);
    }
    return VertexSet(bits);
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this)
        out.push_back(v);
    return out;
}

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw Error(Errc::CapacityExceeded, "graph order " + std::to_string(n) + " outside 1..64");
}

} // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    check_order(n);
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(Errc::InvalidEdge,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside 0.." +
                            std::to_string(n - 1));
        if (u == v)
            throw Error(Errc::InvalidEdge, "self-loop at vertex " + std::to_string(u));
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
    }
    int twice = 0;
    for (int i = 0; i < n; ++i)
        twice += std::popcount(g.adj_[i]);
    g.m_ = twice / 2;
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const Word> rows)
{
    check_order(n);
    if (rows.size() != static_cast<std::size_t>(n))
        throw Error(Errc::InvalidEdge, "expected " + std::to_string(n) + " adjacency rows");
    Graph g;
    g.n_ = n;
    const Word range = low_mask(n);
    int twice = 0;
    for (int i = 0; i < n; ++i) {
        const Word r = rows[i];
        if (r & ~range)
            throw Error(Errc::InvalidEdge, "row " + std::to_string(i) + " references a vertex >= n");
        if (r & bit(i))
            throw Error(Errc::InvalidEdge, "self-loop at vertex " + std::to_string(i));
        for (Word rest = r; rest; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            if (!((rows[j] >> i) & 1U))
                throw Error(Errc::InvalidEdge,
                            "asymmetric adjacency between " + std::to_string(i) + " and " + std::to_string(j));
        }
        g.adj_[i] = r;
        twice += std::popcount(r);
    }
    g.m_ = twice / 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int i = 0; i < n_; ++i)
        for (Word rest = adj_[i] & ~low_mask(i + 1); rest; rest &= rest - 1)
            out.emplace_back(i, std::countr_zero(rest));
    return out;
}

Graph Graph::with_edge_toggled(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw Error(Errc::InvalidEdge, "cannot toggle pair " + std::to_string(u) + "-" + std::to_string(v));
    Graph g = *this;
    const bool had = adjacent(u, v);
    g.adj_[u] ^= bit(v);
    g.adj_[v] ^= bit(u);
    g.m_ += had ? -1 : 1;
    return g;
}

bool operator==(const Graph& a, const Graph& b) noexcept
{
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    std::array<Word, kMaxVertices> rows{};
    const Word range = low_mask(n);
    for (int i = 0; i < n; ++i)
        rows[i] = ~g.row(i) & range & ~bit(i);
    return Graph::from_rows(n, std::span<const Word>(rows.data(), n));
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    s = s & g.vertices();
    if (s.empty())
        throw Error(Errc::EmptySet, "induced subgraph of an empty vertex set");
    const auto members = s.to_vector();
    const int k = static_cast<int>(members.size());
    std::array<Word, kMaxVertices> rows{};
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (g.adjacent(members[a], members[b]))
                rows[a] |= bit(b);
    return Graph::from_rows(k, std::span<const Word>(rows.data(), k));
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    const int n = g.order();
    if (perm.size() != static_cast<std::size_t>(n))
        throw Error(Errc::InvalidEdge, "permutation length does not match graph order");
    Word seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || (seen & bit(p)))
            throw Error(Errc::InvalidEdge, "relabelling is not a permutation");
        seen |= bit(p);
    }
    std::array<Word, kMaxVertices> rows{};
    for (int i = 0; i < n; ++i)
        for (Word rest = g.row(i); rest; rest &= rest - 1)
            rows[perm[i]] |= bit(perm[std::countr_zero(rest)]);
    return Graph::from_rows(n, std::span<const Word>(rows.data(), n));
}

DegreeWitness max_degree_vertex(const Graph& g)
{
    DegreeWitness best{0, g.degree(0)};
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > best.degree)
            best = {v, g.degree(v)};
    return best;
}

int max_degree(const Graph& g) { return max_degree_vertex(g).degree; }

std::int64_t count_triangles(const Graph& g)
{
    std::int64_t count = 0;
    for (int i = 0; i < g.order(); ++i) {
        const Word higher = g.row(i) & ~low_mask(i + 1);
        for (Word rest = higher; rest; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            count += std::popcount(g.row(i) & g.row(j) & ~low_mask(j + 1));
        }
    }
    return count;
}

bool is_triangle_free(const Graph& g)
{
    for (int i = 0; i < g.order(); ++i)
        for (Word rest = g.row(i) & ~low_mask(i + 1); rest; rest &= rest - 1)
            if (g.row(i) & g.row(std::countr_zero(rest)))
                return false;
    return true;
}

bool is_3k1_free(const Graph& g)
{
    // An independent triple in g is a triangle in the complement.
    const int n = g.order();
    const Word range = low_mask(n);
    for (int i = 0; i < n; ++i) {
        const Word non_i = ~g.row(i) & range & ~bit(i);
        for (Word rest = non_i & ~low_mask(i + 1); rest; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            const Word non_j = ~g.row(j) & range & ~bit(j);
            if (non_i & non_j)
                return false;
        }
    }
    return true;
}

bool is_clique(const Graph& g, VertexSet s)
{
    for (int v : s)
        if ((s.without(v).bits() & ~g.row(v)) != 0)
            return false;
    return true;
}

bool is_independent(const Graph& g, VertexSet s)
{
    for (int v : s)
        if (g.row(v) & s.bits())
            return false;
    return true;
}

namespace named {

Graph complete(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph empty(int n) { return Graph::from_edges(n, std::span<const std::pair<int, int>>{}); }

Graph cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph path(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph star(int leaves)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen()
{
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

} // namespace named

} // namespace chibound
