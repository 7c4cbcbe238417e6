#include "chibound/enumerate.hpp"

#include "chibound/canonical.hpp"
#include "chibound/error.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chibound {

namespace {

using Clock = std::chrono::steady_clock;

void for_each_independent_set(const Graph& g, Word chosen, Word candidates,
                              const std::function<void(Word)>& visit)
{
    visit(chosen);
    for (Word rest = candidates; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Word later = rest & ~bit(v) & ~low_mask(v);
        for_each_independent_set(g, chosen | bit(v), later & ~g.row(v), visit);
    }
}

Graph extend(const Graph& parent, Word neighborhood)
{
    const int m = parent.order();
    std::array<Word, kMaxVertices> rows{};
    for (int v = 0; v < m; ++v)
        rows[v] = parent.row(v) | (((neighborhood >> v) & 1U) ? bit(m) : 0);
    rows[m] = neighborhood;
    return Graph::from_rows(m + 1, std::span<const Word>(rows.data(), m + 1));
}

// Cheap isomorphism invariant used to pre-select the designated vertex:
// (degree, sum of neighbour degrees), larger is preferred.
std::uint64_t vertex_score(const Graph& g, int v)
{
    std::uint64_t around = 0;
    for (int u : g.neighbors(v))
        around += static_cast<std::uint64_t>(g.degree(u));
    return (static_cast<std::uint64_t>(g.degree(v)) << 32) | around;
}

struct Child {
    CanonicalForm form;
    Graph graph;
};

struct Tree {
    int target;
    std::function<bool(const Graph&)> keep;
    long long nodes = 0;

    void descend(const Graph& node, std::vector<Graph>& out)
    {
        ++nodes;
        if (node.order() == target) {
            out.push_back(node);
            return;
        }
        for (const auto& child : canonical_children(node, keep))
            descend(child, out);
    }
};

void check_ramsey_scale(int n, int k)
{
    if (n < 1 || n > kMaxRamseyOrder)
        throw Error(Errc::ScaleExceeded, "Ramsey enumeration supports 1..16 vertices, got " + std::to_string(n));
    if (n > kMaxTriangleFreeOrder && k > 5)
        throw Error(Errc::ScaleExceeded, "Ramsey enumeration beyond 11 vertices requires k <= 5");
}

EnumStats run_tree(int n, std::string predicate, const std::function<bool(const Graph&)>& keep,
                   const GraphSink& sink, const EnumerateOptions& options)
{
    const auto start = Clock::now();
    EnumStats stats;
    stats.n = n;
    stats.predicate = std::move(predicate);

    const Graph root = named::empty(1);
    std::vector<Graph> results;
    if (!keep(root)) {
        stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return stats;
    }

    if (options.jobs <= 1) {
        Tree tree{n, keep};
        tree.descend(root, results);
        stats.nodes = tree.nodes;
    } else {
        // Expand breadth-first until the frontier offers enough independent
        // subtrees; level order preserves the serial emission order.
        std::vector<Graph> frontier{root};
        const std::size_t wanted = static_cast<std::size_t>(options.jobs) * 8;
        while (!frontier.empty() && frontier.front().order() < n && frontier.size() < wanted) {
            std::vector<Graph> next;
            for (const auto& g : frontier) {
                ++stats.nodes;
                auto kids = canonical_children(g, keep);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            frontier = std::move(next);
        }
        std::vector<std::vector<Graph>> parts(frontier.size());
        std::vector<long long> part_nodes(frontier.size(), 0);
        const long long count = static_cast<long long>(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
#endif
        for (long long i = 0; i < count; ++i) {
            Tree tree{n, keep};
            tree.descend(frontier[i], parts[i]);
            part_nodes[i] = tree.nodes;
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            results.insert(results.end(), parts[i].begin(), parts[i].end());
            stats.nodes += part_nodes[i];
        }
    }

    for (const auto& g : results)
        sink(g);
    stats.count = static_cast<long long>(results.size());
    stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return stats;
}

} // namespace

std::vector<Graph> canonical_children(const Graph& parent, const std::function<bool(const Graph&)>& keep)
{
    const int m = parent.order();
    if (m + 1 > kMaxCanonOrder)
        throw Error(Errc::ScaleExceeded, "cannot extend beyond 16 vertices");
    std::vector<Child> children;
    for_each_independent_set(parent, 0, parent.vertices().bits(), [&](Word neighborhood) {
        Graph child = extend(parent, neighborhood);
        if (!keep(child))
            return;
        // The new vertex must be able to be the designated one.
        const std::uint64_t mine = vertex_score(child, m);
        for (int v = 0; v < m; ++v)
            if (vertex_score(child, v) > mine)
                return;
        const auto lab = canonical_labeling(child);
        // Designated vertex: best score, then highest canonical position.
        int designated = -1;
        for (int v = 0; v <= m; ++v) {
            if (vertex_score(child, v) != mine)
                continue;
            if (designated < 0 || lab.position[v] > lab.position[designated])
                designated = v;
        }
        if (lab.orbit[designated] != lab.orbit[m])
            return;
        children.push_back({CanonicalForm{emit_graph6(lab.graph)}, lab.graph});
    });
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.form < b.form; });
    std::vector<Graph> out;
    out.reserve(children.size());
    for (std::size_t i = 0; i < children.size(); ++i)
        if (i == 0 || children[i].form != children[i - 1].form)
            out.push_back(children[i].graph);
    return out;
}

EnumStats enumerate_triangle_free(int n, const GraphSink& sink, const EnumerateOptions& options)
{
    if (n < 1 || n > kMaxTriangleFreeOrder)
        throw Error(Errc::ScaleExceeded, "triangle-free enumeration supports 1..11 vertices, got " + std::to_string(n));
    return run_tree(n, "triangle-free", [](const Graph&) { return true; }, sink, options);
}

std::vector<Graph> triangle_free_graphs(int n, const EnumerateOptions& options)
{
    std::vector<Graph> out;
    enumerate_triangle_free(n, [&](const Graph& g) { out.push_back(g); }, options);
    return out;
}

EnumStats enumerate_ramsey(int n, int k, const std::function<void(const RamseyWitness&)>& sink,
                           const EnumerateOptions& options)
{
    check_ramsey_scale(n, k);
    auto keep = [k](const Graph& g) { return independence_number(g) < k; };
    return run_tree(
        n, "triangle-free, alpha < " + std::to_string(k), keep,
        [&](const Graph& g) { sink(RamseyWitness(g, k, Enumerated{})); }, options);
}

std::vector<RamseyWitness> ramsey_graphs(int n, int k, const EnumerateOptions& options)
{
    std::vector<RamseyWitness> out;
    enumerate_ramsey(n, k, [&](const RamseyWitness& w) { out.push_back(w); }, options);
    return out;
}

long long bruteforce_count_oracle(int n, const std::function<bool(const Graph&)>& predicate)
{
    if (n < 1 || n > kMaxOracleOrder)
        throw Error(Errc::OracleScaleExceeded, "brute-force counting supports 1..7 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::unordered_set<std::string> classes;
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1U)
                edges.push_back(pairs[b]);
        const Graph g = Graph::from_edges(n, edges);
        if (predicate(g))
            classes.insert(canonical_form(g).bytes);
    }
    return static_cast<long long>(classes.size());
}

} // namespace chibound
