#include "chibound/invariants.hpp"

#include "chibound/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace chibound {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors))
{
    count_ = colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
    class_sizes_.assign(count_, 0);
    for (int c : colors_) {
        if (c < 1)
            throw Error(Errc::InvalidColoring, "colour indices start at 1");
        ++class_sizes_[c - 1];
    }
    for (int c = 1; c <= count_; ++c)
        if (class_sizes_[c - 1] == 0)
            throw Error(Errc::InvalidColoring, "colour " + std::to_string(c) + " is unused");
}

VertexSet Coloring::color_class(int c) const
{
    Word bits = 0;
    for (int v = 0; v < order(); ++v)
        if (colors_[v] == c)
            bits |= bit(v);
    return VertexSet(bits);
}

bool Coloring::is_proper_for(const Graph& g) const
{
    if (order() != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (colors_[u] == colors_[v])
            return false;
    return true;
}

bool Matching::is_valid_for(const Graph& g) const
{
    Word used = 0;
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b))
            return false;
        if ((used & bit(a)) || (used & bit(b)))
            return false;
        used |= bit(a) | bit(b);
    }
    return true;
}

// ---------------------------------------------------------------- clique

namespace {

// Branch and bound over bit rows; candidates are greedily coloured and
// visited in reverse colour order so the colour index bounds the clique
// still reachable from the current node.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    CliqueResult run()
    {
        expand(0, 0, g_.vertices().bits());
        return {best_size_, VertexSet(best_)};
    }

private:
    void expand(Word current, int size, Word candidates)
    {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> bound{};
        int count = 0;
        Word uncolored = candidates;
        int color = 0;
        while (uncolored) {
            ++color;
            Word q = uncolored;
            while (q) {
                const int v = std::countr_zero(q);
                q &= ~g_.row(v) & ~bit(v);
                uncolored &= ~bit(v);
                order[count] = v;
                bound[count] = color;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best_size_)
                return;
            const int v = order[i];
            const Word next = candidates & g_.row(v);
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = current | bit(v);
                }
            } else {
                expand(current | bit(v), size + 1, next);
            }
            candidates &= ~bit(v);
        }
    }

    const Graph& g_;
    int best_size_ = 0;
    Word best_ = 0;
};

} // namespace

CliqueResult max_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) { return max_clique(g).size; }

CliqueResult max_independent_set(const Graph& g) { return max_clique(complement(g)); }

int independence_number(const Graph& g) { return max_clique(complement(g)).size; }

// ---------------------------------------------------------------- colouring

namespace {

class SaturationSearch {
public:
    SaturationSearch(const Graph& g, int lower_bound) : g_(g), n_(g.order()), lower_(lower_bound)
    {
        for (int v = 0; v < n_; ++v)
            degree_[v] = g.degree(v);
    }

    std::vector<int> run()
    {
        greedy();
        if (best_count_ > lower_) {
            color_.fill(0);
            sat_.fill(0);
            branch(0, 0);
        }
        return best_colors_;
    }

private:
    // Maximum saturation, ties by degree, then by lowest index.
    int pick() const
    {
        int best = -1;
        int best_sat = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] != 0)
                continue;
            const int s = std::popcount(sat_[v]);
            if (s > best_sat || (s == best_sat && degree_[v] > degree_[best])) {
                best = v;
                best_sat = s;
            }
        }
        return best;
    }

    void assign(int v, int c)
    {
        color_[v] = c;
        for (Word rest = g_.row(v); rest; rest &= rest - 1)
            sat_[std::countr_zero(rest)] |= bit(c - 1);
    }

    void greedy()
    {
        color_.fill(0);
        sat_.fill(0);
        int used = 0;
        for (int step = 0; step < n_; ++step) {
            const int v = pick();
            const int c = std::countr_one(sat_[v]) + 1;
            assign(v, c);
            used = std::max(used, c);
        }
        best_count_ = used;
        best_colors_.assign(color_.begin(), color_.begin() + n_);
    }

    void branch(int colored, int used)
    {
        if (colored == n_) {
            best_count_ = used;
            best_colors_.assign(color_.begin(), color_.begin() + n_);
            return;
        }
        const int v = pick();
        const int limit = std::min(used + 1, best_count_ - 1);
        const auto saved = sat_;
        for (int c = 1; c <= limit; ++c) {
            if (sat_[v] & bit(c - 1))
                continue;
            assign(v, c);
            branch(colored + 1, std::max(used, c));
            color_[v] = 0;
            sat_ = saved;
            if (best_count_ <= lower_)
                return;
            if (c >= best_count_ - 1)
                break;
        }
    }

    const Graph& g_;
    int n_;
    int lower_;
    std::array<int, kMaxVertices> degree_{};
    std::array<int, kMaxVertices> color_{};
    std::array<Word, kMaxVertices> sat_{};
    int best_count_ = 0;
    std::vector<int> best_colors_;
};

} // namespace

ChromaticResult chromatic_number(const Graph& g, ChromaticMethod method)
{
    if (method == ChromaticMethod::Auto && is_3k1_free(g)) {
        auto coloring = alpha2_coloring(g);
        const int chi = coloring.count();
        return {chi, std::move(coloring)};
    }
    const int omega = clique_number(g);
    Coloring coloring(SaturationSearch(g, omega).run());
    return {coloring.count(), std::move(coloring)};
}

// ---------------------------------------------------------------- matching

namespace {

// Edmonds' blossom algorithm, O(n^3): BFS for augmenting paths from each
// exposed vertex, contracting odd cycles by relabelling their base.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order())
    {
        match_.fill(-1);
    }

    Matching run()
    {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1)
                continue;
            int u = find_path(v);
            while (u != -1) {
                const int pv = parent_[u];
                const int ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        Matching m;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v)
                m.pairs.emplace_back(v, match_[v]);
        return m;
    }

private:
    int lowest_common_base(int a, int b)
    {
        std::array<bool, kMaxVertices> seen{};
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1)
                break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            blossom_[base_[v]] = true;
            blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root)
    {
        used_.fill(false);
        parent_.fill(-1);
        for (int i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (Word rest = g_.row(v); rest; rest &= rest - 1) {
                const int to = std::countr_zero(rest);
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    const int cur = lowest_common_base(v, to);
                    blossom_.fill(false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1)
                        return to;
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::array<int, kMaxVertices> match_{};
    std::array<int, kMaxVertices> parent_{};
    std::array<int, kMaxVertices> base_{};
    std::array<bool, kMaxVertices> used_{};
    std::array<bool, kMaxVertices> blossom_{};
};

} // namespace

Matching max_matching(const Graph& g) { return BlossomMatcher(g).run(); }

Coloring alpha2_coloring(const Graph& g)
{
    if (!is_3k1_free(g))
        throw Error(Errc::PreconditionViolated, "alpha2 colouring requires an independence number of at most 2");
    const int n = g.order();
    const auto matching = max_matching(complement(g));
    std::vector<int> partner(n, -1);
    for (auto [a, b] : matching.pairs) {
        partner[a] = b;
        partner[b] = a;
    }
    // Classes numbered by their lowest vertex.
    std::vector<int> colors(n, 0);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (colors[v] != 0)
            continue;
        colors[v] = ++next;
        if (partner[v] != -1)
            colors[partner[v]] = next;
    }
    return Coloring(std::move(colors));
}

int chromatic_alpha2(const Graph& g)
{
    if (!is_3k1_free(g))
        throw Error(Errc::PreconditionViolated, "chromatic_alpha2 requires an independence number of at most 2");
    return g.order() - max_matching(complement(g)).size();
}

// ---------------------------------------------------------------- oracle

namespace oracle {

namespace {

bool extend(const Graph& g, int k, int v, std::vector<int>& colors)
{
    if (v == g.order())
        return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.adjacent(u, v) && colors[u] == c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        colors[v] = c;
        if (extend(g, k, v + 1, colors))
            return true;
    }
    colors[v] = 0;
    return false;
}

} // namespace

bool is_k_colorable(const Graph& g, int k)
{
    if (g.order() > 12)
        throw Error(Errc::OracleScaleExceeded, "colourability oracle limited to 12 vertices");
    if (k <= 0)
        return false;
    std::vector<int> colors(g.order(), 0);
    return extend(g, k, 0, colors);
}

} // namespace oracle

} // namespace chibound
