#include "chibound/canonical.hpp"

#include "chibound/error.hpp"
#include "chibound/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace chibound {

namespace {

using Partition = std::vector<Word>; // ordered cells

// Splits cells until every vertex of a cell has the same number of
// neighbours in every other cell. Sub-cells are ordered by that count, so
// the result commutes with relabelling.
void refine(const Graph& g, Partition& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const Word splitter = cells[s];
            for (std::size_t x = 0; x < cells.size(); ++x) {
                const Word cell = cells[x];
                if (std::popcount(cell) < 2)
                    continue;
                std::array<Word, kMaxCanonOrder + 1> by_count{};
                int distinct = 0;
                for (Word rest = cell; rest; rest &= rest - 1) {
                    const int v = std::countr_zero(rest);
                    const int c = std::popcount(g.row(v) & splitter);
                    if (by_count[c] == 0)
                        ++distinct;
                    by_count[c] |= bit(v);
                }
                if (distinct < 2)
                    continue;
                Partition pieces;
                for (Word piece : by_count)
                    if (piece)
                        pieces.push_back(piece);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run()
    {
        Partition root{g_.vertices().bits()};
        refine(g_, root);
        std::vector<int> prefix;
        search(root, prefix);

        CanonicalLabeling out{best_perm_, relabel(g_, best_perm_), orbits(std::nullopt), generators_, leaves_};
        return out;
    }

private:
    // Union-find orbits of the group generated by the stored generators
    // that fix every vertex of `fixed` (all generators when absent).
    std::vector<int> orbits(std::optional<std::vector<int>> fixed) const
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& gen : generators_) {
            if (fixed) {
                bool fixes = true;
                for (int v : *fixed)
                    if (gen[v] != v) {
                        fixes = false;
                        break;
                    }
                if (!fixes)
                    continue;
            }
            for (int v = 0; v < n_; ++v) {
                int a = find(v);
                int b = find(gen[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::vector<int> rep(n_);
        for (int v = 0; v < n_; ++v)
            rep[v] = find(v);
        return rep;
    }

    static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b)
    {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i])
            ++i;
        return i;
    }

    // Returns the depth to unwind to, or -1 to carry on normally.
    long search(const Partition& cells, std::vector<int>& prefix)
    {
        if (cells.size() == static_cast<std::size_t>(n_))
            return leaf(cells, prefix);

        std::size_t target = 0;
        while (std::popcount(cells[target]) == 1)
            ++target;
        const long depth = static_cast<long>(prefix.size());

        std::vector<int> explored;
        for (Word rest = cells[target]; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (!explored.empty()) {
                const auto orb = orbits(prefix);
                bool covered = false;
                for (int w : explored)
                    if (orb[w] == orb[v]) {
                        covered = true;
                        break;
                    }
                if (covered)
                    continue;
            }
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(bit(v));
            child.push_back(cells[target] & ~bit(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            refine(g_, child);

            prefix.push_back(v);
            const long jump = search(child, prefix);
            prefix.pop_back();
            explored.push_back(v);
            if (jump >= 0 && jump < depth)
                return jump;
        }
        return -1;
    }

    long leaf(const Partition& cells, const std::vector<int>& prefix)
    {
        ++leaves_;
        std::vector<int> perm(n_);
        for (int p = 0; p < n_; ++p)
            perm[std::countr_zero(cells[p])] = p;
        std::vector<Word> cert(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (Word rest = g_.row(v); rest; rest &= rest - 1)
                cert[perm[v]] |= bit(perm[std::countr_zero(rest)]);

        if (first_cert_.empty()) {
            first_cert_ = best_cert_ = cert;
            first_perm_ = best_perm_ = perm;
            first_path_ = best_path_ = prefix;
            return -1;
        }
        if (cert == first_cert_) {
            record(first_perm_, perm);
            return static_cast<long>(common_prefix(prefix, first_path_));
        }
        if (cert == best_cert_) {
            record(best_perm_, perm);
            return static_cast<long>(common_prefix(prefix, best_path_));
        }
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_perm_ = perm;
            best_path_ = prefix;
        }
        return -1;
    }

    // Both labellings give the same graph, so v -> reference^-1(current(v))
    // is an automorphism.
    void record(const std::vector<int>& reference, const std::vector<int>& current)
    {
        std::vector<int> inverse(n_);
        for (int v = 0; v < n_; ++v)
            inverse[reference[v]] = v;
        std::vector<int> gen(n_);
        for (int v = 0; v < n_; ++v)
            gen[v] = inverse[current[v]];
        generators_.push_back(std::move(gen));
    }

    const Graph& g_;
    int n_;
    std::vector<Word> first_cert_;
    std::vector<Word> best_cert_;
    std::vector<int> first_perm_;
    std::vector<int> best_perm_;
    std::vector<int> first_path_;
    std::vector<int> best_path_;
    std::vector<std::vector<int>> generators_;
    long long leaves_ = 0;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g)
{
    if (g.order() > kMaxCanonOrder)
        throw Error(Errc::CanonScaleExceeded,
                    "canonical labelling supports at most 16 vertices, got " + std::to_string(g.order()));
    return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return {emit_graph6(canonical_labeling(g).graph)}; }

} // namespace chibound
