#include "chibound/lemma.hpp"

#include "chibound/error.hpp"

#include <algorithm>

namespace chibound {

const char* claim_status_name(ClaimStatus s) noexcept
{
    switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Fails: return "fails";
    case ClaimStatus::Vacuous: return "vacuous";
    }
    return "unknown";
}

const ClaimResult* ClaimReport::find(const std::string& name) const
{
    for (const auto& c : claims)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

void require_no_independent_triple(const Graph& g)
{
    if (!is_3k1_free(g))
        throw Error(Errc::PreconditionViolated, "graph has an independent set of size 3");
}

int clique_in(const Graph& g, VertexSet s)
{
    return s.empty() ? 0 : clique_number(induced_subgraph(g, s));
}

VertexSet clique_witness(const Graph& g, VertexSet s)
{
    if (s.empty())
        return {};
    const auto members = s.to_vector();
    VertexSet out;
    for (int local : max_clique(induced_subgraph(g, s)).members)
        out = out.with(members[local]);
    return out;
}

} // namespace

std::optional<Coloring> singleton_coloring(const Graph& g, int u)
{
    require_no_independent_triple(g);
    if (u < 0 || u >= g.order())
        throw Error(Errc::PreconditionViolated, "vertex out of range");
    const int chi = chromatic_number(g).chi;
    const int n = g.order();
    if (n == 1)
        return Coloring(std::vector<int>{1});

    const VertexSet rest = g.vertices().without(u);
    const auto sub = chromatic_number(induced_subgraph(g, rest));
    if (sub.chi != chi - 1)
        return std::nullopt;

    // Lift the colouring of g - u, then renumber: singleton classes first,
    // pairs after, both ordered by lowest vertex; u takes colour chi.
    const auto others = rest.to_vector();
    std::vector<int> lifted(n, 0);
    for (std::size_t i = 0; i < others.size(); ++i)
        lifted[others[i]] = sub.coloring.color(static_cast<int>(i));

    std::vector<std::pair<int, int>> classes; // (size, lowest vertex) per old colour
    for (int c = 1; c <= sub.chi; ++c) {
        int lowest = n;
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (v != u && lifted[v] == c) {
                lowest = std::min(lowest, v);
                ++size;
            }
        classes.emplace_back(size, lowest);
    }
    std::vector<int> order(sub.chi);
    for (int c = 0; c < sub.chi; ++c)
        order[c] = c + 1;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return classes[a - 1] < classes[b - 1]; });
    std::vector<int> renumber(sub.chi + 1, 0);
    for (int i = 0; i < sub.chi; ++i)
        renumber[order[i]] = i + 1;

    std::vector<int> colors(n, 0);
    for (int v = 0; v < n; ++v)
        colors[v] = v == u ? chi : renumber[lifted[v]];
    return Coloring(std::move(colors));
}

LemmaPartition compute_partition(const Graph& g, const Coloring& coloring, int u)
{
    require_no_independent_triple(g);
    const int n = g.order();
    if (u < 0 || u >= n)
        throw Error(Errc::PreconditionViolated, "vertex out of range");
    if (!coloring.is_proper_for(g))
        throw Error(Errc::InvalidColoring, "colouring is not proper");
    const int chi = chromatic_number(g).chi;
    if (coloring.count() != chi)
        throw Error(Errc::InvalidColoring, "colouring uses " + std::to_string(coloring.count()) +
                                               " colours, chromatic number is " + std::to_string(chi));
    if (coloring.class_size(coloring.color(u)) != 1)
        throw Error(Errc::InvalidColoring, "vertex " + std::to_string(u) + " shares its colour");
    const int delta = max_degree(g);
    if (g.degree(u) != delta)
        throw Error(Errc::NotMaxDegree, "vertex " + std::to_string(u) + " has degree " +
                                            std::to_string(g.degree(u)) + ", maximum is " + std::to_string(delta));

    const VertexSet nu = g.neighbors(u);
    VertexSet v_r, v_s, v_sp, v_t, v_tp, v_k;
    std::vector<std::pair<int, int>> deferred;
    for (int c = 1; c <= chi; ++c) {
        const auto members = coloring.color_class(c).to_vector();
        if (members.size() == 1) {
            v_r = v_r.with(members[0]);
            continue;
        }
        if (members.size() != 2)
            throw Error(Errc::InternalConsistency, "colour class larger than two");
        const int a = members[0];
        const int b = members[1];
        const bool in_a = nu.contains(a);
        const bool in_b = nu.contains(b);
        if (in_a && in_b) {
            deferred.emplace_back(a, b);
        } else if (in_a || in_b) {
            v_s = v_s.with(in_a ? a : b);
            v_sp = v_sp.with(in_a ? b : a);
        } else {
            throw Error(Errc::InternalConsistency, "pair outside N(u) with u forms an independent triple");
        }
    }

    const VertexSet others = v_r.without(u);
    auto misses_r = [&](int v) { return !(others - g.neighbors(v)).empty(); };
    int rerouted = 0;
    for (auto [a, b] : deferred) {
        const bool ma = misses_r(a);
        const bool mb = misses_r(b);
        if (ma && mb)
            ++rerouted;
        if (ma) {
            v_tp = v_tp.with(a);
            v_t = v_t.with(b);
        } else if (mb) {
            v_tp = v_tp.with(b);
            v_t = v_t.with(a);
        } else {
            v_k = v_k.with(a).with(b);
        }
    }

    return LemmaPartition{
        .graph = g,
        .u = u,
        .coloring = coloring,
        .v_r = v_r,
        .v_s = v_s,
        .v_sp = v_sp,
        .v_t = v_t,
        .v_tp = v_tp,
        .v_k = v_k,
        .r = v_r.size(),
        .s = v_s.size(),
        .t = v_t.size(),
        .k = v_k.size() / 2,
        .p = n,
        .delta = delta,
        .chi = chi,
        .rerouted = rerouted,
    };
}

std::vector<IdentityCheck> verify_identities(const LemmaPartition& lp)
{
    const Graph& g = lp.graph;
    std::vector<IdentityCheck> out;
    auto add = [&](std::string name, bool definitional, std::string relation, std::int64_t lhs, std::int64_t rhs) {
        bool holds = relation == "=" ? lhs == rhs : relation == "<=" ? lhs <= rhs : lhs >= rhs;
        out.push_back({std::move(name), definitional, std::move(relation), lhs, rhs, holds});
    };
    add("II", true, "=", lp.r + lp.s + lp.t + lp.k, lp.chi);
    add("III", true, "=", lp.delta, lp.r - 1 + lp.s + 2 * lp.t + 2 * lp.k);
    add("p=2chi-r", true, "=", lp.p, 2 * lp.chi - lp.r);

    int fewest_non_neighbours = lp.p;
    for (int v = 0; v < lp.p; ++v)
        fewest_non_neighbours = std::min(fewest_non_neighbours, lp.p - 1 - g.degree(v));
    add("IV", false, ">=", fewest_non_neighbours, lp.s);

    const int omega = clique_number(g);
    add("V.a", false, "<=", lp.r + clique_in(g, lp.v_s) + clique_in(g, lp.v_t), omega);
    add("V.b", false, "<=", lp.r + clique_in(g, lp.v_s | lp.v_t | lp.v_k), omega);

    const VertexSet outside = g.vertices() - g.neighbors(lp.u).with(lp.u);
    out.push_back({"v_sp=V-N[u]", false, "=", lp.v_sp.size(), outside.size(), lp.v_sp == outside});
    return out;
}

namespace {

// Lowest-index member of `among` not adjacent to v (and distinct from it).
std::optional<int> first_non_neighbour(const Graph& g, int v, VertexSet among)
{
    const VertexSet missing = (among - g.neighbors(v)).without(v);
    if (missing.empty())
        return std::nullopt;
    return missing.front();
}

ClaimResult pairwise_claim(const Graph& g, std::string name, VertexSet left, VertexSet right)
{
    ClaimResult res{std::move(name), ClaimStatus::Vacuous, {}};
    if (left.empty() || right.empty())
        return res;
    res.status = ClaimStatus::Holds;
    for (int v : left)
        if (auto w = first_non_neighbour(g, v, right)) {
            res.status = ClaimStatus::Fails;
            res.witness = {v, *w};
            return res;
        }
    return res;
}

int partner_of(const LemmaPartition& lp, int v)
{
    for (int w : lp.coloring.color_class(lp.coloring.color(v)))
        if (w != v)
            return w;
    return -1;
}

} // namespace

ClaimReport check_claims(const LemmaPartition& lp)
{
    const Graph& g = lp.graph;
    ClaimReport report;
    report.claims.push_back(pairwise_claim(g, "claim1", lp.v_r, lp.v_s | lp.v_t));
    report.claims.push_back(pairwise_claim(g, "claim2", lp.v_s, lp.v_t));

    {
        ClaimResult res{"claim3", ClaimStatus::Vacuous, {}};
        for (int x : lp.v_s) {
            auto y = first_non_neighbour(g, x, lp.v_s);
            if (!y)
                continue;
            if (res.status == ClaimStatus::Vacuous)
                res.status = ClaimStatus::Holds;
            if (auto v = first_non_neighbour(g, x, lp.v_r)) {
                res.status = ClaimStatus::Fails;
                res.witness = {x, *y, *v};
                break;
            }
        }
        report.claims.push_back(res);
    }

    {
        ClaimResult res{"claim4", ClaimStatus::Vacuous, {}};
        const VertexSet others = lp.v_r.without(lp.u);
        const auto tp = lp.v_tp.to_vector();
        for (std::size_t i = 0; i < tp.size() && res.status != ClaimStatus::Fails; ++i) {
            for (std::size_t j = 0; j < tp.size() && res.status != ClaimStatus::Fails; ++j) {
                if (i == j)
                    continue;
                const VertexSet miss_a = others - g.neighbors(tp[i]);
                const VertexSet miss_b = others - g.neighbors(tp[j]);
                // Need u_i in miss_a and u_j in miss_b with u_i != u_j.
                int ui = -1;
                int uj = -1;
                for (int x : miss_a) {
                    const VertexSet choices = miss_b.without(x);
                    if (!choices.empty()) {
                        ui = x;
                        uj = choices.front();
                        break;
                    }
                }
                if (ui < 0)
                    continue;
                if (res.status == ClaimStatus::Vacuous)
                    res.status = ClaimStatus::Holds;
                const int a = partner_of(lp, tp[i]);
                const int b = partner_of(lp, tp[j]);
                if (!g.adjacent(a, b)) {
                    res.status = ClaimStatus::Fails;
                    res.witness = {tp[i], tp[j], ui, uj, a, b};
                }
            }
        }
        report.claims.push_back(res);
    }

    const int omega = clique_number(g);
    {
        const VertexSet cs = clique_witness(g, lp.v_s);
        const VertexSet ct = clique_witness(g, lp.v_t);
        ClaimResult res{"V.a", ClaimStatus::Holds, {}};
        if (lp.r + cs.size() + ct.size() > omega) {
            res.status = ClaimStatus::Fails;
            res.witness = (lp.v_r | cs | ct).to_vector();
        }
        report.claims.push_back(res);
    }
    {
        const VertexSet c = clique_witness(g, lp.v_s | lp.v_t | lp.v_k);
        ClaimResult res{"V.b", ClaimStatus::Holds, {}};
        if (lp.r + c.size() > omega) {
            res.status = ClaimStatus::Fails;
            res.witness = (lp.v_r | c).to_vector();
        }
        report.claims.push_back(res);
    }
    return report;
}

bool confirm_failure(const LemmaPartition& lp, const ClaimResult& claim)
{
    const Graph& g = lp.graph;
    const auto& w = claim.witness;
    if (claim.status != ClaimStatus::Fails)
        return false;
    if (claim.name == "claim1")
        return w.size() == 2 && lp.v_r.contains(w[0]) && (lp.v_s | lp.v_t).contains(w[1]) && w[0] != w[1] &&
               !g.adjacent(w[0], w[1]);
    if (claim.name == "claim2")
        return w.size() == 2 && lp.v_s.contains(w[0]) && lp.v_t.contains(w[1]) && !g.adjacent(w[0], w[1]);
    if (claim.name == "claim3")
        return w.size() == 3 && lp.v_s.contains(w[0]) && lp.v_s.contains(w[1]) && w[0] != w[1] &&
               !g.adjacent(w[0], w[1]) && lp.v_r.contains(w[2]) && !g.adjacent(w[0], w[2]);
    if (claim.name == "claim4") {
        if (w.size() != 6)
            return false;
        const VertexSet others = lp.v_r.without(lp.u);
        return lp.v_tp.contains(w[0]) && lp.v_tp.contains(w[1]) && w[0] != w[1] && others.contains(w[2]) &&
               others.contains(w[3]) && w[2] != w[3] && !g.adjacent(w[0], w[2]) && !g.adjacent(w[1], w[3]) &&
               lp.coloring.color(w[4]) == lp.coloring.color(w[0]) && w[4] != w[0] &&
               lp.coloring.color(w[5]) == lp.coloring.color(w[1]) && w[5] != w[1] && !g.adjacent(w[4], w[5]);
    }
    if (claim.name == "V.a" || claim.name == "V.b") {
        // The witness is v_r plus cliques inside the named sets; it must be
        // a clique larger than omega would allow, or mix sets as claimed.
        VertexSet set;
        for (int v : w)
            set = set.with(v);
        const VertexSet rest = set - lp.v_r;
        const VertexSet pool = claim.name == "V.a" ? (lp.v_s | lp.v_t) : (lp.v_s | lp.v_t | lp.v_k);
        if ((lp.v_r - set).size() != 0 || !(rest - pool).empty())
            return false;
        const int omega = clique_number(g);
        if (claim.name == "V.b")
            return is_clique(g, rest) && lp.r + rest.size() > omega;
        const VertexSet in_s = rest & lp.v_s;
        const VertexSet in_t = rest & lp.v_t;
        return is_clique(g, in_s) && is_clique(g, in_t) && lp.r + in_s.size() + in_t.size() > omega;
    }
    return false;
}

LemmaReplay replay_lemma(const Graph& g)
{
    LemmaReplay out;
    out.applicable = is_3k1_free(g);
    if (!out.applicable)
        return out;
    const int delta = max_degree(g);
    for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) != delta)
            continue;
        out.tried.push_back(u);
        if (auto coloring = singleton_coloring(g, u)) {
            out.partition = compute_partition(g, *coloring, u);
            out.identities = verify_identities(*out.partition);
            out.claims = check_claims(*out.partition);
            return out;
        }
    }
    return out;
}

} // namespace chibound
