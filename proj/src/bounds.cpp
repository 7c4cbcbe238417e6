#include "chibound/bounds.hpp"

#include "chibound/error.hpp"
#include "chibound/invariants.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#ifndef CHIBOUND_RAMSEY_CONFIG
#define CHIBOUND_RAMSEY_CONFIG "data/ramsey_known.toml"
#endif

namespace chibound {

namespace {

std::int64_t exact_div(std::int64_t numerator, std::int64_t denominator, const char* what)
{
    if (numerator % denominator != 0)
        throw Error(Errc::InternalConsistency,
                    std::string(what) + ": " + std::to_string(numerator) + " is not divisible by " +
                        std::to_string(denominator));
    return numerator / denominator;
}

} // namespace

std::int64_t lemma1_bound(int omega)
{
    if (omega < 1)
        throw Error(Errc::PreconditionViolated, "clique number must be positive");
    if (omega % 2 == 0)
        throw Error(Errc::ParityError, "odd-clique bound needs odd omega, got " + std::to_string(omega));
    const std::int64_t w = omega;
    return exact_div(w * w + 12 * w - 13, 8, "odd-clique bound");
}

std::int64_t lemma2_bound(int omega)
{
    if (omega < 2)
        throw Error(Errc::PreconditionViolated, "even-clique bound needs omega >= 2");
    if (omega % 2 != 0)
        throw Error(Errc::ParityError, "even-clique bound needs even omega, got " + std::to_string(omega));
    const std::int64_t w = omega;
    return exact_div(w * w + 10 * w, 8, "even-clique bound");
}

std::int64_t table1_bound(int omega)
{
    if (omega < kTableMin || omega > kTableMax)
        throw Error(Errc::OutOfTable, "table covers omega in 2..11, got " + std::to_string(omega));
    if (omega == 7)
        return 14;
    if (omega == 9)
        return 21;
    return omega % 2 == 1 ? lemma1_bound(omega) : lemma2_bound(omega);
}

std::int64_t reed_bound(int delta, int omega)
{
    if (delta < 0 || omega < 1)
        throw Error(Errc::PreconditionViolated, "need delta >= 0 and omega >= 1");
    return (static_cast<std::int64_t>(delta) + omega + 2) / 2;
}

std::int64_t conjecture2_bound(int delta, int omega)
{
    if (delta < 0 || omega < 1)
        throw Error(Errc::PreconditionViolated, "need delta >= 0 and omega >= 1");
    return (static_cast<std::int64_t>(delta) + omega + 1) / 2;
}

std::vector<RamseyCandidate> conjecture1_candidates(int omega)
{
    if (omega < 1)
        throw Error(Errc::PreconditionViolated, "clique number must be positive");
    const std::int64_t w = omega;
    if (omega % 2 == 1)
        return {{'A', exact_div(w * w + 8 * w - 9, 4, "candidate A"), Parity::Even},
                {'B', exact_div(w * w + 8 * w - 13, 4, "candidate B"), Parity::Odd}};
    return {{'C', exact_div(w * w + 6 * w, 4, "candidate C"), Parity::Even},
            {'D', exact_div(w * w + 6 * w - 4, 4, "candidate D"), Parity::Odd}};
}

bool conjecture1_check(int omega, std::int64_t r_actual)
{
    const Parity parity = r_actual % 2 == 0 ? Parity::Even : Parity::Odd;
    for (const auto& c : conjecture1_candidates(omega))
        if (c.requires_parity == parity)
            return c.value == r_actual;
    return false;
}

// ---------------------------------------------------------------- Ramsey table

namespace {

struct BuiltIn {
    int k;
    int lower; // 0 when only an upper bound is built in
    int upper;
    const char* source;
};

constexpr BuiltIn kBuiltIn[] = {
    {3, 6, 6, "classical"},
    {5, 14, 14, "Greenwood and Gleason, Canad. J. Math. 7 (1955)"},
    {6, 18, 18, "Kery, Mat. Lapok 15 (1964)"},
    {9, 36, 36, "Grinstead and Roberts, J. Combin. Theory Ser. B 33 (1982)"},
    {10, 0, 42, "Goedgebeur and Radziszowski, arXiv:1210.5826 (2012)"},
    {11, 0, 50, "Goedgebeur and Radziszowski, arXiv:1210.5826 (2012)"},
    {12, 0, 59, "Goedgebeur and Radziszowski, arXiv:1210.5826 (2012)"},
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int to_int(std::string_view s, std::size_t line)
{
    s = trim(s);
    int out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::ConfigError, "line " + std::to_string(line) + ": expected an integer, got '" +
                                           std::string(s) + "'");
    return out;
}

// Drops a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s)
{
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"')
            quoted = !quoted;
        else if (s[i] == '#' && !quoted)
            return s.substr(0, i);
    }
    return s;
}

} // namespace

RamseyTable RamseyTable::from_text(std::string_view text)
{
    struct Configured {
        std::optional<int> lower;
        std::optional<int> upper;
        std::string source;
    };
    std::map<int, Configured> configured;
    std::string section;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": unterminated section");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "values" && section != "sources")
                throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": unknown section " + section);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos || section.empty())
            throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": expected 'k = value' in a section");
        const int k = to_int(line.substr(0, eq), line_no);
        const auto value = trim(line.substr(eq + 1));
        auto& entry = configured[k];
        if (section == "sources") {
            if (value.size() < 2 || value.front() != '"' || value.back() != '"')
                throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": source must be a quoted string");
            entry.source = std::string(value.substr(1, value.size() - 2));
        } else if (!value.empty() && value.front() == '[') {
            const auto comma = value.find(',');
            if (value.back() != ']' || comma == std::string_view::npos)
                throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": expected [lower, upper]");
            entry.lower = to_int(value.substr(1, comma - 1), line_no);
            entry.upper = to_int(value.substr(comma + 1, value.size() - comma - 2), line_no);
        } else {
            entry.lower = entry.upper = to_int(value, line_no);
        }
    }

    RamseyTable table;
    for (const auto& b : kBuiltIn)
        table.entries_[b.k] = {b.k, b.lower, b.upper, b.source};

    for (const auto& [k, c] : configured) {
        if (k < 1 || k > kMaxKnownRamsey)
            throw Error(Errc::ConfigError, "config entry for k = " + std::to_string(k) + " outside 1..12");
        if (!c.lower || !c.upper)
            throw Error(Errc::ConfigError, "config entry for k = " + std::to_string(k) + " has no value");
        if (*c.lower > *c.upper || *c.lower < 1)
            throw Error(Errc::ConfigError, "config entry for k = " + std::to_string(k) + " has lower > upper");
        auto it = table.entries_.find(k);
        if (it == table.entries_.end()) {
            table.entries_[k] = {k, *c.lower, *c.upper, c.source};
            continue;
        }
        auto& known = it->second;
        const int lower = std::max(known.lower, *c.lower);
        const int upper = std::min(known.upper, *c.upper);
        if (lower > upper)
            throw Error(Errc::ConfigError, "config entry for k = " + std::to_string(k) +
                                               " contradicts the built-in value");
        if (known.lower == 0)
            known.source = c.source + "; upper: " + known.source;
        known.lower = lower;
        known.upper = upper;
    }
    return table;
}

RamseyTable RamseyTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ConfigError, "cannot open Ramsey config " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

RamseyKnowledge RamseyTable::known(int k) const
{
    if (k < 1 || k > kMaxKnownRamsey)
        throw Error(Errc::UnknownRamsey, "no knowledge of R(3," + std::to_string(k) + ")");
    auto it = entries_.find(k);
    if (it == entries_.end() || it->second.lower < 1)
        throw Error(Errc::ConfigError, "R(3," + std::to_string(k) + ") is not resolved by the config");
    return it->second;
}

std::string default_ramsey_config_path() { return CHIBOUND_RAMSEY_CONFIG; }

RamseyKnowledge known_ramsey(int k)
{
    static const RamseyTable table = RamseyTable::load(default_ramsey_config_path());
    return table.known(k);
}

// ---------------------------------------------------------------- per graph

const BoundEntry* BoundReport::find(std::string_view name) const
{
    for (const auto& e : entries)
        if (e.name == name)
            return &e;
    return nullptr;
}

BoundReport evaluate_graph(const Graph& g)
{
    BoundReport r;
    r.n = g.order();
    r.omega = clique_number(g);
    r.alpha = independence_number(g);
    r.delta = max_degree(g);
    r.chi = chromatic_number(g).chi;
    r.three_k1_free = r.alpha <= 2;

    auto add = [&](std::string name, std::int64_t value, bool applicable, bool proven) {
        r.entries.push_back({std::move(name), value, applicable, proven && applicable, value - r.chi});
    };
    const int w = r.omega;
    const bool family = r.three_k1_free;
    if (w % 2 == 1)
        add("lemma1", lemma1_bound(w), family && w >= kLemma1ProvenMin,
            w >= kLemma1ProvenMin && w <= kLemma1ProvenMax);
    else
        add("lemma2", lemma2_bound(w), family, w <= kLemma2ProvenMax);
    if (w >= kTableMin && w <= kTableMax)
        add("table1", table1_bound(w), family, true);
    add("reed", reed_bound(r.delta, w), true, family);
    add("conjecture2", conjecture2_bound(r.delta, w), family && conjecture2_applicable(w), false);
    return r;
}

} // namespace chibound
