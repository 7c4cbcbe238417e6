#pragma once

#include "chibound/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chibound {

// Chromatic bounds for graphs with no independent triple, as functions of
// the clique number omega (and max degree where noted). All values are
// exact integers; a formula that would not divide evenly throws
// InternalConsistency instead of rounding.

/// (omega^2 + 12 omega - 13) / 8 for odd omega >= 1. Throws ParityError for even omega.
std::int64_t lemma1_bound(int omega);

/// (omega^2 + 10 omega) / 8 for even omega >= 2. Throws ParityError for odd omega.
std::int64_t lemma2_bound(int omega);

inline constexpr int kLemma1ProvenMin = 3;
inline constexpr int kLemma1ProvenMax = 11;
inline constexpr int kLemma2ProvenMax = 10;
inline constexpr int kTableMin = 2;
inline constexpr int kTableMax = 11;

/// Tabulated bound for 2 <= omega <= 11: the lemma formulas, strengthened
/// to 14 at omega = 7 and 21 at omega = 9. Throws OutOfTable otherwise.
std::int64_t table1_bound(int omega);

/// ceil((delta + omega + 1) / 2).
std::int64_t reed_bound(int delta, int omega);

/// floor((delta + omega + 1) / 2); conjectured only for odd omega.
std::int64_t conjecture2_bound(int delta, int omega);
inline bool conjecture2_applicable(int omega) { return omega % 2 == 1; }

enum class Parity { Even, Odd };

struct RamseyCandidate {
    char label;             // 'A'..'D'
    std::int64_t value;
    Parity requires_parity; // of R(3, omega) for this branch to apply
};

/// Odd omega: A = (w^2+8w-9)/4 (even R), B = (w^2+8w-13)/4 (odd R).
/// Even omega: C = (w^2+6w)/4 (even R), D = (w^2+6w-4)/4 (odd R).
std::vector<RamseyCandidate> conjecture1_candidates(int omega);

/// True iff the candidate whose parity requirement matches r_actual equals it.
bool conjecture1_check(int omega, std::int64_t r_actual);

struct RamseyKnowledge {
    int k = 0;
    int lower = 0;
    int upper = 0;
    std::string source;

    bool exact() const noexcept { return lower == upper; }
    std::optional<int> value() const { return exact() ? std::optional<int>(lower) : std::nullopt; }
};

inline constexpr int kMaxKnownRamsey = 12;

/// R(3, k) for k = 1..12: built-in values for k in {3, 5, 6, 9} and upper
/// bounds for k in {10, 11, 12}, merged with a config file supplying every
/// other value and the remaining lower bounds. Conflicting entries are a
/// ConfigError.
class RamseyTable {
public:
    /// Config syntax (a TOML subset):
    ///   [values]   k = N  or  k = [lower, upper]
    ///   [sources]  k = "citation"
    static RamseyTable from_text(std::string_view text);
    static RamseyTable load(const std::string& path);

    /// Throws UnknownRamsey for k outside 1..12 and ConfigError when the
    /// config leaves k unresolved.
    RamseyKnowledge known(int k) const;

private:
    std::map<int, RamseyKnowledge> entries_;
};

/// Path of the config shipped with the library.
std::string default_ramsey_config_path();

/// known() against the shipped config, loaded once.
RamseyKnowledge known_ramsey(int k);

struct BoundEntry {
    std::string name;
    std::int64_t value = 0;
    bool applicable = false; // the bound's hypothesis holds for this graph
    bool proven = false;     // omega lies in the range the bound is proven for
    std::int64_t slack = 0;  // value - chi
    bool satisfied() const noexcept { return slack >= 0; }
};

struct BoundReport {
    int n = 0;
    int omega = 0;
    int alpha = 0;
    int delta = 0;
    int chi = 0;
    bool three_k1_free = false;
    std::vector<BoundEntry> entries;

    const BoundEntry* find(std::string_view name) const;
};

/// Computes omega, alpha, delta and chi exactly, then evaluates the
/// parity-matched lemma bound, the table bound (omega in 2..11), Reed's
/// bound and the floor variant. Graphs with an independent triple get
/// entries flagged not applicable.
BoundReport evaluate_graph(const Graph& g);

} // namespace chibound
