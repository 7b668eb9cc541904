#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"
#include "autoint/intervals.hpp"
#include "autoint/io.hpp"

namespace autoint {

/// The three interval-respecting conditions, for a transformation f:
///   I   [x,y] nonempty           => [xf,yf] nonempty
///   II  [x,y], [y,x] nonempty    => [x,y]f within [xf,yf]
///   III x != y, xf = yf          => [x,y]f or [y,x]f has at most one element
enum class Condition : std::uint8_t { I = 1, II = 2, III = 3 };

std::string to_string(Condition c);

struct RespectViolation {
    Condition condition;
    /// Letter index, or the sample index when words are checked.
    Letter letter;
    State x;
    State y;
    /// I: empty. II: elements of [x,y]f outside [xf,yf]. III: [x,y]f.
    StateSet detail;
    /// Set only for word checks.
    Word word;
};

struct RespectReport {
    bool ok = true;
    /// Sorted by (condition, letter, x, y).
    std::vector<RespectViolation> violations;
};

RespectReport check_letter_conditions(const Automaton &automaton, const Digraph &graph);
RespectReport check_letter_conditions(const Automaton &automaton, const IntervalTable &table);

/// Checks the conditions for the action of a single transformation.
RespectReport check_transformation(const IntervalTable &table, const std::vector<State> &map);

/// Re-checks the conditions with letters replaced by random words of length
/// 1..max_len. Requires the letter conditions to hold (PreconditionError
/// otherwise); any reported violation is then a counterexample to the
/// closure of the conditions under composition.
RespectReport sample_word_conditions(const Automaton &automaton, const Digraph &graph, std::size_t word_count,
                                     std::size_t max_len, std::uint64_t seed);

struct UniqueReturnCheck {
    bool ok = true;
    std::optional<State> vertex;
    std::string reason;
};

/// Every cyclic strongly connected component (two or more vertices, or a
/// self-loop) must be a single simple cycle.
UniqueReturnCheck is_unique_return_paths(const Digraph &graph);

struct TowerCertificate {
    /// levels[i] is a digraph on the states of the i-th quotient.
    std::vector<Digraph> levels;
};

json to_json(const TowerCertificate &cert);
/// Also accepts the certificate wrapped under "certificate".
TowerCertificate tower_from_json(const json &j);

using BasePredicate = std::function<bool(const Automaton &)>;

/// Accepts exactly the one-state automata.
bool one_state_base(const Automaton &automaton);

struct TowerVerdict {
    bool ok = true;
    /// Level at which verification stopped.
    std::size_t level = 0;
    std::string reason;
    std::optional<Condition> condition;
};

/// Checks, level by level, that the current automaton is strongly connected,
/// levels[i] is scc-dense and respected, then passes to the quotient by the
/// weakly connected components of levels[i]. The final quotient must satisfy
/// `base`.
TowerVerdict verify_tower(const Automaton &automaton, const TowerCertificate &cert,
                          const BasePredicate &base = one_state_base);

}  // namespace autoint
