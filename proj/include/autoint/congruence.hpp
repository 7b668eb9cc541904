#pragma once

#include <optional>
#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"

namespace autoint {

/// q and s share a block but q.letter and s.letter do not.
struct CongruenceViolation {
    State q;
    State s;
    Letter letter;

    bool operator==(const CongruenceViolation &) const = default;
};

struct CongruenceCheck {
    bool ok = true;
    /// Lexicographically least violating (q, s, letter) with q < s.
    std::optional<CongruenceViolation> witness;
};

CongruenceCheck is_congruence(const Automaton &automaton, const Partition &partition);

struct Quotient {
    Automaton automaton;
    /// projection[q] is the quotient state (block index) of q.
    std::vector<State> projection;
};

/// Quotient states are the partition's blocks in canonical order.
/// Throws PreconditionError if the partition is not a congruence.
Quotient quotient_automaton(const Automaton &automaton, const Partition &partition);

struct SinkReduction {
    Automaton automaton;
    /// states[i] is the original state of restricted state i.
    std::vector<State> states;
};

/// Restriction to the unique sink strongly connected component of the
/// transition digraph. Throws PreconditionError when there is more than one
/// sink.
SinkReduction reduce_to_sink(const Automaton &automaton);

}  // namespace autoint
