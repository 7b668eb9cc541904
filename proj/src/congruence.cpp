#include "autoint/congruence.hpp"

#include <string>

#include "autoint/errors.hpp"

namespace autoint {

CongruenceCheck is_congruence(const Automaton &automaton, const Partition &partition) {
    if (partition.size() != automaton.size()) {
        throw InputError("partition covers " + std::to_string(partition.size()) + " states, automaton has " +
                         std::to_string(automaton.size()));
    }
    // Scanning q ascending, then s > q, then letters yields the least triple.
    for (State q = 0; q < automaton.size(); ++q) {
        for (State s = q + 1; s < automaton.size(); ++s) {
            if (!partition.same_block(q, s)) {
                continue;
            }
            for (Letter a = 0; a < automaton.alphabet_size(); ++a) {
                if (!partition.same_block(automaton.next(q, a), automaton.next(s, a))) {
                    return {false, CongruenceViolation{q, s, a}};
                }
            }
        }
    }
    return {};
}

Quotient quotient_automaton(const Automaton &automaton, const Partition &partition) {
    auto check = is_congruence(automaton, partition);
    if (!check.ok) {
        const auto &w = *check.witness;
        throw PreconditionError("partition is not a congruence: states " + std::to_string(w.q) + " and " +
                                std::to_string(w.s) + " separate under letter " +
                                automaton.letters()[w.letter]);
    }
    std::vector<std::vector<State>> delta(partition.block_count());
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        State rep = partition.block(b).front();
        for (State s : automaton.row(rep)) {
            delta[b].push_back(static_cast<State>(partition.block_of(s)));
        }
    }
    std::vector<State> projection(automaton.size());
    for (State q = 0; q < automaton.size(); ++q) {
        projection[q] = static_cast<State>(partition.block_of(q));
    }
    return {Automaton(automaton.letters(), delta), std::move(projection)};
}

SinkReduction reduce_to_sink(const Automaton &automaton) {
    auto conn = connectivity(transition_digraph(automaton));
    auto sinks = conn.sink_blocks();
    if (sinks.size() != 1) {
        throw PreconditionError("not reducible: automaton cannot be synchronizing (" + std::to_string(sinks.size()) +
                                " sink components)");
    }
    const auto &members = conn.scc.block(sinks.front());
    std::vector<State> index_of(automaton.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        index_of[members[i]] = static_cast<State>(i);
    }
    std::vector<std::vector<State>> delta(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (State s : automaton.row(members[i])) {
            delta[i].push_back(index_of[s]);
        }
    }
    return {Automaton(automaton.letters(), delta), members};
}

}  // namespace autoint
