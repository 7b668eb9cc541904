#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"
#include "autoint/intervals.hpp"
#include "autoint/io.hpp"
#include "autoint/respect.hpp"

namespace autoint {

/// One step of a reset-word construction, recorded for auditing.
struct StageRecord {
    std::string stage;
    /// Length of the word built so far.
    std::size_t word_length;
    /// |Q w| for the word built so far.
    std::size_t image_size;
};

struct ResetResult {
    Word word;
    std::size_t length = 0;
    std::size_t bound = 0;
    bool bound_ok = true;
    std::vector<StageRecord> trace;
};

json to_json(const ResetResult &result);

/// Family of distinct state sets, each with at least two elements, sorted.
struct CernyFamily {
    std::vector<StateSet> sets;
    std::size_t m() const { return sets.size(); }
};

/// Supplies a reset word for a quotient automaton.
using QuotientResetProvider = std::function<Word(const Automaton &)>;

/// Shortest reset word of the quotient (breadth-first subset search).
Word shortest_reset_provider(const Automaton &quotient);

/// Decided on pairs: every pair of states must be collapsible.
bool is_synchronizing(const Automaton &automaton);

/// Minimum-length reset word found by breadth-first search over subsets
/// reachable from the full state set; letters are tried in index order.
/// bound = (n-1)^2. Supports at most 64 states.
std::optional<ResetResult> shortest_reset(const Automaton &automaton);

/// Minimum-length word w with |S w| = 1, or nullopt when S cannot collapse.
std::optional<Word> shortest_collapse(const Automaton &automaton, const StateSet &states);

/// Reset word through a congruence with a singleton class: quotient_reset
/// sends Q into one class B, then the shortest quotient path from B to the
/// singleton class finishes the job.
ResetResult singleton_class_reset(const Automaton &automaton, const Partition &partition,
                                  const Word &quotient_reset);

/// Intervals [x,y], x != y in one strongly connected component, with
/// duplicates and sets smaller than two removed.
CernyFamily cerny_interval_family(const Digraph &graph);
CernyFamily cerny_interval_family(const IntervalTable &table);

/// Distinct x, y in `subset` with subset within [x,y] and [x,y] collapsing
/// under `word`. Throws PropertyViolation ("lemma violated") if none exists.
std::pair<State, State> covering_interval(const Automaton &automaton, const Digraph &graph, const StateSet &subset,
                                          const Word &word);
/// Same, skipping the precondition checks that need the whole digraph.
std::pair<State, State> covering_interval(const Automaton &automaton, const IntervalTable &table,
                                          const StateSet &subset, const Word &word);

struct Claim1Result {
    Word word;
    /// Number of strongly connected components of the digraph.
    std::size_t scc_count = 0;
    std::size_t wcc_count = 0;
    /// scc block of the digraph that contains Q word.
    std::size_t landing_block = 0;
    std::vector<StageRecord> trace;
};

/// Word sending every state into a single strongly connected component of
/// the digraph, of length at most (n-1)^2 where n is the component count.
/// Throws PropertyViolation if the length bound fails.
Claim1Result claim1_word(const Automaton &automaton, const Digraph &graph, const QuotientResetProvider &provider);

/// Minimum-length word collapsing `component`; throws PropertyViolation when
/// it is longer than the family size.
Word collapse_in_component(const Automaton &automaton, const StateSet &component, const CernyFamily &family);

/// Reset word assembled along the reduction through the weak-component
/// quotient. bound = (N-1)^2 for N states.
ResetResult theorem_reset(const Automaton &automaton, const Digraph &graph, const QuotientResetProvider &provider);

/// Applies theorem_reset level by level along a verified tower.
ResetResult tower_reset(const Automaton &automaton, const TowerCertificate &cert,
                        const BasePredicate &base = one_state_base);

}  // namespace autoint
