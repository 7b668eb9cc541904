#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace autoint {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A word is a sequence of letter indices; the empty word acts as identity.
using Word = std::vector<Letter>;

/// Sorted, duplicate-free set of states.
using StateSet = std::vector<State>;

class Digraph;

/// Deterministic complete automaton over states 0..n-1.
///
/// The transition table is stored row-major: entry (q, a) is the successor of
/// state q under letter index a. Instances are immutable once constructed.
class Automaton {
public:
    /// Throws InputError unless every row has one entry per letter and every
    /// entry is a valid state.
    Automaton(std::vector<std::string> letters, const std::vector<std::vector<State>> &delta);

    /// Letters are named a, b, c, ... in order.
    explicit Automaton(const std::vector<std::vector<State>> &delta);

    std::size_t size() const { return n_; }
    std::size_t alphabet_size() const { return letters_.size(); }
    const std::vector<std::string> &letters() const { return letters_; }

    State next(State q, Letter a) const { return table_[q * letters_.size() + a]; }
    std::span<const State> row(State q) const {
        return {table_.data() + q * letters_.size(), letters_.size()};
    }
    /// Image of every state under letter a.
    std::vector<State> letter_map(Letter a) const;
    std::vector<std::vector<State>> delta() const;
    const std::vector<State> &table() const { return table_; }

    bool operator==(const Automaton &other) const = default;

private:
    std::vector<std::string> letters_;
    std::size_t n_ = 0;
    std::vector<State> table_;
};

/// Default letter names: a..z, then l26, l27, ...
std::vector<std::string> default_letter_names(std::size_t count);

/// Throws InputError when a letter index is out of range.
void validate_word(const Automaton &automaton, const Word &word);

State apply_word(const Automaton &automaton, State q, const Word &word);

/// { q.w : q in states }, sorted.
StateSet image_set(const Automaton &automaton, const StateSet &states, const Word &word);

StateSet all_states(std::size_t n);

/// Concatenation of letter names, e.g. "baab".
std::string word_to_string(const Automaton &automaton, const Word &word);

/// Edge (q, s) iff some letter maps q to s; parallel edges collapse.
Digraph transition_digraph(const Automaton &automaton);

bool is_strongly_connected(const Automaton &automaton);

}  // namespace autoint
