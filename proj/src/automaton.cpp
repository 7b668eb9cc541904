#include "autoint/automaton.hpp"

#include <algorithm>
#include <string>

#include "autoint/digraph.hpp"
#include "autoint/errors.hpp"

namespace autoint {

Automaton::Automaton(std::vector<std::string> letters, const std::vector<std::vector<State>> &delta)
    : letters_(std::move(letters)), n_(delta.size()) {
    if (n_ == 0) {
        throw InputError("automaton needs at least one state");
    }
    if (letters_.empty()) {
        throw InputError("automaton needs at least one letter");
    }
    const std::size_t k = letters_.size();
    table_.reserve(n_ * k);
    for (std::size_t q = 0; q < n_; ++q) {
        if (delta[q].size() != k) {
            throw InputError("row " + std::to_string(q) + " has " + std::to_string(delta[q].size()) +
                             " entries, expected " + std::to_string(k));
        }
        for (State s : delta[q]) {
            if (s >= n_) {
                throw InputError("row " + std::to_string(q) + " refers to state " + std::to_string(s) +
                                 " outside [0, " + std::to_string(n_) + ")");
            }
            table_.push_back(s);
        }
    }
}

Automaton::Automaton(const std::vector<std::vector<State>> &delta)
    : Automaton(default_letter_names(delta.empty() ? 0 : delta.front().size()), delta) {}

std::vector<State> Automaton::letter_map(Letter a) const {
    std::vector<State> image(n_);
    for (State q = 0; q < n_; ++q) {
        image[q] = next(q, a);
    }
    return image;
}

std::vector<std::vector<State>> Automaton::delta() const {
    std::vector<std::vector<State>> rows(n_);
    for (State q = 0; q < n_; ++q) {
        auto r = row(q);
        rows[q].assign(r.begin(), r.end());
    }
    return rows;
}

std::vector<std::string> default_letter_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i < 26) {
            names.emplace_back(1, static_cast<char>('a' + i));
        } else {
            names.push_back("l" + std::to_string(i));
        }
    }
    return names;
}

void validate_word(const Automaton &automaton, const Word &word) {
    for (Letter a : word) {
        if (a >= automaton.alphabet_size()) {
            throw InputError("letter index " + std::to_string(a) + " outside alphabet of size " +
                             std::to_string(automaton.alphabet_size()));
        }
    }
}

State apply_word(const Automaton &automaton, State q, const Word &word) {
    if (q >= automaton.size()) {
        throw InputError("state " + std::to_string(q) + " outside automaton");
    }
    validate_word(automaton, word);
    for (Letter a : word) {
        q = automaton.next(q, a);
    }
    return q;
}

StateSet image_set(const Automaton &automaton, const StateSet &states, const Word &word) {
    validate_word(automaton, word);
    StateSet image;
    image.reserve(states.size());
    for (State q : states) {
        if (q >= automaton.size()) {
            throw InputError("state " + std::to_string(q) + " outside automaton");
        }
        State s = q;
        for (Letter a : word) {
            s = automaton.next(s, a);
        }
        image.push_back(s);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

StateSet all_states(std::size_t n) {
    StateSet states(n);
    for (std::size_t q = 0; q < n; ++q) {
        states[q] = static_cast<State>(q);
    }
    return states;
}

std::string word_to_string(const Automaton &automaton, const Word &word) {
    std::string out;
    for (Letter a : word) {
        out += automaton.letters().at(a);
    }
    return out;
}

Digraph transition_digraph(const Automaton &automaton) {
    std::vector<Edge> edges;
    edges.reserve(automaton.size() * automaton.alphabet_size());
    for (State q = 0; q < automaton.size(); ++q) {
        for (State s : automaton.row(q)) {
            edges.emplace_back(q, s);
        }
    }
    return Digraph(automaton.size(), std::move(edges));
}

bool is_strongly_connected(const Automaton &automaton) {
    return scc_partition(transition_digraph(automaton)).block_count() == 1;
}

}  // namespace autoint
