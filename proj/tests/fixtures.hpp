#pragma once

#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"
#include "autoint/genlab.hpp"

namespace fixtures {

using namespace autoint;

inline Automaton make(const std::vector<std::vector<State>> &delta) { return Automaton(delta); }

inline Automaton c3() { return gen_cerny(3); }
inline Automaton c4() { return gen_cerny(4); }

inline Digraph d4() { return cycle_digraph(4); }

inline Digraph theta4() { return Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}}); }

inline Digraph edge01() { return Digraph(2, {{0, 1}}); }

inline Automaton swap2() { return make({{1}, {0}}); }

inline Automaton one_state(std::size_t letters = 1) {
    return Automaton(std::vector<std::vector<State>>{std::vector<State>(letters, 0)});
}

inline Automaton identity(std::size_t n, std::size_t letters = 2) {
    std::vector<std::vector<State>> delta(n);
    for (State q = 0; q < n; ++q) {
        delta[q].assign(letters, q);
    }
    return Automaton(delta);
}

/// Two disjoint 3-cycles with the order edge 2 -> 3.
inline Digraph two_cycles() {
    return Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

inline StateSet all(std::size_t n) { return all_states(n); }

}  // namespace fixtures
