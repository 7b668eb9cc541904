#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"
#include "autoint/respect.hpp"

namespace autoint {

/// Cerny automaton: a is the cyclic shift q -> q+1 mod n, b sends 0 to 1 and
/// fixes every other state.
Automaton gen_cerny(std::size_t n);

struct Instance {
    Automaton automaton;
    Digraph digraph;
};

/// Random strongly connected automaton whose letters preserve the cyclic
/// orientation of 0 -> 1 -> ... -> n-1 -> 0. Returns the cycle as digraph.
Instance gen_orientable(std::size_t n, std::size_t k_letters, std::uint64_t seed);

/// Disjoint cycles with order edges between them (unique return paths).
struct UrpSpec {
    std::vector<std::size_t> cycle_sizes;
    /// (i, j): an edge from a vertex of cycle i to a vertex of cycle j.
    std::vector<std::pair<std::size_t, std::size_t>> dag_edges;
    std::uint64_t seed = 0;
};

/// Random strongly connected automaton mapping cycles into cycles along the
/// cycle order and preserving each cycle's orientation.
Instance gen_unique_return(const UrpSpec &spec, std::size_t k_letters);

struct TowerInstance {
    Automaton automaton;
    TowerCertificate certificate;
};

/// Two-level tower on `outer` disjoint cycles of `inner` states each. Every
/// letter maps cycle i into cycle phi(i) preserving orientation, and phi
/// preserves the orientation of the outer cycle. The certificate is
/// [disjoint cycles, outer cycle].
TowerInstance gen_cycles_of_cycles(std::size_t outer, std::size_t inner, std::size_t k_letters, std::uint64_t seed);

/// Every letter is a nondecreasing map of 0 < 1 < ... < n-1.
Automaton gen_monotonic(std::size_t n, std::size_t k_letters, std::uint64_t seed);

/// Uniform independent transition entries.
Automaton gen_random(std::size_t n, std::size_t k_letters, std::uint64_t seed);

/// True when the map, read around the n-cycle, winds at most once.
bool is_cyclically_monotone(const std::vector<State> &map);
bool is_monotone(const std::vector<State> &map);

struct EnumerationFilter {
    bool strongly_connected = false;
    bool synchronizing = false;
};

/// All n^(k n) complete automata with n states and k letters, indexed in
/// lexicographic order of their row-major transition tables.
class AutomatonEnumerator {
public:
    /// Throws InputError when the count exceeds `budget`.
    AutomatonEnumerator(std::size_t n, std::size_t k, std::uint64_t budget = 100'000'000);

    std::uint64_t count() const { return count_; }
    Automaton at(std::uint64_t index) const;

    bool accepts(const Automaton &automaton, const EnumerationFilter &filter) const;

    /// Calls `visit` for each accepted automaton with index in [begin, end).
    void for_each(std::uint64_t begin, std::uint64_t end, const EnumerationFilter &filter,
                  const std::function<void(std::uint64_t, const Automaton &)> &visit) const;

private:
    std::size_t n_;
    std::size_t k_;
    std::uint64_t count_;
};

/// Collects every accepted automaton; for small n only.
std::vector<Automaton> enumerate_automata(std::size_t n, std::size_t k, const EnumerationFilter &filter = {});

}  // namespace autoint
