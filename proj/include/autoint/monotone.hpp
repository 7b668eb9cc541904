#pragma once

#include <optional>
#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"

namespace autoint {

/// Binary relation on 0..n-1 stored as an n x n boolean matrix.
class Relation {
public:
    explicit Relation(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}

    static Relation identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool contains(State p, State q) const { return bits_[p * n_ + q] != 0; }
    /// Returns true if the pair was new.
    bool insert(State p, State q);
    std::vector<Edge> pairs() const;

    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    bool is_stable(const Automaton &automaton) const;

    /// Weakly connected components of the relation viewed as a digraph.
    Partition weak_components() const;

    bool operator==(const Relation &) const = default;
    auto operator<=>(const Relation &) const = default;

private:
    std::size_t n_;
    std::vector<unsigned char> bits_;
};

/// Least reflexive, transitive relation containing `seed` that is closed
/// under the action of every letter.
Relation stable_closure(const Automaton &automaton, const Relation &seed);

/// Nontrivial stable partial orders found from single-pair closures, plus
/// greedy unions of them that stay antisymmetric. Empty iff the automaton
/// preserves no nontrivial partial order.
std::vector<Relation> find_stable_partial_orders(const Automaton &automaton);

/// Least weakly monotonic level reachable through the candidate orders, within
/// `max_level`; nullopt if none. The result certifies membership, so it is an
/// upper bound on the true level.
std::optional<std::size_t> wm_level(const Automaton &automaton, std::size_t max_level);

}  // namespace autoint
