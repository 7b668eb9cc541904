#include "autoint/monotone.hpp"

#include <map>
#include <numeric>
#include <set>

#include "autoint/congruence.hpp"
#include "autoint/errors.hpp"

namespace autoint {

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (State q = 0; q < n; ++q) {
        r.insert(q, q);
    }
    return r;
}

bool Relation::insert(State p, State q) {
    auto &bit = bits_[p * n_ + q];
    if (bit != 0) {
        return false;
    }
    bit = 1;
    return true;
}

std::vector<Edge> Relation::pairs() const {
    std::vector<Edge> out;
    for (State p = 0; p < n_; ++p) {
        for (State q = 0; q < n_; ++q) {
            if (contains(p, q)) {
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

bool Relation::is_reflexive() const {
    for (State q = 0; q < n_; ++q) {
        if (!contains(q, q)) {
            return false;
        }
    }
    return true;
}

bool Relation::is_transitive() const {
    for (State p = 0; p < n_; ++p) {
        for (State q = 0; q < n_; ++q) {
            if (!contains(p, q)) {
                continue;
            }
            for (State r = 0; r < n_; ++r) {
                if (contains(q, r) && !contains(p, r)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Relation::is_antisymmetric() const {
    for (State p = 0; p < n_; ++p) {
        for (State q = p + 1; q < n_; ++q) {
            if (contains(p, q) && contains(q, p)) {
                return false;
            }
        }
    }
    return true;
}

bool Relation::is_stable(const Automaton &automaton) const {
    for (const auto &[p, q] : pairs()) {
        for (Letter a = 0; a < automaton.alphabet_size(); ++a) {
            if (!contains(automaton.next(p, a), automaton.next(q, a))) {
                return false;
            }
        }
    }
    return true;
}

Partition Relation::weak_components() const {
    std::vector<Edge> edges;
    for (const auto &[p, q] : pairs()) {
        if (p != q) {
            edges.emplace_back(p, q);
        }
    }
    return connectivity(Digraph(n_, std::move(edges))).wcc;
}

Relation stable_closure(const Automaton &automaton, const Relation &seed) {
    const std::size_t n = automaton.size();
    if (seed.size() != n) {
        throw InputError("relation size does not match the automaton");
    }
    Relation closure(n);
    std::vector<Edge> todo;
    auto add = [&](State p, State q) {
        if (closure.insert(p, q)) {
            todo.emplace_back(p, q);
        }
    };
    for (State q = 0; q < n; ++q) {
        add(q, q);
    }
    for (const auto &[p, q] : seed.pairs()) {
        add(p, q);
    }
    // Every inserted pair is expanded once; a composable pair (r,p),(p,q) is
    // caught by whichever of the two is expanded last.
    while (!todo.empty()) {
        auto [p, q] = todo.back();
        todo.pop_back();
        for (Letter a = 0; a < automaton.alphabet_size(); ++a) {
            add(automaton.next(p, a), automaton.next(q, a));
        }
        for (State r = 0; r < n; ++r) {
            if (closure.contains(r, p)) {
                add(r, q);
            }
            if (closure.contains(q, r)) {
                add(p, r);
            }
        }
    }
    return closure;
}

namespace {

Relation join(const Relation &a, const Relation &b) {
    Relation r = a;
    for (const auto &[p, q] : b.pairs()) {
        r.insert(p, q);
    }
    return r;
}

}  // namespace

std::vector<Relation> find_stable_partial_orders(const Automaton &automaton) {
    const std::size_t n = automaton.size();
    std::set<Relation> singles;
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            if (p == q) {
                continue;
            }
            Relation seed(n);
            seed.insert(p, q);
            auto closure = stable_closure(automaton, seed);
            if (closure.is_antisymmetric()) {
                singles.insert(std::move(closure));
            }
        }
    }
    // Single-pair closures can all be disconnected even when a connected
    // order is preserved (e.g. identity letters), so also grow each one
    // greedily by joining further closures while antisymmetry survives.
    std::set<Relation> found(singles.begin(), singles.end());
    for (const auto &start : singles) {
        Relation current = start;
        for (const auto &other : singles) {
            auto candidate = stable_closure(automaton, join(current, other));
            if (candidate.is_antisymmetric()) {
                current = std::move(candidate);
            }
        }
        found.insert(std::move(current));
    }
    return {found.begin(), found.end()};
}

namespace {

class LevelSearch {
public:
    std::optional<std::size_t> level(const Automaton &automaton, std::size_t budget) {
        if (automaton.size() == 1) {
            return 0;
        }
        if (budget == 0) {
            return std::nullopt;
        }
        auto key = std::make_pair(automaton.table(), budget);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::optional<std::size_t> best;
        for (const auto &order : find_stable_partial_orders(automaton)) {
            auto quotient = quotient_automaton(automaton, order.weak_components());
            auto sub = level(quotient.automaton, budget - 1);
            if (sub && (!best || *sub + 1 < *best)) {
                best = *sub + 1;
                if (*best == 1) {
                    break;
                }
            }
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

private:
    // Quotient states are numbered canonically, so equal tables are equal
    // subproblems.
    std::map<std::pair<std::vector<State>, std::size_t>, std::optional<std::size_t>> memo_;
};

}  // namespace

std::optional<std::size_t> wm_level(const Automaton &automaton, std::size_t max_level) {
    LevelSearch search;
    return search.level(automaton, max_level);
}

}  // namespace autoint
