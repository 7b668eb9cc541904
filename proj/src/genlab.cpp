#include "autoint/genlab.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "autoint/errors.hpp"
#include "autoint/intervals.hpp"
#include "autoint/respect.hpp"
#include "autoint/synchro.hpp"

namespace autoint {

namespace {

constexpr std::size_t max_attempts = 20000;

using Rng = std::mt19937_64;

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Orientation-preserving map from a cycle of `from` vertices into a cycle of
// `to` vertices: a nondecreasing sequence onto `distinct` image points,
// rotated on both sides.
std::vector<State> sample_cyclic_map(Rng &rng, std::size_t from, std::size_t to) {
    const std::size_t distinct = uniform(rng, 1, std::min(from, to));
    std::vector<State> points(to);
    for (std::size_t i = 0; i < to; ++i) {
        points[i] = static_cast<State>(i);
    }
    std::shuffle(points.begin(), points.end(), rng);
    points.resize(distinct);
    std::sort(points.begin(), points.end());

    // cut positions splitting the domain into `distinct` nonempty runs
    std::vector<std::size_t> cuts(from - 1);
    for (std::size_t i = 0; i + 1 < from; ++i) {
        cuts[i] = i + 1;
    }
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(distinct - 1);
    std::sort(cuts.begin(), cuts.end());

    std::vector<State> sorted(from);
    std::size_t run = 0;
    for (std::size_t i = 0; i < from; ++i) {
        while (run < cuts.size() && cuts[run] <= i) {
            ++run;
        }
        sorted[i] = points[run];
    }
    const std::size_t shift_in = uniform(rng, 0, from - 1);
    const std::size_t shift_out = uniform(rng, 0, to - 1);
    std::vector<State> map(from);
    for (std::size_t x = 0; x < from; ++x) {
        map[x] = static_cast<State>((sorted[(x + shift_in) % from] + shift_out) % to);
    }
    return map;
}

void require_respect(const Automaton &automaton, const Digraph &graph, const char *generator) {
    auto report = check_letter_conditions(automaton, graph);
    if (!report.ok) {
        throw PropertyViolation(std::string(generator) + " produced an automaton violating the interval conditions",
                                json{{"automaton", to_json(automaton)}, {"digraph", to_json(graph)}});
    }
}

std::vector<std::vector<State>> columns_to_rows(const std::vector<std::vector<State>> &letters, std::size_t n) {
    std::vector<std::vector<State>> delta(n, std::vector<State>(letters.size()));
    for (std::size_t a = 0; a < letters.size(); ++a) {
        for (std::size_t q = 0; q < n; ++q) {
            delta[q][a] = letters[a][q];
        }
    }
    return delta;
}

}  // namespace

bool is_cyclically_monotone(const std::vector<State> &map) {
    const std::size_t n = map.size();
    std::size_t winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        winding += (map[(i + 1) % n] + n - map[i]) % n;
    }
    return winding <= n;
}

bool is_monotone(const std::vector<State> &map) {
    return std::is_sorted(map.begin(), map.end());
}

Automaton gen_cerny(std::size_t n) {
    if (n == 0) {
        throw InputError("Cerny automaton needs n >= 1");
    }
    std::vector<std::vector<State>> delta(n);
    for (std::size_t q = 0; q < n; ++q) {
        delta[q] = {static_cast<State>((q + 1) % n), static_cast<State>(q == 0 ? 1 % n : q)};
    }
    return Automaton(delta);
}

Instance gen_orientable(std::size_t n, std::size_t k_letters, std::uint64_t seed) {
    if (n < 2 || k_letters < 1) {
        throw InputError("orientable generator needs n >= 2 and at least one letter");
    }
    Rng rng(seed);
    Digraph cycle = cycle_digraph(n);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::vector<State>> letters;
        for (std::size_t a = 0; a < k_letters; ++a) {
            letters.push_back(sample_cyclic_map(rng, n, n));
        }
        Automaton automaton(columns_to_rows(letters, n));
        if (!is_strongly_connected(automaton)) {
            continue;
        }
        require_respect(automaton, cycle, "gen_orientable");
        return {std::move(automaton), std::move(cycle)};
    }
    throw PreconditionError("no strongly connected orientable automaton found within the retry cap");
}

Instance gen_unique_return(const UrpSpec &spec, std::size_t k_letters) {
    const std::size_t cycles = spec.cycle_sizes.size();
    if (cycles == 0 || k_letters < 1) {
        throw InputError("unique-return generator needs at least one cycle and one letter");
    }
    std::vector<std::size_t> offset(cycles + 1, 0);
    for (std::size_t i = 0; i < cycles; ++i) {
        if (spec.cycle_sizes[i] == 0) {
            throw InputError("cycle sizes must be positive");
        }
        offset[i + 1] = offset[i] + spec.cycle_sizes[i];
    }
    const std::size_t n = offset[cycles];

    // reach[i][j]: cycle j reachable from cycle i (reflexive)
    std::vector<std::vector<bool>> reach(cycles, std::vector<bool>(cycles, false));
    for (std::size_t i = 0; i < cycles; ++i) {
        reach[i][i] = true;
    }
    for (const auto &[i, j] : spec.dag_edges) {
        if (i >= cycles || j >= cycles || i == j) {
            throw InputError("dag edge (" + std::to_string(i) + ", " + std::to_string(j) + ") is invalid");
        }
        reach[i][j] = true;
    }
    for (std::size_t m = 0; m < cycles; ++m) {
        for (std::size_t i = 0; i < cycles; ++i) {
            for (std::size_t j = 0; j < cycles; ++j) {
                if (reach[i][m] && reach[m][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < cycles; ++i) {
        for (std::size_t j = i + 1; j < cycles; ++j) {
            if (reach[i][j] && reach[j][i]) {
                throw InputError("dag edges contain a cycle");
            }
        }
    }

    Rng rng(spec.seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cycles; ++i) {
        for (std::size_t v = 0; v < spec.cycle_sizes[i]; ++v) {
            edges.emplace_back(static_cast<State>(offset[i] + v),
                               static_cast<State>(offset[i] + (v + 1) % spec.cycle_sizes[i]));
        }
    }
    for (const auto &[i, j] : spec.dag_edges) {
        edges.emplace_back(static_cast<State>(offset[i] + uniform(rng, 0, spec.cycle_sizes[i] - 1)),
                           static_cast<State>(offset[j] + uniform(rng, 0, spec.cycle_sizes[j] - 1)));
    }
    Digraph graph(n, std::move(edges));

    auto order_preserving = [&](const std::vector<std::size_t> &phi) {
        for (std::size_t i = 0; i < cycles; ++i) {
            for (std::size_t j = 0; j < cycles; ++j) {
                if (reach[i][j] && !reach[phi[i]][phi[j]]) {
                    return false;
                }
            }
        }
        return true;
    };
    auto sample_cycle_map = [&]() {
        std::vector<std::size_t> phi(cycles);
        for (std::size_t attempt = 0; attempt < 1000; ++attempt) {
            for (auto &c : phi) {
                c = uniform(rng, 0, cycles - 1);
            }
            if (order_preserving(phi)) {
                return phi;
            }
        }
        std::fill(phi.begin(), phi.end(), uniform(rng, 0, cycles - 1));
        return phi;
    };

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::vector<State>> letters;
        for (std::size_t a = 0; a < k_letters; ++a) {
            auto phi = sample_cycle_map();
            std::vector<State> map(n);
            for (std::size_t i = 0; i < cycles; ++i) {
                auto local = sample_cyclic_map(rng, spec.cycle_sizes[i], spec.cycle_sizes[phi[i]]);
                for (std::size_t v = 0; v < spec.cycle_sizes[i]; ++v) {
                    map[offset[i] + v] = static_cast<State>(offset[phi[i]] + local[v]);
                }
            }
            letters.push_back(std::move(map));
        }
        Automaton automaton(columns_to_rows(letters, n));
        if (!is_strongly_connected(automaton)) {
            continue;
        }
        auto urp = is_unique_return_paths(graph);
        if (!urp.ok || !is_scc_dense(graph).ok) {
            throw PropertyViolation("gen_unique_return built an invalid digraph: " + urp.reason,
                                    json{{"digraph", to_json(graph)}});
        }
        require_respect(automaton, graph, "gen_unique_return");
        return {std::move(automaton), std::move(graph)};
    }
    throw PreconditionError("no strongly connected unique-return automaton found within the retry cap");
}

TowerInstance gen_cycles_of_cycles(std::size_t outer, std::size_t inner, std::size_t k_letters, std::uint64_t seed) {
    if (outer < 2 || inner < 1 || k_letters < 1) {
        throw InputError("cycles-of-cycles generator needs outer >= 2, inner >= 1 and at least one letter");
    }
    Rng rng(seed);
    const std::size_t n = outer * inner;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < outer; ++i) {
        for (std::size_t v = 0; v < inner; ++v) {
            edges.emplace_back(static_cast<State>(i * inner + v), static_cast<State>(i * inner + (v + 1) % inner));
        }
    }
    TowerCertificate cert{{Digraph(n, std::move(edges)), cycle_digraph(outer)}};

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::vector<State>> letters;
        for (std::size_t a = 0; a < k_letters; ++a) {
            auto phi = sample_cyclic_map(rng, outer, outer);
            std::vector<State> map(n);
            for (std::size_t i = 0; i < outer; ++i) {
                auto local = sample_cyclic_map(rng, inner, inner);
                for (std::size_t v = 0; v < inner; ++v) {
                    map[i * inner + v] = static_cast<State>(phi[i] * inner + local[v]);
                }
            }
            letters.push_back(std::move(map));
        }
        Automaton automaton(columns_to_rows(letters, n));
        if (!is_strongly_connected(automaton)) {
            continue;
        }
        auto verdict = verify_tower(automaton, cert);
        if (!verdict.ok) {
            throw PropertyViolation("gen_cycles_of_cycles produced an invalid tower: " + verdict.reason,
                                    json{{"automaton", to_json(automaton)}, {"certificate", to_json(cert)}});
        }
        return {std::move(automaton), std::move(cert)};
    }
    throw PreconditionError("no strongly connected cycles-of-cycles automaton found within the retry cap");
}

Automaton gen_monotonic(std::size_t n, std::size_t k_letters, std::uint64_t seed) {
    if (n < 1 || k_letters < 1) {
        throw InputError("monotonic generator needs n >= 1 and at least one letter");
    }
    Rng rng(seed);
    std::vector<std::vector<State>> letters;
    for (std::size_t a = 0; a < k_letters; ++a) {
        std::vector<State> map(n);
        for (auto &s : map) {
            s = static_cast<State>(uniform(rng, 0, n - 1));
        }
        std::sort(map.begin(), map.end());
        letters.push_back(std::move(map));
    }
    return Automaton(columns_to_rows(letters, n));
}

Automaton gen_random(std::size_t n, std::size_t k_letters, std::uint64_t seed) {
    if (n < 1 || k_letters < 1) {
        throw InputError("random generator needs n >= 1 and at least one letter");
    }
    Rng rng(seed);
    std::vector<std::vector<State>> delta(n, std::vector<State>(k_letters));
    for (auto &row : delta) {
        for (auto &s : row) {
            s = static_cast<State>(uniform(rng, 0, n - 1));
        }
    }
    return Automaton(delta);
}

AutomatonEnumerator::AutomatonEnumerator(std::size_t n, std::size_t k, std::uint64_t budget) : n_(n), k_(k) {
    if (n < 1 || k < 1) {
        throw InputError("enumeration needs n >= 1 and k >= 1");
    }
    count_ = 1;
    for (std::size_t i = 0; i < n * k; ++i) {
        if (count_ > budget / n) {
            throw InputError("enumeration of " + std::to_string(n) + "^" + std::to_string(n * k) +
                             " automata exceeds the budget of " + std::to_string(budget));
        }
        count_ *= n;
    }
    if (count_ > budget) {
        throw InputError("enumeration exceeds the budget of " + std::to_string(budget));
    }
}

Automaton AutomatonEnumerator::at(std::uint64_t index) const {
    if (index >= count_) {
        throw InputError("enumeration index out of range");
    }
    std::vector<std::vector<State>> delta(n_, std::vector<State>(k_));
    for (std::size_t pos = n_ * k_; pos-- > 0;) {
        delta[pos / k_][pos % k_] = static_cast<State>(index % n_);
        index /= n_;
    }
    return Automaton(delta);
}

bool AutomatonEnumerator::accepts(const Automaton &automaton, const EnumerationFilter &filter) const {
    if (filter.strongly_connected && !is_strongly_connected(automaton)) {
        return false;
    }
    if (filter.synchronizing && !is_synchronizing(automaton)) {
        return false;
    }
    return true;
}

void AutomatonEnumerator::for_each(std::uint64_t begin, std::uint64_t end, const EnumerationFilter &filter,
                                   const std::function<void(std::uint64_t, const Automaton &)> &visit) const {
    end = std::min(end, count_);
    for (std::uint64_t index = begin; index < end; ++index) {
        Automaton automaton = at(index);
        if (accepts(automaton, filter)) {
            visit(index, automaton);
        }
    }
}

std::vector<Automaton> enumerate_automata(std::size_t n, std::size_t k, const EnumerationFilter &filter) {
    AutomatonEnumerator enumerator(n, k, 10'000'000);
    std::vector<Automaton> out;
    enumerator.for_each(0, enumerator.count(), filter, [&](std::uint64_t, const Automaton &a) { out.push_back(a); });
    return out;
}

}  // namespace autoint
