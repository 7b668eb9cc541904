#include "autoint/synchro.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_set>

#include "autoint/congruence.hpp"
#include "autoint/errors.hpp"

namespace autoint {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t max_subset_states = 64;
constexpr std::size_t dense_visited_limit = 20;

Mask mask_of(const StateSet &states) {
    Mask m = 0;
    for (State q : states) {
        m |= Mask{1} << q;
    }
    return m;
}

// Breadth-first search over images of `start`, stopping at the first
// singleton. Letters are expanded in index order, so among minimum-length
// words the first one discovered wins.
std::optional<Word> subset_bfs(const Automaton &automaton, Mask start) {
    const std::size_t n = automaton.size();
    if (n > max_subset_states) {
        throw InputError("subset search supports at most 64 states, got " + std::to_string(n));
    }
    if (std::popcount(start) <= 1) {
        return Word{};
    }
    const std::size_t k = automaton.alphabet_size();
    std::vector<Mask> bit_image(n * k);
    for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) {
            bit_image[q * k + a] = Mask{1} << automaton.next(q, a);
        }
    }
    auto image = [&](Mask m, Letter a) {
        Mask out = 0;
        while (m != 0) {
            auto q = static_cast<std::size_t>(std::countr_zero(m));
            out |= bit_image[q * k + a];
            m &= m - 1;
        }
        return out;
    };

    struct Node {
        Mask mask;
        std::uint32_t parent;
        Letter letter;
    };
    std::vector<Node> nodes{{start, 0, 0}};
    std::vector<unsigned char> dense_seen;
    std::unordered_set<Mask> sparse_seen;
    const bool dense = n <= dense_visited_limit;
    if (dense) {
        dense_seen.assign(std::size_t{1} << n, 0);
        dense_seen[start] = 1;
    } else {
        sparse_seen.insert(start);
    }
    auto visit = [&](Mask m) {
        if (dense) {
            if (dense_seen[m] != 0) {
                return false;
            }
            dense_seen[m] = 1;
            return true;
        }
        return sparse_seen.insert(m).second;
    };

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const Mask current = nodes[head].mask;
        for (Letter a = 0; a < k; ++a) {
            Mask next = image(current, a);
            if (!visit(next)) {
                continue;
            }
            nodes.push_back({next, static_cast<std::uint32_t>(head), a});
            if (std::popcount(next) == 1) {
                Word word;
                for (std::size_t i = nodes.size() - 1; i != 0; i = nodes[i].parent) {
                    word.push_back(nodes[i].letter);
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
        }
    }
    return std::nullopt;
}

// Shortest word steering `from` into any target under a deterministic action
// on `size` nodes; action[v * k + a] is the successor of v under letter a.
std::optional<Word> node_bfs(const std::vector<std::size_t> &action, std::size_t size, std::size_t k,
                             const std::vector<std::size_t> &sources, const std::vector<bool> &target) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(size, none);
    std::vector<Letter> via(size, 0);
    std::vector<bool> seen(size, false);
    std::deque<std::size_t> queue;
    for (std::size_t s : sources) {
        if (target[s]) {
            return Word{};
        }
        if (!seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            std::size_t w = action[v * k + a];
            if (seen[w]) {
                continue;
            }
            seen[w] = true;
            parent[w] = v;
            via[w] = a;
            if (target[w]) {
                Word word;
                for (std::size_t u = w; parent[u] != none; u = parent[u]) {
                    word.push_back(via[u]);
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

// Action of letters on the blocks of a congruence; throws PreconditionError
// if some block does not map into a single block.
std::vector<std::size_t> block_action(const Automaton &automaton, const Partition &partition, const char *what) {
    const std::size_t k = automaton.alphabet_size();
    std::vector<std::size_t> action(partition.block_count() * k);
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        for (Letter a = 0; a < k; ++a) {
            std::size_t target = partition.block_of(automaton.next(partition.block(b).front(), a));
            for (State q : partition.block(b)) {
                if (partition.block_of(automaton.next(q, a)) != target) {
                    throw PreconditionError(std::string(what) + " components are not mapped into components by letter " +
                                            automaton.letters()[a]);
                }
            }
            action[b * k + a] = target;
        }
    }
    return action;
}

std::vector<std::size_t> apply_action(const std::vector<std::size_t> &action, std::size_t k, std::size_t node,
                                      const Word &word) {
    std::vector<std::size_t> path{node};
    for (Letter a : word) {
        node = action[node * k + a];
        path.push_back(node);
    }
    return path;
}

std::size_t image_size(const Automaton &automaton, const Word &word) {
    return image_set(automaton, all_states(automaton.size()), word).size();
}

void append(Word &word, const Word &suffix) {
    word.insert(word.end(), suffix.begin(), suffix.end());
}

json instance_json(const Automaton &automaton, const Digraph *graph) {
    json instance{{"automaton", to_json(automaton)}};
    if (graph != nullptr) {
        instance["digraph"] = to_json(*graph);
    }
    return instance;
}

struct CheckedInput {
    IntervalTable table;
    Connectivity conn;
};

// Shared preconditions of the reduction: sizes agree, the automaton is
// strongly connected and respects the intervals of an scc-dense digraph.
CheckedInput check_reduction_input(const Automaton &automaton, const Digraph &graph) {
    if (graph.size() != automaton.size()) {
        throw InputError("digraph has " + std::to_string(graph.size()) + " vertices, automaton has " +
                         std::to_string(automaton.size()) + " states");
    }
    if (!is_strongly_connected(automaton)) {
        throw PreconditionError("automaton is not strongly connected");
    }
    IntervalTable table(graph);
    auto report = check_letter_conditions(automaton, table);
    if (!report.ok) {
        const auto &v = report.violations.front();
        throw PreconditionError("automaton does not respect the intervals: letter " +
                                automaton.letters()[v.letter] + " violates condition " + to_string(v.condition));
    }
    if (!is_scc_dense(table).ok) {
        throw PreconditionError("digraph is not scc-dense");
    }
    return {std::move(table), connectivity(graph)};
}

std::size_t square(std::size_t x) {
    return x * x;
}

}  // namespace

json to_json(const ResetResult &result) {
    json trace = json::array();
    for (const auto &s : result.trace) {
        trace.push_back({{"stage", s.stage}, {"length", s.word_length}, {"image_size", s.image_size}});
    }
    return {{"word", result.word},
            {"length", result.length},
            {"bound", result.bound},
            {"bound_ok", result.bound_ok},
            {"trace", trace}};
}

bool is_synchronizing(const Automaton &automaton) {
    const std::size_t n = automaton.size();
    const std::size_t k = automaton.alphabet_size();
    if (n == 1) {
        return true;
    }
    // preimages[a][s]: states sent to s by letter a
    std::vector<std::vector<std::vector<State>>> preimages(k, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) {
            preimages[a][automaton.next(q, a)].push_back(q);
        }
    }
    // Backward search from the diagonal: a pair is collapsible iff some
    // letter sends it to a collapsible pair or onto one state.
    std::vector<bool> collapsible(n * n, false);
    std::vector<std::pair<State, State>> queue;
    for (State s = 0; s < n; ++s) {
        collapsible[s * n + s] = true;
        queue.emplace_back(s, s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [s, t] = queue[head];
        for (Letter a = 0; a < k; ++a) {
            for (State p : preimages[a][s]) {
                for (State q : preimages[a][t]) {
                    State lo = std::min(p, q);
                    State hi = std::max(p, q);
                    if (!collapsible[lo * n + hi]) {
                        collapsible[lo * n + hi] = true;
                        queue.emplace_back(lo, hi);
                    }
                }
            }
        }
    }
    for (State p = 0; p < n; ++p) {
        for (State q = p + 1; q < n; ++q) {
            if (!collapsible[p * n + q]) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Word> shortest_collapse(const Automaton &automaton, const StateSet &states) {
    for (State q : states) {
        if (q >= automaton.size()) {
            throw InputError("state " + std::to_string(q) + " outside automaton");
        }
    }
    if (automaton.size() > max_subset_states) {
        throw InputError("subset search supports at most 64 states, got " + std::to_string(automaton.size()));
    }
    return subset_bfs(automaton, mask_of(states));
}

std::optional<ResetResult> shortest_reset(const Automaton &automaton) {
    if (!is_synchronizing(automaton)) {
        return std::nullopt;
    }
    auto word = shortest_collapse(automaton, all_states(automaton.size()));
    if (!word) {
        throw PropertyViolation("pair test and subset search disagree on synchronizability",
                                instance_json(automaton, nullptr));
    }
    ResetResult result;
    result.word = std::move(*word);
    result.length = result.word.size();
    result.bound = square(automaton.size() - 1);
    result.bound_ok = result.length <= result.bound;
    result.trace.push_back({"subset-bfs", result.length, 1});
    return result;
}

Word shortest_reset_provider(const Automaton &quotient) {
    auto result = shortest_reset(quotient);
    if (!result) {
        throw PreconditionError("quotient automaton is not synchronizing");
    }
    return result->word;
}

ResetResult singleton_class_reset(const Automaton &automaton, const Partition &partition,
                                  const Word &quotient_reset) {
    if (!is_strongly_connected(automaton)) {
        throw PreconditionError("automaton is not strongly connected");
    }
    auto quotient = quotient_automaton(automaton, partition);
    const std::size_t k = partition.block_count();
    std::vector<bool> singleton(k, false);
    bool any_singleton = false;
    for (std::size_t b = 0; b < k; ++b) {
        singleton[b] = partition.block(b).size() == 1;
        any_singleton = any_singleton || singleton[b];
    }
    if (!any_singleton) {
        throw PreconditionError("congruence has no singleton class");
    }
    validate_word(quotient.automaton, quotient_reset);
    auto landing = image_set(quotient.automaton, all_states(k), quotient_reset);
    if (landing.size() != 1) {
        throw PreconditionError("supplied word does not reset the quotient automaton");
    }

    ResetResult result;
    result.word = quotient_reset;
    result.trace.push_back({"quotient-reset", result.word.size(), image_size(automaton, result.word)});

    std::vector<std::size_t> action(quotient.automaton.table().begin(), quotient.automaton.table().end());
    auto steer = node_bfs(action, k, automaton.alphabet_size(), {landing.front()}, singleton);
    if (!steer) {
        throw PreconditionError("no singleton class reachable in the quotient");
    }
    append(result.word, *steer);
    result.length = result.word.size();
    result.trace.push_back({"steer-to-singleton", result.length, image_size(automaton, result.word)});
    if (result.trace.back().image_size != 1) {
        throw PropertyViolation("singleton-class construction did not reset the automaton",
                                instance_json(automaton, nullptr));
    }
    const std::size_t base = std::max(quotient_reset.size(), square(k - 1));
    result.bound = base + (k - 1);
    result.bound_ok = result.length <= result.bound;
    return result;
}

CernyFamily cerny_interval_family(const IntervalTable &table) {
    const auto &scc = table.scc();
    std::set<StateSet> sets;
    for (const auto &block : scc.blocks()) {
        for (State x : block) {
            for (State y : block) {
                if (x != y && table.cell(x, y).size() >= 2) {
                    sets.insert(table.cell(x, y));
                }
            }
        }
    }
    return {{sets.begin(), sets.end()}};
}

CernyFamily cerny_interval_family(const Digraph &graph) {
    return cerny_interval_family(IntervalTable(graph));
}

namespace {

std::pair<State, State> find_covering_interval(const Automaton &automaton, const IntervalTable &table,
                                               const StateSet &subset, const Word &word, const Digraph *graph) {
    if (table.size() != automaton.size()) {
        throw InputError("digraph and automaton sizes differ");
    }
    StateSet x_set = subset;
    std::sort(x_set.begin(), x_set.end());
    x_set.erase(std::unique(x_set.begin(), x_set.end()), x_set.end());
    if (x_set.size() < 2) {
        throw PreconditionError("covering interval needs at least two states");
    }
    for (State q : x_set) {
        if (q >= automaton.size()) {
            throw InputError("state " + std::to_string(q) + " outside automaton");
        }
        if (!table.scc().same_block(q, x_set.front())) {
            throw PreconditionError("states do not lie in one strongly connected component");
        }
    }
    if (image_set(automaton, x_set, word).size() != 1) {
        throw PreconditionError("word does not collapse the given states");
    }
    std::vector<State> map(automaton.size());
    for (State q = 0; q < automaton.size(); ++q) {
        map[q] = apply_word(automaton, q, word);
    }
    auto collapses = [&](State x, State y) {
        const auto &cell = table.cell(x, y);
        return !cell.empty() && std::all_of(cell.begin(), cell.end(), [&](State z) { return map[z] == map[x]; });
    };
    auto covers = [&](State x, State y, std::size_t prefix) {
        return std::all_of(x_set.begin(), x_set.begin() + static_cast<std::ptrdiff_t>(prefix),
                           [&](State z) { return table.contains(x, y, z); });
    };

    // Follow the induction on |X|: settle the first two states, then absorb
    // one state at a time, re-anchoring the interval at the new state when it
    // falls outside.
    std::optional<std::pair<State, State>> pair;
    if (collapses(x_set[0], x_set[1])) {
        pair = {x_set[0], x_set[1]};
    } else if (collapses(x_set[1], x_set[0])) {
        pair = {x_set[1], x_set[0]};
    }
    for (std::size_t i = 2; pair && i < x_set.size(); ++i) {
        const State z = x_set[i];
        auto [x, y] = *pair;
        if (table.contains(x, y, z)) {
            continue;
        }
        if (collapses(x, z) && covers(x, z, i + 1)) {
            pair = {x, z};
        } else if (collapses(z, y) && covers(z, y, i + 1)) {
            pair = {z, y};
        } else {
            pair.reset();
        }
    }
    if (pair) {
        return *pair;
    }
    for (State x : x_set) {
        for (State y : x_set) {
            if (x != y && collapses(x, y) && covers(x, y, x_set.size())) {
                return {x, y};
            }
        }
    }
    json instance = instance_json(automaton, graph);
    instance["subset"] = x_set;
    instance["word"] = word;
    throw PropertyViolation("lemma violated: no covering interval collapses", instance);
}

}  // namespace

std::pair<State, State> covering_interval(const Automaton &automaton, const IntervalTable &table,
                                          const StateSet &subset, const Word &word) {
    return find_covering_interval(automaton, table, subset, word, nullptr);
}

std::pair<State, State> covering_interval(const Automaton &automaton, const Digraph &graph, const StateSet &subset,
                                          const Word &word) {
    auto input = check_reduction_input(automaton, graph);
    return find_covering_interval(automaton, input.table, subset, word, &graph);
}

namespace {

Claim1Result build_claim1(const Automaton &automaton, const Digraph &graph, const CheckedInput &input,
                          const QuotientResetProvider &provider) {
    const auto &conn = input.conn;
    const std::size_t k_letters = automaton.alphabet_size();
    const std::size_t n = conn.scc.block_count();
    const std::size_t k = conn.wcc.block_count();

    Claim1Result result;
    result.scc_count = n;
    result.wcc_count = k;

    // Reset the weak-component quotient (empty word when it has one state).
    if (k > 1) {
        auto quotient = quotient_automaton(automaton, conn.wcc);
        Word w = provider(quotient.automaton);
        validate_word(quotient.automaton, w);
        if (image_set(quotient.automaton, all_states(k), w).size() != 1) {
            throw PreconditionError("quotient reset provider returned a word that does not reset the quotient");
        }
        result.word = std::move(w);
    }
    result.trace.push_back({"reset-weak-quotient", result.word.size(), image_size(automaton, result.word)});

    const auto scc_action = block_action(automaton, conn.scc, "strongly connected");
    const auto wcc_action = block_action(automaton, conn.wcc, "weakly connected");

    std::vector<std::size_t> scc_per_wcc(k, 0);
    std::vector<std::size_t> wcc_of_scc(n);
    for (std::size_t b = 0; b < n; ++b) {
        wcc_of_scc[b] = conn.wcc.block_of(conn.scc.block(b).front());
        ++scc_per_wcc[wcc_of_scc[b]];
    }
    std::vector<bool> is_source(n, true);
    std::vector<bool> is_sink(n, true);
    for (const auto &[b, c] : conn.comp_dag) {
        is_sink[b] = false;
        is_source[c] = false;
    }

    // Target weak component: one made of a single strong component if any,
    // otherwise one minimizing the number of maximal or minimal components.
    // The component w already lands in is preferred among the candidates.
    const std::size_t current_wcc = conn.wcc.block_of(apply_word(automaton, 0, result.word));
    std::vector<std::size_t> source_count(k, 0);
    std::vector<std::size_t> sink_count(k, 0);
    for (std::size_t b = 0; b < n; ++b) {
        source_count[wcc_of_scc[b]] += is_source[b] ? 1 : 0;
        sink_count[wcc_of_scc[b]] += is_sink[b] ? 1 : 0;
    }
    auto score = [&](std::size_t i) {
        return scc_per_wcc[i] == 1 ? 0 : std::min(source_count[i], sink_count[i]);
    };
    std::size_t target = current_wcc;
    for (std::size_t i = 0; i < k; ++i) {
        if (score(i) < score(target)) {
            target = i;
        }
    }
    const bool single = scc_per_wcc[target] == 1;
    // Drive maximal components down into minimal ones, or the reverse.
    const bool downward = source_count[target] <= sink_count[target];
    const auto &start_blocks = downward ? is_source : is_sink;
    const auto &goal_blocks = downward ? is_sink : is_source;

    std::vector<bool> wcc_target(k, false);
    wcc_target[target] = true;
    auto steer = node_bfs(wcc_action, k, k_letters, {current_wcc}, wcc_target);
    if (!steer) {
        throw PreconditionError("weak-component quotient is not strongly connected");
    }
    append(result.word, *steer);
    result.trace.push_back({"steer-to-weak-component", result.word.size(), image_size(automaton, result.word)});

    if (!single) {
        // One round per still-active extremal component of the target.
        std::vector<std::size_t> image;  // current block of each active extremal component
        for (std::size_t b = 0; b < n; ++b) {
            if (start_blocks[b] && wcc_of_scc[b] == target) {
                image.push_back(b);
            }
        }
        std::size_t round = 0;
        while (!image.empty()) {
            auto step = node_bfs(scc_action, n, k_letters, image, goal_blocks);
            if (!step) {
                throw PropertyViolation("no extremal component reachable from the active components",
                                        instance_json(automaton, &graph));
            }
            std::vector<std::size_t> still_active;
            for (std::size_t b : image) {
                std::size_t after = apply_action(scc_action, k_letters, b, *step).back();
                if (!goal_blocks[after]) {
                    still_active.push_back(after);
                }
            }
            std::sort(still_active.begin(), still_active.end());
            still_active.erase(std::unique(still_active.begin(), still_active.end()), still_active.end());
            image = std::move(still_active);
            append(result.word, *step);
            result.trace.push_back(
                {"u" + std::to_string(++round), result.word.size(), image_size(automaton, result.word)});
        }
    }

    auto landing = image_set(automaton, all_states(automaton.size()), result.word);
    result.landing_block = conn.scc.block_of(landing.front());
    for (State q : landing) {
        if (conn.scc.block_of(q) != result.landing_block) {
            throw PropertyViolation("image does not lie in a single strongly connected component",
                                    instance_json(automaton, &graph));
        }
    }
    if (result.word.size() > square(n - 1)) {
        json instance = instance_json(automaton, &graph);
        instance["word"] = result.word;
        throw BoundViolation("component-landing word of length " + std::to_string(result.word.size()) +
                                 " exceeds (n-1)^2 = " + std::to_string(square(n - 1)),
                             instance);
    }
    return result;
}

}  // namespace

Claim1Result claim1_word(const Automaton &automaton, const Digraph &graph, const QuotientResetProvider &provider) {
    auto input = check_reduction_input(automaton, graph);
    return build_claim1(automaton, graph, input, provider);
}

Word collapse_in_component(const Automaton &automaton, const StateSet &component, const CernyFamily &family) {
    if (component.size() <= 1) {
        return {};
    }
    auto word = shortest_collapse(automaton, component);
    if (!word) {
        throw PreconditionError("component cannot be collapsed");
    }
    if (word->size() > family.m()) {
        json instance{{"automaton", to_json(automaton)}, {"component", component}, {"family_size", family.m()}};
        throw BoundViolation("family bound violated: shortest collapse " + std::to_string(word->size()) +
                                 " > family size " + std::to_string(family.m()),
                             instance);
    }
    return *word;
}

ResetResult theorem_reset(const Automaton &automaton, const Digraph &graph, const QuotientResetProvider &provider) {
    auto input = check_reduction_input(automaton, graph);
    if (!is_synchronizing(automaton)) {
        throw PreconditionError("automaton is not synchronizing");
    }
    const std::size_t big_n = automaton.size();
    const auto &conn = input.conn;

    ResetResult result;
    result.bound = square(big_n - 1);
    auto finish = [&]() {
        result.length = result.word.size();
        if (image_size(automaton, result.word) != 1) {
            json instance = instance_json(automaton, &graph);
            instance["word"] = result.word;
            throw PropertyViolation("constructed word does not reset the automaton", instance);
        }
        if (result.length > result.bound) {
            // Bound missed: substitute the oracle reset.
            auto oracle = shortest_reset(automaton);
            result.trace.push_back({"fallback:bound " + std::to_string(result.length), result.length, 1});
            result.word = oracle->word;
            result.length = result.word.size();
        }
        result.bound_ok = result.length <= result.bound;
        return result;
    };

    if (big_n == 1) {
        return finish();
    }

    for (const auto &block : conn.wcc.blocks()) {
        if (block.size() == 1) {
            auto quotient = quotient_automaton(automaton, conn.wcc);
            auto prop = singleton_class_reset(automaton, conn.wcc, provider(quotient.automaton));
            result.word = prop.word;
            result.trace = prop.trace;
            return finish();
        }
    }

    Claim1Result landing;
    try {
        landing = build_claim1(automaton, graph, input, provider);
    } catch (const BoundViolation &e) {
        auto oracle = shortest_reset(automaton);
        result.word = oracle->word;
        result.trace.push_back({std::string("fallback:") + e.what(), result.word.size(), 1});
        return finish();
    }
    result.word = landing.word;
    result.trace = landing.trace;

    const auto &component = conn.scc.block(landing.landing_block);
    if (image_size(automaton, result.word) == 1) {
        return finish();
    }

    std::vector<bool> trivial(conn.scc.block_count(), false);
    bool any_trivial = false;
    for (std::size_t b = 0; b < conn.scc.block_count(); ++b) {
        trivial[b] = conn.scc.block(b).size() == 1;
        any_trivial = any_trivial || trivial[b];
    }
    if (any_trivial) {
        auto action = block_action(automaton, conn.scc, "strongly connected");
        auto step =
            node_bfs(action, conn.scc.block_count(), automaton.alphabet_size(), {landing.landing_block}, trivial);
        if (!step) {
            throw PropertyViolation("no trivial component reachable", instance_json(automaton, &graph));
        }
        append(result.word, *step);
        result.trace.push_back({"map-to-trivial-component", result.word.size(), image_size(automaton, result.word)});
        return finish();
    }

    auto family = cerny_interval_family(input.table);
    append(result.word, collapse_in_component(automaton, component, family));
    result.trace.push_back({"collapse-component", result.word.size(), image_size(automaton, result.word)});
    return finish();
}

ResetResult tower_reset(const Automaton &automaton, const TowerCertificate &cert, const BasePredicate &base) {
    auto verdict = verify_tower(automaton, cert, base);
    if (!verdict.ok) {
        throw PreconditionError("invalid tower at level " + std::to_string(verdict.level) + ": " + verdict.reason);
    }
    std::function<Word(std::size_t, const Automaton &)> reset_level = [&](std::size_t level,
                                                                           const Automaton &current) -> Word {
        if (level == cert.levels.size()) {
            if (current.size() == 1) {
                return {};
            }
            return shortest_reset_provider(current);
        }
        auto provider = [&](const Automaton &quotient) { return reset_level(level + 1, quotient); };
        return theorem_reset(current, cert.levels[level], provider).word;
    };

    if (cert.levels.empty()) {
        ResetResult result;
        result.word = reset_level(0, automaton);
        result.length = result.word.size();
        result.bound = square(automaton.size() - 1);
        result.bound_ok = result.length <= result.bound;
        result.trace.push_back({"base-class", result.length, image_size(automaton, result.word)});
        return result;
    }
    auto provider = [&](const Automaton &quotient) { return reset_level(1, quotient); };
    return theorem_reset(automaton, cert.levels.front(), provider);
}

}  // namespace autoint
