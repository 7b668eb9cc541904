#include "autoint/respect.hpp"

#include <algorithm>
#include <random>

#include "autoint/congruence.hpp"
#include "autoint/errors.hpp"

namespace autoint {

std::string to_string(Condition c) {
    switch (c) {
    case Condition::I:
        return "I";
    case Condition::II:
        return "II";
    case Condition::III:
        return "III";
    }
    return "?";
}

namespace {

StateSet map_set(const StateSet &set, const std::vector<State> &map) {
    StateSet image;
    image.reserve(set.size());
    for (State z : set) {
        image.push_back(map[z]);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

void sort_violations(std::vector<RespectViolation> &violations) {
    std::stable_sort(violations.begin(), violations.end(), [](const auto &a, const auto &b) {
        return std::tie(a.condition, a.letter, a.x, a.y) < std::tie(b.condition, b.letter, b.x, b.y);
    });
}

// Appends violations for one transformation, tagging them with `tag`.
void collect(const IntervalTable &table, const std::vector<State> &map, Letter tag,
             std::vector<RespectViolation> &out) {
    const auto n = static_cast<State>(table.size());
    for (State x = 0; x < n; ++x) {
        for (State y = 0; y < n; ++y) {
            if (table.empty(x, y)) {
                continue;
            }
            const State fx = map[x];
            const State fy = map[y];
            if (table.empty(fx, fy)) {
                out.push_back({Condition::I, tag, x, y, {}, {}});
            }
            if (!table.empty(y, x)) {
                StateSet missing;
                for (State z : table.cell(x, y)) {
                    if (!table.contains(fx, fy, map[z])) {
                        missing.push_back(map[z]);
                    }
                }
                if (!missing.empty()) {
                    std::sort(missing.begin(), missing.end());
                    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
                    out.push_back({Condition::II, tag, x, y, std::move(missing), {}});
                }
            }
        }
    }
    // III ranges over distinct x, y.
    for (State x = 0; x < n; ++x) {
        for (State y = 0; y < n; ++y) {
            if (x == y || map[x] != map[y]) {
                continue;
            }
            auto forward = map_set(table.cell(x, y), map);
            auto backward = map_set(table.cell(y, x), map);
            if (forward.size() > 1 && backward.size() > 1) {
                out.push_back({Condition::III, tag, x, y, std::move(forward), {}});
            }
        }
    }
}

void require_same_size(const Automaton &automaton, std::size_t n) {
    if (automaton.size() != n) {
        throw InputError("digraph has " + std::to_string(n) + " vertices, automaton has " +
                         std::to_string(automaton.size()) + " states");
    }
}

}  // namespace

RespectReport check_transformation(const IntervalTable &table, const std::vector<State> &map) {
    RespectReport report;
    collect(table, map, 0, report.violations);
    sort_violations(report.violations);
    report.ok = report.violations.empty();
    return report;
}

RespectReport check_letter_conditions(const Automaton &automaton, const IntervalTable &table) {
    require_same_size(automaton, table.size());
    RespectReport report;
    for (Letter a = 0; a < automaton.alphabet_size(); ++a) {
        collect(table, automaton.letter_map(a), a, report.violations);
    }
    sort_violations(report.violations);
    report.ok = report.violations.empty();
    return report;
}

RespectReport check_letter_conditions(const Automaton &automaton, const Digraph &graph) {
    require_same_size(automaton, graph.size());
    return check_letter_conditions(automaton, IntervalTable(graph));
}

RespectReport sample_word_conditions(const Automaton &automaton, const Digraph &graph, std::size_t word_count,
                                     std::size_t max_len, std::uint64_t seed) {
    require_same_size(automaton, graph.size());
    IntervalTable table(graph);
    auto letters = check_letter_conditions(automaton, table);
    if (!letters.ok) {
        const auto &v = letters.violations.front();
        throw PreconditionError("letter " + automaton.letters()[v.letter] + " violates condition " +
                                to_string(v.condition) + " at (" + std::to_string(v.x) + ", " +
                                std::to_string(v.y) + ")");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length_dist(max_len == 0 ? 0 : 1, max_len);
    std::uniform_int_distribution<Letter> letter_dist(0, static_cast<Letter>(automaton.alphabet_size() - 1));

    RespectReport report;
    std::vector<State> map(automaton.size());
    for (std::size_t i = 0; i < word_count; ++i) {
        Word word(length_dist(rng));
        for (auto &a : word) {
            a = letter_dist(rng);
        }
        for (State q = 0; q < automaton.size(); ++q) {
            State s = q;
            for (Letter a : word) {
                s = automaton.next(s, a);
            }
            map[q] = s;
        }
        std::size_t before = report.violations.size();
        collect(table, map, static_cast<Letter>(i), report.violations);
        for (std::size_t j = before; j < report.violations.size(); ++j) {
            report.violations[j].word = word;
        }
    }
    sort_violations(report.violations);
    report.ok = report.violations.empty();
    return report;
}

UniqueReturnCheck is_unique_return_paths(const Digraph &graph) {
    auto scc = scc_partition(graph);
    for (const auto &block : scc.blocks()) {
        const bool cyclic = block.size() >= 2 || graph.has_edge(block.front(), block.front());
        if (!cyclic) {
            continue;
        }
        for (State v : block) {
            std::size_t out = 0;
            std::size_t in = 0;
            for (State w : graph.successors(v)) {
                out += scc.same_block(v, w) ? 1 : 0;
            }
            for (State w : graph.predecessors(v)) {
                in += scc.same_block(v, w) ? 1 : 0;
            }
            if (out != 1 || in != 1) {
                return {false, v,
                        "vertex " + std::to_string(v) + " has " + std::to_string(out) + " out- and " +
                            std::to_string(in) + " in-neighbours inside its component"};
            }
        }
    }
    return {};
}

json to_json(const TowerCertificate &cert) {
    json levels = json::array();
    for (const auto &d : cert.levels) {
        levels.push_back(to_json(d));
    }
    return {{"levels", levels}};
}

TowerCertificate tower_from_json(const json &j) {
    if (j.is_object() && j.contains("certificate")) {
        return tower_from_json(j.at("certificate"));
    }
    if (!j.is_object() || !j.contains("levels") || !j.at("levels").is_array()) {
        throw InputError("tower certificate JSON needs a \"levels\" array");
    }
    TowerCertificate cert;
    for (const auto &level : j.at("levels")) {
        cert.levels.push_back(digraph_from_json(level));
    }
    return cert;
}

bool one_state_base(const Automaton &automaton) {
    return automaton.size() == 1;
}

TowerVerdict verify_tower(const Automaton &automaton, const TowerCertificate &cert, const BasePredicate &base) {
    Automaton current = automaton;
    for (std::size_t i = 0; i < cert.levels.size(); ++i) {
        const Digraph &graph = cert.levels[i];
        if (graph.size() != current.size()) {
            return {false, i,
                    "level digraph has " + std::to_string(graph.size()) + " vertices, automaton has " +
                        std::to_string(current.size()) + " states",
                    std::nullopt};
        }
        if (!is_strongly_connected(current)) {
            return {false, i, "automaton is not strongly connected", std::nullopt};
        }
        IntervalTable table(graph);
        auto dense = is_scc_dense(table);
        if (!dense.ok) {
            const auto &w = *dense.witness;
            return {false, i,
                    "digraph is not scc-dense: " + std::to_string(w.z) + " lies outside [" + std::to_string(w.x) +
                        "," + std::to_string(w.y) + "] and [" + std::to_string(w.y) + "," + std::to_string(w.x) +
                        "]",
                    std::nullopt};
        }
        auto report = check_letter_conditions(current, table);
        if (!report.ok) {
            const auto &v = report.violations.front();
            return {false, i,
                    "letter " + current.letters()[v.letter] + " violates condition " + to_string(v.condition) +
                        " at (" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")",
                    v.condition};
        }
        auto wcc = connectivity(graph).wcc;
        if (!is_congruence(current, wcc).ok) {
            return {false, i, "weak components do not form a congruence", Condition::I};
        }
        current = quotient_automaton(current, wcc).automaton;
    }
    if (!base(current)) {
        return {false, cert.levels.size(), "final quotient with " + std::to_string(current.size()) +
                                               " states is not in the base class",
                std::nullopt};
    }
    return {true, cert.levels.size(), "", std::nullopt};
}

}  // namespace autoint
