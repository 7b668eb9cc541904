#include "autoint/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "autoint/errors.hpp"

namespace autoint {

namespace {

const json &unwrap(const json &j, const char *key) {
    if (j.is_object() && j.contains(key) && j.at(key).is_object()) {
        return j.at(key);
    }
    return j;
}

template <typename T>
T checked_get(const json &j, const char *what) {
    try {
        return j.get<T>();
    } catch (const json::exception &e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

json to_json(const Automaton &automaton) {
    return {{"letters", automaton.letters()}, {"delta", automaton.delta()}};
}

Automaton automaton_from_json(const json &j) {
    const json &a = unwrap(j, "automaton");
    if (!a.is_object() || !a.contains("delta")) {
        throw InputError("automaton JSON needs a \"delta\" table");
    }
    auto delta = checked_get<std::vector<std::vector<State>>>(a.at("delta"), "delta table");
    if (a.contains("letters")) {
        auto letters = checked_get<std::vector<std::string>>(a.at("letters"), "letters");
        return Automaton(std::move(letters), delta);
    }
    return Automaton(delta);
}

json to_json(const Digraph &graph) {
    json edges = json::array();
    for (const auto &[u, v] : graph.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", graph.size()}, {"edges", edges}};
}

Digraph digraph_from_json(const json &j) {
    const json &d = unwrap(j, "digraph");
    if (!d.is_object() || !d.contains("n") || !d.contains("edges")) {
        throw InputError("digraph JSON needs \"n\" and \"edges\"");
    }
    auto n = checked_get<std::size_t>(d.at("n"), "vertex count");
    auto raw = checked_get<std::vector<std::vector<State>>>(d.at("edges"), "edge list");
    std::vector<Edge> edges;
    for (const auto &e : raw) {
        if (e.size() != 2) {
            throw InputError("every edge must be a pair");
        }
        edges.emplace_back(e[0], e[1]);
    }
    return Digraph(n, std::move(edges));
}

json to_json(const Partition &partition) {
    return {{"blocks", partition.blocks()}};
}

Partition partition_from_json(const json &j, std::size_t n) {
    const json &blocks = j.is_object() ? j.value("blocks", json()) : j;
    return Partition::from_blocks(n, checked_get<std::vector<std::vector<State>>>(blocks, "partition blocks"));
}

Word word_from_json(const json &j) {
    return checked_get<Word>(j, "word");
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string to_dot(const Digraph &graph, const std::string &name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < graph.size(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const auto &[u, v] : graph.edges()) {
        out << "  " << u << " -> " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Automaton &automaton, const std::string &name) {
    std::map<Edge, std::string> labels;
    for (State q = 0; q < automaton.size(); ++q) {
        for (Letter a = 0; a < automaton.alphabet_size(); ++a) {
            auto &label = labels[{q, automaton.next(q, a)}];
            if (!label.empty()) {
                label += ",";
            }
            label += automaton.letters()[a];
        }
    }
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (std::size_t q = 0; q < automaton.size(); ++q) {
        out << "  " << q << ";\n";
    }
    for (const auto &[edge, label] : labels) {
        out << "  " << edge.first << " -> " << edge.second << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string canonical_id(const Automaton &automaton) {
    std::string id;
    for (State q = 0; q < automaton.size(); ++q) {
        if (q > 0) {
            id += ';';
        }
        auto row = automaton.row(q);
        for (std::size_t a = 0; a < row.size(); ++a) {
            if (a > 0) {
                id += ',';
            }
            id += std::to_string(row[a]);
        }
    }
    return id;
}

}  // namespace autoint
