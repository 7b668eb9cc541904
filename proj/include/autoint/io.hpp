#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "autoint/automaton.hpp"
#include "autoint/digraph.hpp"

namespace autoint {

using json = nlohmann::json;

// Automaton: {"letters": ["a","b"], "delta": [[1,1],[2,1],...]}.
// The reader also accepts an object wrapping it under "automaton", which is
// what the generators emit alongside a digraph.
json to_json(const Automaton &automaton);
Automaton automaton_from_json(const json &j);

// Digraph: {"n": 4, "edges": [[0,1],...]}; also accepted under "digraph".
json to_json(const Digraph &graph);
Digraph digraph_from_json(const json &j);

// Partition: {"blocks": [[0],[1,2]]}.
json to_json(const Partition &partition);
Partition partition_from_json(const json &j, std::size_t n);

Word word_from_json(const json &j);

/// Throws InputError when the file is missing or not valid JSON.
json read_json_file(const std::filesystem::path &path);

std::string to_dot(const Digraph &graph, const std::string &name = "D");
/// Transition digraph with edges labelled by the letters that induce them.
std::string to_dot(const Automaton &automaton, const std::string &name = "A");

/// Compact canonical encoding of the transition table, rows separated by ';'.
std::string canonical_id(const Automaton &automaton);

}  // namespace autoint
