#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "autoint/automaton.hpp"
#include "autoint/genlab.hpp"
#include "autoint/io.hpp"

namespace autoint {

/// Verdict for one automaton of an exhaustive run.
struct RunRecord {
    std::string id;
    std::size_t n = 0;
    std::size_t k = 0;
    bool synchronizing = false;
    std::optional<std::size_t> shortest_len;
    std::size_t bound = 0;
    bool bound_ok = true;
    std::vector<std::string> class_tags;
};

RunRecord make_record(const Automaton &automaton);
json to_json(const RunRecord &record);

struct CorpusOptions {
    std::size_t states = 1;
    std::size_t letters = 1;
    EnumerationFilter filter;
    std::size_t jobs = 1;
    std::filesystem::path out;
    /// Defaults to `out` with ".counterexamples.jsonl" appended.
    std::optional<std::filesystem::path> counterexamples;
    std::uint64_t budget = 100'000'000;
};

struct CorpusSummary {
    std::uint64_t total = 0;
    std::uint64_t synchronizing = 0;
    std::uint64_t bound_ok = 0;
    std::uint64_t violations = 0;
    std::filesystem::path counterexamples;
};

json to_json(const CorpusSummary &summary);

/// Enumerates every automaton of the given size, writes one JSON line per
/// accepted automaton in index order, and persists any synchronizing
/// automaton whose shortest reset exceeds (n-1)^2 to the counterexample file.
/// Output is identical for any number of jobs.
CorpusSummary verify_corpus(const CorpusOptions &options);

}  // namespace autoint
