#include "autoint/corpus.hpp"

#include <atomic>
#include <fstream>
#include <thread>

#include "autoint/errors.hpp"
#include "autoint/synchro.hpp"

namespace autoint {

namespace {

constexpr std::uint64_t chunk_size = 1 << 15;

bool all_letters(const Automaton &automaton, bool (*predicate)(const std::vector<State> &)) {
    for (Letter a = 0; a < automaton.alphabet_size(); ++a) {
        if (!predicate(automaton.letter_map(a))) {
            return false;
        }
    }
    return true;
}

struct ChunkResult {
    std::string records;
    std::string counterexamples;
    CorpusSummary counts;
};

ChunkResult run_chunk(const AutomatonEnumerator &enumerator, const EnumerationFilter &filter, std::uint64_t begin,
                      std::uint64_t end) {
    ChunkResult out;
    enumerator.for_each(begin, end, filter, [&](std::uint64_t, const Automaton &automaton) {
        auto record = make_record(automaton);
        ++out.counts.total;
        out.counts.synchronizing += record.synchronizing ? 1 : 0;
        out.counts.bound_ok += record.bound_ok ? 1 : 0;
        out.records += to_json(record).dump();
        out.records += '\n';
        if (!record.bound_ok) {
            ++out.counts.violations;
            json cx = to_json(record);
            cx["automaton"] = to_json(automaton);
            out.counterexamples += cx.dump();
            out.counterexamples += '\n';
        }
    });
    return out;
}

}  // namespace

RunRecord make_record(const Automaton &automaton) {
    RunRecord record;
    record.id = canonical_id(automaton);
    record.n = automaton.size();
    record.k = automaton.alphabet_size();
    record.bound = (record.n - 1) * (record.n - 1);
    if (auto reset = shortest_reset(automaton)) {
        record.synchronizing = true;
        record.shortest_len = reset->length;
        record.bound_ok = reset->length <= record.bound;
    }
    if (all_letters(automaton, &is_monotone)) {
        record.class_tags.emplace_back("monotonic");
    }
    if (all_letters(automaton, &is_cyclically_monotone)) {
        record.class_tags.emplace_back("orientable");
    }
    return record;
}

json to_json(const RunRecord &record) {
    json j{{"id", record.id},
           {"n", record.n},
           {"k", record.k},
           {"synchronizing", record.synchronizing},
           {"shortest_len", nullptr},
           {"bound", record.bound},
           {"bound_ok", record.bound_ok},
           {"class_tags", record.class_tags}};
    if (record.shortest_len) {
        j["shortest_len"] = *record.shortest_len;
    }
    return j;
}

json to_json(const CorpusSummary &summary) {
    return {{"total", summary.total},
            {"synchronizing", summary.synchronizing},
            {"bound_ok", summary.bound_ok},
            {"violations", summary.violations},
            {"counterexamples", summary.counterexamples.string()}};
}

CorpusSummary verify_corpus(const CorpusOptions &options) {
    AutomatonEnumerator enumerator(options.states, options.letters, options.budget);
    CorpusSummary summary;
    summary.counterexamples = options.counterexamples.value_or(options.out.string() + ".counterexamples.jsonl");

    std::ofstream out(options.out, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write " + options.out.string());
    }
    std::ofstream cx_out;

    const std::uint64_t chunks = (enumerator.count() + chunk_size - 1) / chunk_size;
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    // Each wave fills one private buffer per chunk; buffers are flushed in
    // chunk order.
    for (std::uint64_t wave = 0; wave < chunks; wave += jobs) {
        const std::uint64_t wave_end = std::min<std::uint64_t>(chunks, wave + jobs);
        std::vector<ChunkResult> results(wave_end - wave);
        std::atomic<std::uint64_t> next{wave};
        std::vector<std::exception_ptr> errors(jobs);
        auto worker = [&](std::size_t slot) {
            try {
                for (std::uint64_t c = next++; c < wave_end; c = next++) {
                    results[c - wave] = run_chunk(enumerator, options.filter, c * chunk_size, (c + 1) * chunk_size);
                }
            } catch (...) {
                errors[slot] = std::current_exception();
            }
        };
        std::vector<std::thread> threads;
        for (std::size_t t = 1; t < jobs; ++t) {
            threads.emplace_back(worker, t);
        }
        worker(0);
        for (auto &t : threads) {
            t.join();
        }
        for (const auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
        for (const auto &r : results) {
            out << r.records;
            summary.total += r.counts.total;
            summary.synchronizing += r.counts.synchronizing;
            summary.bound_ok += r.counts.bound_ok;
            summary.violations += r.counts.violations;
            if (!r.counterexamples.empty()) {
                if (!cx_out.is_open()) {
                    cx_out.open(summary.counterexamples, std::ios::binary | std::ios::trunc);
                }
                cx_out << r.counterexamples;
            }
        }
    }
    if (!out) {
        throw InputError("failed writing " + options.out.string());
    }
    return summary;
}

}  // namespace autoint
