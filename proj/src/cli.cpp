#include "autoint/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "autoint/congruence.hpp"
#include "autoint/corpus.hpp"
#include "autoint/errors.hpp"
#include "autoint/genlab.hpp"
#include "autoint/intervals.hpp"
#include "autoint/io.hpp"
#include "autoint/monotone.hpp"
#include "autoint/respect.hpp"
#include "autoint/synchro.hpp"

namespace autoint::cli {

namespace {

json violations_json(const RespectReport &report, const Automaton &automaton, bool words) {
    json list = json::array();
    for (const auto &v : report.violations) {
        json item{{"condition", to_string(v.condition)}, {"x", v.x}, {"y", v.y}, {"detail", v.detail}};
        if (words) {
            item["sample"] = v.letter;
            item["word"] = v.word;
            item["word_string"] = word_to_string(automaton, v.word);
        } else {
            item["letter"] = automaton.letters()[v.letter];
        }
        list.push_back(std::move(item));
    }
    return list;
}

json check_points_json(const std::vector<CheckPoint> &points) {
    json list = json::array();
    for (const auto &p : points) {
        list.push_back({{"pair", {p.x, p.y}}, {"z", p.z}});
    }
    return list;
}

// Base class for tower commands: one-state automata, or any automaton whose
// shortest reset word is within the conjectured bound.
BasePredicate base_predicate(const std::string &name) {
    if (name == "one-state") {
        return one_state_base;
    }
    if (name == "cerny") {
        return [](const Automaton &a) {
            auto reset = shortest_reset(a);
            return reset && reset->bound_ok;
        };
    }
    throw InputError("unknown base class '" + name + "' (expected one-state or cerny)");
}

std::pair<std::size_t, std::size_t> parse_dag_edge(const std::string &text) {
    auto dash = text.find_first_of("-:");
    if (dash == std::string::npos) {
        throw InputError("dag edge '" + text + "' must look like I-J");
    }
    try {
        return {std::stoul(text.substr(0, dash)), std::stoul(text.substr(dash + 1))};
    } catch (const std::exception &) {
        throw InputError("dag edge '" + text + "' must look like I-J");
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Synchronizing automata that respect the intervals of a digraph", "autoint"};
    app.require_subcommand(1);
    std::function<int()> action;

    // check-sync / shortest
    std::string automaton_path;
    for (const char *name : {"check-sync", "shortest"}) {
        auto *cmd = app.add_subcommand(name, "Decide synchronizability and find a shortest reset word");
        cmd->add_option("automaton", automaton_path, "Automaton JSON")->required();
        cmd->callback([&] {
            action = [&] {
                auto automaton = automaton_from_json(read_json_file(automaton_path));
                auto reset = shortest_reset(automaton);
                const std::size_t bound = (automaton.size() - 1) * (automaton.size() - 1);
                json result{{"states", automaton.size()},
                            {"synchronizing", reset.has_value()},
                            {"shortest_length", nullptr},
                            {"bound", bound},
                            {"bound_ok", true}};
                if (reset) {
                    result["shortest_length"] = reset->length;
                    result["word"] = reset->word;
                    result["word_string"] = word_to_string(automaton, reset->word);
                    result["bound_ok"] = reset->bound_ok;
                }
                out << result.dump(2) << '\n';
                return reset && !reset->bound_ok ? exit_violation : exit_ok;
            };
        });
    }

    // intervals
    std::string digraph_path;
    std::vector<State> pair;
    bool dense = false;
    bool want_check_points = false;
    {
        auto *cmd = app.add_subcommand("intervals", "Directed intervals, density and check-points of a digraph");
        cmd->add_option("digraph", digraph_path, "Digraph JSON")->required();
        cmd->add_option("--pair", pair, "Print the single interval [X,Y]")->expected(2);
        cmd->add_flag("--dense", dense, "Report scc-density and check-points");
        cmd->add_flag("--check-points", want_check_points, "List check-points");
        cmd->callback([&] {
            action = [&] {
                auto graph = digraph_from_json(read_json_file(digraph_path));
                json result;
                if (!pair.empty()) {
                    result = {{"x", pair[0]}, {"y", pair[1]}, {"interval", interval(graph, pair[0], pair[1])}};
                } else if (dense) {
                    auto density = is_scc_dense(graph);
                    result = {{"scc_dense", density.ok}, {"check_points", check_points_json(check_points(graph))}};
                    if (density.witness) {
                        result["witness"] = {density.witness->x, density.witness->y, density.witness->z};
                    }
                } else if (want_check_points) {
                    result = {{"check_points", check_points_json(check_points(graph))}};
                } else {
                    IntervalTable table(graph);
                    json cells = json::array();
                    for (State x = 0; x < graph.size(); ++x) {
                        for (State y = 0; y < graph.size(); ++y) {
                            if (!table.empty(x, y)) {
                                cells.push_back({{"x", x}, {"y", y}, {"interval", table.cell(x, y)}});
                            }
                        }
                    }
                    result = {{"n", graph.size()}, {"intervals", cells}};
                }
                out << result.dump(2) << '\n';
                return exit_ok;
            };
        });
    }

    // respect
    std::size_t word_count = 0;
    std::size_t max_len = 8;
    std::optional<std::uint64_t> seed;
    {
        auto *cmd = app.add_subcommand("respect", "Check the interval-respecting conditions");
        cmd->add_option("automaton", automaton_path, "Automaton JSON")->required();
        cmd->add_option("digraph", digraph_path, "Digraph JSON")->required();
        auto *words = cmd->add_option("--words", word_count, "Also test this many random words");
        cmd->add_option("--max-len", max_len, "Maximum sampled word length");
        cmd->add_option("--seed", seed, "Seed for word sampling");
        cmd->callback([&, words] {
            action = [&, words] {
                if (words->count() > 0 && !seed) {
                    throw InputError("--words requires an explicit --seed");
                }
                auto automaton = automaton_from_json(read_json_file(automaton_path));
                auto graph = digraph_from_json(read_json_file(digraph_path));
                auto letters = check_letter_conditions(automaton, graph);
                json result{{"ok", letters.ok}, {"violations", violations_json(letters, automaton, false)}};
                bool ok = letters.ok;
                if (letters.ok && words->count() > 0) {
                    auto sampled = sample_word_conditions(automaton, graph, word_count, max_len, *seed);
                    result["word_check"] = {{"ok", sampled.ok},
                                            {"words", word_count},
                                            {"max_len", max_len},
                                            {"seed", *seed},
                                            {"violations", violations_json(sampled, automaton, true)}};
                    ok = sampled.ok;
                    result["ok"] = ok;
                }
                out << result.dump(2) << '\n';
                return ok ? exit_ok : exit_violation;
            };
        });
    }

    // tower verify / tower reset
    std::string cert_path;
    std::string base_name = "one-state";
    {
        auto *tower = app.add_subcommand("tower", "Tower certificates");
        tower->require_subcommand(1);
        auto *verify = tower->add_subcommand("verify", "Verify a tower certificate");
        auto *reset = tower->add_subcommand("reset", "Build a reset word along a tower certificate");
        for (auto *cmd : {verify, reset}) {
            cmd->add_option("automaton", automaton_path, "Automaton JSON")->required();
            cmd->add_option("certificate", cert_path, "Tower certificate JSON")->required();
            cmd->add_option("--base", base_name, "Base class: one-state or cerny");
        }
        verify->callback([&] {
            action = [&] {
                auto automaton = automaton_from_json(read_json_file(automaton_path));
                auto cert = tower_from_json(read_json_file(cert_path));
                auto verdict = verify_tower(automaton, cert, base_predicate(base_name));
                json result{{"ok", verdict.ok}, {"level", verdict.level}, {"reason", verdict.reason}};
                if (verdict.condition) {
                    result["condition"] = to_string(*verdict.condition);
                }
                out << result.dump(2) << '\n';
                return verdict.ok ? exit_ok : exit_violation;
            };
        });
        reset->callback([&] {
            action = [&] {
                auto automaton = automaton_from_json(read_json_file(automaton_path));
                auto cert = tower_from_json(read_json_file(cert_path));
                auto result = tower_reset(automaton, cert, base_predicate(base_name));
                json j = to_json(result);
                j["word_string"] = word_to_string(automaton, result.word);
                out << j.dump(2) << '\n';
                return result.bound_ok ? exit_ok : exit_violation;
            };
        });
    }

    // reset-prop1
    std::string partition_path;
    {
        auto *cmd = app.add_subcommand("reset-prop1", "Reset word through a congruence with a singleton class");
        cmd->add_option("automaton", automaton_path, "Automaton JSON")->required();
        cmd->add_option("partition", partition_path, "Partition JSON {\"blocks\": [...]}")->required();
        cmd->callback([&] {
            action = [&] {
                auto automaton = automaton_from_json(read_json_file(automaton_path));
                auto partition = partition_from_json(read_json_file(partition_path), automaton.size());
                auto quotient = quotient_automaton(automaton, partition);
                auto result =
                    singleton_class_reset(automaton, partition, shortest_reset_provider(quotient.automaton));
                json j = to_json(result);
                j["word_string"] = word_to_string(automaton, result.word);
                out << j.dump(2) << '\n';
                return result.bound_ok ? exit_ok : exit_violation;
            };
        });
    }

    // wm-level
    std::size_t max_level = 3;
    {
        auto *cmd = app.add_subcommand("wm-level", "Weakly monotonic level (upper bound) via stable orders");
        cmd->add_option("automaton", automaton_path, "Automaton JSON")->required();
        cmd->add_option("--max", max_level, "Maximum level to search");
        cmd->callback([&] {
            action = [&] {
                auto automaton = automaton_from_json(read_json_file(automaton_path));
                auto level = wm_level(automaton, max_level);
                json result{{"level", nullptr}};
                if (level) {
                    result["level"] = *level;
                }
                out << result.dump(2) << '\n';
                return exit_ok;
            };
        });
    }

    // gen
    std::vector<std::size_t> gen_params;
    std::vector<std::size_t> cycle_sizes;
    std::vector<std::string> dag;
    std::size_t gen_letters = 2;
    {
        auto *gen = app.add_subcommand("gen", "Generate automata from the supported classes");
        gen->require_subcommand(1);
        auto *cerny = gen->add_subcommand("cerny", "Cerny automaton: gen cerny N");
        cerny->add_option("n", gen_params, "State count")->required()->expected(1);
        cerny->callback([&] {
            action = [&] {
                out << to_json(gen_cerny(gen_params.at(0))).dump(2) << '\n';
                return exit_ok;
            };
        });
        struct Kind {
            const char *name;
            const char *help;
        };
        for (Kind kind : {Kind{"orientable", "Orientation-preserving automaton: gen orientable N K --seed S"},
                          Kind{"monotonic", "Monotonic automaton: gen monotonic N K --seed S"},
                          Kind{"random", "Uniform random automaton: gen random N K --seed S"}}) {
            auto *cmd = gen->add_subcommand(kind.name, kind.help);
            cmd->add_option("params", gen_params, "N K")->required()->expected(2);
            cmd->add_option("--seed", seed, "Random seed (required)")->required();
            std::string name = kind.name;
            cmd->callback([&, name] {
                action = [&, name] {
                    const std::size_t n = gen_params.at(0);
                    const std::size_t k = gen_params.at(1);
                    json result;
                    if (name == "orientable") {
                        auto inst = gen_orientable(n, k, *seed);
                        result = {{"automaton", to_json(inst.automaton)}, {"digraph", to_json(inst.digraph)}};
                    } else if (name == "monotonic") {
                        result = to_json(gen_monotonic(n, k, *seed));
                    } else {
                        result = to_json(gen_random(n, k, *seed));
                    }
                    out << result.dump(2) << '\n';
                    return exit_ok;
                };
            });
        }
        auto *tower = gen->add_subcommand("tower", "Two-level tower instance: gen tower OUTER INNER K --seed S");
        tower->add_option("params", gen_params, "OUTER INNER K")->required()->expected(3);
        tower->add_option("--seed", seed, "Random seed (required)")->required();
        tower->callback([&] {
            action = [&] {
                auto inst = gen_cycles_of_cycles(gen_params.at(0), gen_params.at(1), gen_params.at(2), *seed);
                out << json{{"automaton", to_json(inst.automaton)}, {"certificate", to_json(inst.certificate)}}.dump(2)
                    << '\n';
                return exit_ok;
            };
        });
        auto *urp = gen->add_subcommand("urp", "Unique-return-paths instance: gen urp --cycles 3,3 --dag 0-1");
        urp->add_option("--cycles", cycle_sizes, "Cycle sizes")->required()->delimiter(',');
        urp->add_option("--dag", dag, "Order edges between cycles, I-J")->delimiter(',');
        urp->add_option("--letters", gen_letters, "Alphabet size");
        urp->add_option("--seed", seed, "Random seed (required)")->required();
        urp->callback([&] {
            action = [&] {
                UrpSpec spec{cycle_sizes, {}, *seed};
                for (const auto &e : dag) {
                    spec.dag_edges.push_back(parse_dag_edge(e));
                }
                auto inst = gen_unique_return(spec, gen_letters);
                out << json{{"automaton", to_json(inst.automaton)}, {"digraph", to_json(inst.digraph)}}.dump(2)
                    << '\n';
                return exit_ok;
            };
        });
    }

    // enumerate
    CorpusOptions corpus;
    std::string out_path;
    std::string cx_path;
    {
        auto *cmd = app.add_subcommand("enumerate", "Exhaustively check the (n-1)^2 bound on all small automata");
        cmd->add_option("--states", corpus.states, "State count")->required();
        cmd->add_option("--letters", corpus.letters, "Alphabet size")->required();
        cmd->add_flag("--strongly-connected", corpus.filter.strongly_connected, "Only strongly connected automata");
        cmd->add_flag("--synchronizing", corpus.filter.synchronizing, "Only synchronizing automata");
        cmd->add_option("--jobs", corpus.jobs, "Worker threads");
        cmd->add_option("--out", out_path, "JSON-lines output file")->required();
        cmd->add_option("--counterexamples", cx_path, "Counterexample file");
        cmd->callback([&] {
            action = [&] {
                corpus.out = out_path;
                if (!cx_path.empty()) {
                    corpus.counterexamples = cx_path;
                }
                auto summary = verify_corpus(corpus);
                out << to_json(summary).dump(2) << '\n';
                return summary.violations == 0 ? exit_ok : exit_violation;
            };
        });
    }

    // dot
    std::string dot_path;
    {
        auto *cmd = app.add_subcommand("dot", "DOT export of a digraph or of an automaton's transition digraph");
        cmd->add_option("input", dot_path, "Automaton or digraph JSON")->required();
        cmd->callback([&] {
            action = [&] {
                auto j = read_json_file(dot_path);
                const bool is_automaton = j.contains("delta") || (j.contains("automaton") && !j.contains("digraph"));
                out << (is_automaton ? to_dot(automaton_from_json(j)) : to_dot(digraph_from_json(j)));
                return exit_ok;
            };
        });
    }

    std::vector<const char *> argv{"autoint"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const PropertyViolation &e) {
        out << json{{"error", e.what()}, {"instance", e.instance()}}.dump(2) << '\n';
        err << "property violated: " << e.what() << '\n';
        return exit_violation;
    } catch (const InputError &e) {
        err << "input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError &e) {
        err << "precondition failed: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace autoint::cli
