#include <doctest.h>

#include <random>

#include "autoint/congruence.hpp"
#include "autoint/errors.hpp"
#include "autoint/genlab.hpp"
#include "autoint/io.hpp"
#include "autoint/synchro.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace autoint;
using namespace fixtures;

namespace {

Word empty_provider(const Automaton &) { return {}; }

bool used_fallback(const ResetResult &r) {
    return std::any_of(r.trace.begin(), r.trace.end(),
                       [](const StageRecord &s) { return s.stage.rfind("fallback:", 0) == 0; });
}

std::size_t sq(std::size_t x) { return x * x; }

}  // namespace

TEST_CASE("is_synchronizing") {
    CHECK(is_synchronizing(one_state()));
    CHECK_FALSE(is_synchronizing(make({{1}, {2}, {0}})));
    CHECK(is_synchronizing(c4()));
    CHECK_FALSE(is_synchronizing(identity(3)));
}

TEST_CASE("synchronizability agrees with the pair oracle on all 3-state binary automata") {
    std::size_t count = 0;
    for (const auto &a : enumerate_automata(3, 2)) {
        const bool sync = is_synchronizing(a);
        REQUIRE(sync == oracle::is_synchronizing(a));
        REQUIRE(sync == shortest_reset(a).has_value());
        count += sync ? 1 : 0;
    }
    CHECK(count == 549);
}

TEST_CASE("shortest_reset") {
    auto constant = shortest_reset(make({{0, 1}, {0, 0}, {0, 2}}));
    REQUIRE(constant);
    CHECK(constant->length == 1);
    CHECK(constant->word == Word{0});

    auto r3 = shortest_reset(c3());
    REQUIRE(r3);
    CHECK(r3->length == 4);
    CHECK(word_to_string(c3(), r3->word) == "baab");
    CHECK(r3->bound == 4);
    CHECK(r3->bound_ok);

    auto r4 = shortest_reset(c4());
    REQUIRE(r4);
    CHECK(r4->length == 9);

    auto one = shortest_reset(one_state());
    REQUIRE(one);
    CHECK(one->length == 0);
    CHECK(one->bound == 0);

    CHECK_FALSE(shortest_reset(swap2()));
}

TEST_CASE("shortest reset lengths match iterative deepening") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 4;
        auto a = gen_random(n, 2, rng());
        auto r = shortest_reset(a);
        auto ref = oracle::shortest_reset_length(a, sq(n - 1));
        REQUIRE(r.has_value() == ref.has_value());
        if (r) {
            CHECK(r->length == *ref);
            CHECK(oracle::resets(a, r->word));
        }
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        CHECK(oracle::shortest_reset_length(gen_cerny(n), sq(n - 1)) == sq(n - 1));
    }
}

TEST_CASE("shortest_collapse") {
    auto w = shortest_collapse(c4(), {0, 1});
    REQUIRE(w);
    CHECK(*w == Word{1});
    CHECK(shortest_collapse(c4(), {2})->empty());
    CHECK_FALSE(shortest_collapse(swap2(), {0, 1}));
}

TEST_CASE("reset result json") {
    auto j = to_json(*shortest_reset(c3()));
    CHECK(j.at("word") == json::array({1, 0, 0, 1}));
    CHECK(j.at("length") == 4);
    CHECK(j.at("bound") == 4);
    CHECK(j.at("bound_ok") == true);
    CHECK(j.at("trace").is_array());
}

TEST_CASE("singleton_class_reset") {
    SUBCASE("discrete partition") {
        auto r = shortest_reset(c4());
        auto result = singleton_class_reset(c4(), Partition::discrete(4), r->word);
        CHECK(result.word == r->word);
    }
    SUBCASE("one state") {
        auto result = singleton_class_reset(one_state(), Partition::universal(1), {});
        CHECK(result.word.empty());
    }
    SUBCASE("random strongly connected automata with a two-block congruence") {
        std::mt19937_64 rng(4);
        int found = 0;
        for (int trial = 0; trial < 200000 && found < 10; ++trial) {
            auto a = gen_random(5, 2, rng());
            if (!is_strongly_connected(a)) {
                continue;
            }
            for (State s = 0; s < 5; ++s) {
                std::vector<std::size_t> labels(5, 1);
                labels[s] = 0;
                auto p = Partition::from_labels(labels);
                if (!is_congruence(a, p).ok) {
                    continue;
                }
                auto q = quotient_automaton(a, p);
                if (!is_synchronizing(q.automaton)) {
                    continue;
                }
                auto result = singleton_class_reset(a, p, shortest_reset_provider(q.automaton));
                CHECK(oracle::resets(a, result.word));
                CHECK(result.length <= 2);
                CHECK(result.bound_ok);
                ++found;
            }
        }
        CHECK(found > 0);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(singleton_class_reset(c4(), Partition::universal(4), {}), PreconditionError);
        CHECK_THROWS_AS(singleton_class_reset(c4(), Partition::discrete(4), {0}), PreconditionError);
        CHECK_THROWS_AS(singleton_class_reset(c4(), Partition::from_blocks(4, {{0, 2}, {1}, {3}}), {}),
                        PreconditionError);
    }
}

TEST_CASE("cerny_interval_family") {
    auto f = cerny_interval_family(d4());
    CHECK(f.m() == 9);
    std::size_t twos = 0, threes = 0, fours = 0;
    for (const auto &s : f.sets) {
        twos += s.size() == 2;
        threes += s.size() == 3;
        fours += s.size() == 4;
    }
    CHECK(twos == 4);
    CHECK(threes == 4);
    CHECK(fours == 1);
    CHECK(cerny_interval_family(Digraph(3, {})).m() == 0);
    auto two = cerny_interval_family(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
    CHECK(two.sets == std::vector<StateSet>{{0, 1}, {2, 3}});
}

TEST_CASE("covering_interval") {
    CHECK(covering_interval(c4(), d4(), {0, 1}, {1}) == std::pair<State, State>{0, 1});
    auto reset = shortest_reset(c4())->word;
    auto [x, y] = covering_interval(c4(), d4(), {0, 1, 2, 3}, reset);
    CHECK(interval(d4(), x, y) == StateSet{0, 1, 2, 3});
    CHECK_THROWS_AS(covering_interval(c4(), d4(), {2, 3}, {1}), PreconditionError);
    CHECK_THROWS_AS(covering_interval(c4(), d4(), {0}, {1}), PreconditionError);
    CHECK_THROWS_AS(covering_interval(c4(), theta4(), {0, 1}, {1}), PreconditionError);
}

TEST_CASE("covering_interval reports the orientation that collapses") {
    // x=1, y=0 on the 4-cycle: [1,0] = Q does not collapse, [0,1] does.
    auto [x, y] = covering_interval(c4(), d4(), {1, 0}, {1});
    CHECK(x == 0);
    CHECK(y == 1);
}

TEST_CASE("claim1_word") {
    CHECK(claim1_word(c4(), d4(), empty_provider).word.empty());
    CHECK(claim1_word(one_state(), Digraph(1, {}), empty_provider).word.empty());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = gen_unique_return({{3, 3}, {{0, 1}}, seed}, 2);
        auto c = claim1_word(inst.automaton, inst.digraph, shortest_reset_provider);
        auto scc = connectivity(inst.digraph).scc;
        auto image = image_set(inst.automaton, all(6), c.word);
        for (State q : image) {
            CHECK(scc.block_of(q) == c.landing_block);
        }
        CHECK(c.scc_count == 2);
        CHECK(c.wcc_count == 1);
        CHECK(c.word.size() <= 1);
    }
    CHECK_THROWS_AS(claim1_word(c4(), theta4(), empty_provider), PreconditionError);
    CHECK_THROWS_AS(claim1_word(swap2(), edge01(), empty_provider), PreconditionError);
}

TEST_CASE("claim1_word stays in the landing weak component when it qualifies") {
    // Every weak component is a single strong component, so n = k and the
    // quotient reset alone must suffice.
    Automaton two_loops = make({{1, 1}, {0, 1}});
    auto c = claim1_word(two_loops, Digraph(2, {{0, 0}, {1, 1}}), shortest_reset_provider);
    CHECK(c.word.size() <= 1);

    Automaton cycles = make({{5, 2}, {4, 0}, {5, 1}, {6, 2}, {3, 2}, {3, 2}, {5, 2}});
    Digraph d(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    auto r = theorem_reset(cycles, d, shortest_reset_provider);
    CHECK(claim1_word(cycles, d, shortest_reset_provider).word.size() <= 1);
    CHECK(oracle::resets(cycles, r.word));
    CHECK_FALSE(used_fallback(r));
}

TEST_CASE("claim1_word bound on random unique-return instances") {
    std::mt19937_64 rng(8);
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        UrpSpec spec{{1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 4}, {}, seed};
        if (rng() % 2 == 0) {
            spec.dag_edges.emplace_back(0, 1);
        }
        if (rng() % 2 == 0) {
            spec.dag_edges.emplace_back(rng() % 2, 2);
        }
        std::optional<Instance> inst;
        try {
            inst = gen_unique_return(spec, 2);
        } catch (const PreconditionError &) {
            continue;
        }
        auto conn = connectivity(inst->digraph);
        if (!is_synchronizing(quotient_automaton(inst->automaton, conn.wcc).automaton)) {
            continue;
        }
        auto c = claim1_word(inst->automaton, inst->digraph, shortest_reset_provider);
        const std::size_t n = conn.scc.block_count();
        CHECK(c.word.size() <= sq(n - 1));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("collapse_in_component") {
    auto family = cerny_interval_family(d4());
    CHECK(collapse_in_component(c4(), {2}, family).empty());
    CHECK(collapse_in_component(c4(), all(4), family).size() == 9);
    CHECK(collapse_in_component(c4(), {0, 1}, family).size() == 1);
    CHECK_THROWS_AS(collapse_in_component(c4(), all(4), CernyFamily{}), BoundViolation);
    CHECK_THROWS_AS(collapse_in_component(swap2(), {0, 1}, family), PreconditionError);
}

TEST_CASE("theorem_reset") {
    auto c = theorem_reset(c4(), d4(), empty_provider);
    CHECK(oracle::resets(c4(), c.word));
    CHECK(c.length <= 9);
    CHECK(c.bound == 9);
    CHECK(c.bound_ok);
    CHECK_FALSE(used_fallback(c));

    auto one = theorem_reset(one_state(), Digraph(1, {}), empty_provider);
    CHECK(one.word.empty());
    CHECK(one.bound == 0);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = gen_unique_return({{3, 3}, {{0, 1}}, seed}, 2);
        if (!is_synchronizing(inst.automaton)) {
            CHECK_THROWS_AS(theorem_reset(inst.automaton, inst.digraph, shortest_reset_provider),
                            PreconditionError);
            continue;
        }
        auto r = theorem_reset(inst.automaton, inst.digraph, shortest_reset_provider);
        CHECK(oracle::resets(inst.automaton, r.word));
        CHECK(r.length <= 25);
        CHECK(r.bound == 25);
        CHECK_FALSE(used_fallback(r));
        CHECK(shortest_reset(inst.automaton)->length <= r.length);
    }
    CHECK_THROWS_AS(theorem_reset(make({{1}, {2}, {3}, {0}}), d4(), empty_provider), PreconditionError);
}

TEST_CASE("theorem_reset through a singleton weak component") {
    // Cycles of sizes 1 and 3 joined by an order edge: the 1-cycle is its own
    // weak component only when no order edge touches it.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = gen_unique_return({{1, 3}, {}, seed}, 2);
        if (!is_synchronizing(inst.automaton)) {
            continue;
        }
        auto r = theorem_reset(inst.automaton, inst.digraph, shortest_reset_provider);
        CHECK(oracle::resets(inst.automaton, r.word));
        CHECK(r.bound_ok);
        CHECK(r.trace.front().stage == "quotient-reset");
    }
}

TEST_CASE("tower_reset") {
    auto direct = theorem_reset(c4(), d4(), empty_provider);
    auto tower = tower_reset(c4(), {{d4()}});
    CHECK(tower.word == direct.word);
    CHECK(tower_reset(one_state(), {}).word.empty());
    CHECK_THROWS_AS(tower_reset(swap2(), {{edge01()}}), PreconditionError);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto t = gen_cycles_of_cycles(2 + seed % 3, 2 + seed % 2, 2, seed);
        if (!is_synchronizing(t.automaton)) {
            continue;
        }
        auto r = tower_reset(t.automaton, t.certificate);
        CHECK(oracle::resets(t.automaton, r.word));
        CHECK(r.bound_ok);
        CHECK(shortest_reset(t.automaton)->length <= r.length);
    }
}

TEST_CASE("family size against the global budget") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        UrpSpec spec{{2 + seed % 3, 3, 2 + seed % 2}, {{0, 1}, {0, 2}}, seed};
        auto inst = gen_unique_return(spec, 2);
        const std::size_t big_n = inst.automaton.size();
        const std::size_t n = connectivity(inst.digraph).scc.block_count();
        CHECK(cerny_interval_family(inst.digraph).m() <= sq(big_n - 1) - sq(n - 1));
    }
}
