#include <doctest.h>

#include <random>

#include "autoint/congruence.hpp"
#include "autoint/errors.hpp"
#include "autoint/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace autoint;
using namespace fixtures;

namespace {

Word random_word(std::mt19937_64 &rng, std::size_t k, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(k - 1));
    Word w(len(rng));
    for (auto &a : w) {
        a = letter(rng);
    }
    return w;
}

bool comp_dag_acyclic(const Connectivity &c) {
    const std::size_t blocks = c.scc.block_count();
    std::vector<std::size_t> indegree(blocks, 0);
    for (auto [u, v] : c.comp_dag) {
        ++indegree[v];
    }
    std::vector<std::size_t> ready;
    for (std::size_t b = 0; b < blocks; ++b) {
        if (indegree[b] == 0) {
            ready.push_back(b);
        }
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto b = ready.back();
        ready.pop_back();
        ++seen;
        for (auto [u, v] : c.comp_dag) {
            if (u == b && --indegree[v] == 0) {
                ready.push_back(v);
            }
        }
    }
    return seen == blocks;
}

}  // namespace

TEST_CASE("automaton construction validates the table") {
    CHECK_THROWS_AS(Automaton(std::vector<std::vector<State>>{}), InputError);
    CHECK_THROWS_AS(make({{0, 1}, {1}}), InputError);
    CHECK_THROWS_AS(make({{0, 2}, {1, 1}}), InputError);
    CHECK_THROWS_AS(Automaton(std::vector<std::string>{"a"}, {{0, 0}}), InputError);
    auto a = make({{1, 0}, {0, 1}});
    CHECK(a.size() == 2);
    CHECK(a.alphabet_size() == 2);
    CHECK(a.letters() == std::vector<std::string>{"a", "b"});
    CHECK(a.letter_map(0) == std::vector<State>{1, 0});
}

TEST_CASE("default letter names") {
    auto names = default_letter_names(28);
    CHECK(names[0] == "a");
    CHECK(names[25] == "z");
    CHECK(names[26] == "l26");
}

TEST_CASE("apply_word") {
    auto a = c4();
    CHECK(apply_word(a, 2, {}) == 2);
    CHECK(apply_word(a, 0, {0, 1}) == 1);
    CHECK(apply_word(a, 3, {0, 1}) == 1);
    CHECK_THROWS_AS(apply_word(a, 0, {2}), InputError);
    CHECK_THROWS_AS(apply_word(a, 4, {0}), InputError);
}

TEST_CASE("image_set") {
    CHECK(image_set(c4(), {}, {0, 1}).empty());
    CHECK(image_set(c3(), all(3), {1, 0, 0, 1}) == StateSet{1});
    CHECK(image_set(c4(), all(4), {1, 0, 0, 0, 1, 0, 0, 0, 1}).size() == 1);
    CHECK(image_set(c4(), all(4), {1}) == StateSet{1, 2, 3});
}

TEST_CASE("word action is a monoid action and images shrink monotonically") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = gen_random(6, 3, rng());
        auto u = random_word(rng, 3, 6);
        auto v = random_word(rng, 3, 6);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        for (State q = 0; q < 6; ++q) {
            CHECK(apply_word(a, q, uv) == apply_word(a, apply_word(a, q, u), v));
        }
        StateSet small{0, 2}, big{0, 2, 3, 5};
        auto is = image_set(a, small, uv), ib = image_set(a, big, uv);
        CHECK(std::includes(ib.begin(), ib.end(), is.begin(), is.end()));
        CHECK(ib.size() <= big.size());
        CHECK(image_set(a, big, uv) == oracle::image(a, big, uv));
    }
}

TEST_CASE("transition_digraph") {
    auto t1 = transition_digraph(one_state(2));
    CHECK(t1.edges() == std::vector<Edge>{{0, 0}});
    auto t4 = transition_digraph(c4());
    CHECK(t4.edges() == std::vector<Edge>{{0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 0}, {3, 3}});
    auto twice = make({{1, 1}, {0, 0}});
    CHECK(transition_digraph(twice) == transition_digraph(swap2()));
}

TEST_CASE("connectivity") {
    SUBCASE("cycle") {
        auto c = connectivity(d4());
        CHECK(c.scc.block_count() == 1);
        CHECK(c.wcc.block_count() == 1);
        CHECK(c.comp_dag.empty());
    }
    SUBCASE("single edge") {
        auto c = connectivity(edge01());
        CHECK(c.scc.blocks() == std::vector<std::vector<State>>{{0}, {1}});
        CHECK(c.wcc.block_count() == 1);
        CHECK(c.comp_dag == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
        CHECK(c.sink_blocks() == std::vector<std::size_t>{1});
        CHECK(c.source_blocks() == std::vector<std::size_t>{0});
    }
    SUBCASE("theta") {
        CHECK(connectivity(theta4()).scc.block_count() == 1);
    }
    SUBCASE("two cycles") {
        auto c = connectivity(two_cycles());
        CHECK(c.scc.blocks() == std::vector<std::vector<State>>{{0, 1, 2}, {3, 4, 5}});
        CHECK(c.wcc.block_count() == 1);
        CHECK(connectivity(Digraph(5, {{0, 1}, {1, 0}, {3, 4}})).wcc.blocks() ==
              std::vector<std::vector<State>>{{0, 1}, {2}, {3, 4}});
    }
}

TEST_CASE("connectivity agrees with transitive closure on random digraphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        auto g = oracle::random_digraph(n, 0.25, rng);
        auto c = connectivity(g);
        auto r = oracle::reach(g);
        for (State x = 0; x < n; ++x) {
            for (State y = 0; y < n; ++y) {
                CHECK(c.scc.same_block(x, y) == oracle::same_scc(r, x, y));
            }
        }
        CHECK(comp_dag_acyclic(c));
        CHECK(scc_partition(g) == c.scc);
        for (auto [u, v] : g.edges()) {
            CHECK(c.wcc.same_block(u, v));
        }
    }
}

TEST_CASE("partition canonical form") {
    auto p = Partition::from_labels({7, 3, 7, 3, 9});
    CHECK(p.blocks() == std::vector<std::vector<State>>{{0, 2}, {1, 3}, {4}});
    CHECK(p == Partition::from_blocks(5, {{4}, {3, 1}, {2, 0}}));
    CHECK(Partition::discrete(3).block_count() == 3);
    CHECK(Partition::universal(3).block_count() == 1);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InputError);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), InputError);
    CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 1}, {}}), InputError);
}

TEST_CASE("is_congruence") {
    CHECK(is_congruence(c4(), Partition::discrete(4)).ok);
    CHECK(is_congruence(c4(), Partition::universal(4)).ok);
    auto check = is_congruence(c4(), Partition::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK_FALSE(check.ok);
    REQUIRE(check.witness);
    CHECK(*check.witness == CongruenceViolation{0, 2, 1});
}

TEST_CASE("quotient_automaton") {
    auto a = c4();
    auto same = quotient_automaton(a, Partition::discrete(4));
    CHECK(same.automaton == a);
    CHECK(quotient_automaton(a, Partition::universal(4)).automaton.size() == 1);
    auto cycle = make({{1}, {2}, {3}, {0}});
    auto q = quotient_automaton(cycle, Partition::from_blocks(4, {{0, 2}, {1, 3}}));
    CHECK(q.automaton.delta() == std::vector<std::vector<State>>{{1}, {0}});
    CHECK(q.projection == std::vector<State>{0, 1, 0, 1});
    CHECK_THROWS_AS(quotient_automaton(a, Partition::from_blocks(4, {{0, 2}, {1, 3}})), PreconditionError);
}

TEST_CASE("projection commutes with the action of words") {
    std::mt19937_64 rng(21);
    int tested = 0;
    for (int trial = 0; trial < 2000 && tested < 60; ++trial) {
        auto a = gen_random(6, 2, rng());
        std::vector<std::size_t> labels(6);
        for (auto &l : labels) {
            l = rng() % 3;
        }
        auto p = Partition::from_labels(labels);
        if (!is_congruence(a, p).ok) {
            continue;
        }
        ++tested;
        auto q = quotient_automaton(a, p);
        for (int w = 0; w < 20; ++w) {
            auto word = random_word(rng, 2, 8);
            for (State s = 0; s < 6; ++s) {
                CHECK(q.projection[apply_word(a, s, word)] == apply_word(q.automaton, q.projection[s], word));
            }
        }
    }
    CHECK(tested >= 10);
}

TEST_CASE("reduce_to_sink") {
    auto sc = reduce_to_sink(c4());
    CHECK(sc.automaton == c4());
    CHECK(sc.states == std::vector<State>{0, 1, 2, 3});
    auto r = reduce_to_sink(make({{1}, {1}}));
    CHECK(r.automaton.size() == 1);
    CHECK(r.states == std::vector<State>{1});
    CHECK_THROWS_AS(reduce_to_sink(make({{1}, {0}, {3}, {2}})), PreconditionError);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = gen_random(5, 2, rng());
        try {
            auto red = reduce_to_sink(a);
            CHECK(is_strongly_connected(red.automaton));
            for (State q = 0; q < red.automaton.size(); ++q) {
                for (Letter l = 0; l < 2; ++l) {
                    CHECK(red.states[red.automaton.next(q, l)] == a.next(red.states[q], l));
                }
            }
        } catch (const PreconditionError &) {
            CHECK_FALSE(oracle::is_synchronizing(a));
        }
    }
}

TEST_CASE("json round trips and rejects malformed input") {
    auto a = c4();
    CHECK(automaton_from_json(to_json(a)) == a);
    CHECK(automaton_from_json(json{{"automaton", to_json(a)}}) == a);
    CHECK(automaton_from_json(json::parse(R"({"letters":["a","b"],"delta":[[1,1],[2,1],[3,2],[0,3]]})")) == a);
    auto d = theta4();
    CHECK(digraph_from_json(to_json(d)) == d);
    auto p = Partition::from_blocks(4, {{0, 2}, {1}, {3}});
    CHECK(partition_from_json(to_json(p), 4) == p);
    CHECK_THROWS_AS(automaton_from_json(json::parse(R"({"delta":[[1],[5]]})")), InputError);
    CHECK_THROWS_AS(automaton_from_json(json::parse(R"({"delta":"x"})")), InputError);
    CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"n":2,"edges":[[0,1,1]]})")), InputError);
    CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"n":2,"edges":[[0,2]]})")), InputError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
    CHECK(canonical_id(c3()) == "1,1;2,1;0,2");
}

TEST_CASE("dot export") {
    auto dot = to_dot(d4());
    CHECK(dot.find("3 -> 0") != std::string::npos);
    auto adot = to_dot(c4());
    CHECK(adot.find("label=\"a,b\"") != std::string::npos);
}
