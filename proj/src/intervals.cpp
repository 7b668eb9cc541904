#include "autoint/intervals.hpp"

#include <string>

#include "autoint/errors.hpp"

namespace autoint {

namespace {

// Vertices reached from the neighbours of `start` (successors when forward,
// predecessors otherwise) without ever stepping on x or y.
std::vector<bool> punctured_reach(const Digraph &graph, State start, State x, State y, bool forward) {
    std::vector<bool> seen(graph.size(), false);
    std::vector<State> todo;
    auto expand = [&](State v) {
        for (State w : forward ? graph.successors(v) : graph.predecessors(v)) {
            if (w != x && w != y && !seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
        }
    };
    expand(start);
    while (!todo.empty()) {
        State v = todo.back();
        todo.pop_back();
        expand(v);
    }
    return seen;
}

StateSet distinct_interval(const Digraph &graph, State x, State y) {
    auto from_x = punctured_reach(graph, x, x, y, true);
    auto to_y = punctured_reach(graph, y, x, y, false);
    StateSet interior;
    for (State z = 0; z < graph.size(); ++z) {
        if (from_x[z] && to_y[z]) {
            interior.push_back(z);
        }
    }
    if (interior.empty() && !graph.has_edge(x, y)) {
        return {};
    }
    interior.push_back(x);
    interior.push_back(y);
    std::sort(interior.begin(), interior.end());
    return interior;
}

void check_vertex(const Digraph &graph, State v) {
    if (v >= graph.size()) {
        throw InputError("vertex " + std::to_string(v) + " outside digraph of size " + std::to_string(graph.size()));
    }
}

}  // namespace

StateSet interval(const Digraph &graph, State x, State y) {
    check_vertex(graph, x);
    check_vertex(graph, y);
    if (x == y) {
        auto scc = scc_partition(graph);
        return scc.block(scc.block_of(x));
    }
    return distinct_interval(graph, x, y);
}

IntervalTable::IntervalTable(const Digraph &graph)
    : n_(graph.size()), scc_(scc_partition(graph)), cells_(n_ * n_), member_(n_ * n_ * n_, 0) {
    for (State x = 0; x < n_; ++x) {
        for (State y = 0; y < n_; ++y) {
            auto &cell = cells_[x * n_ + y];
            cell = x == y ? scc_.block(scc_.block_of(x)) : distinct_interval(graph, x, y);
            for (State z : cell) {
                member_[(x * n_ + y) * n_ + z] = 1;
            }
        }
    }
}

IntervalTable interval_table(const Digraph &graph) {
    return IntervalTable(graph);
}

std::vector<CheckPoint> check_points(const Digraph &graph) {
    const std::size_t n = graph.size();
    auto scc = scc_partition(graph);
    std::vector<CheckPoint> result;
    for (const auto &block : scc.blocks()) {
        if (block.size() < 3) {
            continue;
        }
        for (State z : block) {
            // reach[x][y]: y reachable from x in the digraph with z removed
            std::vector<std::vector<bool>> reach(n);
            for (State x : block) {
                if (x == z) {
                    continue;
                }
                reach[x] = punctured_reach(graph, x, z, z, true);
            }
            for (State x : block) {
                for (State y : block) {
                    if (x >= y || x == z || y == z) {
                        continue;
                    }
                    if (!reach[x][y] && !reach[y][x]) {
                        result.push_back({x, y, z});
                    }
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

DensityCheck is_scc_dense(const IntervalTable &table) {
    const auto &scc = table.scc();
    // blocks are sorted, so the first failure inside a block is its least one
    auto first_failure = [&](const StateSet &block) -> std::optional<CheckPoint> {
        for (State x : block) {
            for (State y : block) {
                for (State z : block) {
                    if (!table.contains(x, y, z) && !table.contains(y, x, z)) {
                        return CheckPoint{x, y, z};
                    }
                }
            }
        }
        return std::nullopt;
    };
    std::optional<CheckPoint> best;
    for (const auto &block : scc.blocks()) {
        auto w = first_failure(block);
        if (w && (!best || *w < *best)) {
            best = w;
        }
    }
    if (best) {
        return {false, best};
    }
    return {};
}

DensityCheck is_scc_dense(const Digraph &graph) {
    return is_scc_dense(IntervalTable(graph));
}

}  // namespace autoint
