#include "autoint/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "autoint/errors.hpp"

namespace autoint {

Digraph::Digraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), out_(n), in_(n) {
    for (const auto &[u, v] : edges_) {
        if (u >= n_ || v >= n_) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside [0, " +
                             std::to_string(n_) + ")");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto &[u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

bool Digraph::has_edge(State u, State v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Digraph cycle_digraph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) {
        edges.emplace_back(static_cast<State>(v), static_cast<State>((v + 1) % n));
    }
    return Digraph(n, std::move(edges));
}

Partition Partition::from_labels(const std::vector<std::size_t> &labels) {
    Partition p;
    const std::size_t n = labels.size();
    p.block_of_.assign(n, 0);
    // first occurrence order == smallest-element order
    std::unordered_map<std::size_t, std::size_t> block_for_label;
    for (std::size_t q = 0; q < n; ++q) {
        auto [it, inserted] = block_for_label.try_emplace(labels[q], p.blocks_.size());
        std::size_t b = it->second;
        if (inserted) {
            p.blocks_.emplace_back();
        }
        p.block_of_[q] = b;
        p.blocks_[b].push_back(static_cast<State>(q));
    }
    return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<State>> &blocks) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw InputError("partition block " + std::to_string(b) + " is empty");
        }
        for (State q : blocks[b]) {
            if (q >= n) {
                throw InputError("partition refers to state " + std::to_string(q) + " outside [0, " +
                                 std::to_string(n) + ")");
            }
            if (labels[q] != unset) {
                throw InputError("state " + std::to_string(q) + " occurs in two partition blocks");
            }
            labels[q] = b;
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (labels[q] == unset) {
            throw InputError("state " + std::to_string(q) + " is not covered by the partition");
        }
    }
    return from_labels(labels);
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

Partition Partition::universal(std::size_t n) {
    return from_labels(std::vector<std::size_t>(n, 0));
}

std::vector<std::size_t> Connectivity::sink_blocks() const {
    std::vector<bool> has_out(scc.block_count(), false);
    for (const auto &[b, c] : comp_dag) {
        has_out[b] = true;
    }
    std::vector<std::size_t> sinks;
    for (std::size_t b = 0; b < has_out.size(); ++b) {
        if (!has_out[b]) {
            sinks.push_back(b);
        }
    }
    return sinks;
}

std::vector<std::size_t> Connectivity::source_blocks() const {
    std::vector<bool> has_in(scc.block_count(), false);
    for (const auto &[b, c] : comp_dag) {
        has_in[c] = true;
    }
    std::vector<std::size_t> sources;
    for (std::size_t b = 0; b < has_in.size(); ++b) {
        if (!has_in[b]) {
            sources.push_back(b);
        }
    }
    return sources;
}

Partition scc_partition(const Digraph &graph) {
    // Iterative Tarjan.
    const std::size_t n = graph.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::size_t> component(n, 0);
    std::size_t next_index = 0;
    std::size_t next_component = 0;

    struct Frame {
        State v;
        std::size_t child;
    };
    std::vector<Frame> frames;

    for (State root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame &f = frames.back();
            auto succ = graph.successors(f.v);
            if (f.child < succ.size()) {
                State w = succ[f.child++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            State v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = next_component;
                } while (w != v);
                ++next_component;
            }
        }
    }
    return Partition::from_labels(component);
}

Connectivity connectivity(const Digraph &graph) {
    const std::size_t n = graph.size();
    Connectivity result;
    result.scc = scc_partition(graph);

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto &[u, v] : graph.edges()) {
        std::size_t ru = find(u);
        std::size_t rv = find(v);
        if (ru != rv) {
            parent[std::max(ru, rv)] = std::min(ru, rv);
        }
        std::size_t bu = result.scc.block_of(u);
        std::size_t bv = result.scc.block_of(v);
        if (bu != bv) {
            result.comp_dag.emplace_back(bu, bv);
        }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t q = 0; q < n; ++q) {
        labels[q] = find(q);
    }
    result.wcc = Partition::from_labels(labels);
    std::sort(result.comp_dag.begin(), result.comp_dag.end());
    result.comp_dag.erase(std::unique(result.comp_dag.begin(), result.comp_dag.end()), result.comp_dag.end());
    return result;
}

std::vector<bool> reachable_from(const Digraph &graph, State from) {
    std::vector<bool> seen(graph.size(), false);
    std::vector<State> todo{from};
    seen[from] = true;
    while (!todo.empty()) {
        State v = todo.back();
        todo.pop_back();
        for (State w : graph.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                todo.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace autoint
