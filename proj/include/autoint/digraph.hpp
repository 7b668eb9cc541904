#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "autoint/automaton.hpp"

namespace autoint {

using Edge = std::pair<State, State>;

/// Directed graph on vertices 0..n-1. Self-loops allowed, parallel edges are
/// merged on construction.
class Digraph {
public:
    Digraph() = default;
    /// Throws InputError on out-of-range endpoints.
    Digraph(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const { return n_; }
    /// Sorted lexicographically.
    const std::vector<Edge> &edges() const { return edges_; }
    std::span<const State> successors(State v) const { return out_[v]; }
    std::span<const State> predecessors(State v) const { return in_[v]; }
    bool has_edge(State u, State v) const;

    bool operator==(const Digraph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<State>> out_;
    std::vector<std::vector<State>> in_;
};

/// Simple directed cycle 0 -> 1 -> ... -> n-1 -> 0 (a self-loop when n = 1).
Digraph cycle_digraph(std::size_t n);

/// Disjoint nonempty blocks covering 0..n-1.
///
/// Blocks are numbered by their smallest element in ascending order, and each
/// block is kept sorted, so two partitions are equal iff they describe the
/// same equivalence.
class Partition {
public:
    Partition() = default;

    /// Throws InputError unless the blocks are disjoint, nonempty and cover
    /// 0..n-1.
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<State>> &blocks);
    /// labels[q] is any block tag; blocks are renumbered canonically.
    static Partition from_labels(const std::vector<std::size_t> &labels);
    static Partition discrete(std::size_t n);
    static Partition universal(std::size_t n);

    std::size_t size() const { return block_of_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<State>> &blocks() const { return blocks_; }
    const std::vector<State> &block(std::size_t b) const { return blocks_[b]; }
    std::size_t block_of(State q) const { return block_of_[q]; }
    bool same_block(State p, State q) const { return block_of_[p] == block_of_[q]; }

    bool operator==(const Partition &other) const { return block_of_ == other.block_of_; }

private:
    std::vector<std::vector<State>> blocks_;
    std::vector<std::size_t> block_of_;
};

struct Connectivity {
    Partition scc;
    Partition wcc;
    /// (b, b') for scc block indices with an edge from b to b', b != b'.
    /// Sorted and duplicate-free.
    std::vector<std::pair<std::size_t, std::size_t>> comp_dag;

    /// scc blocks with no outgoing comp_dag edge.
    std::vector<std::size_t> sink_blocks() const;
    /// scc blocks with no incoming comp_dag edge.
    std::vector<std::size_t> source_blocks() const;
};

Connectivity connectivity(const Digraph &graph);

/// Strongly connected components only (Tarjan); cheaper than connectivity().
Partition scc_partition(const Digraph &graph);

/// Vertices reachable from `from` (including `from`).
std::vector<bool> reachable_from(const Digraph &graph, State from);

}  // namespace autoint
