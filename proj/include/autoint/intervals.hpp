#pragma once

#include <optional>
#include <vector>

#include "autoint/digraph.hpp"

namespace autoint {

/// Directed interval [x, y]: every vertex lying on a walk from x to y whose
/// endpoints each occur exactly once (interior vertices may repeat).
/// [x, x] is the strongly connected component of x.
StateSet interval(const Digraph &graph, State x, State y);

/// All n^2 intervals of a digraph, with O(1) membership queries.
class IntervalTable {
public:
    explicit IntervalTable(const Digraph &graph);

    std::size_t size() const { return n_; }
    const StateSet &cell(State x, State y) const { return cells_[x * n_ + y]; }
    bool empty(State x, State y) const { return cells_[x * n_ + y].empty(); }
    bool contains(State x, State y, State z) const { return member_[(x * n_ + y) * n_ + z] != 0; }
    const Partition &scc() const { return scc_; }

private:
    std::size_t n_;
    Partition scc_;
    std::vector<StateSet> cells_;
    std::vector<unsigned char> member_;
};

IntervalTable interval_table(const Digraph &graph);

/// z is a check-point for {x, y} (x < y, all three in one strongly connected
/// component) when every path from x to y and every path from y to x passes
/// through z.
struct CheckPoint {
    State x;
    State y;
    State z;

    bool operator==(const CheckPoint &) const = default;
    auto operator<=>(const CheckPoint &) const = default;
};

/// Sorted by (x, y, z).
std::vector<CheckPoint> check_points(const Digraph &graph);

struct DensityCheck {
    bool ok = true;
    /// Least (x, y, z) in one component with z outside both [x,y] and [y,x].
    std::optional<CheckPoint> witness;
};

DensityCheck is_scc_dense(const Digraph &graph);
DensityCheck is_scc_dense(const IntervalTable &table);

}  // namespace autoint
