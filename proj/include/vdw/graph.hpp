#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "vdw/diffset.hpp"

namespace vdw {

/// Finite graph on vertices 1..V taken in their natural order.
///
/// Adjacency is symmetric and irreflexive. Distance graphs G_D keep their
/// difference set as `descriptor()` and enumerate neighbours from a
/// precomputed member list instead of scanning.
class OrderedGraph {
public:
    using Adjacency = std::function<bool(Int, Int)>;

    OrderedGraph(Int vertex_count, Adjacency adjacency);

    static OrderedGraph distance_graph(const DiffSetSpec& d, Int vertex_count);
    static OrderedGraph from_edges(Int vertex_count, const std::vector<std::pair<Int, Int>>& edges);

    Int vertex_count() const noexcept { return vertex_count_; }
    const std::optional<DiffSetSpec>& descriptor() const noexcept { return descriptor_; }

    bool adjacent(Int x, Int y) const;

    /// Calls f(y) for every neighbour y > x, in increasing order.
    template <class F>
    void for_each_upper_neighbor(Int x, F&& f) const
    {
        if (distances_) {
            for (Int d : *distances_) {
                if (x + d > vertex_count_) break;
                f(x + d);
            }
            return;
        }
        for (Int y = x + 1; y <= vertex_count_; ++y) {
            if (adjacency_(x, y)) f(y);
        }
    }

private:
    Int vertex_count_;
    Adjacency adjacency_;
    std::optional<DiffSetSpec> descriptor_;
    std::shared_ptr<const std::vector<Int>> distances_;
};

} // namespace vdw
