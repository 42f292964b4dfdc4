#include "vdw/graph.hpp"

#include <set>
#include <stdexcept>

namespace vdw {

OrderedGraph::OrderedGraph(Int vertex_count, Adjacency adjacency)
    : vertex_count_(vertex_count), adjacency_(std::move(adjacency))
{
    if (vertex_count_ < 1) throw std::invalid_argument("OrderedGraph: need at least one vertex");
}

OrderedGraph OrderedGraph::distance_graph(const DiffSetSpec& d, Int vertex_count)
{
    auto members = std::make_shared<const std::vector<Int>>(d.members(vertex_count - 1));
    OrderedGraph g(vertex_count, [d](Int x, Int y) { return x != y && d.contains(x > y ? x - y : y - x); });
    g.descriptor_ = d;
    g.distances_ = std::move(members);
    return g;
}

OrderedGraph OrderedGraph::from_edges(Int vertex_count, const std::vector<std::pair<Int, Int>>& edges)
{
    auto set = std::make_shared<std::set<std::pair<Int, Int>>>();
    for (auto [x, y] : edges) {
        if (x == y) throw std::invalid_argument("OrderedGraph: self-loop");
        if (x < 1 || y < 1 || x > vertex_count || y > vertex_count)
            throw std::invalid_argument("OrderedGraph: edge endpoint outside vertex range");
        set->emplace(std::min(x, y), std::max(x, y));
    }
    return OrderedGraph(vertex_count, [set](Int x, Int y) { return set->count({std::min(x, y), std::max(x, y)}) > 0; });
}

bool OrderedGraph::adjacent(Int x, Int y) const
{
    if (x == y || x < 1 || y < 1 || x > vertex_count_ || y > vertex_count_) return false;
    return adjacency_(x, y);
}

} // namespace vdw
