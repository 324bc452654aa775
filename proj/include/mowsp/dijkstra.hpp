#pragma once

#include <vector>

#include "mowsp/core.hpp"
#include "mowsp/solution.hpp"

namespace mowsp {

// Single-criterion shortest-path tree under a fixed coefficient vector.
// Reduced edge costs are evaluated on the fly; no graph copy is made.
struct ShortestPathTree {
    NodeId source = 0;
    std::vector<double> cost;         // NaN when unreachable
    std::vector<NodeId> parent_node;  // kInvalidIndex at source / unreachable
    std::vector<EdgeId> parent_edge;
    std::vector<NodeId> settle_order;  // reachable nodes in settle order, source first

    bool reachable(NodeId v) const { return !std::isnan(cost[v]); }

    std::vector<NodeId> path_nodes(NodeId v) const;
    std::vector<EdgeId> path_edges(NodeId v) const;
};

// Dijkstra with lazy re-insertion on improvement. Equal-cost parent choice is
// deterministic: the lower (parent node id, edge id) pair wins. Counters for
// cost evaluations and heap operations are accumulated into *stats when given.
ShortestPathTree shortest_path_tree(const Mog& g, NodeId s, const CoefficientVector& lam,
                                    SolverStats* stats = nullptr);

}  // namespace mowsp
