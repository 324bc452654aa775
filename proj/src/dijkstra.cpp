#include "mowsp/dijkstra.hpp"

#include <limits>

#include "mowsp/addressable_heap.hpp"

namespace mowsp {

std::vector<NodeId> ShortestPathTree::path_nodes(NodeId v) const {
    std::vector<NodeId> nodes;
    for (NodeId cur = v;; cur = parent_node[cur]) {
        nodes.push_back(cur);
        if (cur == source) break;
    }
    return {nodes.rbegin(), nodes.rend()};
}

std::vector<EdgeId> ShortestPathTree::path_edges(NodeId v) const {
    std::vector<EdgeId> edges;
    for (NodeId cur = v; cur != source; cur = parent_node[cur])
        edges.push_back(parent_edge[cur]);
    return {edges.rbegin(), edges.rend()};
}

namespace {

// Relaxation loop templated on the objective width so the cost dot product
// unrolls completely. W = 0 keeps a runtime width.
template <int W>
void relax_all(const Mog& g, NodeId s, const double* lam_data, std::size_t runtime_w,
               ShortestPathTree& tree, std::uint64_t& cost_evals, std::uint64_t& heap_ops) {
    const std::size_t n = g.node_count();
    const std::size_t w = W > 0 ? std::size_t(W) : runtime_w;
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<bool> settled(n, false);
    AddressableHeap<NodeId> heap;

    dist[s] = 0.0;
    heap.insert(0.0, s);
    ++heap_ops;

    while (!heap.empty()) {
        const auto [key, u] = heap.pop_min();
        ++heap_ops;
        if (settled[u]) continue;  // stale entry from lazy re-insertion
        settled[u] = true;
        tree.cost[u] = key;
        tree.settle_order.push_back(u);

        for (EdgeId e : g.out_edges(u)) {
            const double* we = g.edge_objectives_ptr(e);
            double ec = 0.0;
            if constexpr (W > 0) {
                for (int j = 0; j < W; ++j) ec += we[j] * lam_data[j];
            } else {
                ec = dot_product(we, lam_data, w);
            }
            ++cost_evals;
            const NodeId v = g.edge_to(e);
            const double candidate = key + ec;
            if (candidate < dist[v]) {
                dist[v] = candidate;
                tree.parent_node[v] = u;
                tree.parent_edge[v] = e;
                heap.insert(candidate, v);
                ++heap_ops;
            } else if (candidate == dist[v] && v != s) {
                // deterministic tie-break: lower (parent, edge) pair wins
                if (u < tree.parent_node[v] ||
                    (u == tree.parent_node[v] && e < tree.parent_edge[v])) {
                    tree.parent_node[v] = u;
                    tree.parent_edge[v] = e;
                }
            }
        }
    }
}

}  // namespace

ShortestPathTree shortest_path_tree(const Mog& g, NodeId s, const CoefficientVector& lam,
                                    SolverStats* stats) {
    if (s >= g.node_count())
        throw_error(Errc::invalid_argument, "source node out of range");
    if (lam.size() != g.objective_count())
        throw_error(Errc::invalid_argument, "coefficient vector W does not match graph");

    const std::size_t n = g.node_count();
    ShortestPathTree tree;
    tree.source = s;
    tree.cost.assign(n, std::numeric_limits<double>::quiet_NaN());
    tree.parent_node.assign(n, kInvalidIndex);
    tree.parent_edge.assign(n, kInvalidIndex);

    std::uint64_t cost_evals = 0;
    std::uint64_t heap_ops = 0;
    const double* lam_data = lam.values().data();
    const std::size_t w = static_cast<std::size_t>(lam.size());

    switch (w) {
        case 1: relax_all<1>(g, s, lam_data, w, tree, cost_evals, heap_ops); break;
        case 2: relax_all<2>(g, s, lam_data, w, tree, cost_evals, heap_ops); break;
        case 3: relax_all<3>(g, s, lam_data, w, tree, cost_evals, heap_ops); break;
        case 4: relax_all<4>(g, s, lam_data, w, tree, cost_evals, heap_ops); break;
        case 5: relax_all<5>(g, s, lam_data, w, tree, cost_evals, heap_ops); break;
        default: relax_all<0>(g, s, lam_data, w, tree, cost_evals, heap_ops); break;
    }

    if (stats) {
        stats->developed_paths += tree.settle_order.size();
        stats->scanned_paths += cost_evals;
        stats->cost_evaluations += cost_evals;
        stats->heap_ops += heap_ops;
    }
    return tree;
}

}  // namespace mowsp
