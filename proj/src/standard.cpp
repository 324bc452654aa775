#include "mowsp/standard.hpp"

#include <chrono>
#include <thread>

#include "mowsp/dijkstra.hpp"

namespace mowsp {

namespace {

// Turns one shortest-path tree into persistent path records. Settle order
// guarantees parents are materialized before their children.
void tree_into_result(const ShortestPathTree& tree, PathPool& pool, SolveResult& result, int i) {
    std::vector<PathId> record(tree.cost.size(), kInvalidIndex);
    for (NodeId v : tree.settle_order) {
        if (v == tree.source)
            record[v] = pool.make_seed(v);
        else
            record[v] = pool.extend(record[tree.parent_node[v]], tree.parent_edge[v]);
        result.set_entry(i, v, tree.cost[v], record[v]);
    }
}

}  // namespace

SolveResult solve_standard(const Mog& g, NodeId s, const LambdaSet& lambdas,
                           const StandardOptions& options) {
    if (s >= g.node_count())
        throw_error(Errc::invalid_argument, "source node out of range");
    if (lambdas.w() != g.objective_count())
        throw_error(Errc::invalid_argument, "lambda set W does not match graph");

    const auto t0 = std::chrono::steady_clock::now();
    const int k = lambdas.k();
    auto pool = std::make_shared<PathPool>(g);
    SolveResult result(k, g.node_count(), s, pool);

    std::vector<ShortestPathTree> trees(k);
    if (!options.parallel || k == 1) {
        for (int i = 0; i < k; ++i)
            trees[i] = shortest_path_tree(g, s, lambdas[i], &result.stats);
    } else {
        unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
        if (workers == 0) workers = 2;
        workers = std::min<unsigned>(workers, static_cast<unsigned>(k));
        std::vector<SolverStats> worker_stats(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            threads.emplace_back([&, t] {
                for (int i = static_cast<int>(t); i < k; i += static_cast<int>(workers))
                    trees[i] = shortest_path_tree(g, s, lambdas[i], &worker_stats[t]);
            });
        }
        for (auto& th : threads) th.join();
        for (const auto& ws : worker_stats) {
            result.stats.developed_paths += ws.developed_paths;
            result.stats.scanned_paths += ws.scanned_paths;
            result.stats.cost_evaluations += ws.cost_evaluations;
            result.stats.heap_ops += ws.heap_ops;
        }
    }

    for (int i = 0; i < k; ++i) tree_into_result(trees[i], *pool, result, i);

    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace mowsp
