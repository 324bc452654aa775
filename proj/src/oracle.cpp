#include "mowsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace mowsp {

namespace {

// Lexicographic comparison of accumulated objective vectors; the linear
// extension of Pareto dominance that makes popped labels final.
bool lex_less(std::span<const double> a, std::span<const double> b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return true;
        if (a[j] > b[j]) return false;
    }
    return false;
}

}  // namespace

ParetoFront pareto_fronts(const Mog& g, NodeId s, const OracleOptions& options) {
    if (s >= g.node_count())
        throw_error(Errc::invalid_argument, "source node out of range");

    auto pool = std::make_shared<PathPool>(g);
    ParetoFront result;
    result.fronts.assign(g.node_count(), {});

    struct QueueEntry {
        PathId label;
    };
    auto cmp = [&pool](const QueueEntry& a, const QueueEntry& b) {
        const auto ta = pool->totals(a.label);
        const auto tb = pool->totals(b.label);
        if (lex_less(tb, ta)) return true;   // min-queue
        if (lex_less(ta, tb)) return false;
        return b.label < a.label;  // equal vectors: earlier-created label first
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(cmp)> open(cmp);

    auto weakly_dominated_by_front = [&](NodeId v, std::span<const double> vec) {
        for (PathId f : result.fronts[v])
            if (weakly_dominates(pool->totals(f), vec)) return true;
        return false;
    };

    open.push({pool->make_seed(s)});
    result.labels_created = 1;

    while (!open.empty()) {
        const PathId label = open.top().label;
        open.pop();
        const NodeId v = pool->end_node(label);
        if (weakly_dominated_by_front(v, pool->totals(label))) continue;
        result.fronts[v].push_back(label);

        for (EdgeId e : g.out_edges(v)) {
            const NodeId u = g.edge_to(e);
            const PathId child = pool->extend(label, e);
            if (weakly_dominated_by_front(u, pool->totals(child))) {
                pool->truncate(child);
                continue;
            }
            if (++result.labels_created > options.label_cap)
                throw_error(Errc::resource,
                            "pareto front label cap exceeded (" +
                                std::to_string(options.label_cap) + ")");
            open.push({child});
        }
    }

    result.pool = std::move(pool);
    return result;
}

std::vector<std::vector<double>> oracle_optimal_costs(const ParetoFront& front,
                                                      const LambdaSet& lambdas) {
    const std::size_t n = front.fronts.size();
    std::vector<std::vector<double>> costs(
        lambdas.k(), std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));
    for (NodeId v = 0; v < n; ++v) {
        for (int i = 0; i < lambdas.k(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (PathId f : front.fronts[v])
                best = std::min(best, weighted_cost(front.pool->totals(f), lambdas[i]));
            if (!front.fronts[v].empty()) costs[i][v] = best;
        }
    }
    return costs;
}

std::vector<std::vector<double>> oracle_optimal_costs(const Mog& g, NodeId s,
                                                      const LambdaSet& lambdas,
                                                      const OracleOptions& options) {
    if (lambdas.w() != g.objective_count())
        throw_error(Errc::invalid_argument, "lambda set W does not match graph");
    return oracle_optimal_costs(pareto_fronts(g, s, options), lambdas);
}

StructureDiagnostics structure_diagnostics(const Mog& g, NodeId s, const ParetoFront& front,
                                           const DiagnosticsOptions& options) {
    (void)s;
    StructureDiagnostics diag;
    const std::size_t n = g.node_count();
    diag.pareto_count.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        diag.pareto_count[v] = front.front_size(v);
        diag.max_pareto_count = std::max(diag.max_pareto_count, diag.pareto_count[v]);
    }

    std::vector<std::size_t> out_degree(n, 0), in_degree(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        ++out_degree[g.edge_from(e)];
        ++in_degree[g.edge_to(e)];
    }
    for (NodeId v = 0; v < n; ++v) {
        diag.max_out_degree = std::max(diag.max_out_degree, out_degree[v]);
        diag.max_in_degree = std::max(diag.max_in_degree, in_degree[v]);
    }
    diag.avg_degree = double(g.edge_count()) / double(n);

    // alpha(l): fraction of nodes with at most l Pareto paths; gamma(l): the
    // matching fraction of outgoing edges.
    diag.alpha.assign(diag.max_pareto_count + 1, 0.0);
    diag.gamma.assign(diag.max_pareto_count + 1, 0.0);
    for (std::size_t l = 0; l <= diag.max_pareto_count; ++l) {
        std::size_t nodes = 0, edges = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (diag.pareto_count[v] <= l) {
                ++nodes;
                edges += out_degree[v];
            }
        }
        diag.alpha[l] = double(nodes) / double(n);
        diag.gamma[l] = g.edge_count() == 0 ? 0.0 : double(edges) / double(g.edge_count());
    }

    const double threshold = 1.0 - std::log(double(n)) / double(n);
    diag.l_bound = static_cast<int>(diag.max_pareto_count);
    for (std::size_t l = 0; l <= diag.max_pareto_count; ++l) {
        if (diag.alpha[l] >= threshold) {
            diag.l_bound = static_cast<int>(l);
            break;
        }
    }

    std::size_t l_nodes = 0, l_edges = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (diag.pareto_count[v] <= static_cast<std::size_t>(diag.l_bound)) {
            ++l_nodes;
            l_edges += out_degree[v];
        }
    }
    diag.avg_l_node_degree = l_nodes == 0 ? 0.0 : double(l_edges) / double(l_nodes);

    if (options.with_n_l) {
        // max, over L-nodes v and single front labels p at v, of the number of
        // front labels at v not dominated by p (collapsed label set)
        std::size_t n_l = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (diag.pareto_count[v] > static_cast<std::size_t>(diag.l_bound)) continue;
            for (PathId p : front.fronts[v]) {
                std::size_t count = 0;
                for (PathId q : front.fronts[v])
                    if (!dominates(front.pool->totals(p), front.pool->totals(q))) ++count;
                n_l = std::max(n_l, count);
            }
        }
        diag.n_l = n_l;
    }
    return diag;
}

}  // namespace mowsp
