#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mowsp/core.hpp"

namespace mowsp {

struct OracleOptions {
    // Hard limit on created labels; exceeding it raises Errc::resource.
    // Pareto fronts can be non-polynomial, so blowup must fail loudly.
    std::uint64_t label_cap = 1'000'000;
};

// Per-node complete set of Pareto non-dominated objective vectors, each with
// one witness path. Produced by a label-setting search with a lexicographic
// queue; equal vectors collapse (weak-dominance pruning), which keeps the set
// finite whenever every cycle has a nonzero objective vector.
struct ParetoFront {
    std::shared_ptr<const PathPool> pool;
    std::vector<std::vector<PathId>> fronts;  // per node, in pop (lex) order
    std::uint64_t labels_created = 0;

    std::span<const double> objective_vector(PathId label) const { return pool->totals(label); }
    std::size_t front_size(NodeId v) const { return fronts[v].size(); }
};

ParetoFront pareto_fronts(const Mog& g, NodeId s, const OracleOptions& options = {});

// cost[i][v] = min over front(v) of lambda_i . vector; NaN when unreachable.
std::vector<std::vector<double>> oracle_optimal_costs(const ParetoFront& front,
                                                      const LambdaSet& lambdas);
std::vector<std::vector<double>> oracle_optimal_costs(const Mog& g, NodeId s,
                                                      const LambdaSet& lambdas,
                                                      const OracleOptions& options = {});

struct DiagnosticsOptions {
    bool with_n_l = false;  // quadratic in front sizes
};

// Front-structure measurements: per-node Pareto counts, the alpha(l) coverage
// curve and the smallest l putting all but a log-fraction of nodes below it,
// outgoing-edge coverage gamma, and degree statistics.
struct StructureDiagnostics {
    std::vector<std::size_t> pareto_count;  // per node (0 when unreachable)
    std::size_t max_pareto_count = 0;
    int l_bound = 0;              // L
    std::vector<double> alpha;    // alpha[l], l = 0..max_pareto_count
    std::vector<double> gamma;    // gamma[l], same indexing
    double avg_degree = 0.0;      // D = |E| / |V|
    double avg_l_node_degree = 0.0;  // D_L at l = L
    std::size_t max_in_degree = 0;
    std::size_t max_out_degree = 0;
    std::optional<std::size_t> n_l;  // only when requested
};

StructureDiagnostics structure_diagnostics(const Mog& g, NodeId s, const ParetoFront& front,
                                           const DiagnosticsOptions& options = {});

}  // namespace mowsp
