#include "support.hpp"

#include <cmath>
#include <limits>

namespace mowsp::test {

Mog fixture_g1() {
    MogData data;
    data.node_count = 3;
    data.objective_count = 2;
    data.edges = {
        {0, 1, {1, 4}, 0},
        {0, 2, {4, 1}, 0},
        {1, 2, {1, 1}, 0},
        {2, 1, {1, 1}, 0},
    };
    return Mog(std::move(data));
}

LambdaSet lambda_set(std::vector<std::vector<double>> rows) {
    std::vector<CoefficientVector> vectors;
    vectors.reserve(rows.size());
    for (auto& row : rows) vectors.emplace_back(std::move(row));
    return LambdaSet(std::move(vectors));
}

std::vector<double> bellman_ford(const Mog& g, NodeId s, const CoefficientVector& lam) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.node_count(), kInf);
    dist[s] = 0.0;
    for (std::size_t round = 0; round + 1 < g.node_count(); ++round) {
        bool changed = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (dist[g.edge_from(e)] == kInf) continue;
            const double c = dist[g.edge_from(e)] + weighted_cost(g.edge_objectives(e), lam);
            if (c < dist[g.edge_to(e)]) {
                dist[g.edge_to(e)] = c;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (double& d : dist)
        if (d == kInf) d = std::numeric_limits<double>::quiet_NaN();
    return dist;
}

std::vector<std::vector<std::vector<double>>> enumerate_pareto(const Mog& g, NodeId s,
                                                               std::uint32_t max_hops) {
    const int w = g.objective_count();
    std::vector<std::vector<std::vector<double>>> all(g.node_count());

    struct Frame {
        NodeId node;
        std::vector<double> totals;
        std::uint32_t hops;
    };
    std::vector<Frame> stack;
    stack.push_back({s, std::vector<double>(w, 0.0), 0});
    all[s].push_back(stack.back().totals);
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (frame.hops == max_hops) continue;
        for (EdgeId e : g.out_edges(frame.node)) {
            Frame child{g.edge_to(e), frame.totals, frame.hops + 1};
            const auto we = g.edge_objectives(e);
            for (int j = 0; j < w; ++j) child.totals[j] += we[j];
            all[child.node].push_back(child.totals);
            stack.push_back(std::move(child));
        }
    }

    // dominance filter with equal-vector collapse
    std::vector<std::vector<std::vector<double>>> fronts(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (const auto& candidate : all[v]) {
            bool keep = true;
            for (const auto& other : all[v]) {
                if (dominates(other, candidate)) {
                    keep = false;
                    break;
                }
            }
            if (!keep) continue;
            bool duplicate = false;
            for (const auto& existing : fronts[v]) {
                if (existing == candidate) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) fronts[v].push_back(candidate);
        }
    }
    return fronts;
}

RandomInstance random_instance(Rng& rng, const RandomInstanceConfig& config) {
    const std::size_t n =
        config.min_nodes + rng.next_below(config.max_nodes - config.min_nodes + 1);
    const double density = rng.uniform(config.min_density, config.max_density);
    const int w = config.w_choices[rng.next_below(config.w_choices.size())];
    const int k = config.min_k + static_cast<int>(rng.next_below(config.max_k - config.min_k + 1));

    MogData data;
    data.node_count = n;
    data.objective_count = w;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u == v || rng.next_double() >= density) continue;
            EdgeRecord e;
            e.from = u;
            e.to = v;
            e.objectives.resize(w);
            for (int j = 0; j < w; ++j)
                e.objectives[j] = double(rng.next_below(config.max_objective + 1));
            data.edges.push_back(std::move(e));
        }
    }
    // keep at least one edge so fixtures are never degenerate
    if (data.edges.empty()) {
        EdgeRecord e;
        e.from = 0;
        e.to = static_cast<NodeId>(n > 1 ? 1 : 0);
        e.objectives.assign(w, 1.0);
        data.edges.push_back(std::move(e));
    }

    std::vector<CoefficientVector> vectors;
    for (int i = 0; i < k; ++i) {
        std::vector<double> values(w);
        for (int j = 0; j < w; ++j)
            values[j] = double(1 + rng.next_below(config.max_coefficient));
        vectors.emplace_back(std::move(values));
    }

    const NodeId source = static_cast<NodeId>(rng.next_below(n));
    return {Mog(std::move(data)), LambdaSet(std::move(vectors)), source};
}

}  // namespace mowsp::test
