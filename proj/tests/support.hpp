// Shared fixtures and reference implementations for the test suites. The
// reference engines here are deliberately naive and independent of the
// library's solver code paths.
#pragma once

#include <optional>
#include <vector>

#include "mowsp/core.hpp"
#include "mowsp/rng.hpp"

namespace mowsp::test {

// Three-node fixture used across suites:
//   0 -> 1 w=(1,4), 0 -> 2 w=(4,1), 1 -> 2 w=(1,1), 2 -> 1 w=(1,1)
Mog fixture_g1();

LambdaSet lambda_set(std::vector<std::vector<double>> rows);

// Bellman-Ford over reduced edge costs; NaN entries are unreachable.
std::vector<double> bellman_ford(const Mog& g, NodeId s, const CoefficientVector& lam);

// All objective vectors of paths from s to each node with at most max_hops
// edges, dominance-filtered with equal vectors collapsed.
std::vector<std::vector<std::vector<double>>> enumerate_pareto(const Mog& g, NodeId s,
                                                               std::uint32_t max_hops);

struct RandomInstanceConfig {
    std::size_t min_nodes = 5;
    std::size_t max_nodes = 40;
    double min_density = 0.1;
    double max_density = 0.5;
    std::vector<int> w_choices = {2, 3, 5};
    int min_k = 1;
    int max_k = 16;
    int max_objective = 100;  // integers in [0, max]
    int max_coefficient = 10;  // integers in [1, max]
};

struct RandomInstance {
    Mog graph;
    LambdaSet lambdas;
    NodeId source;
};

// Integer-valued random instance; costs are exactly representable so
// equality assertions are exact.
RandomInstance random_instance(Rng& rng, const RandomInstanceConfig& config = {});

}  // namespace mowsp::test
