#include <cmath>

#include "doctest.h"
#include "mowsp/idaq.hpp"
#include "mowsp/oracle.hpp"
#include "mowsp/standard.hpp"
#include "support.hpp"

using namespace mowsp;

namespace {

// Chain graph whose k-th edge from node 0 carries the objective vector
// rows[k]; handy for arranging paths with chosen totals at one node.
Mog vector_graph(int w, std::vector<std::vector<double>> rows) {
    MogData data;
    data.node_count = rows.size() + 1;
    data.objective_count = w;
    for (std::size_t i = 0; i < rows.size(); ++i)
        data.edges.push_back(
            {static_cast<NodeId>(i), static_cast<NodeId>(i + 1), std::move(rows[i]), 0});
    return Mog(std::move(data));
}

// Star: edges 0 -> v for each given objective vector, so several paths end at
// distinct one-hop nodes; plus parallel edges 0 -> 1 to stack paths on node 1.
Mog parallel_graph(int w, std::vector<std::vector<double>> rows) {
    MogData data;
    data.node_count = 2;
    data.objective_count = w;
    for (auto& row : rows) data.edges.push_back({0, 1, std::move(row), 0});
    return Mog(std::move(data));
}

}  // namespace

TEST_CASE("adaptive queue push: seed, popped shadowing, queued replacement") {
    const Mog g = parallel_graph(2, {{5, 0}, {4, 0}, {3, 0}});
    const LambdaSet lambdas = test::lambda_set({{1, 1}});
    PathPool pool(g);
    AdaptiveQueue queue(g, pool, lambdas);

    SUBCASE("seed push lands in the heap with key 0") {
        CHECK(queue.is_empty());
        const PathId seed = pool.make_seed(0);
        queue.push(seed);
        CHECK_FALSE(queue.is_empty());
        CHECK(queue.heap_representative(0) == seed);
        const auto popped = queue.pop();
        CHECK(popped.path == seed);
        CHECK(popped.key == 0);
        CHECK(queue.popped_paths(0).size() == 1);
    }

    SUBCASE("a cheaper popped path keeps the newcomer out of the heap") {
        const PathId seed = pool.make_seed(0);
        const PathId cheap = pool.extend(seed, 2);  // cost 3
        queue.push(cheap);
        queue.pop();  // node 1 now has a popped path of cost 3
        const PathId expensive = pool.extend(seed, 0);  // cost 5
        queue.push(expensive);
        CHECK(queue.queue_paths(1).size() == 1);
        CHECK(queue.heap_representative(1) == kInvalidIndex);
        CHECK(queue.is_empty());
        queue.check_representative_invariant(1);
    }

    SUBCASE("a cheaper push replaces the queued representative") {
        const PathId seed = pool.make_seed(0);
        const PathId five = pool.extend(seed, 0);
        queue.push(five);
        CHECK(queue.heap_representative(1) == five);
        const PathId four = pool.extend(seed, 1);
        queue.push(four);
        CHECK(queue.heap_representative(1) == four);
        queue.check_representative_invariant(1);
        const auto popped = queue.pop();
        CHECK(popped.path == four);
        CHECK(popped.key == 4);
    }
}

TEST_CASE("adaptive queue pop: min extraction and FIFO ties") {
    MogData data;
    data.node_count = 3;
    data.objective_count = 1;
    data.edges = {{0, 1, {4}, 0}, {0, 2, {6}, 0}, {0, 1, {4}, 0}};
    const Mog g(std::move(data));
    const LambdaSet lambdas = test::lambda_set({{1}});
    PathPool pool(g);
    AdaptiveQueue queue(g, pool, lambdas);
    const PathId seed = pool.make_seed(0);

    SUBCASE("minimum key pops first, the rest stays") {
        const PathId p = pool.extend(seed, 0);  // node 1, cost 4
        const PathId r = pool.extend(seed, 1);  // node 2, cost 6
        queue.push(p);
        queue.push(r);
        CHECK(queue.pop().path == p);
        CHECK_FALSE(queue.is_empty());
        CHECK(queue.pop().path == r);
    }

    SUBCASE("equal keys at different nodes pop in insertion order") {
        // same-cost paths to node 1 via the two parallel edges would shadow
        // each other, so spread them: a zero-padded second node
        const PathId first = pool.extend(seed, 0);
        queue.push(first);
        const PathId second = pool.extend(seed, 2);  // parallel edge, equal cost
        queue.push(second);
        // Def. 14 case 1b: the earlier push holds the heap slot
        CHECK(queue.heap_representative(1) == first);
        CHECK(queue.pop().path == first);
        CHECK(queue.is_empty());
    }

    SUBCASE("pop on empty queue is a state error") {
        CHECK_THROWS_AS(queue.pop(), Error);
    }
}

TEST_CASE("adaptive queue is_empty tracks only non-null priorities") {
    const Mog g = parallel_graph(2, {{2, 2}, {3, 3}});
    const LambdaSet lambdas = test::lambda_set({{1, 1}});
    PathPool pool(g);
    AdaptiveQueue queue(g, pool, lambdas);
    CHECK(queue.is_empty());
    const PathId seed = pool.make_seed(0);
    queue.push(seed);
    CHECK_FALSE(queue.is_empty());
    queue.pop();
    CHECK(queue.is_empty());

    // node 1: queued path strictly worse than a popped one has null priority
    const PathId cheap = pool.extend(seed, 0);
    queue.push(cheap);
    queue.pop();
    const PathId costly = pool.extend(seed, 1);
    queue.push(costly);
    CHECK_FALSE(queue.queue_paths(1).empty());
    CHECK(queue.is_empty());
}

TEST_CASE("adapt recomputes representatives under the new lambda") {
    // two objectives so costs flip between lambdas
    const Mog g = parallel_graph(2, {{9, 1}, {1, 9}, {4, 4}, {7, 7}});
    PathPool pool(g);

    SUBCASE("queued path beaten by a popped path gets no entry") {
        const LambdaSet lambdas = test::lambda_set({{1, 1}, {2, 1}});
        AdaptiveQueue queue(g, pool, lambdas, nullptr);
        const PathId seed = pool.make_seed(0);
        const PathId e = pool.extend(seed, 0);  // (9,1): 10 under l1, 19 under l2... pick below
        const PathId p = pool.extend(seed, 1);  // (1,9): 10 under l1, 11 under l2
        // under lambda_1 both cost 10; e pushed first
        queue.push(e);
        queue.pop();   // e popped at cost 10
        queue.push(p); // equal cost to a popped path: null priority (case 1c)
        CHECK(queue.is_empty());
        // lambda_2 = (2,1): e costs 19 (popped), p costs 11 < 19: entry appears
        queue.adapt(2);
        CHECK(queue.heap_representative(1) == p);
        CHECK(queue.pop().key == 11);
    }

    SUBCASE("spec arithmetic: popped 7 beats queued 9; minimum queued wins; tie goes dark") {
        const LambdaSet lambdas = test::lambda_set({{1, 1}, {1, 2}});
        // paths on node 1: costs under lambda_2 = (1,2): (9,1)->11, (1,9)->19,
        // (4,4)->12, (7,7)->21
        AdaptiveQueue queue(g, pool, lambdas, nullptr);
        const PathId seed = pool.make_seed(0);
        const PathId a = pool.extend(seed, 2);  // (4,4): 8 under l1, 12 under l2
        const PathId b = pool.extend(seed, 3);  // (7,7): 14 under l1, 21 under l2
        queue.push(a);
        queue.push(b);
        CHECK(queue.pop().path == a);  // a popped at 8; queued b (14) goes null
        CHECK(queue.is_empty());
        queue.adapt(2);
        // under l2: queued b costs 21, popped a costs 12 <= 21: no entry
        CHECK(queue.is_empty());
        queue.check_representative_invariant(1);
    }
}

TEST_CASE("adapt preconditions") {
    const Mog g = test::fixture_g1();
    const LambdaSet lambdas = test::lambda_set({{1, 1}, {3, 1}});
    PathPool pool(g);
    AdaptiveQueue queue(g, pool, lambdas);
    CHECK_THROWS_AS(queue.adapt(3), Error);   // out of range
    CHECK_THROWS_AS(queue.adapt(1), Error);   // adapt never targets iteration 1
    queue.push(pool.make_seed(0));
    CHECK_THROWS_AS(queue.adapt(2), Error);   // heap not empty
}

TEST_CASE("is_relevant dominance branch") {
    const Mog g = parallel_graph(2, {{1, 4}, {2, 5}, {3, 3}, {0, 9}});
    const LambdaSet lambdas = test::lambda_set({{1, 1}, {2, 1}, {1, 2}, {3, 3}});
    // K=4, W=2: dominance branch while |Q_v| < 2

    SUBCASE("empty Q_v accepts vacuously") {
        IdaqState state(g, 0, lambdas);
        const PathId seed = state.pool().make_seed(0);
        const PathId p = state.pool().extend(seed, 0);
        CHECK(state.is_relevant(p));
        CHECK(state.stats().dominance_branch_checks == 1);
    }

    SUBCASE("a weakly dominating queued path rejects the newcomer") {
        IdaqState state(g, 0, lambdas);
        const PathId seed = state.pool().make_seed(0);
        const PathId b = state.pool().extend(seed, 0);  // (1,4)
        CHECK(state.is_relevant(b));
        state.queue().push(b);
        const PathId p = state.pool().extend(seed, 1);  // (2,5), dominated by b
        CHECK_FALSE(state.is_relevant(p));
    }

    SUBCASE("an accepted path removes queued paths it strictly dominates") {
        IdaqState state(g, 0, lambdas);
        const PathId seed = state.pool().make_seed(0);
        const PathId b = state.pool().extend(seed, 1);  // (2,5)
        CHECK(state.is_relevant(b));
        state.queue().push(b);
        const PathId p = state.pool().extend(seed, 0);  // (1,4) dominates (2,5)
        CHECK(state.is_relevant(p));
        CHECK(state.queue().queue_paths(1).empty());  // b removed
        state.queue().push(p);
        CHECK(state.queue().heap_representative(1) == p);
    }
}

TEST_CASE("is_relevant optimality branch at the K/W boundary") {
    // K=4, W=2: threshold K/W = 2, so |Q_v| = 2 takes the optimality branch.
    const Mog g = parallel_graph(2, {{1, 10}, {10, 1}, {0, 18}, {30, 30}});
    const LambdaSet lambdas = test::lambda_set({{10, 1}, {1, 10}, {1, 1}, {2, 1}});
    IdaqState state(g, 0, lambdas);
    PathPool& pool = state.pool();
    const PathId seed = pool.make_seed(0);

    const PathId b1 = pool.extend(seed, 0);  // (1,10): costs 20, 101, 11, 12
    const PathId b2 = pool.extend(seed, 1);  // (10,1): costs 101, 20, 11, 21
    CHECK(state.is_relevant(b1));
    state.queue().push(b1);
    CHECK(state.is_relevant(b2));
    state.queue().push(b2);
    CHECK(state.stats().dominance_branch_checks == 2);

    SUBCASE("improving one lambda suffices and claims the best slot") {
        // (0,18): costs 18, 180, 18, 18; improves only lambda_1 (18 < 20)
        const PathId p = pool.extend(seed, 2);
        CHECK(state.is_relevant(p));
        CHECK(state.stats().optimality_branch_checks == 1);
        REQUIRE(state.best_initialized(1));
        CHECK(state.best_path(1, 0) == p);   // lambda_1 slot taken by p
        CHECK(state.best_path(1, 1) == b2);  // lambda_2 minimum is b2 (20)
        CHECK(state.best_path(1, 2) == b1);  // lambda_3 tie (11): earliest push wins
        CHECK(state.best_path(1, 3) == b1);  // lambda_4 minimum is b1 (12)
        // both queued paths still hold best slots: nothing removed
        CHECK(state.queue().queue_paths(1).size() == 2);
    }

    SUBCASE("improving nothing is rejected") {
        const PathId p = pool.extend(seed, 3);  // (30,30): worse everywhere
        CHECK_FALSE(state.is_relevant(p));
        CHECK(state.stats().optimality_branch_checks == 1);
    }
}

TEST_CASE("optimality branch removals drop unreferenced queued paths") {
    // K=2, W=2: threshold 1, so the second discovered path already uses the
    // optimality branch.
    const Mog g = parallel_graph(2, {{4, 4}, {3, 9}, {1, 1}});
    const LambdaSet lambdas = test::lambda_set({{1, 1}, {1, 2}});
    IdaqState state(g, 0, lambdas);
    PathPool& pool = state.pool();
    const PathId seed = pool.make_seed(0);

    const PathId b = pool.extend(seed, 0);  // (4,4): costs 8, 12
    CHECK(state.is_relevant(b));
    state.queue().push(b);
    // (1,1): costs 2, 3; improves both lambdas, b keeps no slot
    const PathId p = pool.extend(seed, 2);
    CHECK(state.is_relevant(p));
    CHECK(state.queue().queue_paths(1).empty());
    CHECK(state.best_path(1, 0) == p);
    CHECK(state.best_path(1, 1) == p);
}

TEST_CASE("build_sets picks the per-lambda minimum with earliest-pop ties") {
    const Mog g = test::fixture_g1();
    const LambdaSet lambdas = test::lambda_set({{1, 1}, {3, 1}});
    IdaqState state(g, 0, lambdas);
    PathPool& pool = state.pool();
    AdaptiveQueue& queue = state.queue();
    state.init_pareto_sample();

    // iteration 1 under (1,1): develop the seed, [0,2] and [0,1];
    // [0,1,2] stays queued with null priority (7 > popped 5 at node 2)
    const PathId seed = pool.make_seed(0);
    queue.push(seed);
    state.develop(queue.pop().path, 0.0, 1);
    const PathId direct = pool.extend(seed, 1);    // [0,2] totals (4,1)
    const PathId via1 = pool.extend(seed, 0);      // [0,1] totals (1,4)
    queue.push(via1);
    queue.push(direct);
    state.develop(queue.pop().path, 5.0, 1);
    state.develop(queue.pop().path, 5.0, 1);
    const PathId through = pool.extend(via1, 2);   // [0,1,2] totals (2,5)
    queue.push(through);
    CHECK(queue.is_empty());

    // iteration 2 under (3,1): [0,1,2] costs 11, cheaper than popped 13
    queue.adapt(2);
    REQUIRE_FALSE(queue.is_empty());
    const auto popped = queue.pop();
    CHECK(popped.path == through);
    CHECK(popped.key == 11);
    state.develop(popped.path, popped.key, 2);

    const SolveResult sets = state.build_sets();
    CHECK(sets.cost(0, 2) == 5);   // lambda (1,1): [0,2] at 5 beats [0,1,2] at 7
    CHECK(sets.path_id(0, 2) == direct);
    CHECK(sets.cost(1, 2) == 11);  // lambda (3,1): [0,1,2] at 11 beats [0,2] at 13
    CHECK(sets.path_id(1, 2) == through);
    CHECK(sets.cost(1, 1) == 7);
    CHECK(sets.cost(0, 0) == 0);   // single popped path serves every lambda
}

TEST_CASE("solve_idaq equals solve_standard on fixture G1") {
    const Mog g = test::fixture_g1();
    const LambdaSet lambdas = test::lambda_set({{1, 1}, {3, 1}, {1, 3}});
    IdaqOptions options;
    options.check_invariants = true;
    const SolveResult idaq = solve_idaq(g, 0, lambdas, options);
    const SolveResult standard = solve_standard(g, 0, lambdas);
    for (int i = 0; i < 3; ++i)
        for (NodeId v = 0; v < 3; ++v) {
            REQUIRE(idaq.has(i, v) == standard.has(i, v));
            if (idaq.has(i, v)) CHECK(idaq.cost(i, v) == standard.cost(i, v));
        }
    CHECK(idaq.stats.developed_paths <= standard.stats.developed_paths);
}

TEST_CASE("K=1 degenerates to a single shortest-path pass") {
    const Mog g = test::fixture_g1();
    const LambdaSet lambdas = test::lambda_set({{1, 1}});
    const SolveResult result = solve_idaq(g, 0, lambdas, {.check_invariants = true});
    CHECK(result.cost(0, 1) == 5);
    CHECK(result.cost(0, 2) == 5);
    CHECK(result.stats.developed_paths <= 3);
}

TEST_CASE("star graph develops each leaf once regardless of K") {
    MogData data;
    data.node_count = 11;
    data.objective_count = 2;
    for (NodeId leaf = 1; leaf <= 10; ++leaf)
        data.edges.push_back({0, leaf, {double(leaf), double(11 - leaf)}, 0});
    const Mog g(std::move(data));
    for (int k : {1, 3, 8}) {
        std::vector<std::vector<double>> rows;
        for (int i = 0; i < k; ++i)
            rows.push_back({1.0 + i, 1.0 + 2.0 * i});
        const SolveResult result =
            solve_idaq(g, 0, test::lambda_set(rows), {.check_invariants = true});
        CHECK(result.stats.developed_paths == 11);  // 10 leaves + the seed
    }
}

TEST_CASE("zero-objective self-loops and parallel edges cannot wedge the solver") {
    MogData data;
    data.node_count = 3;
    data.objective_count = 2;
    data.edges = {{0, 1, {1, 2}, 0}, {0, 1, {1, 2}, 0}, {1, 1, {0, 0}, 0},
                  {1, 2, {2, 1}, 0}, {2, 1, {0, 0}, 0}, {1, 2, {2, 1}, 0}};
    const Mog g(std::move(data));
    const LambdaSet lambdas = test::lambda_set({{1, 1}, {2, 1}, {1, 2}});
    const SolveResult idaq = solve_idaq(g, 0, lambdas, {.check_invariants = true});
    const SolveResult standard = solve_standard(g, 0, lambdas);
    for (int i = 0; i < 3; ++i)
        for (NodeId v = 0; v < 3; ++v) {
            REQUIRE(idaq.has(i, v) == standard.has(i, v));
            if (idaq.has(i, v)) CHECK(idaq.cost(i, v) == standard.cost(i, v));
        }
}

TEST_CASE("property: idaq matches standard and the oracle on random instances") {
    Rng rng(4242);
    test::RandomInstanceConfig config;
    config.max_nodes = 18;
    config.max_k = 10;
    for (int trial = 0; trial < 60; ++trial) {
        const auto instance = test::random_instance(rng, config);
        IdaqOptions options;
        options.check_invariants = true;
        options.record_trace = true;
        IdaqTrace trace;
        const SolveResult idaq =
            solve_idaq(instance.graph, instance.source, instance.lambdas, options, &trace);
        const SolveResult standard =
            solve_standard(instance.graph, instance.source, instance.lambdas);
        const auto oracle = oracle_optimal_costs(instance.graph, instance.source,
                                                 instance.lambdas);

        std::size_t reachable = 0;
        for (NodeId v = 0; v < instance.graph.node_count(); ++v)
            if (standard.has(0, v)) ++reachable;

        for (int i = 0; i < instance.lambdas.k(); ++i)
            for (NodeId v = 0; v < instance.graph.node_count(); ++v) {
                REQUIRE(idaq.has(i, v) == standard.has(i, v));
                REQUIRE(idaq.has(i, v) == !std::isnan(oracle[i][v]));
                if (idaq.has(i, v)) {
                    CHECK(idaq.cost(i, v) == standard.cost(i, v));
                    CHECK(idaq.cost(i, v) == oracle[i][v]);
                }
            }

        // counter bound: never more developments than K x reachable
        CHECK(idaq.stats.developed_paths <=
              std::uint64_t(instance.lambdas.k()) * reachable);
        CHECK(standard.stats.developed_paths ==
              std::uint64_t(instance.lambdas.k()) * reachable);

        // iteration-optimality of every pop, against the oracle
        for (const DevelopedRecord& record : trace.developed) {
            CHECK(record.key == oracle[record.iteration - 1][record.node]);
        }
    }
}
