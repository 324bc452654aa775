// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mowsp/bench.hpp"
#include "mowsp/benchgen.hpp"
#include "mowsp/idaq.hpp"
#include "mowsp/io.hpp"
#include "mowsp/oracle.hpp"
#include "mowsp/rng.hpp"
#include "mowsp/standard.hpp"
#include "support.hpp"

using namespace mowsp;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// criteria 1 + 2: property corpus with exact three-way equivalence and the
// full invariant battery
void run_equivalence_and_invariants() {
    const auto start = Clock::now();
    const int target_instances = 500;
    const int max_attempts = 700;

    Rng rng(20240817);
    test::RandomInstanceConfig config;  // spec corpus: |V| in [5,40], density [0.1,0.5],
                                        // W in {2,3,5}, K in [1,16], integer data

    int checked = 0;
    int oracle_skips = 0;
    std::string equivalence_failure;
    std::string invariant_failure;

    for (int attempt = 0; attempt < max_attempts && checked < target_instances; ++attempt) {
        const auto instance = test::random_instance(rng, config);
        const int k = instance.lambdas.k();

        IdaqOptions options;
        options.check_invariants = true;
        options.record_trace = true;
        IdaqTrace trace;

        SolveResult idaq = [&] {
            try {
                return solve_idaq(instance.graph, instance.source, instance.lambdas, options,
                                  &trace);
            } catch (const Error& e) {
                if (invariant_failure.empty())
                    invariant_failure = std::string("solver invariant violation: ") + e.what();
                throw;
            }
        }();
        const SolveResult standard =
            solve_standard(instance.graph, instance.source, instance.lambdas);

        std::vector<std::vector<double>> oracle;
        bool have_oracle = true;
        try {
            oracle = oracle_optimal_costs(instance.graph, instance.source, instance.lambdas);
        } catch (const Error& e) {
            if (e.code() != Errc::resource) throw;
            have_oracle = false;
            ++oracle_skips;
        }

        std::size_t reachable = 0;
        for (NodeId v = 0; v < instance.graph.node_count(); ++v)
            if (standard.has(0, v)) ++reachable;

        for (int i = 0; i < k && equivalence_failure.empty(); ++i) {
            for (NodeId v = 0; v < instance.graph.node_count(); ++v) {
                const bool present = standard.has(i, v);
                if (idaq.has(i, v) != present ||
                    (have_oracle && (std::isnan(oracle[i][v]) == present))) {
                    equivalence_failure = "reachability mismatch at attempt " +
                                          std::to_string(attempt);
                    break;
                }
                if (!present) continue;
                const double s = standard.cost(i, v);
                if (idaq.cost(i, v) != s || (have_oracle && oracle[i][v] != s)) {
                    equivalence_failure = "cost mismatch at attempt " + std::to_string(attempt) +
                                          " (lambda " + std::to_string(i + 1) + ", node " +
                                          std::to_string(v) + ")";
                    break;
                }
            }
        }

        if (invariant_failure.empty()) {
            // counter bound: never more developments than K x reachable
            if (idaq.stats.developed_paths > std::uint64_t(k) * reachable)
                invariant_failure = "developed-path counter bound violated at attempt " +
                                    std::to_string(attempt);
            if (standard.stats.developed_paths != std::uint64_t(k) * reachable)
                invariant_failure = "standard developed-path count mismatch at attempt " +
                                    std::to_string(attempt);
        }

        if (have_oracle && invariant_failure.empty()) {
            // iteration-optimality of every pop, against the oracle
            for (const DevelopedRecord& record : trace.developed) {
                if (record.key != oracle[record.iteration - 1][record.node]) {
                    invariant_failure = "popped path not iteration-optimal at attempt " +
                                        std::to_string(attempt);
                    break;
                }
            }
            // pareto_sample membership in the oracle front, vector-exact
            const ParetoFront front = pareto_fronts(instance.graph, instance.source);
            for (NodeId v = 0; v < instance.graph.node_count() && invariant_failure.empty();
                 ++v) {
                const PathId sample = trace.pareto_sample[v];
                if (sample == kInvalidIndex) continue;
                const auto st = trace.pool->totals(sample);
                bool member = false;
                for (PathId f : front.fronts[v]) {
                    const auto ft = front.pool->totals(f);
                    if (std::equal(st.begin(), st.end(), ft.begin())) {
                        member = true;
                        break;
                    }
                }
                if (!member)
                    invariant_failure = "pareto sample vector outside the oracle front "
                                        "at attempt " +
                                        std::to_string(attempt);
            }
            ++checked;
        }

        if (!equivalence_failure.empty() && !invariant_failure.empty()) break;
    }

    const double elapsed = seconds_since(start);
    const bool count_ok = checked >= target_instances;
    const bool budget_ok = elapsed < 120.0;

    report(1, "oracle equivalence",
           equivalence_failure.empty() && count_ok && budget_ok,
           equivalence_failure.empty()
               ? (std::to_string(checked) + " instances exact (" +
                  std::to_string(oracle_skips) + " oracle label-cap skips), " +
                  std::to_string(int(elapsed)) + "s" +
                  (count_ok ? "" : " [too few oracle-checked instances]") +
                  (budget_ok ? "" : " [over 2-minute budget]"))
               : equivalence_failure);
    report(2, "invariant suite", invariant_failure.empty() && count_ok,
           invariant_failure.empty()
               ? "zero violations across the corpus (per-pop optimality, once-per-node, "
                 "no duplicate paths, dominance and heap-representative checks)"
               : invariant_failure);
}

// criteria 3 + 4 share one harness run in the criterion's exact shape
void run_counters_and_runtime() {
    const auto start = Clock::now();
    BenchConfig config;  // defaults: 8 paper-family instances, W=5,
                         // K in {5,15,25,35,50}, both regimes, 5 reps
    config.seed = 1;
    const BenchReport bench = run_bench(config);
    const double elapsed = seconds_since(start);

    // --- criterion 3: developed-path counters on correlated cells ---
    std::string counter_failure;
    // per (instance, K): developed counts in the correlated regime
    std::map<std::pair<int, int>, std::uint64_t> dev_std, dev_idaq;
    std::map<std::pair<int, int>, std::size_t> nodes_of;
    for (const BenchRow& row : bench.rows) {
        if (row.regime != "correlated") continue;
        const auto key = std::make_pair(row.instance_id, row.k);
        nodes_of[key] = row.nodes;
        if (row.algorithm == "standard")
            dev_std[key] = row.developed;
        else
            dev_idaq[key] = row.developed;
    }
    std::map<int, double> ratio_sum;
    std::map<int, int> ratio_count;
    for (const auto& [key, ds] : dev_std) {
        const std::uint64_t di = dev_idaq.at(key);
        if (ds != std::uint64_t(key.second) * nodes_of[key]) {
            counter_failure = "standard developed != K x |reachable| on instance " +
                              std::to_string(key.first);
            break;
        }
        if (di >= ds) {
            counter_failure = "idaq developed not strictly below standard on instance " +
                              std::to_string(key.first) + " at K=" + std::to_string(key.second);
            break;
        }
        ratio_sum[key.second] += double(di) / double(ds);
        ratio_count[key.second] += 1;
    }
    std::string ratio_text = "ratios";
    double prev_ratio = 2.0;
    bool decreasing = true;
    for (int k : config.k_values) {
        const double r = ratio_sum[k] / std::max(1, ratio_count[k]);
        char buffer[48];
        std::snprintf(buffer, sizeof(buffer), " K=%d:%.3f", k, r);
        ratio_text += buffer;
        if (r >= prev_ratio) decreasing = false;
        prev_ratio = r;
    }
    if (counter_failure.empty() && !decreasing)
        counter_failure = "developed-path ratio not decreasing in K (" + ratio_text + ")";
    report(3, "counter dominance", counter_failure.empty(),
           counter_failure.empty() ? ratio_text : counter_failure);

    // --- criterion 4: runtime trend ---
    std::string runtime_failure;
    const auto cells = bench.summary();
    std::map<std::string, std::vector<std::pair<int, double>>> speedups;
    for (const auto& cell : cells) speedups[cell.regime].push_back({cell.k, cell.speedup});

    std::string speed_text;
    for (auto& [regime, list] : speedups) {
        std::sort(list.begin(), list.end());
        speed_text += " " + regime + ":";
        double prev = 0.0;
        for (const auto& [k, s] : list) {
            char buffer[48];
            std::snprintf(buffer, sizeof(buffer), " K=%d:%.2fx", k, s);
            speed_text += buffer;
            if (s < prev && runtime_failure.empty())
                runtime_failure = "speedup not non-decreasing in K for regime " + regime;
            prev = s;
        }
    }
    const auto& correlated = speedups["correlated"];
    const double final_speedup = correlated.empty() ? 0.0 : correlated.back().second;
    if (runtime_failure.empty() && final_speedup < 1.2)
        runtime_failure = "correlated speedup at largest K below 1.2x (" +
                          std::to_string(final_speedup) + ")";
    if (runtime_failure.empty() && elapsed >= 900.0)
        runtime_failure = "over the 15-minute budget";
    char elapsed_text[64];
    std::snprintf(elapsed_text, sizeof(elapsed_text), " (%.0fs)", elapsed);
    report(4, "runtime trend", runtime_failure.empty(),
           (runtime_failure.empty() ? speed_text : runtime_failure + ";" + speed_text) +
               elapsed_text);
}

void run_generator_sanity() {
    std::string failure;

    // Waxman family: node counts and density in the accepted ranges
    for (std::uint64_t seed = 1; seed <= 12 && failure.empty(); ++seed) {
        const Mog g = gen_waxman(WaxmanParams::paper_family(seed));
        const double density = double(g.edge_count()) / (double(g.node_count()) * g.node_count());
        if (g.node_count() < 150 || g.node_count() > 350)
            failure = "waxman |V| out of [150, 350] at seed " + std::to_string(seed) + " (" +
                      std::to_string(g.node_count()) + ")";
        else if (density < 0.1 || density > 0.25)
            failure = "waxman density out of [0.1, 0.25] at seed " + std::to_string(seed);
    }

    // coefficient regimes stay inside their half-open intervals
    if (failure.empty()) {
        for (auto [low, high] : {std::pair{0.1, 1.1}, std::pair{0.5, 1.1}}) {
            const LambdaSet lambdas = gen_lambdas({low, high, 50, 99}, 5);
            for (int i = 0; i < lambdas.k() && failure.empty(); ++i)
                for (int j = 0; j < 5; ++j)
                    if (lambdas[i][j] < low || lambdas[i][j] >= high)
                        failure = "lambda coefficient outside its regime interval";
        }
    }

    // geo objectives: exact {C1, C1/2} on 10^4 random tagged edges
    if (failure.empty()) {
        Rng rng(5150);
        MogData data;
        data.node_count = 500;
        data.objective_count = 1;
        data.has_tags = true;
        data.coords.resize(500);
        for (auto& c : data.coords) c = {rng.uniform(0, 2), rng.uniform(0, 2)};
        for (int e = 0; e < 10000; ++e) {
            EdgeRecord rec;
            rec.from = static_cast<NodeId>(rng.next_below(500));
            rec.to = static_cast<NodeId>(rng.next_below(500));
            rec.objectives = {1.0};
            rec.tags = static_cast<std::uint8_t>(rng.next_below(8));
            data.edges.push_back(std::move(rec));
        }
        const Mog geo = synth_geo_objectives(Mog(std::move(data)));
        for (EdgeId e = 0; e < geo.edge_count() && failure.empty(); ++e) {
            const auto w = geo.edge_objectives(e);
            const std::uint8_t tags = geo.edge_tags(e);
            if (w[1] != ((tags & kTagBicycleRoad) ? w[0] / 2 : w[0]) ||
                w[2] != (!(tags & kTagNearHighway) ? w[0] / 2 : w[0]) ||
                w[3] != (!(tags & kTagNearBuildings) ? w[0] / 2 : w[0]))
                failure = "geo objective violates the exact half-length rule at edge " +
                          std::to_string(e);
        }
    }

    report(5, "generator sanity", failure.empty(),
           failure.empty() ? "waxman ranges, regime intervals and geo exactness hold"
                           : failure);
}

void run_io_roundtrip() {
    std::string failure;
    Rng rng(606);
    test::RandomInstanceConfig config;
    config.max_nodes = 30;

    for (int trial = 0; trial < 100 && failure.empty(); ++trial) {
        const auto instance = test::random_instance(rng, config);
        const std::string graph_text = graph_to_text(instance.graph);
        const std::string lambda_text = lambdas_to_text(instance.lambdas);
        if (graph_to_text(graph_from_text(graph_text)) != graph_text) {
            failure = "graph round-trip not bit-exact at trial " + std::to_string(trial);
            break;
        }
        if (lambdas_to_text(lambdas_from_text(lambda_text)) != lambda_text) {
            failure = "lambda round-trip not bit-exact at trial " + std::to_string(trial);
            break;
        }

        if (trial % 10 != 0) continue;
        const SolveResult standard =
            solve_standard(instance.graph, instance.source, instance.lambdas);
        const SolveResult idaq = solve_idaq(instance.graph, instance.source, instance.lambdas);
        const SolutionDocument doc_standard = make_solution_document(
            instance.graph, instance.lambdas, instance.source, standard, "standard");
        const SolutionDocument doc_idaq = make_solution_document(
            instance.graph, instance.lambdas, instance.source, idaq, "idaq");
        const SolutionDocument reread = solution_from_json(solution_to_json(doc_idaq));
        if (!verify_solutions(doc_standard, reread).pass) {
            failure = "standard vs idaq verification failed at trial " + std::to_string(trial);
            break;
        }
        // a single perturbed cost must flip the verdict
        SolutionDocument tampered = reread;
        bool perturbed = false;
        for (auto& entries : tampered.per_lambda) {
            for (auto& entry : entries)
                if (entry.cost > 0) {
                    entry.cost += 1e-3;
                    perturbed = true;
                    break;
                }
            if (perturbed) break;
        }
        if (perturbed && verify_solutions(doc_standard, tampered).pass) {
            failure = "perturbed cost not detected at trial " + std::to_string(trial);
            break;
        }
    }
    report(6, "i/o round-trip and verification", failure.empty(),
           failure.empty() ? "100 instances round-trip bit-exactly; verification catches "
                             "perturbations"
                           : failure);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    run_equivalence_and_invariants();
    run_counters_and_runtime();
    run_generator_sanity();
    run_io_roundtrip();
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
