#include "mowsp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "mowsp/idaq.hpp"
#include "mowsp/io.hpp"
#include "mowsp/rng.hpp"
#include "mowsp/standard.hpp"

namespace mowsp {

namespace {

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

void check_equal_costs(const Mog& g, const SolveResult& a, const SolveResult& b, double tol,
                       const std::string& context) {
    for (int i = 0; i < a.k(); ++i) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (a.has(i, v) != b.has(i, v))
                throw_error(Errc::verification,
                            context + ": reachability mismatch at node " + std::to_string(v));
            if (!a.has(i, v)) continue;
            const double ca = a.cost(i, v);
            const double cb = b.cost(i, v);
            const double scale = std::max({1.0, std::fabs(ca), std::fabs(cb)});
            if (std::fabs(ca - cb) > tol * scale)
                throw_error(Errc::verification,
                            context + ": cost mismatch at (lambda " + std::to_string(i + 1) +
                                ", node " + std::to_string(v) + "): " + format_double(ca) +
                                " vs " + format_double(cb));
        }
    }
}

Mog generate_instance(const BenchConfig& config, int instance_id) {
    WaxmanParams params = config.waxman;
    for (int attempt = 0; attempt < 16; ++attempt) {
        params.seed = Rng::derive_seed(config.seed, 1000 + instance_id * 16 + attempt);
        try {
            const Mog base = gen_waxman(params);
            return assign_random_objectives(
                base, config.objective_count,
                Rng::derive_seed(config.seed, 2000 + instance_id));
        } catch (const Error& e) {
            if (e.code() != Errc::generation || attempt == 15) throw;
        }
    }
    throw_error(Errc::generation, "unreachable");
}

}  // namespace

std::string BenchReport::to_csv() const {
    std::string out =
        "instance,nodes,edges,w,k,regime,algorithm,rep,wall_ms,developed,scanned,"
        "cost_evaluations,heap_ops\n";
    for (const BenchRow& r : rows) {
        out += std::to_string(r.instance_id) + "," + std::to_string(r.nodes) + "," +
               std::to_string(r.edges) + "," + std::to_string(r.w) + "," + std::to_string(r.k) +
               "," + r.regime + "," + r.algorithm + "," + std::to_string(r.rep) + "," +
               format_double(r.wall_ms) + "," + std::to_string(r.developed) + "," +
               std::to_string(r.scanned) + "," + std::to_string(r.cost_evaluations) + "," +
               std::to_string(r.heap_ops) + "\n";
    }
    return out;
}

std::vector<BenchSummaryCell> BenchReport::summary() const {
    // preserve first-appearance order of (regime, k) cells
    std::vector<std::pair<std::string, int>> order;
    std::map<std::pair<std::string, int>, std::map<std::string, std::vector<double>>> walls;
    std::map<std::pair<std::string, int>, std::map<std::string, std::vector<double>>> developed;
    for (const BenchRow& r : rows) {
        const auto key = std::make_pair(r.regime, r.k);
        if (walls.find(key) == walls.end()) order.push_back(key);
        walls[key][r.algorithm].push_back(r.wall_ms);
        developed[key][r.algorithm].push_back(double(r.developed));
    }

    std::vector<BenchSummaryCell> cells;
    for (const auto& key : order) {
        auto& by_algo = walls[key];
        if (!by_algo.count("standard") || !by_algo.count("idaq")) continue;
        BenchSummaryCell cell;
        cell.regime = key.first;
        cell.k = key.second;
        cell.median_standard_ms = median(by_algo["standard"]);
        cell.median_idaq_ms = median(by_algo["idaq"]);
        cell.speedup = cell.median_idaq_ms > 0.0
                           ? cell.median_standard_ms / cell.median_idaq_ms
                           : 0.0;
        const auto& dev = developed[key];
        const auto& ds = dev.at("standard");
        const auto& di = dev.at("idaq");
        double ratio_sum = 0.0;
        std::size_t count = std::min(ds.size(), di.size());
        for (std::size_t i = 0; i < count; ++i) ratio_sum += di[i] / ds[i];
        cell.mean_developed_ratio = count ? ratio_sum / double(count) : 0.0;
        cells.push_back(std::move(cell));
    }
    return cells;
}

BenchReport run_bench(const BenchConfig& config) {
    if (config.repetitions < 1)
        throw_error(Errc::invalid_argument, "repetitions must be >= 1");
    if (config.instance_count < 1)
        throw_error(Errc::invalid_argument, "instance count must be >= 1");
    if (config.k_values.empty())
        throw_error(Errc::invalid_argument, "at least one K value is required");
    if (config.regimes.empty())
        throw_error(Errc::invalid_argument, "at least one coefficient regime is required");
    for (const auto& regime : config.regimes)
        if (!(regime.low > 0.0) || !(regime.high > regime.low))
            throw_error(Errc::invalid_argument, "regime requires 0 < low < high");
    if (!config.run_standard && !config.run_idaq)
        throw_error(Errc::invalid_argument, "no algorithm selected");

    BenchReport report;
    for (int instance = 0; instance < config.instance_count; ++instance) {
        const Mog g = generate_instance(config, instance);
        const NodeId source = config.source < g.node_count() ? config.source : 0;

        for (std::size_t ri = 0; ri < config.regimes.size(); ++ri) {
            const auto& regime = config.regimes[ri];
            for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
                const int k = config.k_values[ki];
                CoeffRegime cr{regime.low, regime.high, k,
                               Rng::derive_seed(config.seed,
                                                3000 + (instance * config.regimes.size() + ri) *
                                                           config.k_values.size() +
                                                    ki)};
                const LambdaSet lambdas = gen_lambdas(cr, config.objective_count);

                auto record = [&](const char* algo, const SolveResult& result, int rep) {
                    report.rows.push_back({instance, g.node_count(), g.edge_count(),
                                           config.objective_count, k, regime.name, algo, rep,
                                           result.stats.wall_ms, result.stats.developed_paths,
                                           result.stats.scanned_paths,
                                           result.stats.cost_evaluations,
                                           result.stats.heap_ops});
                };

                bool verified = false;
                for (int rep = 0; rep < config.repetitions; ++rep) {
                    std::optional<SolveResult> standard, idaq;
                    if (config.run_standard) {
                        standard.emplace(solve_standard(g, source, lambdas));
                        record("standard", *standard, rep);
                    }
                    if (config.run_idaq) {
                        idaq.emplace(solve_idaq(g, source, lambdas));
                        record("idaq", *idaq, rep);
                    }
                    if (!verified && standard && idaq) {
                        check_equal_costs(g, *standard, *idaq, config.equivalence_tolerance,
                                          "instance " + std::to_string(instance) + " regime " +
                                              regime.name + " K " + std::to_string(k));
                        verified = true;  // solvers are deterministic per rep
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace mowsp
