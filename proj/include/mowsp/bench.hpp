#pragma once

#include <string>
#include <vector>

#include "mowsp/benchgen.hpp"
#include "mowsp/core.hpp"

namespace mowsp {

struct BenchConfig {
    int instance_count = 8;
    WaxmanParams waxman = WaxmanParams::paper_family(1);
    int objective_count = 5;  // W
    std::vector<int> k_values = {5, 15, 25, 35, 50};

    struct Regime {
        double low;
        double high;
        std::string name;
    };
    std::vector<Regime> regimes = {{0.1, 1.1, "uniform"}, {0.5, 1.1, "correlated"}};

    int repetitions = 5;
    bool run_standard = true;
    bool run_idaq = true;
    NodeId source = 0;
    std::uint64_t seed = 1;
    double equivalence_tolerance = 1e-9;  // cost mismatch between solvers is a hard error
};

struct BenchRow {
    int instance_id;
    std::size_t nodes;
    std::size_t edges;
    int w;
    int k;
    std::string regime;
    std::string algorithm;
    int rep;
    double wall_ms;
    std::uint64_t developed;
    std::uint64_t scanned;
    std::uint64_t cost_evaluations;
    std::uint64_t heap_ops;
};

struct BenchSummaryCell {
    std::string regime;
    int k = 0;
    double median_standard_ms = 0.0;
    double median_idaq_ms = 0.0;
    double speedup = 0.0;  // median standard / median idaq
    double mean_developed_ratio = 0.0;  // developed(idaq) / developed(standard)
};

struct BenchReport {
    std::vector<BenchRow> rows;

    std::string to_csv() const;
    // One cell per (regime, K), in the configured order. Only populated for
    // cells where both algorithms ran.
    std::vector<BenchSummaryCell> summary() const;
};

// Runs both solvers on identical instances and coefficient sets, verifies the
// per-(lambda, node) costs agree (mismatch aborts the run: a benchmark on
// wrong output is meaningless), and records timings and counters.
BenchReport run_bench(const BenchConfig& config);

}  // namespace mowsp
