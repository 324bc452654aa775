// Command-line frontend. Talks to the solver library exclusively through the
// C API in mowsp.h.
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mowsp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(mowsp_status status) {
    std::fprintf(stderr, "error (%s): %s\n", mowsp_status_name(status), mowsp_last_error());
    std::exit(kExitFailure);
}

void check(mowsp_status status) {
    if (status != MOWSP_OK) die(status);
}

struct GraphDeleter {
    void operator()(mowsp_graph* g) const { mowsp_graph_free(g); }
};
struct LambdasDeleter {
    void operator()(mowsp_lambdas* l) const { mowsp_lambdas_free(l); }
};
struct SolutionsDeleter {
    void operator()(mowsp_solutions* s) const { mowsp_solutions_free(s); }
};
using GraphPtr = std::unique_ptr<mowsp_graph, GraphDeleter>;
using LambdasPtr = std::unique_ptr<mowsp_lambdas, LambdasDeleter>;
using SolutionsPtr = std::unique_ptr<mowsp_solutions, SolutionsDeleter>;

GraphPtr load_graph(const std::string& path) {
    mowsp_graph* g = nullptr;
    check(mowsp_graph_read(path.c_str(), &g));
    return GraphPtr(g);
}

LambdasPtr load_lambdas(const std::string& path) {
    mowsp_lambdas* l = nullptr;
    check(mowsp_lambdas_read(path.c_str(), &l));
    return LambdasPtr(l);
}

SolutionsPtr load_solutions(const std::string& path) {
    mowsp_solutions* s = nullptr;
    check(mowsp_solutions_read(path.c_str(), &s));
    return SolutionsPtr(s);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    mowsp_string_free(s);
    return out;
}

uint64_t default_seed() {
    if (const char* env = std::getenv("MOWSP_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-objective shortest path toolkit"};
    app.require_subcommand(1);

    // ---- gen-waxman ----
    auto* gen = app.add_subcommand("gen-waxman", "generate a Waxman random graph");
    mowsp_waxman_params wp;
    mowsp_waxman_params_init(&wp);
    std::string gen_out;
    uint64_t gen_seed = default_seed();
    uint64_t obj_seed = 0;
    int gen_w = 0;
    bool no_scc = false;
    gen->add_option("-o,--out", gen_out, "output graph file")->required();
    gen->add_option("--intensity", wp.intensity, "points per unit area");
    gen->add_option("--alpha", wp.alpha, "Waxman alpha (distance decay)");
    gen->add_option("--beta", wp.beta, "Waxman beta (scale)");
    gen->add_option("--x0", wp.x0);
    gen->add_option("--x1", wp.x1);
    gen->add_option("--y0", wp.y0);
    gen->add_option("--y1", wp.y1);
    gen->add_option("--seed", gen_seed, "RNG seed")->envname("MOWSP_SEED");
    gen->add_flag("--no-largest-scc", no_scc, "keep the whole graph, not the largest SCC");
    gen->add_option("-W,--objectives", gen_w,
                    "assign this many Uniform[0,1) objectives after generation");
    gen->add_option("--objective-seed", obj_seed, "seed for objective assignment");
    gen->callback([&] {
        wp.seed = gen_seed;
        wp.keep_largest_scc = no_scc ? 0 : 1;
        mowsp_graph* g = nullptr;
        check(mowsp_gen_waxman(&wp, &g));
        GraphPtr graph(g);
        if (gen_w > 0) {
            mowsp_graph* assigned = nullptr;
            check(mowsp_assign_random_objectives(graph.get(), gen_w,
                                                 obj_seed ? obj_seed : gen_seed + 1, &assigned));
            graph.reset(assigned);
        }
        check(mowsp_graph_write(graph.get(), gen_out.c_str()));
        std::printf("wrote %s: %" PRId64 " nodes, %" PRId64 " edges, W=%d\n", gen_out.c_str(),
                    mowsp_graph_node_count(graph.get()), mowsp_graph_edge_count(graph.get()),
                    mowsp_graph_objective_count(graph.get()));
    });

    // ---- gen-lambdas ----
    auto* genl = app.add_subcommand("gen-lambdas", "generate coefficient vectors");
    std::string genl_out;
    double genl_low = 0.1, genl_high = 1.1;
    int genl_k = 0, genl_w = 0;
    uint64_t genl_seed = default_seed();
    genl->add_option("-o,--out", genl_out, "output lambda file")->required();
    genl->add_option("-K,--count", genl_k, "number of vectors")->required();
    genl->add_option("-W,--dim", genl_w, "objectives per vector")->required();
    genl->add_option("--low", genl_low, "inclusive lower bound");
    genl->add_option("--high", genl_high, "exclusive upper bound");
    genl->add_option("--seed", genl_seed, "RNG seed")->envname("MOWSP_SEED");
    genl->callback([&] {
        mowsp_lambdas* l = nullptr;
        check(mowsp_gen_lambdas(genl_low, genl_high, genl_k, genl_w, genl_seed, &l));
        LambdasPtr lambdas(l);
        check(mowsp_lambdas_write(lambdas.get(), genl_out.c_str()));
        std::printf("wrote %s: K=%d W=%d in [%g, %g)\n", genl_out.c_str(), genl_k, genl_w,
                    genl_low, genl_high);
    });

    // ---- synth-geo ----
    auto* geo = app.add_subcommand("synth-geo",
                                   "derive the four geo objectives from coords and road tags");
    std::string geo_in, geo_out;
    geo->add_option("-g,--graph", geo_in, "input graph (coords + tags)")->required();
    geo->add_option("-o,--out", geo_out, "output graph")->required();
    geo->callback([&] {
        GraphPtr graph = load_graph(geo_in);
        mowsp_graph* synth = nullptr;
        check(mowsp_synth_geo_objectives(graph.get(), &synth));
        GraphPtr result(synth);
        check(mowsp_graph_write(result.get(), geo_out.c_str()));
        std::printf("wrote %s with W=4 geo objectives\n", geo_out.c_str());
    });

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "solve a MOWSP instance");
    std::string solve_graph, solve_lambdas, solve_out, solve_algo = "idaq";
    int64_t solve_source = 0;
    solve->add_option("-g,--graph", solve_graph, "graph file")->required();
    solve->add_option("-l,--lambdas", solve_lambdas, "lambda file")->required();
    solve->add_option("-o,--out", solve_out, "solution output (JSON)");
    solve->add_option("-s,--source", solve_source, "source node id");
    solve->add_option("--algo", solve_algo, "standard | idaq | oracle")
        ->check(CLI::IsMember({"standard", "idaq", "oracle"}));
    solve->callback([&] {
        GraphPtr graph = load_graph(solve_graph);
        LambdasPtr lambdas = load_lambdas(solve_lambdas);
        mowsp_algorithm algo = MOWSP_ALGO_IDAQ;
        if (solve_algo == "standard") algo = MOWSP_ALGO_STANDARD;
        if (solve_algo == "oracle") algo = MOWSP_ALGO_ORACLE;
        mowsp_solutions* s = nullptr;
        check(mowsp_solve(graph.get(), solve_source, lambdas.get(), algo, &s));
        SolutionsPtr solutions(s);
        if (!solve_out.empty()) check(mowsp_solutions_write(solutions.get(), solve_out.c_str()));
        mowsp_stats stats{};
        check(mowsp_solutions_stats(solutions.get(), &stats));
        std::printf("%s: developed=%" PRIu64 " scanned=%" PRIu64 " cost_evals=%" PRIu64
                    " heap_ops=%" PRIu64 " wall=%.3fms\n",
                    solve_algo.c_str(), stats.developed, stats.scanned, stats.cost_evaluations,
                    stats.heap_ops, stats.wall_ms);
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "compare two solution files");
    std::string verify_a, verify_b;
    double verify_tol = 1e-9;
    verify->add_option("a", verify_a, "first solution file")->required();
    verify->add_option("b", verify_b, "second solution file")->required();
    verify->add_option("--tol", verify_tol, "relative cost tolerance");
    verify->callback([&] {
        SolutionsPtr a = load_solutions(verify_a);
        SolutionsPtr b = load_solutions(verify_b);
        char* detail = nullptr;
        const mowsp_status status = mowsp_verify(a.get(), b.get(), verify_tol, &detail);
        const std::string text = take_string(detail);
        if (status == MOWSP_OK) {
            std::printf("PASS: %s\n", text.c_str());
        } else if (status == MOWSP_ERR_VERIFICATION) {
            std::printf("FAIL: %s\n", text.c_str());
            std::exit(kExitFailure);
        } else {
            die(status);
        }
    });

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "run the runtime comparison harness");
    std::string bench_csv = "bench.csv";
    std::vector<int32_t> bench_k = {5, 15, 25, 35, 50};
    std::vector<std::string> bench_regimes = {"0.1:1.1", "0.5:1.1"};
    int bench_instances = 8, bench_w = 5, bench_reps = 5;
    uint64_t bench_seed = default_seed();
    double bench_intensity = wp.intensity, bench_alpha = wp.alpha, bench_beta = wp.beta;
    bench->add_option("--csv", bench_csv, "output CSV path");
    bench->add_option("-K,--k-values", bench_k, "K sweep");
    bench->add_option("--regimes", bench_regimes, "coefficient regimes as low:high");
    bench->add_option("--instances", bench_instances, "Waxman instances");
    bench->add_option("-W,--objectives", bench_w, "objectives per edge");
    bench->add_option("--reps", bench_reps, "repetitions per cell");
    bench->add_option("--seed", bench_seed, "master seed")->envname("MOWSP_SEED");
    bench->add_option("--intensity", bench_intensity, "Waxman intensity");
    bench->add_option("--alpha", bench_alpha, "Waxman alpha");
    bench->add_option("--beta", bench_beta, "Waxman beta");
    bench->callback([&] {
        std::vector<double> lows, highs;
        for (const std::string& r : bench_regimes) {
            const auto colon = r.find(':');
            if (colon == std::string::npos) {
                std::fprintf(stderr, "bad regime '%s', expected low:high\n", r.c_str());
                std::exit(kExitUsage);
            }
            lows.push_back(std::strtod(r.substr(0, colon).c_str(), nullptr));
            highs.push_back(std::strtod(r.substr(colon + 1).c_str(), nullptr));
        }
        mowsp_bench_config config;
        mowsp_bench_config_init(&config);
        config.instance_count = bench_instances;
        config.objective_count = bench_w;
        config.k_values = bench_k.data();
        config.k_value_count = static_cast<int32_t>(bench_k.size());
        config.regime_lows = lows.data();
        config.regime_highs = highs.data();
        config.regime_count = static_cast<int32_t>(lows.size());
        config.repetitions = bench_reps;
        config.seed = bench_seed;
        config.waxman.seed = bench_seed;
        config.waxman.intensity = bench_intensity;
        config.waxman.alpha = bench_alpha;
        config.waxman.beta = bench_beta;
        char* summary = nullptr;
        check(mowsp_bench_run(&config, bench_csv.c_str(), &summary));
        std::printf("%s", take_string(summary).c_str());
        std::printf("csv written to %s\n", bench_csv.c_str());
    });

    // ---- export-geojson ----
    auto* geojson = app.add_subcommand("export-geojson", "export solution routes as GeoJSON");
    std::string gj_graph, gj_solution, gj_out;
    std::vector<int64_t> gj_targets;
    geojson->add_option("-g,--graph", gj_graph, "graph file (with coords)")->required();
    geojson->add_option("-s,--solution", gj_solution, "solution file")->required();
    geojson->add_option("-t,--targets", gj_targets, "target node ids")->required();
    geojson->add_option("-o,--out", gj_out, "output GeoJSON file");
    geojson->callback([&] {
        GraphPtr graph = load_graph(gj_graph);
        SolutionsPtr solutions = load_solutions(gj_solution);
        char* out_text = nullptr;
        char* warnings = nullptr;
        check(mowsp_export_geojson(graph.get(), solutions.get(), gj_targets.data(),
                                   gj_targets.size(), &out_text, &warnings));
        const std::string warn_text = take_string(warnings);
        if (!warn_text.empty()) std::fprintf(stderr, "%s", warn_text.c_str());
        const std::string body = take_string(out_text);
        if (gj_out.empty()) {
            std::printf("%s", body.c_str());
        } else {
            FILE* f = std::fopen(gj_out.c_str(), "wb");
            if (!f) {
                std::fprintf(stderr, "cannot write %s\n", gj_out.c_str());
                std::exit(kExitFailure);
            }
            std::fwrite(body.data(), 1, body.size(), f);
            std::fclose(f);
            std::printf("wrote %s\n", gj_out.c_str());
        }
    });

    // ---- diagnostics ----
    auto* diag = app.add_subcommand("diagnostics", "Pareto-front structure measurements");
    std::string diag_graph, diag_out;
    int64_t diag_source = 0;
    uint64_t diag_cap = 0;
    bool diag_nl = false;
    diag->add_option("-g,--graph", diag_graph, "graph file")->required();
    diag->add_option("-s,--source", diag_source, "source node id");
    diag->add_option("--label-cap", diag_cap, "oracle label cap (0 = default)");
    diag->add_flag("--with-nl", diag_nl, "compute the quadratic N_L statistic");
    diag->add_option("-o,--out", diag_out, "output JSON file (default: stdout)");
    diag->callback([&] {
        GraphPtr graph = load_graph(diag_graph);
        char* json_text = nullptr;
        check(mowsp_diagnostics(graph.get(), diag_source, diag_cap, diag_nl ? 1 : 0, &json_text));
        const std::string body = take_string(json_text);
        if (diag_out.empty()) {
            std::printf("%s", body.c_str());
        } else {
            FILE* f = std::fopen(diag_out.c_str(), "wb");
            if (!f) {
                std::fprintf(stderr, "cannot write %s\n", diag_out.c_str());
                std::exit(kExitFailure);
            }
            std::fwrite(body.data(), 1, body.size(), f);
            std::fclose(f);
            std::printf("wrote %s\n", diag_out.c_str());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    return kExitOk;
}
