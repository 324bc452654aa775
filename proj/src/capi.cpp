#include "mowsp.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <optional>
#include <string>

#include "json.hpp"
#include "mowsp/bench.hpp"
#include "mowsp/benchgen.hpp"
#include "mowsp/core.hpp"
#include "mowsp/idaq.hpp"
#include "mowsp/io.hpp"
#include "mowsp/oracle.hpp"
#include "mowsp/standard.hpp"

namespace {

thread_local std::string g_last_error;

mowsp_status map_errc(mowsp::Errc code) {
    using mowsp::Errc;
    switch (code) {
        case Errc::invalid_argument: return MOWSP_ERR_INVALID_ARGUMENT;
        case Errc::logic: return MOWSP_ERR_LOGIC;
        case Errc::state: return MOWSP_ERR_STATE;
        case Errc::parse: return MOWSP_ERR_PARSE;
        case Errc::format: return MOWSP_ERR_FORMAT;
        case Errc::resource: return MOWSP_ERR_RESOURCE;
        case Errc::io: return MOWSP_ERR_IO;
        case Errc::generation: return MOWSP_ERR_GENERATION;
        case Errc::verification: return MOWSP_ERR_VERIFICATION;
        case Errc::internal: return MOWSP_ERR_INTERNAL;
    }
    return MOWSP_ERR_INTERNAL;
}

template <typename Fn>
mowsp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const mowsp::Error& e) {
        g_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MOWSP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MOWSP_ERR_INTERNAL;
    }
}

mowsp_status fail_invalid(const char* message) {
    g_last_error = message;
    return MOWSP_ERR_INVALID_ARGUMENT;
}

char* alloc_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

}  // namespace

// Builder-style wrapper: edits accumulate in MogData; the validated Mog is
// built lazily and cached until the next mutation.
struct mowsp_graph {
    mowsp::MogData data;
    bool all_edges_tagged = true;
    mutable std::optional<mowsp::Mog> built;

    const mowsp::Mog& mog() const {
        if (!built) {
            mowsp::MogData copy = data;
            copy.has_tags = !copy.edges.empty() && all_edges_tagged;
            built.emplace(std::move(copy));
        }
        return *built;
    }
    void invalidate() { built.reset(); }

    static mowsp_graph* from_mog(const mowsp::Mog& m) {
        auto* g = new mowsp_graph;
        g->data = m.data();
        g->all_edges_tagged = m.has_tags();
        g->built.emplace(mowsp::MogData(g->data));
        return g;
    }
};

struct mowsp_lambdas {
    mowsp::LambdaSet set;
};

struct mowsp_solutions {
    mowsp::SolutionDocument doc;

    explicit mowsp_solutions(mowsp::SolutionDocument d) : doc(std::move(d)) {
        for (auto& entries : doc.per_lambda)
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.node < b.node; });
    }

    const mowsp::SolutionEntry* find(int lambda_index, mowsp::NodeId node) const {
        if (lambda_index < 1 || lambda_index > doc.k) return nullptr;
        const auto& entries = doc.per_lambda[lambda_index - 1];
        auto it = std::lower_bound(entries.begin(), entries.end(), node,
                                   [](const auto& e, mowsp::NodeId n) { return e.node < n; });
        if (it == entries.end() || it->node != node) return nullptr;
        return &*it;
    }
};

extern "C" {

const char* mowsp_status_name(mowsp_status status) {
    switch (status) {
        case MOWSP_OK: return "ok";
        case MOWSP_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case MOWSP_ERR_LOGIC: return "logic";
        case MOWSP_ERR_STATE: return "state";
        case MOWSP_ERR_PARSE: return "parse";
        case MOWSP_ERR_FORMAT: return "format";
        case MOWSP_ERR_RESOURCE: return "resource";
        case MOWSP_ERR_IO: return "io";
        case MOWSP_ERR_GENERATION: return "generation";
        case MOWSP_ERR_VERIFICATION: return "verification";
        case MOWSP_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* mowsp_last_error(void) { return g_last_error.c_str(); }

void mowsp_string_free(char* s) { delete[] s; }

mowsp_status mowsp_graph_create(int64_t node_count, int32_t objective_count, mowsp_graph** out) {
    if (!out) return fail_invalid("out pointer is null");
    if (node_count < 1) return fail_invalid("node_count must be >= 1");
    if (objective_count < 1) return fail_invalid("objective_count must be >= 1");
    auto* g = new mowsp_graph;
    g->data.node_count = static_cast<std::size_t>(node_count);
    g->data.objective_count = objective_count;
    *out = g;
    return MOWSP_OK;
}

void mowsp_graph_free(mowsp_graph* g) { delete g; }

mowsp_status mowsp_graph_add_edge(mowsp_graph* g, int64_t from, int64_t to,
                                  const double* objectives, int32_t objective_count,
                                  int32_t tags) {
    if (!g || !objectives) return fail_invalid("null argument");
    if (objective_count != g->data.objective_count)
        return fail_invalid("objective count does not match the graph");
    if (from < 0 || to < 0 || std::size_t(from) >= g->data.node_count ||
        std::size_t(to) >= g->data.node_count)
        return fail_invalid("edge endpoint out of range");
    if (tags > 7) return fail_invalid("tags must be a 3-bit mask or negative");
    mowsp::EdgeRecord e;
    e.from = static_cast<mowsp::NodeId>(from);
    e.to = static_cast<mowsp::NodeId>(to);
    e.objectives.assign(objectives, objectives + objective_count);
    if (tags < 0)
        g->all_edges_tagged = false;
    else
        e.tags = static_cast<std::uint8_t>(tags);
    g->data.edges.push_back(std::move(e));
    g->invalidate();
    return MOWSP_OK;
}

mowsp_status mowsp_graph_set_coord(mowsp_graph* g, int64_t node, double x, double y) {
    if (!g) return fail_invalid("null graph");
    if (node < 0 || std::size_t(node) >= g->data.node_count)
        return fail_invalid("node out of range");
    if (g->data.coords.empty()) g->data.coords.assign(g->data.node_count, {});
    g->data.coords[node] = {x, y};
    g->invalidate();
    return MOWSP_OK;
}

int64_t mowsp_graph_node_count(const mowsp_graph* g) {
    return g ? static_cast<int64_t>(g->data.node_count) : -1;
}

int64_t mowsp_graph_edge_count(const mowsp_graph* g) {
    return g ? static_cast<int64_t>(g->data.edges.size()) : -1;
}

int32_t mowsp_graph_objective_count(const mowsp_graph* g) {
    return g ? g->data.objective_count : -1;
}

mowsp_status mowsp_graph_validate(const mowsp_graph* g, char** report_out, int32_t* error_count,
                                  int32_t* warning_count) {
    if (!g) return fail_invalid("null graph");
    return guarded([&] {
        const mowsp::ValidationReport report = mowsp::validate_mog(g->data);
        if (error_count) *error_count = static_cast<int32_t>(report.error_count());
        if (warning_count) *warning_count = static_cast<int32_t>(report.warning_count());
        if (report_out) {
            std::string text;
            for (const auto& issue : report.issues)
                if (issue.is_error) text += "error: " + issue.message + "\n";
            for (const auto& issue : report.issues)
                if (!issue.is_error) text += "warning: " + issue.message + "\n";
            *report_out = alloc_string(text);
        }
        return MOWSP_OK;
    });
}

mowsp_status mowsp_graph_read(const char* path, mowsp_graph** out) {
    if (!path || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = mowsp_graph::from_mog(mowsp::read_graph(path));
        return MOWSP_OK;
    });
}

mowsp_status mowsp_graph_write(const mowsp_graph* g, const char* path) {
    if (!g || !path) return fail_invalid("null argument");
    return guarded([&] {
        mowsp::write_graph(g->mog(), path);
        return MOWSP_OK;
    });
}

void mowsp_waxman_params_init(mowsp_waxman_params* params) {
    if (!params) return;
    const mowsp::WaxmanParams defaults = mowsp::WaxmanParams::paper_family(1);
    params->x0 = defaults.x0;
    params->x1 = defaults.x1;
    params->y0 = defaults.y0;
    params->y1 = defaults.y1;
    params->intensity = defaults.intensity;
    params->alpha = defaults.alpha;
    params->beta = defaults.beta;
    params->seed = defaults.seed;
    params->keep_largest_scc = defaults.keep_largest_scc ? 1 : 0;
}

mowsp_status mowsp_gen_waxman(const mowsp_waxman_params* params, mowsp_graph** out) {
    if (!params || !out) return fail_invalid("null argument");
    return guarded([&] {
        mowsp::WaxmanParams p;
        p.x0 = params->x0;
        p.x1 = params->x1;
        p.y0 = params->y0;
        p.y1 = params->y1;
        p.intensity = params->intensity;
        p.alpha = params->alpha;
        p.beta = params->beta;
        p.seed = params->seed;
        p.keep_largest_scc = params->keep_largest_scc != 0;
        *out = mowsp_graph::from_mog(mowsp::gen_waxman(p));
        return MOWSP_OK;
    });
}

mowsp_status mowsp_assign_random_objectives(const mowsp_graph* g, int32_t objective_count,
                                            uint64_t seed, mowsp_graph** out) {
    if (!g || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = mowsp_graph::from_mog(
            mowsp::assign_random_objectives(g->mog(), objective_count, seed));
        return MOWSP_OK;
    });
}

mowsp_status mowsp_synth_geo_objectives(const mowsp_graph* g, mowsp_graph** out) {
    if (!g || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = mowsp_graph::from_mog(mowsp::synth_geo_objectives(g->mog()));
        return MOWSP_OK;
    });
}

mowsp_status mowsp_lambdas_create(const double* values, int32_t k, int32_t w,
                                  mowsp_lambdas** out) {
    if (!values || !out) return fail_invalid("null argument");
    if (k < 1 || w < 1) return fail_invalid("k and w must be >= 1");
    return guarded([&] {
        std::vector<mowsp::CoefficientVector> vectors;
        vectors.reserve(k);
        for (int32_t i = 0; i < k; ++i)
            vectors.emplace_back(std::vector<double>(values + std::size_t(i) * w,
                                                     values + std::size_t(i + 1) * w));
        *out = new mowsp_lambdas{mowsp::LambdaSet(std::move(vectors))};
        return MOWSP_OK;
    });
}

mowsp_status mowsp_gen_lambdas(double low, double high, int32_t k, int32_t w, uint64_t seed,
                               mowsp_lambdas** out) {
    if (!out) return fail_invalid("null argument");
    return guarded([&] {
        *out = new mowsp_lambdas{mowsp::gen_lambdas({low, high, k, seed}, w)};
        return MOWSP_OK;
    });
}

void mowsp_lambdas_free(mowsp_lambdas* l) { delete l; }

int32_t mowsp_lambdas_k(const mowsp_lambdas* l) { return l ? l->set.k() : -1; }

int32_t mowsp_lambdas_w(const mowsp_lambdas* l) { return l ? l->set.w() : -1; }

mowsp_status mowsp_lambdas_get(const mowsp_lambdas* l, int32_t index, double* values_out) {
    if (!l || !values_out) return fail_invalid("null argument");
    if (index < 0 || index >= l->set.k()) return fail_invalid("lambda index out of range");
    const auto values = l->set[index].values();
    std::copy(values.begin(), values.end(), values_out);
    return MOWSP_OK;
}

mowsp_status mowsp_lambdas_read(const char* path, mowsp_lambdas** out) {
    if (!path || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = new mowsp_lambdas{mowsp::read_lambdas(path)};
        return MOWSP_OK;
    });
}

mowsp_status mowsp_lambdas_write(const mowsp_lambdas* l, const char* path) {
    if (!l || !path) return fail_invalid("null argument");
    return guarded([&] {
        mowsp::write_lambdas(l->set, path);
        return MOWSP_OK;
    });
}

namespace {

// Oracle "solutions": per-(lambda, node) minimum over the Pareto front with
// the argmin label as witness path.
mowsp::SolutionDocument oracle_document(const mowsp::Mog& g, mowsp::NodeId source,
                                        const mowsp::LambdaSet& lambdas) {
    const auto t0 = std::chrono::steady_clock::now();
    const mowsp::ParetoFront front = mowsp::pareto_fronts(g, source);

    mowsp::SolutionDocument doc;
    doc.digest = mowsp::instance_digest(g, lambdas);
    doc.algorithm = "oracle";
    doc.source = source;
    doc.k = lambdas.k();
    doc.w = lambdas.w();
    doc.lambdas.resize(doc.k);
    for (int i = 0; i < doc.k; ++i)
        doc.lambdas[i].assign(lambdas[i].values().begin(), lambdas[i].values().end());
    doc.per_lambda.resize(doc.k);

    for (mowsp::NodeId v = 0; v < g.node_count(); ++v) {
        const auto& labels = front.fronts[v];
        if (labels.empty()) continue;
        for (int i = 0; i < doc.k; ++i) {
            mowsp::PathId best = mowsp::kInvalidIndex;
            double best_cost = 0.0;
            for (mowsp::PathId f : labels) {
                const double c = mowsp::weighted_cost(front.pool->totals(f), lambdas[i]);
                if (best == mowsp::kInvalidIndex || c < best_cost) {
                    best = f;
                    best_cost = c;
                }
            }
            mowsp::SolutionEntry entry;
            entry.node = v;
            entry.cost = best_cost;
            const auto totals = front.pool->totals(best);
            entry.totals.assign(totals.begin(), totals.end());
            entry.path_nodes = front.pool->node_list(best);
            doc.per_lambda[i].push_back(std::move(entry));
        }
        doc.stats.developed_paths += labels.size();
    }
    doc.stats.scanned_paths = front.labels_created;
    doc.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return doc;
}

}  // namespace

mowsp_status mowsp_solve(const mowsp_graph* g, int64_t source, const mowsp_lambdas* lambdas,
                         mowsp_algorithm algorithm, mowsp_solutions** out) {
    if (!g || !lambdas || !out) return fail_invalid("null argument");
    if (source < 0) return fail_invalid("source must be >= 0");
    return guarded([&] {
        const mowsp::Mog& mog = g->mog();
        const auto s = static_cast<mowsp::NodeId>(source);
        mowsp::SolutionDocument doc;
        switch (algorithm) {
            case MOWSP_ALGO_STANDARD: {
                const mowsp::SolveResult result = mowsp::solve_standard(mog, s, lambdas->set);
                doc = mowsp::make_solution_document(mog, lambdas->set, s, result, "standard");
                break;
            }
            case MOWSP_ALGO_IDAQ: {
                const mowsp::SolveResult result = mowsp::solve_idaq(mog, s, lambdas->set);
                doc = mowsp::make_solution_document(mog, lambdas->set, s, result, "idaq");
                break;
            }
            case MOWSP_ALGO_ORACLE:
                doc = oracle_document(mog, s, lambdas->set);
                break;
            default:
                return fail_invalid("unknown algorithm");
        }
        *out = new mowsp_solutions(std::move(doc));
        return MOWSP_OK;
    });
}

void mowsp_solutions_free(mowsp_solutions* s) { delete s; }

int32_t mowsp_solutions_k(const mowsp_solutions* s) { return s ? s->doc.k : -1; }

mowsp_status mowsp_solutions_stats(const mowsp_solutions* s, mowsp_stats* out) {
    if (!s || !out) return fail_invalid("null argument");
    out->developed = s->doc.stats.developed_paths;
    out->scanned = s->doc.stats.scanned_paths;
    out->cost_evaluations = s->doc.stats.cost_evaluations;
    out->heap_ops = s->doc.stats.heap_ops;
    out->wall_ms = s->doc.stats.wall_ms;
    return MOWSP_OK;
}

mowsp_status mowsp_solutions_cost(const mowsp_solutions* s, int32_t lambda_index, int64_t node,
                                  double* cost_out) {
    if (!s || !cost_out) return fail_invalid("null argument");
    if (lambda_index < 1 || lambda_index > s->doc.k)
        return fail_invalid("lambda_index out of range");
    if (node < 0) return fail_invalid("node must be >= 0");
    const auto* entry = s->find(lambda_index, static_cast<mowsp::NodeId>(node));
    if (!entry) {
        g_last_error = "node has no solution entry (unreachable)";
        return MOWSP_ERR_STATE;
    }
    *cost_out = entry->cost;
    return MOWSP_OK;
}

mowsp_status mowsp_solutions_path(const mowsp_solutions* s, int32_t lambda_index, int64_t node,
                                  int64_t* nodes_out, size_t capacity, size_t* length_out) {
    if (!s || !length_out) return fail_invalid("null argument");
    if (lambda_index < 1 || lambda_index > s->doc.k)
        return fail_invalid("lambda_index out of range");
    const auto* entry = s->find(lambda_index, static_cast<mowsp::NodeId>(node));
    if (!entry) {
        g_last_error = "node has no solution entry (unreachable)";
        return MOWSP_ERR_STATE;
    }
    if (!entry->path_nodes) {
        g_last_error = "solution entry carries no path";
        return MOWSP_ERR_STATE;
    }
    *length_out = entry->path_nodes->size();
    if (nodes_out) {
        if (capacity < entry->path_nodes->size())
            return fail_invalid("buffer too small for path");
        for (std::size_t i = 0; i < entry->path_nodes->size(); ++i)
            nodes_out[i] = (*entry->path_nodes)[i];
    }
    return MOWSP_OK;
}

mowsp_status mowsp_solutions_read(const char* path, mowsp_solutions** out) {
    if (!path || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = new mowsp_solutions(mowsp::read_solution(path));
        return MOWSP_OK;
    });
}

mowsp_status mowsp_solutions_write(const mowsp_solutions* s, const char* path) {
    if (!s || !path) return fail_invalid("null argument");
    return guarded([&] {
        mowsp::write_solution(s->doc, path);
        return MOWSP_OK;
    });
}

mowsp_status mowsp_verify(const mowsp_solutions* a, const mowsp_solutions* b, double tolerance,
                          char** detail_out) {
    if (!a || !b) return fail_invalid("null argument");
    return guarded([&] {
        const mowsp::VerifyReport report = mowsp::verify_solutions(a->doc, b->doc, tolerance);
        if (detail_out) *detail_out = alloc_string(report.detail);
        if (!report.pass) {
            g_last_error = report.detail;
            return MOWSP_ERR_VERIFICATION;
        }
        return MOWSP_OK;
    });
}

mowsp_status mowsp_export_geojson(const mowsp_graph* g, const mowsp_solutions* s,
                                  const int64_t* targets, size_t target_count,
                                  char** geojson_out, char** warnings_out) {
    if (!g || !s || !geojson_out || (!targets && target_count > 0))
        return fail_invalid("null argument");
    return guarded([&] {
        std::vector<mowsp::NodeId> target_nodes;
        target_nodes.reserve(target_count);
        for (std::size_t i = 0; i < target_count; ++i) {
            if (targets[i] < 0) return fail_invalid("target node must be >= 0");
            target_nodes.push_back(static_cast<mowsp::NodeId>(targets[i]));
        }
        std::vector<std::string> warnings;
        const std::string geojson =
            mowsp::export_geojson(g->mog(), s->doc, target_nodes, &warnings);
        *geojson_out = alloc_string(geojson);
        if (warnings_out) {
            std::string joined;
            for (const auto& w : warnings) joined += w + "\n";
            *warnings_out = alloc_string(joined);
        }
        return MOWSP_OK;
    });
}

mowsp_status mowsp_diagnostics(const mowsp_graph* g, int64_t source, uint64_t label_cap,
                               int32_t with_n_l, char** json_out) {
    if (!g || !json_out) return fail_invalid("null argument");
    if (source < 0) return fail_invalid("source must be >= 0");
    return guarded([&] {
        const mowsp::Mog& mog = g->mog();
        mowsp::OracleOptions oracle_options;
        if (label_cap > 0) oracle_options.label_cap = label_cap;
        const auto s = static_cast<mowsp::NodeId>(source);
        const mowsp::ParetoFront front = mowsp::pareto_fronts(mog, s, oracle_options);
        const mowsp::StructureDiagnostics diag =
            mowsp::structure_diagnostics(mog, s, front, {with_n_l != 0});

        nlohmann::json j;
        j["nodes"] = mog.node_count();
        j["edges"] = mog.edge_count();
        j["source"] = s;
        j["labels_created"] = front.labels_created;
        j["pareto_count"] = diag.pareto_count;
        j["max_pareto_count"] = diag.max_pareto_count;
        j["L"] = diag.l_bound;
        j["alpha"] = diag.alpha;
        j["gamma"] = diag.gamma;
        j["D"] = diag.avg_degree;
        j["D_L"] = diag.avg_l_node_degree;
        j["max_in_degree"] = diag.max_in_degree;
        j["max_out_degree"] = diag.max_out_degree;
        if (diag.n_l) j["N_L"] = *diag.n_l;
        *json_out = alloc_string(j.dump(1) + "\n");
        return MOWSP_OK;
    });
}

void mowsp_bench_config_init(mowsp_bench_config* config) {
    if (!config) return;
    std::memset(config, 0, sizeof(*config));
    mowsp_waxman_params_init(&config->waxman);
    config->instance_count = 8;
    config->objective_count = 5;
    config->repetitions = 5;
    config->run_standard = 1;
    config->run_idaq = 1;
    config->source = 0;
    config->seed = 1;
}

mowsp_status mowsp_bench_run(const mowsp_bench_config* config, const char* csv_path,
                             char** summary_json_out) {
    if (!config) return fail_invalid("null config");
    if (!config->k_values || config->k_value_count < 1)
        return fail_invalid("bench config needs at least one K value");
    if (!config->regime_lows || !config->regime_highs || config->regime_count < 1)
        return fail_invalid("bench config needs at least one regime");
    return guarded([&] {
        mowsp::BenchConfig bc;
        bc.instance_count = config->instance_count;
        bc.waxman.x0 = config->waxman.x0;
        bc.waxman.x1 = config->waxman.x1;
        bc.waxman.y0 = config->waxman.y0;
        bc.waxman.y1 = config->waxman.y1;
        bc.waxman.intensity = config->waxman.intensity;
        bc.waxman.alpha = config->waxman.alpha;
        bc.waxman.beta = config->waxman.beta;
        bc.waxman.seed = config->waxman.seed;
        bc.waxman.keep_largest_scc = config->waxman.keep_largest_scc != 0;
        bc.objective_count = config->objective_count;
        bc.k_values.assign(config->k_values, config->k_values + config->k_value_count);
        bc.regimes.clear();
        for (int32_t i = 0; i < config->regime_count; ++i) {
            const std::string name = "regime" + std::to_string(i) + "_" +
                                     mowsp::format_double(config->regime_lows[i]) + "_" +
                                     mowsp::format_double(config->regime_highs[i]);
            bc.regimes.push_back({config->regime_lows[i], config->regime_highs[i], name});
        }
        bc.repetitions = config->repetitions;
        bc.run_standard = config->run_standard != 0;
        bc.run_idaq = config->run_idaq != 0;
        bc.source = config->source >= 0 ? static_cast<mowsp::NodeId>(config->source) : 0;
        bc.seed = config->seed;

        const mowsp::BenchReport report = mowsp::run_bench(bc);
        if (csv_path) mowsp::write_text_file(csv_path, report.to_csv());
        if (summary_json_out) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& cell : report.summary()) {
                cells.push_back({{"regime", cell.regime},
                                 {"k", cell.k},
                                 {"median_standard_ms", cell.median_standard_ms},
                                 {"median_idaq_ms", cell.median_idaq_ms},
                                 {"speedup", cell.speedup},
                                 {"mean_developed_ratio", cell.mean_developed_ratio}});
            }
            nlohmann::json j{{"cells", std::move(cells)}, {"rows", report.rows.size()}};
            *summary_json_out = alloc_string(j.dump(1) + "\n");
        }
        return MOWSP_OK;
    });
}

}  // extern "C"
