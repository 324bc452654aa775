/* C interface to the multi-objective shortest-path toolkit.
 *
 * All functions return a mowsp_status; MOWSP_OK means success. On failure a
 * thread-local message is available through mowsp_last_error(). Objects are
 * opaque handles released with their matching *_free function. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with mowsp_string_free().
 */
#ifndef MOWSP_H
#define MOWSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MOWSP_API __declspec(dllexport)
#else
#define MOWSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mowsp_status {
    MOWSP_OK = 0,
    MOWSP_ERR_INVALID_ARGUMENT = 1,
    MOWSP_ERR_LOGIC = 2,
    MOWSP_ERR_STATE = 3,
    MOWSP_ERR_PARSE = 4,
    MOWSP_ERR_FORMAT = 5,
    MOWSP_ERR_RESOURCE = 6,
    MOWSP_ERR_IO = 7,
    MOWSP_ERR_GENERATION = 8,
    MOWSP_ERR_VERIFICATION = 9,
    MOWSP_ERR_INTERNAL = 10
} mowsp_status;

typedef enum mowsp_algorithm {
    MOWSP_ALGO_STANDARD = 0,
    MOWSP_ALGO_IDAQ = 1,
    MOWSP_ALGO_ORACLE = 2
} mowsp_algorithm;

/* edge tag bits for the geo-objective synthesizer */
#define MOWSP_TAG_BICYCLE_ROAD 0x01u
#define MOWSP_TAG_NEAR_HIGHWAY 0x02u
#define MOWSP_TAG_NEAR_BUILDINGS 0x04u

typedef struct mowsp_graph mowsp_graph;
typedef struct mowsp_lambdas mowsp_lambdas;
typedef struct mowsp_solutions mowsp_solutions;

MOWSP_API const char* mowsp_status_name(mowsp_status status);
MOWSP_API const char* mowsp_last_error(void);
MOWSP_API void mowsp_string_free(char* s);

/* ---- graphs ---- */

MOWSP_API mowsp_status mowsp_graph_create(int64_t node_count, int32_t objective_count,
                                          mowsp_graph** out);
MOWSP_API void mowsp_graph_free(mowsp_graph* g);

/* objectives must hold exactly objective_count values; tags < 0 means
 * "no tags on this edge". A graph where every edge carries tags reports
 * has_tags and round-trips them through graph files. */
MOWSP_API mowsp_status mowsp_graph_add_edge(mowsp_graph* g, int64_t from, int64_t to,
                                            const double* objectives, int32_t objective_count,
                                            int32_t tags);
MOWSP_API mowsp_status mowsp_graph_set_coord(mowsp_graph* g, int64_t node, double x, double y);

MOWSP_API int64_t mowsp_graph_node_count(const mowsp_graph* g);
MOWSP_API int64_t mowsp_graph_edge_count(const mowsp_graph* g);
MOWSP_API int32_t mowsp_graph_objective_count(const mowsp_graph* g);

/* report_out (optional) receives one line per finding, errors first */
MOWSP_API mowsp_status mowsp_graph_validate(const mowsp_graph* g, char** report_out,
                                            int32_t* error_count, int32_t* warning_count);

MOWSP_API mowsp_status mowsp_graph_read(const char* path, mowsp_graph** out);
MOWSP_API mowsp_status mowsp_graph_write(const mowsp_graph* g, const char* path);

/* ---- generators ---- */

typedef struct mowsp_waxman_params {
    double x0, x1, y0, y1;
    double intensity; /* expected points per unit area */
    double alpha;
    double beta;
    uint64_t seed;
    int32_t keep_largest_scc;
} mowsp_waxman_params;

/* fills the experiment-family defaults (domain [0,1]x[0,0.1], tuned density) */
MOWSP_API void mowsp_waxman_params_init(mowsp_waxman_params* params);
MOWSP_API mowsp_status mowsp_gen_waxman(const mowsp_waxman_params* params, mowsp_graph** out);
MOWSP_API mowsp_status mowsp_assign_random_objectives(const mowsp_graph* g,
                                                      int32_t objective_count, uint64_t seed,
                                                      mowsp_graph** out);
MOWSP_API mowsp_status mowsp_synth_geo_objectives(const mowsp_graph* g, mowsp_graph** out);

/* ---- coefficient vectors ---- */

MOWSP_API mowsp_status mowsp_lambdas_create(const double* values /* k*w row-major */, int32_t k,
                                            int32_t w, mowsp_lambdas** out);
MOWSP_API mowsp_status mowsp_gen_lambdas(double low, double high, int32_t k, int32_t w,
                                         uint64_t seed, mowsp_lambdas** out);
MOWSP_API void mowsp_lambdas_free(mowsp_lambdas* l);
MOWSP_API int32_t mowsp_lambdas_k(const mowsp_lambdas* l);
MOWSP_API int32_t mowsp_lambdas_w(const mowsp_lambdas* l);
MOWSP_API mowsp_status mowsp_lambdas_get(const mowsp_lambdas* l, int32_t index,
                                         double* values_out /* w values */);
MOWSP_API mowsp_status mowsp_lambdas_read(const char* path, mowsp_lambdas** out);
MOWSP_API mowsp_status mowsp_lambdas_write(const mowsp_lambdas* l, const char* path);

/* ---- solving ---- */

typedef struct mowsp_stats {
    uint64_t developed;
    uint64_t scanned;
    uint64_t cost_evaluations;
    uint64_t heap_ops;
    double wall_ms;
} mowsp_stats;

MOWSP_API mowsp_status mowsp_solve(const mowsp_graph* g, int64_t source,
                                   const mowsp_lambdas* lambdas, mowsp_algorithm algorithm,
                                   mowsp_solutions** out);

MOWSP_API void mowsp_solutions_free(mowsp_solutions* s);
MOWSP_API int32_t mowsp_solutions_k(const mowsp_solutions* s);
MOWSP_API mowsp_status mowsp_solutions_stats(const mowsp_solutions* s, mowsp_stats* out);

/* cost of the (lambda_index, node) optimum; MOWSP_ERR_STATE when the node is
 * unreachable. lambda_index is 1-based, matching solution files. */
MOWSP_API mowsp_status mowsp_solutions_cost(const mowsp_solutions* s, int32_t lambda_index,
                                            int64_t node, double* cost_out);
/* two-call pattern: pass NULL buffer to query the length */
MOWSP_API mowsp_status mowsp_solutions_path(const mowsp_solutions* s, int32_t lambda_index,
                                            int64_t node, int64_t* nodes_out, size_t capacity,
                                            size_t* length_out);

MOWSP_API mowsp_status mowsp_solutions_read(const char* path, mowsp_solutions** out);
MOWSP_API mowsp_status mowsp_solutions_write(const mowsp_solutions* s, const char* path);

/* MOWSP_OK on agreement, MOWSP_ERR_VERIFICATION on divergence (detail_out
 * explains the first one), other codes on unusable input. */
MOWSP_API mowsp_status mowsp_verify(const mowsp_solutions* a, const mowsp_solutions* b,
                                    double tolerance, char** detail_out);

/* ---- exports and diagnostics ---- */

MOWSP_API mowsp_status mowsp_export_geojson(const mowsp_graph* g, const mowsp_solutions* s,
                                            const int64_t* targets, size_t target_count,
                                            char** geojson_out, char** warnings_out);

/* label_cap 0 = default (1e6); with_n_l enables the quadratic count */
MOWSP_API mowsp_status mowsp_diagnostics(const mowsp_graph* g, int64_t source,
                                         uint64_t label_cap, int32_t with_n_l, char** json_out);

/* ---- benchmark harness ---- */

typedef struct mowsp_bench_config {
    int32_t instance_count;
    mowsp_waxman_params waxman;
    int32_t objective_count;
    const int32_t* k_values;
    int32_t k_value_count;
    const double* regime_lows;
    const double* regime_highs;
    int32_t regime_count;
    int32_t repetitions;
    int32_t run_standard;
    int32_t run_idaq;
    int64_t source;
    uint64_t seed;
} mowsp_bench_config;

MOWSP_API void mowsp_bench_config_init(mowsp_bench_config* config);

/* writes the per-run CSV to csv_path (unless NULL) and returns a JSON summary
 * with per-(regime, K) median times, speedups and developed-path ratios */
MOWSP_API mowsp_status mowsp_bench_run(const mowsp_bench_config* config, const char* csv_path,
                                       char** summary_json_out);

#ifdef __cplusplus
}
#endif

#endif /* MOWSP_H */
