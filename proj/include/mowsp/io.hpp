#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mowsp/core.hpp"
#include "mowsp/solution.hpp"

namespace mowsp {

// -- graph files --------------------------------------------------------------
// Text format, one record per line:
//   mowsp-graph 1 <|V|> <|E|> <W> [coords] [tags]
//   n <id> <x> <y>                    (when coords)
//   e <from> <to> <w1> ... <wW> [tag-bits]
// Numbers are written as shortest round-trip decimals, so read(write(g))
// reproduces g bit-exactly.

std::string graph_to_text(const Mog& g);
Mog graph_from_text(const std::string& text, const std::string& origin = "<memory>");
Mog read_graph(const std::string& path);
void write_graph(const Mog& g, const std::string& path);

// -- lambda files -------------------------------------------------------------
//   mowsp-lambda 1 <K> <W>
//   <K lines of W strictly positive decimals>

std::string lambdas_to_text(const LambdaSet& lambdas);
LambdaSet lambdas_from_text(const std::string& text, const std::string& origin = "<memory>");
LambdaSet read_lambdas(const std::string& path);
void write_lambdas(const LambdaSet& lambdas, const std::string& path);

// Content hash of the canonical graph + lambda serialization. Stored inside
// solution files so verification cannot silently cross instances.
std::string instance_digest(const Mog& g, const LambdaSet& lambdas);

// -- solution files (JSON) -----------------------------------------------------

struct SolutionEntry {
    NodeId node = 0;
    double cost = 0.0;
    std::vector<double> totals;                     // accumulated W-dim objectives
    std::optional<std::vector<NodeId>> path_nodes;  // node list when included
};

struct SolutionDocument {
    std::string digest;
    std::string algorithm;
    NodeId source = 0;
    int k = 0;
    int w = 0;
    std::vector<std::vector<double>> lambdas;     // K x W
    std::vector<std::vector<SolutionEntry>> per_lambda;  // K lists, node-ascending
    SolverStats stats;
};

SolutionDocument make_solution_document(const Mog& g, const LambdaSet& lambdas, NodeId source,
                                        const SolveResult& result, const std::string& algorithm,
                                        bool include_paths = true);

std::string solution_to_json(const SolutionDocument& doc);
SolutionDocument solution_from_json(const std::string& text,
                                    const std::string& origin = "<memory>");
SolutionDocument read_solution(const std::string& path);
void write_solution(const SolutionDocument& doc, const std::string& path);

// -- verification --------------------------------------------------------------

struct VerifyReport {
    bool pass = false;
    std::string detail;  // first divergence when failing
};

// PASS iff per-(lambda, node) cost sets agree within the relative tolerance
// and every entry's stated cost matches lambda_i . totals within 1e-9
// relative. Digest or K mismatch is an input error, not a FAIL.
VerifyReport verify_solutions(const SolutionDocument& a, const SolutionDocument& b,
                              double tolerance = 1e-9);

// -- GeoJSON -------------------------------------------------------------------

// One LineString feature per (lambda, target) with lambda_index/cost/target
// properties. Unreachable targets and entries without stored paths are
// skipped with a warning.
std::string export_geojson(const Mog& g, const SolutionDocument& sol,
                           std::span<const NodeId> targets,
                           std::vector<std::string>* warnings = nullptr);

// -- helpers -------------------------------------------------------------------

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string format_double(double value);  // shortest round-trip decimal

}  // namespace mowsp
