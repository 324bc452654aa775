#include "mowsp/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mowsp {

namespace {

bool all_zero(std::span<const double> values) {
    for (double v : values)
        if (v != 0.0) return false;
    return true;
}

}  // namespace

ValidationReport validate_mog(const MogData& data) {
    ValidationReport report;
    auto error = [&](std::string msg) { report.issues.push_back({true, std::move(msg)}); };
    auto warn = [&](std::string msg) { report.issues.push_back({false, std::move(msg)}); };

    if (data.node_count < 1) error("node_count must be >= 1");
    if (data.objective_count < 1) error("objective_count must be >= 1");
    if (!data.coords.empty() && data.coords.size() != data.node_count)
        error("coords must be empty or have one entry per node");

    for (std::size_t i = 0; i < data.edges.size(); ++i) {
        const EdgeRecord& e = data.edges[i];
        const std::string where = "edge " + std::to_string(i);
        if (e.from >= data.node_count || e.to >= data.node_count) {
            error(where + ": endpoint out of range");
            continue;
        }
        if (static_cast<int>(e.objectives.size()) != data.objective_count) {
            error(where + ": expected " + std::to_string(data.objective_count) +
                  " objectives, got " + std::to_string(e.objectives.size()));
            continue;
        }
        bool bad_value = false;
        for (double v : e.objectives) {
            if (!std::isfinite(v) || v < 0.0) {
                error(where + ": objectives must be finite and >= 0");
                bad_value = true;
                break;
            }
        }
        if (!bad_value && all_zero(e.objectives))
            warn(where + ": all-zero objective vector (zero-cost cycle hazard)");
    }
    return report;
}

Mog::Mog(MogData data) : data_(std::move(data)) {
    ValidationReport report = validate_mog(data_);
    if (!report.ok()) {
        std::string msg = "invalid graph:";
        for (const auto& issue : report.issues)
            if (issue.is_error) msg += " [" + issue.message + "]";
        throw_error(Errc::invalid_argument, msg);
    }

    const std::size_t w = static_cast<std::size_t>(data_.objective_count);
    flat_objectives_.resize(data_.edges.size() * w);
    edge_from_.resize(data_.edges.size());
    edge_to_.resize(data_.edges.size());
    for (std::size_t e = 0; e < data_.edges.size(); ++e) {
        edge_from_[e] = data_.edges[e].from;
        edge_to_[e] = data_.edges[e].to;
        for (std::size_t j = 0; j < w; ++j)
            flat_objectives_[e * w + j] = data_.edges[e].objectives[j];
    }

    adj_offsets_.assign(data_.node_count + 1, 0);
    for (const EdgeRecord& e : data_.edges) adj_offsets_[e.from + 1]++;
    for (std::size_t v = 0; v < data_.node_count; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
    adj_edges_.resize(data_.edges.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (EdgeId e = 0; e < data_.edges.size(); ++e)
        adj_edges_[cursor[data_.edges[e].from]++] = e;
}

CoefficientVector::CoefficientVector(std::vector<double> coefficients)
    : values_(std::move(coefficients)) {
    if (values_.empty())
        throw_error(Errc::invalid_argument, "coefficient vector must be non-empty");
    for (double v : values_)
        if (!std::isfinite(v) || v <= 0.0)
            throw_error(Errc::invalid_argument,
                        "coefficient vector entries must be finite and > 0");
}

LambdaSet::LambdaSet(std::vector<CoefficientVector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty())
        throw_error(Errc::invalid_argument, "lambda set must contain at least one vector");
    const int w = vectors_.front().size();
    for (const auto& lam : vectors_)
        if (lam.size() != w)
            throw_error(Errc::invalid_argument, "lambda set vectors must share one W");
}

double edge_cost(const EdgeRecord& e, const CoefficientVector& lam) {
    return weighted_cost(e.objectives, lam);
}

PathPool::PathPool(const Mog& graph) : graph_(&graph), w_(graph.objective_count()) {}

PathId PathPool::allocate() {
    if (count_ == records_.size()) {
        const std::size_t capacity = records_.empty() ? 64 : records_.size() * 2;
        records_.resize(capacity);
        totals_.resize(capacity * w_);
        push_seq_.resize(capacity);
    }
    return static_cast<PathId>(count_++);
}

PathId PathPool::make_seed(NodeId s) {
    if (s >= graph_->node_count())
        throw_error(Errc::invalid_argument, "seed node out of range");
    const PathId id = allocate();
    records_[id] = {kInvalidIndex, kInvalidIndex, s, 0};
    std::fill_n(totals_.data() + std::size_t(id) * w_, w_, 0.0);
    push_seq_[id] = 0;
    return id;
}

PathId PathPool::extend(PathId parent, EdgeId e) {
    if (graph_->edge_from(e) != records_[parent].end_node)
        throw_error(Errc::logic, "extend_path: edge does not start at the path's end node");
    const PathId id = allocate();
    const Record& pr = records_[parent];  // read after allocate: no realloc hazard
    records_[id] = {parent, e, graph_->edge_to(e), pr.length + 1};
    const double* we = graph_->edge_objectives_ptr(e);
    const double* pt = totals_.data() + std::size_t(parent) * w_;
    double* out = totals_.data() + std::size_t(id) * w_;
    switch (w_) {
        case 5: out[4] = pt[4] + we[4]; [[fallthrough]];
        case 4: out[3] = pt[3] + we[3]; [[fallthrough]];
        case 3: out[2] = pt[2] + we[2]; [[fallthrough]];
        case 2: out[1] = pt[1] + we[1]; [[fallthrough]];
        case 1: out[0] = pt[0] + we[0]; break;
        default:
            for (int j = 0; j < w_; ++j) out[j] = pt[j] + we[j];
    }
    push_seq_[id] = 0;
    return id;
}

std::vector<NodeId> PathPool::node_list(PathId p) const {
    std::vector<NodeId> nodes;
    nodes.resize(records_[p].length + 1);
    std::size_t i = nodes.size();
    for (PathId cur = p; cur != kInvalidIndex; cur = records_[cur].parent)
        nodes[--i] = records_[cur].end_node;
    return nodes;
}

std::vector<EdgeId> PathPool::edge_list(PathId p) const {
    std::vector<EdgeId> edges;
    edges.resize(records_[p].length);
    std::size_t i = edges.size();
    for (PathId cur = p; records_[cur].parent != kInvalidIndex; cur = records_[cur].parent)
        edges[--i] = records_[cur].via_edge;
    return edges;
}

double path_cost(const PathPool& pool, PathId p, const CoefficientVector& lam) {
    return weighted_cost(pool.totals(p), lam);
}

}  // namespace mowsp
