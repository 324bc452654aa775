#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mowsp/errors.hpp"

namespace mowsp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using PathId = std::uint32_t;

inline constexpr std::uint32_t kInvalidIndex = std::numeric_limits<std::uint32_t>::max();

// Boolean road attributes consumed by the geo-objective synthesizer.
inline constexpr std::uint8_t kTagBicycleRoad = 1u << 0;
inline constexpr std::uint8_t kTagNearHighway = 1u << 1;
inline constexpr std::uint8_t kTagNearBuildings = 1u << 2;

struct Coord {
    double x = 0.0;
    double y = 0.0;
};

// One directed edge carrying W non-negative additive objective values.
struct EdgeRecord {
    NodeId from = 0;
    NodeId to = 0;
    std::vector<double> objectives;
    std::uint8_t tags = 0;
};

// Raw graph aggregate, validated before it becomes a Mog.
struct MogData {
    std::size_t node_count = 0;
    int objective_count = 0;  // W
    std::vector<EdgeRecord> edges;
    std::vector<Coord> coords;  // empty, or one per node
    bool has_tags = false;      // every edge carries the three boolean tags
};

struct ValidationIssue {
    bool is_error = true;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const {
        for (const auto& issue : issues)
            if (issue.is_error) return false;
        return true;
    }
    std::size_t error_count() const {
        std::size_t n = 0;
        for (const auto& issue : issues) n += issue.is_error ? 1 : 0;
        return n;
    }
    std::size_t warning_count() const { return issues.size() - error_count(); }
};

// Structural checks on a raw graph. Hard errors: endpoint out of range,
// objective dimension mismatch, negative or non-finite objectives, coords of
// the wrong length. All-zero objective vectors are reported as warnings only
// (they are legal but create zero-cost cycles).
ValidationReport validate_mog(const MogData& data);

// Directed multi-objective graph. Immutable after construction; objective
// values are stored W-strided for cache-friendly scans and a CSR adjacency
// index is built once up front.
class Mog {
public:
    explicit Mog(MogData data);

    std::size_t node_count() const noexcept { return data_.node_count; }
    std::size_t edge_count() const noexcept { return data_.edges.size(); }
    int objective_count() const noexcept { return data_.objective_count; }

    bool has_coords() const noexcept { return !data_.coords.empty(); }
    bool has_tags() const noexcept { return data_.has_tags; }
    Coord coord(NodeId v) const { return data_.coords[v]; }

    NodeId edge_from(EdgeId e) const { return edge_from_[e]; }
    NodeId edge_to(EdgeId e) const { return edge_to_[e]; }
    std::uint8_t edge_tags(EdgeId e) const { return data_.edges[e].tags; }
    const EdgeRecord& edge(EdgeId e) const { return data_.edges[e]; }

    std::span<const double> edge_objectives(EdgeId e) const {
        return {flat_objectives_.data() + std::size_t(e) * data_.objective_count,
                std::size_t(data_.objective_count)};
    }
    const double* edge_objectives_ptr(EdgeId e) const {
        return flat_objectives_.data() + std::size_t(e) * data_.objective_count;
    }

    // Ids of edges leaving v, in insertion order.
    std::span<const EdgeId> out_edges(NodeId v) const {
        return {adj_edges_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
    }

    const MogData& data() const noexcept { return data_; }

private:
    MogData data_;
    std::vector<NodeId> edge_from_;  // flat copies of the endpoints: the scan
    std::vector<NodeId> edge_to_;    // loops never touch the fat records
    std::vector<double> flat_objectives_;
    std::vector<std::size_t> adj_offsets_;
    std::vector<EdgeId> adj_edges_;
};

// A W-vector of strictly positive weights turning objectives into a scalar cost.
class CoefficientVector {
public:
    explicit CoefficientVector(std::vector<double> coefficients);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

// Ordered list of K coefficient vectors sharing one W.
class LambdaSet {
public:
    explicit LambdaSet(std::vector<CoefficientVector> vectors);

    int k() const noexcept { return static_cast<int>(vectors_.size()); }
    int w() const noexcept { return vectors_.empty() ? 0 : vectors_.front().size(); }
    const CoefficientVector& operator[](int i) const { return vectors_[i]; }
    const std::vector<CoefficientVector>& vectors() const noexcept { return vectors_; }

private:
    std::vector<CoefficientVector> vectors_;
};

// -- cost and dominance operations ------------------------------------------

// Small fixed widths take unrolled paths; the switch predicts perfectly since
// W is constant per graph.
inline double dot_product(const double* a, const double* b, std::size_t w) {
    switch (w) {
        case 1: return a[0] * b[0];
        case 2: return a[0] * b[0] + a[1] * b[1];
        case 3: return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        case 4: return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
        case 5: return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3] + a[4] * b[4];
        default: {
            double sum = 0.0;
            for (std::size_t j = 0; j < w; ++j) sum += a[j] * b[j];
            return sum;
        }
    }
}

namespace detail {
template <int W>
inline void multi_dot_fixed(const double* totals, const double* matrix, int k, double* out) {
    for (int i = 0; i < k; ++i, matrix += W) {
        double sum = 0.0;
        for (int j = 0; j < W; ++j) sum += totals[j] * matrix[j];
        out[i] = sum;
    }
}
}  // namespace detail

// out[i] = dot(totals, matrix_row_i) for a k x w row-major matrix. Small
// fixed widths get fully unrolled kernels (the solver hot path).
inline void multi_dot(const double* totals, const double* matrix, int k, int w, double* out) {
    switch (w) {
        case 1: detail::multi_dot_fixed<1>(totals, matrix, k, out); return;
        case 2: detail::multi_dot_fixed<2>(totals, matrix, k, out); return;
        case 3: detail::multi_dot_fixed<3>(totals, matrix, k, out); return;
        case 4: detail::multi_dot_fixed<4>(totals, matrix, k, out); return;
        case 5: detail::multi_dot_fixed<5>(totals, matrix, k, out); return;
        default:
            for (int i = 0; i < k; ++i) out[i] = dot_product(totals, matrix + std::size_t(i) * w, w);
    }
}

// Same contract with the matrix stored column-major (w contiguous blocks of k
// coefficients). The inner loops run k-wide over contiguous memory, which is
// what the vectorizer wants; restrict qualifiers keep the aliasing checks out.
inline void multi_dot_cols(const double* __restrict__ totals, const double* __restrict__ cols,
                           int k, int w, double* __restrict__ out) {
    const double t0 = totals[0];
    for (int i = 0; i < k; ++i) out[i] = t0 * cols[i];
    for (int j = 1; j < w; ++j) {
        const double tj = totals[j];
        const double* __restrict__ col = cols + std::size_t(j) * k;
        for (int i = 0; i < k; ++i) out[i] += tj * col[i];
    }
}

// Dot product of a W-dimensional objective vector with coefficients. The
// span overload is the hot path shared by edges and accumulated path totals.
inline double weighted_cost(std::span<const double> objectives, const CoefficientVector& lam) {
    if (static_cast<int>(objectives.size()) != lam.size())
        throw_error(Errc::invalid_argument, "objective/coefficient dimension mismatch");
    return dot_product(objectives.data(), lam.values().data(), objectives.size());
}

double edge_cost(const EdgeRecord& e, const CoefficientVector& lam);

// Component-wise <= with at least one strict <.
inline bool dominates(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw_error(Errc::invalid_argument, "dominance check dimension mismatch");
    bool strict = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] > y[j]) return false;
        if (x[j] < y[j]) strict = true;
    }
    return strict;
}

// Component-wise <= (equality allowed everywhere).
inline bool weakly_dominates(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw_error(Errc::invalid_argument, "dominance check dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] > y[j]) return false;
    return true;
}

// -- persistent paths --------------------------------------------------------

// Append-only arena of persistent paths from a fixed source. Each record
// extends its parent by one edge and stores the accumulated W-dim objective
// totals, so costs are O(W) dot products and extension is O(W). Records are
// shared: many paths reuse one prefix chain.
class PathPool {
public:
    explicit PathPool(const Mog& graph);

    PathId make_seed(NodeId s);
    // Requires end_node(parent) == graph.edge_from(e); Errc::logic otherwise.
    PathId extend(PathId parent, EdgeId e);

    std::size_t size() const noexcept { return count_; }
    // Drops records with id >= new_size. Only safe for ids nothing refers to.
    void truncate(std::size_t new_size) { count_ = new_size; }

    NodeId end_node(PathId p) const { return records_[p].end_node; }
    PathId parent(PathId p) const { return records_[p].parent; }
    EdgeId via_edge(PathId p) const { return records_[p].via_edge; }
    std::uint32_t length(PathId p) const { return records_[p].length; }
    bool is_seed(PathId p) const { return records_[p].parent == kInvalidIndex; }

    std::span<const double> totals(PathId p) const {
        return {totals_.data() + std::size_t(p) * w_, std::size_t(w_)};
    }
    const double* totals_ptr(PathId p) const { return totals_.data() + std::size_t(p) * w_; }

    std::uint64_t push_seq(PathId p) const { return push_seq_[p]; }
    void set_push_seq(PathId p, std::uint64_t seq) { push_seq_[p] = seq; }

    // Walks parent handles; front of the result is the source node.
    std::vector<NodeId> node_list(PathId p) const;
    std::vector<EdgeId> edge_list(PathId p) const;

    const Mog& graph() const noexcept { return *graph_; }

private:
    struct Record {
        PathId parent;
        EdgeId via_edge;
        NodeId end_node;
        std::uint32_t length;
    };

    // storage is capacity-managed by hand: truncate is a counter reset and
    // extend never zero-fills
    PathId allocate();

    const Mog* graph_;
    int w_;
    std::size_t count_ = 0;
    std::vector<Record> records_;
    std::vector<double> totals_;
    std::vector<std::uint64_t> push_seq_;
};

double path_cost(const PathPool& pool, PathId p, const CoefficientVector& lam);

}  // namespace mowsp
