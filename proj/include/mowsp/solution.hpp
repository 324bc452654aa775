#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "mowsp/core.hpp"

namespace mowsp {

// Operation counters shared by both solvers. developed = paths popped from a
// priority structure, scanned = one-edge extensions of developed paths.
struct SolverStats {
    std::uint64_t developed_paths = 0;
    std::uint64_t scanned_paths = 0;
    std::uint64_t cost_evaluations = 0;
    std::uint64_t heap_ops = 0;
    double wall_ms = 0.0;

    // IDAQ only: per-iteration breakdown and Is-Relevant branch counters.
    std::vector<std::uint64_t> developed_per_iteration;
    std::vector<std::uint64_t> scanned_per_iteration;
    std::uint64_t dominance_branch_checks = 0;
    std::uint64_t optimality_branch_checks = 0;
};

// Per-lambda, per-node optimal cost and one witness path. Paths live in a
// shared pool and are materialized to node lists only on demand.
class SolveResult {
public:
    SolveResult(int k, std::size_t node_count, NodeId source,
                std::shared_ptr<const PathPool> pool)
        : k_(k),
          node_count_(node_count),
          source_(source),
          pool_(std::move(pool)),
          costs_(std::size_t(k) * node_count, std::numeric_limits<double>::quiet_NaN()),
          paths_(std::size_t(k) * node_count, kInvalidIndex) {}

    int k() const noexcept { return k_; }
    std::size_t node_count() const noexcept { return node_count_; }
    NodeId source() const noexcept { return source_; }

    void set_entry(int i, NodeId v, double cost, PathId path) {
        costs_[idx(i, v)] = cost;
        paths_[idx(i, v)] = path;
    }

    bool has(int i, NodeId v) const { return !std::isnan(costs_[idx(i, v)]); }
    double cost(int i, NodeId v) const { return costs_[idx(i, v)]; }
    PathId path_id(int i, NodeId v) const { return paths_[idx(i, v)]; }

    std::vector<NodeId> path_nodes(int i, NodeId v) const {
        return pool_->node_list(paths_[idx(i, v)]);
    }
    std::span<const double> path_totals(int i, NodeId v) const {
        return pool_->totals(paths_[idx(i, v)]);
    }

    const PathPool& pool() const noexcept { return *pool_; }

    SolverStats stats;

private:
    std::size_t idx(int i, NodeId v) const { return std::size_t(i) * node_count_ + v; }

    int k_;
    std::size_t node_count_;
    NodeId source_;
    std::shared_ptr<const PathPool> pool_;
    std::vector<double> costs_;
    std::vector<PathId> paths_;
};

}  // namespace mowsp
