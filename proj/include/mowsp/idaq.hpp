#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include "mowsp/addressable_heap.hpp"
#include "mowsp/core.hpp"
#include "mowsp/solution.hpp"

namespace mowsp {

// Priority structure of the shared-information solver. Keeps per-node
// registries of pushed and popped paths plus an addressable min-heap holding,
// per node, the unique path whose priority is non-null under the current
// coefficient vector: the cheapest queued path, provided no queued path beats
// it, no earlier-pushed queued path ties it, and no popped path at the node
// has equal or lower cost. The heap entry is recomputed declaratively from
// that rule after every mutation that can change it.
class AdaptiveQueue {
public:
    AdaptiveQueue(const Mog& g, PathPool& pool, const LambdaSet& lambdas,
                  SolverStats* stats = nullptr);

    // Caller guarantees p was judged relevant (or is the seed path).
    void push(PathId p);

    struct Popped {
        PathId path;
        double key;
    };
    // Requires a non-empty heap. The popped path moves to the node's popped
    // registry; no replacement heap entry is created for the node.
    Popped pop();

    // True iff no path carries a non-null priority. Per-node registries may
    // still hold paths; those resurface on adapt.
    bool is_empty() const { return heap_.empty(); }

    // Optional O(1) representative source for adapt: returns the minimum-cost
    // queued candidate for (v, lambda_index) with its exact cost, or
    // usable = false to fall back to the scan. The per-lambda best registry
    // maintained by the relevance check is exactly this source.
    struct RepHint {
        PathId path = kInvalidIndex;
        double key = 0.0;
        bool usable = false;
    };
    using RepHintFn = RepHint (*)(void* ctx, NodeId v, int lambda_index);

    // Re-keys the structure for iteration i (1-based). Requires an empty heap
    // and 1 < i <= K.
    void adapt(int iteration_index, RepHintFn hint = nullptr, void* hint_ctx = nullptr);

    bool in_queue(PathId p) const { return p < in_queue_.size() && in_queue_[p] != 0; }

    int lambda_index() const { return lambda_index_; }
    int row_stride() const { return row_stride_; }
    const CoefficientVector& current_lambda() const { return (*lambdas_)[lambda_index_ - 1]; }

    std::span<const PathId> queue_paths(NodeId v) const { return regs_[v].queue; }
    std::span<const PathId> popped_paths(NodeId v) const { return regs_[v].popped; }
    std::size_t discovered_count(NodeId v) const {
        return regs_[v].queue.size() + regs_[v].popped.size();
    }

    // Removes the given queued paths at v (popped paths are never touched)
    // and recomputes v's heap representative.
    void remove_queue_paths(NodeId v, std::span<const PathId> to_remove);

    PathId heap_representative(NodeId v) const { return regs_[v].rep; }

    // Debug check: recomputes the representative from scratch and compares it
    // with the live heap state. Throws Errc::internal on mismatch.
    void check_representative_invariant(NodeId v) const;

    // Cost of p under the current lambda, memoized per iteration. Only call
    // this for paths registered at some node (registered paths are never
    // recycled, so the memo cannot go stale).
    double current_cost(PathId p) const;

    // Row of p's costs under every lambda, computed once and cached. The
    // pointer is invalidated by the next all_costs call.
    const double* all_costs(PathId p);
    // Computes the same row into caller storage without caching it.
    void costs_into(PathId p, double* out);
    // Caches a row computed through costs_into (for paths about to be kept).
    void commit_costs(PathId p, const double* row);
    // Releases p's cost row (required before recycling p's pool slot).
    void forget_costs(PathId p);

    // Flat per-node copies of the registered paths' objective totals and push
    // sequence numbers, kept parallel to queue_paths/popped_paths. Dominance
    // checks and adapt re-keying stream these instead of chasing pool rows.
    std::span<const double> queue_totals(NodeId v) const { return regs_[v].queue_totals; }
    std::span<const double> popped_totals(NodeId v) const { return regs_[v].popped_totals; }

private:
    struct NodeReg {
        std::vector<PathId> queue;   // membership; push order lives in queue_seq
        std::vector<PathId> popped;  // pop order
        std::vector<double> queue_totals;   // w per queued path
        std::vector<double> popped_totals;  // w per popped path
        std::vector<std::uint64_t> queue_seq;
        HeapHandle handle;  // heap entry for rep, if any
        PathId rep = kInvalidIndex;
        double min_popped_cost = 0.0;  // under current lambda, valid iff stamp matches
        std::uint32_t stamp = 0;
    };

    void erase_queue_entry(NodeReg& reg, std::size_t index);
    double min_popped_cost(NodeId v);
    void recompute_representative(NodeId v);
    double queued_minimum(const NodeReg& reg, PathId& best_out);

    const Mog* graph_;
    PathPool* pool_;
    const LambdaSet* lambdas_;
    SolverStats* stats_;
    AddressableHeap<PathId> heap_;
    std::vector<NodeReg> regs_;
    int k_;
    int w_;
    int row_stride_;
    int lambda_index_ = 1;
    std::uint32_t stamp_ = 1;
    std::uint64_t next_push_seq_ = 0;
    std::vector<double> lambda_cols_;  // W x K column-major

    // per-path all-lambda cost rows (arena; rejected scans free their
    // always-trailing row) plus a current-lambda memo for uncached paths
    std::vector<std::uint32_t> cost_slot_;
    std::vector<double> cost_rows_;
    std::size_t rows_used_ = 0;
    mutable std::vector<double> cost_memo_;
    mutable std::vector<std::uint32_t> cost_memo_stamp_;
    std::vector<std::uint8_t> in_queue_;
};

struct IdaqOptions {
    // Runs the slow per-mutation invariant checks (heap representative,
    // once-per-node-per-iteration, duplicate developed paths, popped paths
    // never dominated by a scan). Violations throw Errc::internal.
    bool check_invariants = false;
    // Records the developed-path trace for external audits.
    bool record_trace = false;
};

struct DevelopedRecord {
    int iteration;  // 1-based
    NodeId node;
    double key;  // cost under the iteration's lambda at pop time
    PathId path;
};

struct IdaqTrace {
    std::vector<DevelopedRecord> developed;
    std::vector<PathId> pareto_sample;  // per node, kInvalidIndex when unreachable
    std::shared_ptr<const PathPool> pool;
};

// Whole-run state of one solver execution: the shared path pool, the adaptive
// queue, the initial-pass dominance filter, the developed-path list and the
// per-node lambda-optimum registry used by the relevance check's optimality
// branch. Exposed so the queue operations and the relevance rules can be
// driven directly; solve_idaq wires them into the main loop.
class IdaqState {
public:
    IdaqState(const Mog& g, NodeId source, const LambdaSet& lambdas,
              const IdaqOptions& options = {});

    const Mog& graph() const { return *graph_; }
    PathPool& pool() { return *pool_; }
    AdaptiveQueue& queue() { return queue_; }
    SolverStats& stats() { return stats_; }
    NodeId source() const { return source_; }

    // lambda_1 shortest-path tree materialized as one path record per
    // reachable node. Only raw work counters (cost evaluations, heap ops)
    // carry over into stats; developed/scanned count queue events only.
    void init_pareto_sample();
    std::span<const PathId> pareto_sample() const { return pareto_sample_; }

    // Strict-dominance filter against pareto_sample at p's end node.
    bool pareto_filter_rejects(PathId p) const;

    // The relevance check. Dominance branch when the node's discovered-path
    // count is below K/W: reject iff some discovered path weakly dominates p,
    // else drop queued paths p strictly dominates. Optimality branch
    // otherwise: lazily build the per-lambda best registry, accept iff p
    // strictly improves some lambda, then drop queued paths no longer
    // referenced by any best slot.
    bool is_relevant(PathId p);

    // Registers a popped path (and runs invariant checks when enabled).
    void develop(PathId p, double key, int iteration);
    std::span<const PathId> optimal_paths() const { return optimal_paths_; }

    // queue().adapt with the best registry as the O(1) representative source.
    void adapt(int iteration_index);

    // Minimum-cost developed path per (lambda, node), ties to earliest pop.
    SolveResult build_sets();

    // Cached K-vector of costs for p (the optimality branch's working set).
    // The pointer is invalidated by the next cached_costs call.
    const double* cached_costs(PathId p);
    // Drops p's cache entry; required before truncating p out of the pool.
    void forget(PathId p);

    bool best_initialized(NodeId v) const { return best_[v] != nullptr; }
    PathId best_path(NodeId v, int i) const { return best_[v]->path[i]; }

    const IdaqOptions& options() const { return options_; }
    void take_trace(IdaqTrace& trace);

    // Debug assertion backing the "optimal implies Pareto non-dominated"
    // lemma: a scan must never strictly dominate a developed path.
    void check_scan_not_dominating_popped(PathId p) const;

private:
    struct BestEntry {
        std::vector<PathId> path;
        std::vector<double> cost;
        // reject_scale[j] = min_i lambda_i[j] / cost[i]; dot(reject_scale, t)
        // >= 1 certifies that t beats no slot
        std::vector<double> reject_scale;
    };
    void ensure_best(NodeId v);
    void refresh_reject_bound(BestEntry& be);

    const Mog* graph_;
    NodeId source_;
    const LambdaSet* lambdas_;
    IdaqOptions options_;
    int k_;
    int w_;
    double k_over_w_;
    std::shared_ptr<PathPool> pool_;
    SolverStats stats_;
    AdaptiveQueue queue_;

    std::vector<PathId> pareto_sample_;
    std::vector<PathId> optimal_paths_;
    std::vector<std::unique_ptr<BestEntry>> best_;
    std::vector<double> lambda_cols_;  // W x K column-major
    std::vector<double> cost_scratch_;
    std::vector<PathId> removal_scratch_;
    std::vector<PathId> referenced_scratch_;

    std::vector<std::uint32_t> developed_in_iteration_;
    std::unordered_set<std::string> developed_signatures_;
    std::vector<DevelopedRecord> trace_developed_;
};

// Shared-information iterative solver: one initial lambda_1 Dijkstra pass
// seeds the per-node dominance filter, then a single adaptive-queue search
// serves all K iterations, re-keying between them.
SolveResult solve_idaq(const Mog& g, NodeId s, const LambdaSet& lambdas,
                       const IdaqOptions& options = {}, IdaqTrace* trace = nullptr);

}  // namespace mowsp
