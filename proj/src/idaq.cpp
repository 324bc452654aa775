#include "mowsp/idaq.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <limits>
#include <string>

#include "mowsp/dijkstra.hpp"

namespace mowsp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

AdaptiveQueue::AdaptiveQueue(const Mog& g, PathPool& pool, const LambdaSet& lambdas,
                             SolverStats* stats)
    : graph_(&g),
      pool_(&pool),
      lambdas_(&lambdas),
      stats_(stats),
      regs_(g.node_count()),
      k_(lambdas.k()),
      w_(g.objective_count()),
      row_stride_((lambdas.k() + 7) & ~7) {  // cache-line aligned cost rows
    lambda_cols_.resize(std::size_t(row_stride_) * w_, 0.0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < w_; ++j) lambda_cols_[std::size_t(j) * row_stride_ + i] = lambdas[i][j];
}

void AdaptiveQueue::costs_into(PathId p, double* out) {
    multi_dot_cols(pool_->totals_ptr(p), lambda_cols_.data(), row_stride_, w_, out);
    if (stats_) stats_->cost_evaluations += k_;
}

const double* AdaptiveQueue::all_costs(PathId p) {
    if (cost_slot_.size() <= p) cost_slot_.resize(pool_->size(), kInvalidIndex);
    std::uint32_t slot = cost_slot_[p];
    if (slot == kInvalidIndex) {
        slot = static_cast<std::uint32_t>(rows_used_);
        cost_slot_[p] = slot;
        rows_used_ += row_stride_;
        if (cost_rows_.size() < rows_used_)
            cost_rows_.resize(std::max(rows_used_, cost_rows_.size() * 2));
        costs_into(p, cost_rows_.data() + slot);
    }
    return cost_rows_.data() + slot;
}

void AdaptiveQueue::commit_costs(PathId p, const double* row) {
    if (cost_slot_.size() <= p) cost_slot_.resize(pool_->size(), kInvalidIndex);
    if (cost_slot_[p] != kInvalidIndex) return;
    const auto slot = static_cast<std::uint32_t>(rows_used_);
    cost_slot_[p] = slot;
    rows_used_ += row_stride_;
    if (cost_rows_.size() < rows_used_)
        cost_rows_.resize(std::max(rows_used_, cost_rows_.size() * 2));
    std::copy_n(row, k_, cost_rows_.data() + slot);
}

void AdaptiveQueue::forget_costs(PathId p) {
    if (p < cost_slot_.size() && cost_slot_[p] != kInvalidIndex) {
        if (cost_slot_[p] + std::size_t(row_stride_) == rows_used_) rows_used_ = cost_slot_[p];
        cost_slot_[p] = kInvalidIndex;
    }
}

double AdaptiveQueue::current_cost(PathId p) const {
    if (p < cost_slot_.size() && cost_slot_[p] != kInvalidIndex)
        return cost_rows_[cost_slot_[p] + lambda_index_ - 1];
    if (cost_memo_stamp_.size() <= p) {
        cost_memo_stamp_.resize(pool_->size(), 0);
        cost_memo_.resize(pool_->size());
    }
    if (cost_memo_stamp_[p] == stamp_) return cost_memo_[p];
    if (stats_) ++stats_->cost_evaluations;
    const double c = dot_product(pool_->totals_ptr(p), current_lambda().values().data(),
                                 std::size_t(w_));
    cost_memo_[p] = c;
    cost_memo_stamp_[p] = stamp_;
    return c;
}

// Hot path of recompute/adapt: one streaming pass over the node's flat
// totals copies.
double AdaptiveQueue::queued_minimum(const NodeReg& reg, PathId& best_out) {
    const double* lam_data = current_lambda().values().data();
    const std::size_t w = std::size_t(w_);
    std::size_t best_index = SIZE_MAX;
    double best_cost = 0.0;
    const double* t = reg.queue_totals.data();
    for (std::size_t i = 0; i < reg.queue.size(); ++i, t += w) {
        const double c = dot_product(t, lam_data, w);
        if (best_index == SIZE_MAX || c < best_cost ||
            (c == best_cost && reg.queue_seq[i] < reg.queue_seq[best_index])) {
            best_index = i;
            best_cost = c;
        }
    }
    if (stats_) stats_->cost_evaluations += reg.queue.size();
    best_out = best_index == SIZE_MAX ? kInvalidIndex : reg.queue[best_index];
    return best_cost;
}

double AdaptiveQueue::min_popped_cost(NodeId v) {
    NodeReg& reg = regs_[v];
    if (reg.stamp != stamp_) {
        const double* lam_data = current_lambda().values().data();
        double m = kInf;
        const double* t = reg.popped_totals.data();
        for (std::size_t i = 0; i < reg.popped.size(); ++i, t += w_)
            m = std::min(m, dot_product(t, lam_data, std::size_t(w_)));
        if (stats_) stats_->cost_evaluations += reg.popped.size();
        reg.min_popped_cost = m;
        reg.stamp = stamp_;
    }
    return reg.min_popped_cost;
}

void AdaptiveQueue::recompute_representative(NodeId v) {
    NodeReg& reg = regs_[v];
    PathId best = kInvalidIndex;
    const double best_cost = queued_minimum(reg, best);
    // a popped path with equal or lower cost nulls every queued path at v
    if (best != kInvalidIndex && !reg.popped.empty() && min_popped_cost(v) <= best_cost)
        best = kInvalidIndex;

    if (reg.rep == best) return;  // same path under the same lambda: key unchanged
    if (reg.handle.valid()) {
        heap_.erase(reg.handle);
        if (stats_) ++stats_->heap_ops;
        reg.handle = {};
    }
    reg.rep = best;
    if (best != kInvalidIndex) {
        reg.handle = heap_.insert(best_cost, best);
        if (stats_) ++stats_->heap_ops;
    }
}

void AdaptiveQueue::erase_queue_entry(NodeReg& reg, std::size_t index) {
    in_queue_[reg.queue[index]] = 0;
    const std::size_t last = reg.queue.size() - 1;
    reg.queue[index] = reg.queue[last];
    reg.queue_seq[index] = reg.queue_seq[last];
    std::copy_n(reg.queue_totals.data() + last * w_, w_,
                reg.queue_totals.data() + index * w_);
    reg.queue.pop_back();
    reg.queue_seq.pop_back();
    reg.queue_totals.resize(reg.queue_totals.size() - w_);
}

void AdaptiveQueue::push(PathId p) {
    const NodeId v = pool_->end_node(p);
    pool_->set_push_seq(p, next_push_seq_);
    NodeReg& reg = regs_[v];
    const bool was_empty = reg.queue.empty();
    if (reg.queue.capacity() == 0) {
        reg.queue.reserve(8);
        reg.queue_seq.reserve(8);
        reg.queue_totals.reserve(std::size_t(8) * w_);
    }
    if (in_queue_.size() < pool_->size()) in_queue_.resize(pool_->size(), 0);
    in_queue_[p] = 1;
    const double* pt = pool_->totals_ptr(p);
    reg.queue.push_back(p);
    reg.queue_seq.push_back(next_push_seq_++);
    reg.queue_totals.insert(reg.queue_totals.end(), pt, pt + w_);

    // Incremental form of the priority rule; outcome matches the declarative
    // recomputation (debug builds verify this after every mutation).
    const double c = current_cost(p);
    if (reg.rep != kInvalidIndex) {
        // an existing representative already beats (or FIFO-ties) everything;
        // p gets an entry only by strictly undercutting it
        if (c >= heap_.key_of(reg.handle)) return;
        heap_.erase(reg.handle);
        if (stats_) ++stats_->heap_ops;
    } else if (!was_empty || !reg.popped.empty()) {
        // no entry means the popped minimum shadows every queued path; p joins
        // the heap only below that minimum
        if (c >= min_popped_cost(v)) return;
    }
    reg.rep = p;
    reg.handle = heap_.insert(c, p);
    if (stats_) ++stats_->heap_ops;
}

AdaptiveQueue::Popped AdaptiveQueue::pop() {
    if (heap_.empty()) throw_error(Errc::state, "pop on empty adaptive queue");
    const auto entry = heap_.pop_min();
    if (stats_) ++stats_->heap_ops;
    const PathId p = entry.item;
    const NodeId v = pool_->end_node(p);
    NodeReg& reg = regs_[v];

    const auto it = std::find(reg.queue.begin(), reg.queue.end(), p);
    const std::size_t index = std::size_t(it - reg.queue.begin());
    reg.popped.push_back(p);
    reg.popped_totals.insert(reg.popped_totals.end(),
                             reg.queue_totals.data() + index * w_,
                             reg.queue_totals.data() + (index + 1) * w_);
    erase_queue_entry(reg, index);
    reg.rep = kInvalidIndex;
    reg.handle = {};
    // the new pop is strictly cheaper than every earlier pop at v under the
    // current lambda (otherwise its priority would have been null)
    reg.min_popped_cost = entry.key;
    reg.stamp = stamp_;
    return {p, entry.key};
}

void AdaptiveQueue::adapt(int iteration_index, RepHintFn hint, void* hint_ctx) {
    if (!heap_.empty())
        throw_error(Errc::logic, "adapt requires an empty priority heap");
    if (iteration_index <= 1 || iteration_index > lambdas_->k())
        throw_error(Errc::logic, "adapt iteration index out of range");
    lambda_index_ = iteration_index;
    ++stamp_;
    for (NodeId v = 0; v < regs_.size(); ++v) {
        NodeReg& reg = regs_[v];
        reg.rep = kInvalidIndex;
        reg.handle = {};
        if (reg.queue.empty()) continue;
        if (hint) {
            const RepHint h = hint(hint_ctx, v, iteration_index);
            if (h.usable) {
                // the hinted path is the cheapest queued candidate; it enters
                // the heap unless a popped path matches or beats it
                if (h.path == kInvalidIndex || !in_queue(h.path)) continue;
                if (!reg.popped.empty() && min_popped_cost(v) <= h.key) continue;
                reg.rep = h.path;
                reg.handle = heap_.insert(h.key, h.path);
                if (stats_) ++stats_->heap_ops;
                continue;
            }
        }
        recompute_representative(v);
    }
}

void AdaptiveQueue::remove_queue_paths(NodeId v, std::span<const PathId> to_remove) {
    NodeReg& reg = regs_[v];
    for (PathId p : to_remove) {
        auto it = std::find(reg.queue.begin(), reg.queue.end(), p);
        if (it == reg.queue.end())
            throw_error(Errc::logic, "removal of a path that is not queued at this node");
        erase_queue_entry(reg, std::size_t(it - reg.queue.begin()));
    }
    recompute_representative(v);
}

void AdaptiveQueue::check_representative_invariant(NodeId v) const {
    const NodeReg& reg = regs_[v];
    const CoefficientVector& lam = current_lambda();
    PathId best = kInvalidIndex;
    double best_cost = 0.0;
    for (PathId b : reg.queue) {
        const double c = weighted_cost(pool_->totals(b), lam);
        if (best == kInvalidIndex || c < best_cost ||
            (c == best_cost && pool_->push_seq(b) < pool_->push_seq(best))) {
            best = b;
            best_cost = c;
        }
    }
    if (best != kInvalidIndex) {
        double mp = kInf;
        for (PathId b : reg.popped) mp = std::min(mp, weighted_cost(pool_->totals(b), lam));
        if (mp <= best_cost) best = kInvalidIndex;
    }

    bool ok = reg.rep == best;
    if (ok && best != kInvalidIndex)
        ok = reg.handle.valid() && heap_.key_of(reg.handle) == best_cost &&
             heap_.item_of(reg.handle) == best;
    else if (ok)
        ok = !reg.handle.valid();
    if (!ok)
        throw_error(Errc::internal,
                    "adaptive queue representative invariant violated at node " +
                        std::to_string(v));
}

IdaqState::IdaqState(const Mog& g, NodeId source, const LambdaSet& lambdas,
                     const IdaqOptions& options)
    : graph_(&g),
      source_(source),
      lambdas_(&lambdas),
      options_(options),
      k_(lambdas.k()),
      w_(g.objective_count()),
      k_over_w_(double(lambdas.k()) / double(g.objective_count())),
      pool_(std::make_shared<PathPool>(g)),
      queue_(g, *pool_, lambdas, &stats_),
      best_(g.node_count()) {
    if (source >= g.node_count())
        throw_error(Errc::invalid_argument, "source node out of range");
    if (lambdas.w() != g.objective_count())
        throw_error(Errc::invalid_argument, "lambda set W does not match graph");
    stats_.developed_per_iteration.assign(k_, 0);
    stats_.scanned_per_iteration.assign(k_, 0);
    lambda_cols_.resize(std::size_t(k_) * w_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < w_; ++j) lambda_cols_[std::size_t(j) * k_ + i] = lambdas[i][j];
    cost_scratch_.resize(queue_.row_stride());
    if (options_.check_invariants) developed_in_iteration_.assign(g.node_count(), 0);
}

void IdaqState::init_pareto_sample() {
    SolverStats dijkstra_stats;
    const ShortestPathTree tree = shortest_path_tree(*graph_, source_, (*lambdas_)[0],
                                                     &dijkstra_stats);
    stats_.cost_evaluations += dijkstra_stats.cost_evaluations;
    stats_.heap_ops += dijkstra_stats.heap_ops;

    pareto_sample_.assign(graph_->node_count(), kInvalidIndex);
    for (NodeId v : tree.settle_order) {
        if (v == source_)
            pareto_sample_[v] = pool_->make_seed(v);
        else
            pareto_sample_[v] =
                pool_->extend(pareto_sample_[tree.parent_node[v]], tree.parent_edge[v]);
    }
}

namespace {

// raw-pointer dominance kernels for the scan loop
inline bool strict_dom_raw(const double* x, const double* y, int w) {
    bool strict = false;
    for (int j = 0; j < w; ++j) {
        if (x[j] > y[j]) return false;
        if (x[j] < y[j]) strict = true;
    }
    return strict;
}

// branchless sweep over a node's flat member totals: true if some member
// weakly dominates t. Comparisons stay predictable for the common all-miss
// case, which branchy early exits would not.
inline bool any_weak_dominator(const double* members, std::size_t count, const double* t,
                               int w) {
    bool found = false;
    const double* x = members;
    for (std::size_t i = 0; i < count; ++i, x += w) {
        bool all = true;
        for (int j = 0; j < w; ++j) all &= (x[j] <= t[j]);
        found |= all;
    }
    return found;
}

}  // namespace

bool IdaqState::pareto_filter_rejects(PathId p) const {
    const PathId sample = pareto_sample_[pool_->end_node(p)];
    return strict_dom_raw(pool_->totals_ptr(sample), pool_->totals_ptr(p), w_);
}

const double* IdaqState::cached_costs(PathId p) { return queue_.all_costs(p); }

void IdaqState::forget(PathId p) { queue_.forget_costs(p); }

void IdaqState::refresh_reject_bound(BestEntry& be) {
    be.reject_scale.assign(w_, kInf);
    for (int i = 0; i < k_; ++i) {
        const double c = be.cost[i];
        if (!(c > 0.0)) continue;  // zero-cost slot: vacuous constraint
        for (int j = 0; j < w_; ++j) {
            const double scaled = lambda_cols_[std::size_t(j) * k_ + i] / c;
            be.reject_scale[j] = std::min(be.reject_scale[j], scaled);
        }
    }
}

void IdaqState::ensure_best(NodeId v) {
    if (best_[v]) return;
    auto be = std::make_unique<BestEntry>();
    be->path.assign(k_, kInvalidIndex);
    be->cost.assign(k_, kInf);
    auto consider = [&](PathId b) {
        const double* bc = cached_costs(b);
        for (int i = 0; i < k_; ++i) {
            // ties go to the earliest-pushed path, which is what keeps a
            // first optimal path pinned in its slot
            if (bc[i] < be->cost[i] ||
                (bc[i] == be->cost[i] && be->path[i] != kInvalidIndex &&
                 pool_->push_seq(b) < pool_->push_seq(be->path[i]))) {
                be->path[i] = b;
                be->cost[i] = bc[i];
            }
        }
    };
    for (PathId b : queue_.popped_paths(v)) consider(b);
    for (PathId b : queue_.queue_paths(v)) consider(b);
    refresh_reject_bound(*be);
    best_[v] = std::move(be);
}

bool IdaqState::is_relevant(PathId p) {
    const NodeId v = pool_->end_node(p);
    const auto queued = queue_.queue_paths(v);
    const auto popped = queue_.popped_paths(v);
    const std::size_t discovered = queued.size() + popped.size();
    const double* pt = pool_->totals_ptr(p);
    const double* qt = queue_.queue_totals(v).data();
    const double* ot = queue_.popped_totals(v).data();

    if (double(discovered) < k_over_w_) {
        ++stats_.dominance_branch_checks;
        if (any_weak_dominator(ot, popped.size(), pt, w_)) return false;
        if (any_weak_dominator(qt, queued.size(), pt, w_)) return false;
        removal_scratch_.clear();
        for (std::size_t i = 0; i < queued.size(); ++i)
            if (strict_dom_raw(pt, qt + i * w_, w_)) removal_scratch_.push_back(queued[i]);
        if (!removal_scratch_.empty()) queue_.remove_queue_paths(v, removal_scratch_);
        if (best_[v]) {
            // keep the registry exact for the adapt shortcut: p joins Q_v, and
            // every removed path was strictly dominated so it held no slot
            BestEntry& be = *best_[v];
            double* pc = cost_scratch_.data();
            queue_.costs_into(p, pc);
            for (int i = 0; i < k_; ++i) {
                if (pc[i] < be.cost[i]) {
                    be.path[i] = p;
                    be.cost[i] = pc[i];
                }
            }
            queue_.commit_costs(p, pc);
        }
        if (options_.check_invariants) queue_.check_representative_invariant(v);
        return true;
    }

    ++stats_.optimality_branch_checks;
    // cheap certain-rejection tests before the K-cost computation: a weakly
    // dominating discovered path caps every lambda cost of p from below, and
    // the scaled-coefficient bound certifies that p beats no best slot
    if (any_weak_dominator(ot, popped.size(), pt, w_)) return false;
    if (any_weak_dominator(qt, queued.size(), pt, w_)) return false;
    if (best_[v] && dot_product(best_[v]->reject_scale.data(), pt, w_) >= 1.0)
        return false;

    ensure_best(v);
    BestEntry& be = *best_[v];
    // compare against scratch costs; the row is cached only if p is kept
    double* pc = cost_scratch_.data();
    queue_.costs_into(p, pc);
    bool improved = false;
    for (int i = 0; i < k_; ++i) {
        if (pc[i] < be.cost[i]) {
            be.path[i] = p;
            be.cost[i] = pc[i];
            improved = true;
        }
    }
    if (!improved) return false;
    // the stored rejection bound stays sound when slot costs decrease (it
    // certifies against the old, higher costs), so no refresh here
    queue_.commit_costs(p, pc);

    referenced_scratch_.assign(be.path.begin(), be.path.end());
    std::sort(referenced_scratch_.begin(), referenced_scratch_.end());
    removal_scratch_.clear();
    for (PathId b : queued)
        if (!std::binary_search(referenced_scratch_.begin(), referenced_scratch_.end(), b))
            removal_scratch_.push_back(b);
    if (!removal_scratch_.empty()) queue_.remove_queue_paths(v, removal_scratch_);
    if (options_.check_invariants) queue_.check_representative_invariant(v);
    return true;
}

void IdaqState::adapt(int iteration_index) {
    queue_.adapt(
        iteration_index,
        [](void* ctx, NodeId v, int lambda_index) {
            auto* self = static_cast<IdaqState*>(ctx);
            AdaptiveQueue::RepHint hint;
            const auto& be = self->best_[v];
            if (!be) return hint;  // not initialized: scan fallback
            hint.usable = true;
            hint.path = be->path[lambda_index - 1];
            hint.key = be->cost[lambda_index - 1];
            return hint;
        },
        this);
}

void IdaqState::develop(PathId p, double key, int iteration) {
    optimal_paths_.push_back(p);
    ++stats_.developed_paths;
    ++stats_.developed_per_iteration[iteration - 1];

    const NodeId v = pool_->end_node(p);
    if (options_.record_trace) trace_developed_.push_back({iteration, v, key, p});
    if (!options_.check_invariants) return;

    if (developed_in_iteration_[v] == static_cast<std::uint32_t>(iteration))
        throw_error(Errc::internal,
                    "node developed twice in iteration " + std::to_string(iteration));
    developed_in_iteration_[v] = static_cast<std::uint32_t>(iteration);

    std::string signature;
    const auto edges = pool_->edge_list(p);
    signature.resize(edges.size() * sizeof(EdgeId));
    if (!edges.empty()) std::memcpy(signature.data(), edges.data(), signature.size());
    if (!developed_signatures_.insert(std::move(signature)).second)
        throw_error(Errc::internal, "path developed more than once");
    queue_.check_representative_invariant(v);
}

void IdaqState::check_scan_not_dominating_popped(PathId p) const {
    const auto pt = pool_->totals(p);
    for (PathId q : queue_.popped_paths(pool_->end_node(p)))
        if (dominates(pt, pool_->totals(q)))
            throw_error(Errc::internal, "scanned path strictly dominates a developed path");
}

SolveResult IdaqState::build_sets() {
    SolveResult result(k_, graph_->node_count(), source_, pool_);
    std::vector<double> costs(k_);
    std::vector<double> best_cost(k_);
    std::vector<PathId> best_path(k_);
    for (NodeId v = 0; v < graph_->node_count(); ++v) {
        const auto popped = queue_.popped_paths(v);
        if (popped.empty()) continue;
        best_cost.assign(k_, kInf);
        best_path.assign(k_, kInvalidIndex);
        for (PathId b : popped) {  // pop order: strict improvement keeps the earliest
            multi_dot_cols(pool_->totals_ptr(b), lambda_cols_.data(), k_, w_, costs.data());
            stats_.cost_evaluations += k_;
            for (int i = 0; i < k_; ++i) {
                if (costs[i] < best_cost[i]) {
                    best_cost[i] = costs[i];
                    best_path[i] = b;
                }
            }
        }
        for (int i = 0; i < k_; ++i) result.set_entry(i, v, best_cost[i], best_path[i]);
    }
    return result;
}

void IdaqState::take_trace(IdaqTrace& trace) {
    trace.developed = std::move(trace_developed_);
    trace.pareto_sample.assign(pareto_sample_.begin(), pareto_sample_.end());
    trace.pool = pool_;
}

SolveResult solve_idaq(const Mog& g, NodeId s, const LambdaSet& lambdas,
                       const IdaqOptions& options, IdaqTrace* trace) {
    const auto t0 = std::chrono::steady_clock::now();
    IdaqState state(g, s, lambdas, options);
    state.init_pareto_sample();

    AdaptiveQueue& queue = state.queue();
    PathPool& pool = state.pool();
    const int k = lambdas.k();
    int iteration = 1;

    queue.push(pool.make_seed(s));
    if (options.check_invariants) queue.check_representative_invariant(s);

    while (true) {
        while (queue.is_empty()) {
            if (iteration == k) {
                SolveResult result = state.build_sets();
                result.stats = std::move(state.stats());
                result.stats.wall_ms = std::chrono::duration<double, std::milli>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count();
                if (trace) state.take_trace(*trace);
                return result;
            }
            ++iteration;
            state.adapt(iteration);
            if (options.check_invariants)
                for (NodeId v = 0; v < g.node_count(); ++v)
                    queue.check_representative_invariant(v);
        }

        const auto popped = queue.pop();
        state.develop(popped.path, popped.key, iteration);

        for (EdgeId e : g.out_edges(pool.end_node(popped.path))) {
            const PathId next = pool.extend(popped.path, e);
            ++state.stats().scanned_paths;
            ++state.stats().scanned_per_iteration[iteration - 1];
            if (options.check_invariants) state.check_scan_not_dominating_popped(next);

            bool kept = false;
            if (!state.pareto_filter_rejects(next) && state.is_relevant(next)) {
                queue.push(next);
                if (options.check_invariants) queue.check_representative_invariant(g.edge_to(e));
                kept = true;
            }
            if (!kept) {
                state.forget(next);
                pool.truncate(next);
            }
        }
    }
}

}  // namespace mowsp
