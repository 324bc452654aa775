#include "mowsp/benchgen.hpp"

#include <algorithm>
#include <cmath>

#include "mowsp/rng.hpp"

namespace mowsp {

namespace {

void check_waxman_params(const WaxmanParams& p) {
    if (!(p.x1 > p.x0) || !(p.y1 > p.y0))
        throw_error(Errc::invalid_argument, "waxman domain rectangle is degenerate");
    if (!(p.intensity > 0.0) || !(p.alpha > 0.0) || !(p.beta > 0.0))
        throw_error(Errc::invalid_argument, "waxman parameters must be positive");
}

// Tarjan strongly connected components, iterative. Returns per-node component
// ids; components are numbered in completion order.
std::vector<std::uint32_t> scc_ids(std::size_t n, const std::vector<EdgeRecord>& edges,
                                   std::uint32_t& component_count) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e)
        adj[edges[e].from].push_back(static_cast<std::uint32_t>(e));

    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> index(n, kUnset), lowlink(n, kUnset), component(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t next_index = 0;
    component_count = 0;

    struct Frame {
        std::uint32_t node;
        std::size_t edge_pos;
    };
    std::vector<Frame> call_stack;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const std::uint32_t v = frame.node;
            if (frame.edge_pos < adj[v].size()) {
                const std::uint32_t w = edges[adj[v][frame.edge_pos++]].to;
                if (index[w] == kUnset) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    while (true) {
                        const std::uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component[w] = component_count;
                        if (w == v) break;
                    }
                    ++component_count;
                }
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    const std::uint32_t parent = call_stack.back().node;
                    lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
                }
            }
        }
    }
    return component;
}

MogData restrict_to_largest_scc(MogData data) {
    std::uint32_t component_count = 0;
    const auto component = scc_ids(data.node_count, data.edges, component_count);

    std::vector<std::size_t> size(component_count, 0);
    for (std::uint32_t c : component) ++size[c];
    // largest component; ties resolved toward the one containing the
    // smallest node id (deterministic)
    std::uint32_t keep = component[0];
    for (std::uint32_t v = 1; v < data.node_count; ++v) {
        if (size[component[v]] > size[keep]) keep = component[v];
    }

    std::vector<NodeId> remap(data.node_count, kInvalidIndex);
    NodeId next = 0;
    std::vector<Coord> coords;
    for (NodeId v = 0; v < data.node_count; ++v) {
        if (component[v] != keep) continue;
        remap[v] = next++;
        if (!data.coords.empty()) coords.push_back(data.coords[v]);
    }

    MogData out;
    out.node_count = next;
    out.objective_count = data.objective_count;
    out.coords = std::move(coords);
    out.has_tags = data.has_tags;
    for (EdgeRecord& e : data.edges) {
        if (remap[e.from] == kInvalidIndex || remap[e.to] == kInvalidIndex) continue;
        e.from = remap[e.from];
        e.to = remap[e.to];
        out.edges.push_back(std::move(e));
    }
    return out;
}

}  // namespace

double waxman_edge_probability(const WaxmanParams& p, Coord a, Coord b) {
    check_waxman_params(p);
    const double d_max = std::hypot(p.x1 - p.x0, p.y1 - p.y0);
    const double d = std::hypot(a.x - b.x, a.y - b.y);
    return std::min(1.0, p.beta * std::exp(-d / (p.alpha * d_max)));
}

Mog gen_waxman_at(const WaxmanParams& p, std::vector<Coord> points) {
    check_waxman_params(p);
    if (points.empty())
        throw_error(Errc::generation, "waxman generation produced an empty point set");

    const double d_max = std::hypot(p.x1 - p.x0, p.y1 - p.y0);
    const std::size_t n = points.size();
    Rng rng(Rng::derive_seed(p.seed, 1));

    MogData data;
    data.node_count = n;
    data.objective_count = 1;
    data.coords = std::move(points);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u == v) continue;
            const double d = std::hypot(data.coords[u].x - data.coords[v].x,
                                        data.coords[u].y - data.coords[v].y);
            const double prob = std::min(1.0, p.beta * std::exp(-d / (p.alpha * d_max)));
            if (rng.next_double() < prob)
                data.edges.push_back({u, v, {d}, 0});
        }
    }

    if (p.keep_largest_scc) data = restrict_to_largest_scc(std::move(data));
    if (data.edges.empty())
        throw_error(Errc::generation, "waxman generation produced a graph with no edges");
    return Mog(std::move(data));
}

Mog gen_waxman(const WaxmanParams& p) {
    check_waxman_params(p);
    Rng rng(Rng::derive_seed(p.seed, 0));
    const double area = (p.x1 - p.x0) * (p.y1 - p.y0);
    const std::uint64_t n = rng.poisson(p.intensity * area);
    if (n == 0)
        throw_error(Errc::generation, "waxman generation produced an empty point set");
    std::vector<Coord> points(n);
    for (auto& pt : points) {
        pt.x = rng.uniform(p.x0, p.x1);
        pt.y = rng.uniform(p.y0, p.y1);
    }
    return gen_waxman_at(p, std::move(points));
}

Mog assign_random_objectives(const Mog& g, int w, std::uint64_t seed) {
    if (w < 1) throw_error(Errc::invalid_argument, "objective count must be >= 1");
    Rng rng(seed);
    MogData data = g.data();
    data.objective_count = w;
    for (EdgeRecord& e : data.edges) {
        e.objectives.resize(w);
        for (int j = 0; j < w; ++j) e.objectives[j] = rng.next_double();
    }
    return Mog(std::move(data));
}

LambdaSet gen_lambdas(const CoeffRegime& regime, int w) {
    if (!(regime.low > 0.0) || !(regime.high > regime.low))
        throw_error(Errc::invalid_argument, "coefficient regime requires 0 < low < high");
    if (regime.k < 1) throw_error(Errc::invalid_argument, "regime K must be >= 1");
    if (w < 1) throw_error(Errc::invalid_argument, "regime W must be >= 1");
    Rng rng(regime.seed);
    std::vector<CoefficientVector> vectors;
    vectors.reserve(regime.k);
    for (int i = 0; i < regime.k; ++i) {
        std::vector<double> values(w);
        for (int j = 0; j < w; ++j) values[j] = rng.uniform(regime.low, regime.high);
        vectors.emplace_back(std::move(values));
    }
    return LambdaSet(std::move(vectors));
}

Mog synth_geo_objectives(const Mog& g) {
    if (!g.has_coords())
        throw_error(Errc::invalid_argument, "geo objectives require node coordinates");
    if (!g.has_tags())
        throw_error(Errc::invalid_argument, "geo objectives require edge tags");

    MogData data = g.data();
    data.objective_count = 4;
    for (EdgeRecord& e : data.edges) {
        const Coord a = g.coord(e.from);
        const Coord b = g.coord(e.to);
        const double length = std::hypot(a.x - b.x, a.y - b.y);
        e.objectives = {
            length,
            (e.tags & kTagBicycleRoad) ? length / 2.0 : length,
            !(e.tags & kTagNearHighway) ? length / 2.0 : length,
            !(e.tags & kTagNearBuildings) ? length / 2.0 : length,
        };
    }
    return Mog(std::move(data));
}

}  // namespace mowsp
