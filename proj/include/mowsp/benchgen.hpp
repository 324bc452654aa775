#pragma once

#include <cstdint>

#include "mowsp/core.hpp"

namespace mowsp {

// Waxman random digraph over a Poisson point process. Each ordered pair
// (u, v), u != v, receives an edge independently with probability
// beta * exp(-dist(u, v) / (alpha * d_max)), d_max being the domain diagonal.
struct WaxmanParams {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 0.1;
    double intensity = 2440.0;  // expected points per unit area
    double alpha = 4.0;
    double beta = 0.185;
    std::uint64_t seed = 1;
    bool keep_largest_scc = true;

    // Parameter family reproducing the experiment-scale instances: a few
    // hundred strongly connected nodes at density near 0.17. intensity and
    // beta are tuned; domain and alpha are the published ones.
    static WaxmanParams paper_family(std::uint64_t seed) {
        WaxmanParams p;
        p.seed = seed;
        return p;
    }
};

double waxman_edge_probability(const WaxmanParams& p, Coord a, Coord b);

// Generates edges over a fixed point set (the seed drives only edge draws).
Mog gen_waxman_at(const WaxmanParams& p, std::vector<Coord> points);

// Points from the Poisson process, then edges. The single objective of the
// returned graph is the Euclidean edge length; callers typically overwrite it
// with assign_random_objectives or synth_geo_objectives.
Mog gen_waxman(const WaxmanParams& p);

// Replaces every edge's objectives with w independent Uniform[0,1) draws.
Mog assign_random_objectives(const Mog& g, int w, std::uint64_t seed);

struct CoeffRegime {
    double low = 0.1;
    double high = 1.1;
    int k = 1;
    std::uint64_t seed = 1;
};

// K coefficient vectors of W iid Uniform[low, high) entries.
LambdaSet gen_lambdas(const CoeffRegime& regime, int w);

// Bicycle-routing objectives from coordinates and road tags:
//   C1 = Euclidean edge length
//   C2 = C1/2 on bicycle roads, else C1
//   C3 = C1/2 away from highways, else C1
//   C4 = C1/2 away from buildings, else C1
Mog synth_geo_objectives(const Mog& g);

}  // namespace mowsp
