#pragma once

#include "mowsp/core.hpp"
#include "mowsp/solution.hpp"

namespace mowsp {

struct StandardOptions {
    // Opt-in per-iteration parallelism. Iterations are independent; results
    // are merged afterwards. Timed comparisons against IDAQ keep this off.
    bool parallel = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// K independent single-criterion searches, one per coefficient vector.
SolveResult solve_standard(const Mog& g, NodeId s, const LambdaSet& lambdas,
                           const StandardOptions& options = {});

}  // namespace mowsp
