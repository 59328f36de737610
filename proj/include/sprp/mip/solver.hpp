#pragma once

#include <optional>

#include "sprp/mip/model.hpp"

namespace sprp::mip {

struct SolveLimits {
    double time_seconds = 0;     // 0 = unlimited
    std::int64_t max_nodes = 0;  // 0 = unlimited
};

// Exact branch-and-bound over the rational LP relaxation. Branches on the
// most fractional binary first (ties by declaration order), explores nodes
// in best-bound order with FIFO tie-break, and prunes with the LP bound
// rounded up to the objective's value lattice. Deterministic for fixed
// limits. An optional warm-start assignment seeds the incumbent when it is
// feasible.
Solution solve_bb(const Model& model, const SolveLimits& limits = {},
                  const std::optional<Assignment>& warm_start = std::nullopt);

}  // namespace sprp::mip
