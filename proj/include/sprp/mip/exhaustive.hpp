#pragma once

#include <optional>

#include "sprp/mip/model.hpp"

namespace sprp::mip {

struct ExhaustiveResult {
    bool feasible = false;
    Rat objective;
    Assignment values;
};

// Ground-truth solver by depth-first enumeration of all integer assignments,
// pruned only by exact interval arithmetic on constraint activities and the
// objective. Never touches the LP machinery, so it certifies solve_bb.
// Requires at most `max_free_vars` undetermined variables after one round of
// bound propagation.
ExhaustiveResult model_exhaustive(const Model& model, int max_free_vars = 26);

}  // namespace sprp::mip
