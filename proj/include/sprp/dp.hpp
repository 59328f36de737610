#pragma once

#include "sprp/instance.hpp"

namespace sprp {

// Within-aisle actions of the aisle-sweep dynamic program. SplitLargestGap
// serves the aisle from both cross aisles, skipping the largest gap between
// consecutive required positions.
enum class AisleAction { None, Traverse, TraverseTwice, BranchTop, BranchBottom, SplitLargestGap };

// Cross-aisle configuration between consecutive aisles.
enum class GapConfig { TopTwice, BottomTwice, BothOnce, BothTwice };

struct DpResult {
    Rat objective;
    std::vector<AisleAction> aisle_actions;                     // per aisle
    std::vector<GapConfig> gap_configs;                         // per gap
    std::vector<std::pair<std::int64_t, std::int64_t>> splits;  // per aisle: (top target,
                                                                // bottom target) for splits
};

// Exact solver for the standard problem: sweeps aisles left to right over
// the six reachable equivalence classes of partial tours (degree parities at
// the current aisle entries plus the component count). The transition tables
// are derived mechanically from small representative multigraphs, so parity
// and connectivity behave exactly as in the physical tour. Requires a
// reduced instance.
DpResult solve_dp(const StandardInstance& inst);

}  // namespace sprp
