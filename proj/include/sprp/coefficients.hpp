#pragma once

#include <map>

#include "sprp/instance.hpp"

namespace sprp {

// Travel-cost coefficients of the decision variables, precomputed from the
// geometry of a reduced instance. Cross-aisle configurations at gap j:
//   cross_top_twice / cross_bottom_twice = 2*gap_j      (there and back)
//   cross_both_once                      = 2*gap_j      (top once + bottom once)
//   cross_both_twice                     = 4*gap_j
// Aisle traversals: traverse_once = L, traverse_twice = 2L. A vertical
// branch-and-pick to position i costs 2*depth[i] from the top and
// 2*(L - depth[i]) from the bottom.
struct CostCoefficients {
    std::vector<Rat> cross_top_twice;      // per gap j < m-1
    std::vector<Rat> cross_bottom_twice;   // per gap
    std::vector<Rat> cross_both_once;      // per gap
    std::vector<Rat> cross_both_twice;     // per gap
    std::vector<Rat> traverse_once;        // per aisle
    std::vector<Rat> traverse_twice;       // per aisle
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> branch_top;     // (aisle,pos)
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> branch_bottom;  // (aisle,pos)

    // Decoupling only: picker-alone variants are beta times the cart value;
    // cart-assisted branch costs account for parking the cart partway.
    std::vector<Rat> alone_cross_top;     // per gap, walker out and back
    std::vector<Rat> alone_cross_bottom;  // per gap
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> alone_branch_top;
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> alone_branch_bottom;
    // Cart park depth chosen for each cart-assisted branch (distance from the
    // entry side), recorded for walk reconstruction.
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> park_depth_top;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> park_depth_bottom;
};

CostCoefficients compute_coefficients(const StandardInstance& inst);
CostCoefficients compute_coefficients(const ScatteredInstance& inst);
CostCoefficients compute_coefficients(const MultiDepotInstance& inst);

// For decoupling, branch_top/branch_bottom hold the cart-assisted costs: the
// cart is pushed to the shallowest depth from which the picker alone can
// carry the remaining items (at most capacity C), and the rest of the branch
// is walked at multiplier beta.
CostCoefficients compute_coefficients(const DecouplingInstance& inst);

}  // namespace sprp
