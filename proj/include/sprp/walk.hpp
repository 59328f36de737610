#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sprp/coefficients.hpp"
#include "sprp/dp.hpp"
#include "sprp/formulations/varmap.hpp"
#include "sprp/instance.hpp"
#include "sprp/mip/model.hpp"

namespace sprp {

// Structural defect found while rebuilding the physical tour. The message
// names the violated property (odd degree, disconnected walk, uncovered
// pick, capacity overrun, walker overlap, ...).
struct WalkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One stop of the reconstructed route.
struct WalkStop {
    std::int64_t aisle = 0;
    Side side = Side::Top;                    // entry being visited
    std::vector<std::int64_t> branch_picks;   // positions served by a
                                              // branch-and-pick from here
};

struct AloneWalk {
    std::int64_t anchor_aisle = 0;  // entry where the cart waits
    Side side = Side::Top;
    bool rightward = true;
    std::int64_t last_aisle = 0;                                     // far end of the excursion
    std::vector<std::pair<std::int64_t, std::int64_t>> picks;       // (aisle, position)
    std::int64_t items = 0;
    Rat cost;
};

// Physical tour rebuilt from a solution: the closed-loop edge multiset as an
// Eulerian circuit (an open trail for the multidepot variant), plus the
// picker-alone subwalks of the decoupling variant. The cost is recomputed
// from the geometry.
struct PickerWalk {
    Rat cost;
    std::vector<WalkStop> circuit;
    std::vector<AloneWalk> alone_walks;
    std::optional<Depot> end_depot;  // multidepot: where the trail ends
};

PickerWalk reconstruct_walk(const StandardInstance& inst, const VarMap& vars,
                            const mip::Assignment& solution);
PickerWalk reconstruct_walk(const ScatteredInstance& inst, const VarMap& vars,
                            const mip::Assignment& solution);
PickerWalk reconstruct_walk(const DecouplingInstance& inst, const CostCoefficients& coeffs,
                            const VarMap& vars, const mip::Assignment& solution);
PickerWalk reconstruct_walk(const MultiDepotInstance& inst, const VarMap& vars,
                            const mip::Assignment& solution);

// The dynamic program's action trace rebuilt through the same validator.
PickerWalk walk_from_dp(const StandardInstance& inst, const DpResult& result);

}  // namespace sprp
