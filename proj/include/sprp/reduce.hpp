#pragma once

#include "sprp/instance.hpp"

namespace sprp {

// Result of trimming a warehouse to its relevant aisles. offset maps reduced
// aisle indices back to the original instance: original = reduced + offset.
template <typename Inst>
struct Reduced {
    Inst instance;
    std::int64_t offset = 0;
};

// Removes all aisles strictly left of both the depot and the leftmost aisle
// containing a required position, and symmetrically on the right. Interior
// aisles are kept even when empty, so no cross gaps are merged.
Reduced<StandardInstance> reduce_to_relevant(const StandardInstance& inst);

// Scattered storage cannot drop aisles holding candidate positions the tour
// might skip: the span covers the depot and every candidate position.
Reduced<ScatteredInstance> reduce_to_relevant(const ScatteredInstance& inst);

// Span of the depot and all required positions (dedicated storage).
Reduced<DecouplingInstance> reduce_to_relevant(const DecouplingInstance& inst);

// Span of the start depot, all end-depot candidates, and all picks.
Reduced<MultiDepotInstance> reduce_to_relevant(const MultiDepotInstance& inst);

bool is_reduced(const StandardInstance& inst);
bool is_reduced(const ScatteredInstance& inst);
bool is_reduced(const DecouplingInstance& inst);
bool is_reduced(const MultiDepotInstance& inst);

}  // namespace sprp
