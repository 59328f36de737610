#pragma once

#include "sprp/coefficients.hpp"
#include "sprp/formulations/varmap.hpp"
#include "sprp/instance.hpp"
#include "sprp/mip/model.hpp"

namespace sprp {

struct BuiltModel {
    mip::Model model;
    VarMap vars;
};

// Compact formulation of the standard problem: one cross-aisle configuration
// per gap, branch/traversal covering for every required position, even
// degree at every aisle entry via half-degree integers, and a two-component
// flag chain in place of subtour elimination. Requires a reduced instance
// and its coefficients.
BuiltModel build_standard(const StandardInstance& inst, const CostCoefficients& coeffs);

// Scattered-storage extension: binary position-selection variables feed a
// covering constraint per SKU, and reach flags replace the mandatory
// configuration per gap.
BuiltModel build_scattered(const ScatteredInstance& inst, const CostCoefficients& coeffs);

// Picker/cart decoupling: adds picker-alone cross-aisle walk directions,
// capacity-guarded alone branches, and load propagation along horizontal
// branch-and-pick tours.
BuiltModel build_decoupling(const DecouplingInstance& inst, const CostCoefficients& coeffs);

// Multiple end depots: a simple path over doubled tour edges is subtracted
// from the closed loop; its cost per edge is the one-way travel cost.
BuiltModel build_multidepot(const MultiDepotInstance& inst, const CostCoefficients& coeffs);

}  // namespace sprp
