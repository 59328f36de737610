#pragma once

// Shared pieces of the four model builders. Index guards written as
// bracketed terms in the formulation simply drop out of range terms; the
// boundary variables at the last aisle exist with fixed [0,0] bounds, so
// "own aisle" terms can always be emitted verbatim.

#include <string>

#include "sprp/formulations/build.hpp"

namespace sprp::detail {

using mip::Model;
using mip::Sense;
using mip::Term;

inline std::string cname(const std::string& tag, std::int64_t j) {
    return tag + "_j" + std::to_string(j);
}
inline std::string cname(const std::string& tag, std::int64_t j, std::int64_t i) {
    return tag + "_j" + std::to_string(j) + "_i" + std::to_string(i);
}

// Small linear-expression collector.
struct Lin {
    std::vector<Term> terms;
    Lin& add(int var, Rat coeff = Rat(1)) {
        terms.push_back({var, std::move(coeff)});
        return *this;
    }
    Lin& add(int var, std::int64_t coeff) { return add(var, rat(coeff)); }
};

// Creates the core tour variables shared by every variant: cross-aisle
// configurations per gap (fixed to zero at the last aisle), traversals,
// half-degree integers, the two-component flag, and the cart branch-and-pick
// variables for the given positions. Declaration order groups by aisle.
void add_core_variables(Model& model, VarMap& vm, std::int64_t m,
                        const std::vector<std::set<std::int64_t>>& positions);

// Objective terms of the closed-loop part (cross configurations, traversals,
// cart branches) with the given coefficients.
std::vector<Term> core_objective(const VarMap& vm, std::int64_t m,
                                 const std::vector<std::set<std::int64_t>>& positions,
                                 const CostCoefficients& c);

// Constraints (F3)-(F8), (E1)/(E2), (T1)-(T5) shared by all variants.
void add_core_constraints(Model& model, const VarMap& vm, std::int64_t m,
                          const std::vector<std::set<std::int64_t>>& positions, const Depot& depot);

// Reach-flag layer used by the scattered, decoupling, and multidepot
// variants: g at the depot aisle is one, one cross configuration is used at
// gap j exactly when it leads to a reached aisle, and reach propagates
// monotonically away from the depot.
void add_reach_layer(Model& model, const VarMap& vm, std::int64_t m, std::int64_t depot_aisle);

}  // namespace sprp::detail
