#include "common.hpp"
#include "sprp/reduce.hpp"

namespace sprp {

using namespace detail;

BuiltModel build_scattered(const ScatteredInstance& inst, const CostCoefficients& coeffs) {
    inst.validate();
    if (!is_reduced(inst))
        throw std::invalid_argument("build_scattered requires a reduced instance");
    const std::int64_t m = inst.geometry.num_aisles;
    auto candidates = inst.candidate_positions();

    BuiltModel out;
    Model& model = out.model;
    VarMap& vm = out.vars;
    add_core_variables(model, vm, m, candidates);
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : candidates[j]) vm.add_binary(model, "p", j, i);
        vm.add_binary(model, "g", j);
    }
    model.set_objective(core_objective(vm, m, candidates, coeffs));

    // (F2c): the demanded quantity of each SKU is picked somewhere it is
    // available.
    for (const auto& [sku, stock] : inst.supply_by_sku()) {
        Lin lhs;
        for (const auto& [aisle, pos, qty] : stock) lhs.add(vm.id("p", aisle, pos), qty);
        model.add_constraint("F2c_h" + std::to_string(sku), lhs.terms, Sense::GE,
                             rat(inst.demand.at(sku)));
    }

    // (F2b): selected positions are visited by the tour.
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : candidates[j]) {
            Lin lhs;
            lhs.add(vm.id("xu", j)).add(vm.id("x2u", j));
            for (auto i2 : candidates[j]) {
                if (i2 >= i) lhs.add(vm.id("xpt", j, i2));
                if (i2 <= i) lhs.add(vm.id("xpb", j, i2));
            }
            lhs.add(vm.id("p", j, i), -1);
            model.add_constraint(cname("F2b", j, i), lhs.terms, Sense::GE, 0);
        }
    }

    // (F1e): an aisle with a selected position is reached.
    for (std::int64_t j = 0; j < m; ++j)
        for (auto i : candidates[j])
            model.add_constraint(cname("F1e", j, i),
                                 Lin{}.add(vm.id("g", j)).add(vm.id("p", j, i), -1).terms,
                                 Sense::GE, 0);

    add_reach_layer(model, vm, m, inst.depot.aisle);
    add_core_constraints(model, vm, m, candidates, inst.depot);
    return out;
}

}  // namespace sprp
