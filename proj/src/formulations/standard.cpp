#include "common.hpp"
#include "sprp/reduce.hpp"

namespace sprp {

using namespace detail;

BuiltModel build_standard(const StandardInstance& inst, const CostCoefficients& coeffs) {
    inst.validate();
    if (!is_reduced(inst)) throw std::invalid_argument("build_standard requires a reduced instance");
    const std::int64_t m = inst.geometry.num_aisles;

    BuiltModel out;
    Model& model = out.model;
    VarMap& vm = out.vars;
    add_core_variables(model, vm, m, inst.required);
    model.set_objective(core_objective(vm, m, inst.required, coeffs));

    // (F1): exactly one cross-aisle configuration per gap.
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        model.add_constraint(cname("F1", j),
                             Lin{}.add(vm.id("x2b", j)).add(vm.id("x2t", j)).add(vm.id("xtb", j))
                                 .add(vm.id("x2tb", j))
                                 .terms,
                             Sense::EQ, 1);
    }

    // (F2): every required position is reached by a traversal or a branch.
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : inst.required[j]) {
            Lin lhs;
            lhs.add(vm.id("xu", j)).add(vm.id("x2u", j));
            for (auto i2 : inst.required[j]) {
                if (i2 >= i) lhs.add(vm.id("xpt", j, i2));
                if (i2 <= i) lhs.add(vm.id("xpb", j, i2));
            }
            model.add_constraint(cname("F2", j, i), lhs.terms, Sense::GE, 1);
        }
    }

    add_core_constraints(model, vm, m, inst.required, inst.depot);
    return out;
}

}  // namespace sprp
