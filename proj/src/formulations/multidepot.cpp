#include "common.hpp"
#include "sprp/reduce.hpp"

namespace sprp {

using namespace detail;

BuiltModel build_multidepot(const MultiDepotInstance& inst, const CostCoefficients& coeffs) {
    inst.validate();
    if (!is_reduced(inst))
        throw std::invalid_argument("build_multidepot requires a reduced instance");
    const std::int64_t m = inst.geometry.num_aisles;
    const std::int64_t l = inst.start.aisle;
    const bool depot_top = inst.start.side == Side::Top;

    BuiltModel out;
    Model& model = out.model;
    VarMap& vm = out.vars;
    add_core_variables(model, vm, m, inst.required);
    for (std::int64_t j = 0; j < m; ++j) {
        vm.add_binary(model, "g", j);
        // Path edges mirror the tour variables; gap slots at the last aisle
        // are pinned like their x counterparts.
        for (const char* sym : {"yt", "yb", "ytb"}) {
            if (j == m - 1)
                vm.add_fixed_zero(model, sym, j);
            else
                vm.add_binary(model, sym, j);
        }
        vm.add_binary(model, "yu", j);
        // End-depot selectors exist only at candidate entries.
        if (inst.end_candidates.count({j, Side::Top}))
            vm.add_binary(model, "et", j);
        else
            vm.add_fixed_zero(model, "et", j);
        if (inst.end_candidates.count({j, Side::Bottom}))
            vm.add_binary(model, "eb", j);
        else
            vm.add_fixed_zero(model, "eb", j);
        vm.add_binary(model, "kpt", j);
        vm.add_binary(model, "kpb", j);
    }

    // (K0): closed-loop cost minus the one-way cost of the dropped path.
    std::vector<Term> obj = core_objective(vm, m, inst.required, coeffs);
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        obj.push_back({vm.id("yt", j), -coeffs.cross_top_twice[j] / 2});
        obj.push_back({vm.id("yb", j), -coeffs.cross_bottom_twice[j] / 2});
        obj.push_back({vm.id("ytb", j), -coeffs.cross_both_twice[j] / 2});
    }
    for (std::int64_t j = 0; j < m; ++j)
        obj.push_back({vm.id("yu", j), -coeffs.traverse_twice[j] / 2});
    model.set_objective(std::move(obj));

    // (F2): unchanged coverage of all required positions.
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

    add_reach_layer(model, vm, m, l);
    // (F1y): aisles with required positions are reached.
    for (std::int64_t j = 0; j < m; ++j)
        if (!inst.required[j].empty())
            model.add_constraint(cname("F1y", j), Lin{}.add(vm.id("g", j)).terms, Sense::GE, 1);

    // (K1)-(K4): the path uses only edges the loop traverses twice.
    for (std::int64_t j = 0; j < m; ++j) {
        model.add_constraint(cname("K1", j),
                             Lin{}.add(vm.id("x2t", j)).add(vm.id("x2tb", j))
                                 .add(vm.id("yt", j), -1)
                                 .terms,
                             Sense::GE, 0);
        model.add_constraint(cname("K2", j),
                             Lin{}.add(vm.id("x2b", j)).add(vm.id("x2tb", j))
                                 .add(vm.id("yb", j), -1)
                                 .terms,
                             Sense::GE, 0);
        model.add_constraint(cname("K3", j),
                             Lin{}.add(vm.id("x2tb", j)).add(vm.id("ytb", j), -1).terms, Sense::GE,
                             0);
        model.add_constraint(cname("K4", j),
                             Lin{}.add(vm.id("x2u", j)).add(vm.id("yu", j), -1).terms, Sense::GE,
                             0);
    }

    // (K6)/(K7): path switches between the cross aisles traverse the aisle.
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        model.add_constraint(cname("K6", j),
                             Lin{}.add(vm.id("yt", j)).add(vm.id("yb", j + 1))
                                 .add(vm.id("yu", j + 1), -1)
                                 .terms,
                             Sense::LE, 1);
        model.add_constraint(cname("K7", j),
                             Lin{}.add(vm.id("yb", j)).add(vm.id("yt", j + 1))
                                 .add(vm.id("yu", j + 1), -1)
                                 .terms,
                             Sense::LE, 1);
    }

    // (K9)/(K10): the path's gap usage shrinks monotonically away from the
    // start depot, so it stays connected.
    auto gap_usage = [&](std::int64_t j) {
        return Lin{}.add(vm.id("yt", j)).add(vm.id("yb", j)).add(vm.id("ytb", j));
    };
    for (std::int64_t j = l; j + 1 < m; ++j) {
        Lin lhs = gap_usage(j);
        for (const auto& t : gap_usage(j + 1).terms) lhs.add(t.var, -t.coeff);
        model.add_constraint(cname("K9", j), lhs.terms, Sense::GE, 0);
    }
    for (std::int64_t j = 1; j < l; ++j) {
        Lin lhs = gap_usage(j);
        for (const auto& t : gap_usage(j - 1).terms) lhs.add(t.var, -t.coeff);
        model.add_constraint(cname("K10", j), lhs.terms, Sense::GE, 0);
    }

    // (K11): at most one end depot.
    {
        Lin lhs;
        for (std::int64_t j = 0; j < m; ++j) lhs.add(vm.id("eb", j)).add(vm.id("et", j));
        model.add_constraint("K11", lhs.terms, Sense::LE, 1);
    }

    // (K12)/(K13): path degrees are even except at the start depot (exempt)
    // and the selected end depot (odd).
    for (std::int64_t j = 0; j < m; ++j) {
        if (depot_top ? j != l : true) {
            Lin lhs;
            if (j > 0) lhs.add(vm.id("ytb", j - 1)).add(vm.id("yt", j - 1));
            lhs.add(vm.id("ytb", j)).add(vm.id("yt", j)).add(vm.id("yu", j));
            lhs.add(vm.id("kpt", j), -2).add(vm.id("et", j), -1);
            model.add_constraint(cname("K12", j), lhs.terms, Sense::EQ, 0);
        }
        if (depot_top ? true : j != l) {
            Lin lhs;
            if (j > 0) lhs.add(vm.id("ytb", j - 1)).add(vm.id("yb", j - 1));
            lhs.add(vm.id("ytb", j)).add(vm.id("yb", j)).add(vm.id("yu", j));
            lhs.add(vm.id("kpb", j), -2).add(vm.id("eb", j), -1);
            model.add_constraint(cname("K13", j), lhs.terms, Sense::EQ, 0);
        }
    }

    // (K5): at most one path use per gap.
    for (std::int64_t j = 0; j < m; ++j) {
        model.add_constraint(cname("K5", j),
                             Lin{}.add(vm.id("ytb", j)).add(vm.id("yt", j)).add(vm.id("yb", j))
                                 .terms,
                             Sense::LE, 1);
    }

    add_core_constraints(model, vm, m, inst.required, inst.start);
    return out;
}

}  // namespace sprp
