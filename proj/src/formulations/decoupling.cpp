#include "common.hpp"
#include "sprp/reduce.hpp"

namespace sprp {

using namespace detail;

BuiltModel build_decoupling(const DecouplingInstance& inst, const CostCoefficients& coeffs) {
    inst.validate();
    if (!is_reduced(inst))
        throw std::invalid_argument("build_decoupling requires a reduced instance");
    const std::int64_t m = inst.geometry.num_aisles;
    const std::int64_t C = inst.capacity;
    auto required = inst.required_positions();

    BuiltModel out;
    Model& model = out.model;
    VarMap& vm = out.vars;
    add_core_variables(model, vm, m, required);
    for (std::int64_t j = 0; j < m; ++j) {
        vm.add_binary(model, "g", j);
        // Walker directions along the cross aisles; (G10) pins the last slot.
        for (const char* sym : {"wtr", "wbr", "wtl", "wbl"}) {
            if (j == m - 1)
                vm.add_fixed_zero(model, sym, j);
            else
                vm.add_binary(model, sym, j);
        }
        // Picker-alone branches exist only where the capacity suffices for
        // every required item along the branch.
        for (auto i : required[j]) {
            if (items_prefix(inst, j, i, Side::Top) <= C) vm.add_binary(model, "xptp", j, i);
            if (items_prefix(inst, j, i, Side::Bottom) <= C) vm.add_binary(model, "xpbp", j, i);
        }
        vm.add(model, "qt", j, -1, mip::VarKind::Integer, 0, C);
        vm.add(model, "qb", j, -1, mip::VarKind::Integer, 0, C);
    }

    // (H4): travel time with cart plus beta-scaled time alone.
    std::vector<Term> obj = core_objective(vm, m, required, coeffs);
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        obj.push_back({vm.id("wtl", j), coeffs.alone_cross_top[j]});
        obj.push_back({vm.id("wtr", j), coeffs.alone_cross_top[j]});
        obj.push_back({vm.id("wbl", j), coeffs.alone_cross_bottom[j]});
        obj.push_back({vm.id("wbr", j), coeffs.alone_cross_bottom[j]});
    }
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : required[j]) {
            if (vm.has("xptp", j, i))
                obj.push_back({vm.id("xptp", j, i), coeffs.alone_branch_top.at({j, i})});
            if (vm.has("xpbp", j, i))
                obj.push_back({vm.id("xpbp", j, i), coeffs.alone_branch_bottom.at({j, i})});
        }
    }
    model.set_objective(std::move(obj));

    // (F2Pick): coverage may come from cart or picker-alone branches.
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : required[j]) {
            Lin lhs;
            lhs.add(vm.id("xu", j)).add(vm.id("x2u", j));
            for (auto i2 : required[j]) {
                if (i2 >= i) {
                    lhs.add(vm.id("xpt", j, i2));
                    if (vm.has("xptp", j, i2)) lhs.add(vm.id("xptp", j, i2));
                }
                if (i2 <= i) {
                    lhs.add(vm.id("xpb", j, i2));
                    if (vm.has("xpbp", j, i2)) lhs.add(vm.id("xpbp", j, i2));
                }
            }
            model.add_constraint(cname("F2Pick", j, i), lhs.terms, Sense::GE, 1);
        }
    }

    add_reach_layer(model, vm, m, inst.depot.aisle);
    // (F1z): a doubly traversed aisle is reached by the cart.
    for (std::int64_t j = 0; j < m; ++j)
        model.add_constraint(cname("F1z", j),
                             Lin{}.add(vm.id("g", j)).add(vm.id("x2u", j), -1).terms, Sense::GE,
                             0);

    // (G1)/(G2): picker-alone cross-aisle segments may not overlap each
    // other or the cart tour.
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        model.add_constraint(cname("G1", j),
                             Lin{}.add(vm.id("wbr", j)).add(vm.id("wbl", j)).add(vm.id("x2b", j))
                                 .add(vm.id("x2tb", j))
                                 .add(vm.id("xtb", j))
                                 .terms,
                             Sense::LE, 1);
        model.add_constraint(cname("G2", j),
                             Lin{}.add(vm.id("wtr", j)).add(vm.id("wtl", j)).add(vm.id("x2t", j))
                                 .add(vm.id("x2tb", j))
                                 .add(vm.id("xtb", j))
                                 .terms,
                             Sense::LE, 1);
    }

    // (G3)-(G6): a walk segment starts at the parked cart or continues an
    // adjacent walk segment.
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        Lin g3;
        if (j > 0) {
            g3.add(vm.id("wtr", j - 1)).add(vm.id("x2t", j - 1)).add(vm.id("x2tb", j - 1));
        }
        g3.add(vm.id("xu", j)).add(vm.id("x2u", j)).add(vm.id("wtr", j), -1);
        model.add_constraint(cname("G3", j), g3.terms, Sense::GE, 0);

        Lin g4;
        if (j > 0) {
            g4.add(vm.id("wbr", j - 1)).add(vm.id("x2b", j - 1)).add(vm.id("x2tb", j - 1));
        }
        g4.add(vm.id("xu", j)).add(vm.id("x2u", j)).add(vm.id("wbr", j), -1);
        model.add_constraint(cname("G4", j), g4.terms, Sense::GE, 0);

        model.add_constraint(cname("G5", j),
                             Lin{}.add(vm.id("wtl", j + 1)).add(vm.id("x2t", j + 1))
                                 .add(vm.id("x2tb", j + 1))
                                 .add(vm.id("xu", j + 1))
                                 .add(vm.id("x2u", j + 1))
                                 .add(vm.id("wtl", j), -1)
                                 .terms,
                             Sense::GE, 0);
        model.add_constraint(cname("G6", j),
                             Lin{}.add(vm.id("wbl", j + 1)).add(vm.id("x2b", j + 1))
                                 .add(vm.id("x2tb", j + 1))
                                 .add(vm.id("xu", j + 1))
                                 .add(vm.id("x2u", j + 1))
                                 .add(vm.id("wbl", j), -1)
                                 .terms,
                             Sense::GE, 0);
    }

    // (G7)/(G8): an alone branch needs the walker passing its entry.
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : required[j]) {
            if (vm.has("xpbp", j, i)) {
                Lin lhs;
                if (j > 0) lhs.add(vm.id("wbr", j - 1));
                lhs.add(vm.id("wbl", j)).add(vm.id("xpbp", j, i), -1);
                model.add_constraint(cname("G7", j, i), lhs.terms, Sense::GE, 0);
            }
            if (vm.has("xptp", j, i)) {
                Lin lhs;
                if (j > 0) lhs.add(vm.id("wtr", j - 1));
                lhs.add(vm.id("wtl", j)).add(vm.id("xptp", j, i), -1);
                model.add_constraint(cname("G8", j, i), lhs.terms, Sense::GE, 0);
            }
        }
    }

    // (H1)-(H4): load propagation along walk segments; (H5)/(H6): capacity.
    auto alone_items = [&](std::int64_t j, Side side, Lin& lhs) {
        const char* sym = side == Side::Top ? "xptp" : "xpbp";
        for (auto i : required[j])
            if (vm.has(sym, j, i)) lhs.add(vm.id(sym, j, i), items_prefix(inst, j, i, side));
    };
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        Lin h1;
        h1.add(vm.id("qt", j + 1)).add(vm.id("qt", j), -1);
        alone_items(j + 1, Side::Top, h1);
        h1.add(vm.id("wtl", j), C);
        model.add_constraint(cname("H1", j), h1.terms, Sense::LE, rat(C));

        Lin h2;
        h2.add(vm.id("qb", j + 1)).add(vm.id("qb", j), -1);
        alone_items(j + 1, Side::Bottom, h2);
        h2.add(vm.id("wbl", j), C);
        model.add_constraint(cname("H2", j), h2.terms, Sense::LE, rat(C));

        Lin h3;
        h3.add(vm.id("qt", j)).add(vm.id("qt", j + 1), -1);
        alone_items(j, Side::Top, h3);
        h3.add(vm.id("wtr", j), C);
        model.add_constraint(cname("H3", j), h3.terms, Sense::LE, rat(C));

        Lin h4;
        h4.add(vm.id("qb", j)).add(vm.id("qb", j + 1), -1);
        alone_items(j, Side::Bottom, h4);
        h4.add(vm.id("wbr", j), C);
        model.add_constraint(cname("H4", j), h4.terms, Sense::LE, rat(C));
    }
    for (std::int64_t j = 0; j < m; ++j) {
        Lin h5;
        h5.add(vm.id("qt", j));
        alone_items(j, Side::Top, h5);
        model.add_constraint(cname("H5", j), h5.terms, Sense::LE, rat(C));

        Lin h6;
        h6.add(vm.id("qb", j));
        alone_items(j, Side::Bottom, h6);
        model.add_constraint(cname("H6", j), h6.terms, Sense::LE, rat(C));
    }

    add_core_constraints(model, vm, m, required, inst.depot);
    return out;
}

}  // namespace sprp
