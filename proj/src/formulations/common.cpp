#include "common.hpp"

namespace sprp::detail {

void add_core_variables(Model& model, VarMap& vm, std::int64_t m,
                        const std::vector<std::set<std::int64_t>>& positions) {
    for (std::int64_t j = 0; j < m; ++j) {
        bool last = j == m - 1;
        auto cfg = [&](const char* sym) {
            return last ? vm.add_fixed_zero(model, sym, j) : vm.add_binary(model, sym, j);
        };
        cfg("x2t");
        cfg("x2b");
        cfg("xtb");
        cfg("x2tb");
        vm.add_binary(model, "xu", j);
        vm.add_binary(model, "x2u", j);
        // Half degrees: the degree of any entry is at most six (two doubled
        // configurations plus a doubled traversal), so k fits in [0,3].
        vm.add(model, "kt", j, -1, mip::VarKind::Integer, 0, 3);
        vm.add(model, "kb", j, -1, mip::VarKind::Integer, 0, 3);
        cfg("z");
        for (auto i : positions[j]) {
            vm.add_binary(model, "xpt", j, i);
            vm.add_binary(model, "xpb", j, i);
        }
    }
}

std::vector<Term> core_objective(const VarMap& vm, std::int64_t m,
                                 const std::vector<std::set<std::int64_t>>& positions,
                                 const CostCoefficients& c) {
    std::vector<Term> obj;
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        obj.push_back({vm.id("x2b", j), c.cross_bottom_twice[j]});
        obj.push_back({vm.id("x2t", j), c.cross_top_twice[j]});
        obj.push_back({vm.id("xtb", j), c.cross_both_once[j]});
        obj.push_back({vm.id("x2tb", j), c.cross_both_twice[j]});
    }
    for (std::int64_t j = 0; j < m; ++j) {
        obj.push_back({vm.id("xu", j), c.traverse_once[j]});
        obj.push_back({vm.id("x2u", j), c.traverse_twice[j]});
        for (auto i : positions[j]) {
            obj.push_back({vm.id("xpb", j, i), c.branch_bottom.at({j, i})});
            obj.push_back({vm.id("xpt", j, i), c.branch_top.at({j, i})});
        }
    }
    return obj;
}

void add_core_constraints(Model& model, const VarMap& vm, std::int64_t m,
                          const std::vector<std::set<std::int64_t>>& positions,
                          const Depot& depot) {
    const std::int64_t l = depot.aisle;
    const bool depot_top = depot.side == Side::Top;

    // (F3)/(F4): a vertical branch-and-pick needs an adjacent configuration
    // using its cross aisle; the depot aisle is exempt on the depot side.
    for (std::int64_t j = 0; j < m; ++j) {
        for (auto i : positions[j]) {
            if (depot_top || j != l) {
                Lin lhs;
                if (j > 0) {
                    lhs.add(vm.id("x2b", j - 1));
                    lhs.add(vm.id("xtb", j - 1));
                    lhs.add(vm.id("x2tb", j - 1));
                }
                lhs.add(vm.id("x2b", j)).add(vm.id("xtb", j)).add(vm.id("x2tb", j));
                lhs.add(vm.id("xpb", j, i), -1);
                model.add_constraint(cname("F3", j, i), lhs.terms, Sense::GE, 0);
            }
            if (!depot_top || j != l) {
                Lin lhs;
                if (j > 0) {
                    lhs.add(vm.id("x2t", j - 1));
                    lhs.add(vm.id("xtb", j - 1));
                    lhs.add(vm.id("x2tb", j - 1));
                }
                lhs.add(vm.id("x2t", j)).add(vm.id("xtb", j)).add(vm.id("x2tb", j));
                lhs.add(vm.id("xpt", j, i), -1);
                model.add_constraint(cname("F4", j, i), lhs.terms, Sense::GE, 0);
            }
        }
    }

    // (F5)/(F6): switching cross aisles over aisle j needs a double traversal.
    for (std::int64_t j = 1; j < m; ++j) {
        model.add_constraint(cname("F5", j),
                             Lin{}.add(vm.id("x2t", j - 1)).add(vm.id("x2b", j))
                                 .add(vm.id("x2u", j), -1)
                                 .terms,
                             Sense::LE, 1);
        model.add_constraint(cname("F6", j),
                             Lin{}.add(vm.id("x2b", j - 1)).add(vm.id("x2t", j))
                                 .add(vm.id("x2u", j), -1)
                                 .terms,
                             Sense::LE, 1);
    }

    // (F7)/(F8): the depot entry must lie on the tour.
    {
        Lin lhs;
        lhs.add(vm.id("x2u", l), 2).add(vm.id("xu", l));
        const char* same = depot_top ? "x2t" : "x2b";
        const char* other = depot_top ? "x2b" : "x2t";
        if (l > 0) {
            lhs.add(vm.id(same, l - 1));
            lhs.add(vm.id("x2tb", l - 1));
        }
        lhs.add(vm.id(same, l)).add(vm.id("x2tb", l));
        if (l > 0) lhs.add(vm.id(other, l - 1), -1);
        lhs.add(vm.id(other, l), -1);
        model.add_constraint(depot_top ? "F7" : "F8", lhs.terms, Sense::GE, 0);
    }

    // (E1)/(E2): entry degrees are even; k counts half degrees.
    for (std::int64_t j = 0; j < m; ++j) {
        Lin top, bottom;
        if (j > 0) {
            top.add(vm.id("xtb", j - 1)).add(vm.id("x2tb", j - 1), 2).add(vm.id("x2t", j - 1), 2);
            bottom.add(vm.id("xtb", j - 1)).add(vm.id("x2tb", j - 1), 2).add(vm.id("x2b", j - 1), 2);
        }
        top.add(vm.id("xtb", j)).add(vm.id("x2tb", j), 2).add(vm.id("x2t", j), 2);
        top.add(vm.id("xu", j)).add(vm.id("x2u", j), 2).add(vm.id("kt", j), -2);
        bottom.add(vm.id("xtb", j)).add(vm.id("x2tb", j), 2).add(vm.id("x2b", j), 2);
        bottom.add(vm.id("xu", j)).add(vm.id("x2u", j), 2).add(vm.id("kb", j), -2);
        model.add_constraint(cname("E1", j), top.terms, Sense::EQ, 0);
        model.add_constraint(cname("E2", j), bottom.terms, Sense::EQ, 0);
    }

    // (T1): a doubled-single to doubled-double transition without a double
    // traversal splits the tour into two components.
    for (std::int64_t j = 1; j < m; ++j) {
        model.add_constraint(cname("T1", j),
                             Lin{}.add(vm.id("x2tb", j)).add(vm.id("x2b", j - 1))
                                 .add(vm.id("x2t", j - 1))
                                 .add(vm.id("x2u", j), -1)
                                 .add(vm.id("z", j), -1)
                                 .terms,
                             Sense::LE, 1);
    }
    // (T3): two components whenever x2tb starts with nothing to its left and
    // no traversal ties top to bottom.
    for (std::int64_t j = 0; j < m; ++j) {
        Lin lhs;
        lhs.add(vm.id("x2tb", j));
        if (j > 0) {
            lhs.add(vm.id("x2tb", j - 1), -1);
            lhs.add(vm.id("x2t", j - 1), -1);
            lhs.add(vm.id("x2b", j - 1), -1);
        }
        lhs.add(vm.id("x2u", j), -1).add(vm.id("xu", j), -1).add(vm.id("z", j), -1);
        model.add_constraint(cname("T3", j), lhs.terms, Sense::LE, 0);
    }
    // (T4): components propagate until a traversal reconnects them.
    for (std::int64_t j = 1; j < m; ++j) {
        model.add_constraint(cname("T4", j),
                             Lin{}.add(vm.id("z", j - 1)).add(vm.id("xu", j), -1)
                                 .add(vm.id("x2u", j), -1)
                                 .add(vm.id("z", j), -1)
                                 .terms,
                             Sense::LE, 0);
    }
    // (T5): while two components exist, the configuration must stay x2tb.
    for (std::int64_t j = 0; j < m; ++j) {
        model.add_constraint(cname("T5", j),
                             Lin{}.add(vm.id("z", j)).add(vm.id("x2tb", j), -1).terms, Sense::LE,
                             0);
    }
}

void add_reach_layer(Model& model, const VarMap& vm, std::int64_t m, std::int64_t depot_aisle) {
    const std::int64_t l = depot_aisle;
    model.add_constraint("F1fb", Lin{}.add(vm.id("g", l)).terms, Sense::EQ, 1);
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        Lin cfg;
        cfg.add(vm.id("x2b", j)).add(vm.id("x2t", j)).add(vm.id("xtb", j)).add(vm.id("x2tb", j));
        if (j >= l) {
            cfg.add(vm.id("g", j + 1), -1);
            model.add_constraint(cname("F1b", j), cfg.terms, Sense::EQ, 0);
            model.add_constraint(cname("F1d", j),
                                 Lin{}.add(vm.id("g", j)).add(vm.id("g", j + 1), -1).terms,
                                 Sense::GE, 0);
        } else {
            cfg.add(vm.id("g", j), -1);
            model.add_constraint(cname("F1bb", j), cfg.terms, Sense::EQ, 0);
            model.add_constraint(cname("F1db", j),
                                 Lin{}.add(vm.id("g", j), -1).add(vm.id("g", j + 1)).terms,
                                 Sense::GE, 0);
        }
    }
}

}  // namespace sprp::detail
