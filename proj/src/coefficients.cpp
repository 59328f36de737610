#include "sprp/coefficients.hpp"

#include <algorithm>

namespace sprp {

namespace {

CostCoefficients base_coefficients(const Geometry& g,
                                   const std::vector<std::set<std::int64_t>>& positions) {
    CostCoefficients c;
    std::int64_t gaps = g.num_aisles - 1;
    c.cross_top_twice.reserve(gaps);
    for (std::int64_t j = 0; j < gaps; ++j) {
        Rat gap = rat(g.cross_gap[j]);
        c.cross_top_twice.push_back(2 * gap);
        c.cross_bottom_twice.push_back(2 * gap);
        c.cross_both_once.push_back(2 * gap);
        c.cross_both_twice.push_back(4 * gap);
    }
    for (std::int64_t j = 0; j < g.num_aisles; ++j) {
        c.traverse_once.push_back(rat(g.aisle_length));
        c.traverse_twice.push_back(rat(2 * g.aisle_length));
    }
    for (std::int64_t j = 0; j < g.num_aisles; ++j) {
        for (auto i : positions[j]) {
            c.branch_top[{j, i}] = rat(2 * g.depth[i]);
            c.branch_bottom[{j, i}] = rat(2 * (g.aisle_length - g.depth[i]));
        }
    }
    return c;
}

}  // namespace

CostCoefficients compute_coefficients(const StandardInstance& inst) {
    inst.validate();
    return base_coefficients(inst.geometry, inst.required);
}

CostCoefficients compute_coefficients(const ScatteredInstance& inst) {
    inst.validate();
    return base_coefficients(inst.geometry, inst.candidate_positions());
}

CostCoefficients compute_coefficients(const MultiDepotInstance& inst) {
    inst.validate();
    return base_coefficients(inst.geometry, inst.required);
}

CostCoefficients compute_coefficients(const DecouplingInstance& inst) {
    inst.validate();
    const Geometry& g = inst.geometry;
    auto required = inst.required_positions();
    CostCoefficients c = base_coefficients(g, required);

    std::int64_t gaps = g.num_aisles - 1;
    for (std::int64_t j = 0; j < gaps; ++j) {
        c.alone_cross_top.push_back(inst.beta * c.cross_top_twice[j]);
        c.alone_cross_bottom.push_back(inst.beta * c.cross_bottom_twice[j]);
    }

    for (std::int64_t j = 0; j < g.num_aisles; ++j) {
        for (auto i : required[j]) {
            c.alone_branch_top[{j, i}] = inst.beta * rat(2 * g.depth[i]);
            c.alone_branch_bottom[{j, i}] = inst.beta * rat(2 * (g.aisle_length - g.depth[i]));
        }
    }

    // Cart-assisted branches: push the cart to the shallowest park distance p
    // (from the entry) such that the items strictly beyond p, up to the
    // branch target, fit the picker capacity; the remainder is walked at
    // multiplier beta. The cost 2p + 2*beta*(target - p) is nondecreasing in
    // p for beta <= 1, and feasibility only changes at required-position
    // depths, so the walked segment is a far suffix of the covered picks.
    for (std::int64_t j = 0; j < g.num_aisles; ++j) {
        std::vector<std::int64_t> picks(required[j].begin(), required[j].end());
        for (auto i : picks) {
            {  // branch from the top, covering required positions <= i
                std::vector<std::int64_t> covered;  // far-to-near from the top entry
                for (auto p : picks)
                    if (p <= i) covered.push_back(p);
                std::reverse(covered.begin(), covered.end());
                std::int64_t target = g.depth[i];
                std::int64_t park = target;
                std::int64_t carried = 0;
                for (std::size_t t = 0; t < covered.size(); ++t) {
                    carried += inst.demand_at.at({j, covered[t]});
                    if (carried > inst.capacity) break;
                    park = t + 1 < covered.size() ? g.depth[covered[t + 1]] : 0;
                }
                c.park_depth_top[{j, i}] = park;
                c.branch_top[{j, i}] = rat(2 * park) + inst.beta * rat(2 * (target - park));
            }
            {  // branch from the bottom, covering required positions >= i
                std::vector<std::int64_t> covered;  // far-to-near from the bottom entry
                for (auto p : picks)
                    if (p >= i) covered.push_back(p);
                std::int64_t target = g.aisle_length - g.depth[i];
                std::int64_t park = target;
                std::int64_t carried = 0;
                for (std::size_t t = 0; t < covered.size(); ++t) {
                    carried += inst.demand_at.at({j, covered[t]});
                    if (carried > inst.capacity) break;
                    park = t + 1 < covered.size() ? g.aisle_length - g.depth[covered[t + 1]] : 0;
                }
                c.park_depth_bottom[{j, i}] = park;
                c.branch_bottom[{j, i}] = rat(2 * park) + inst.beta * rat(2 * (target - park));
            }
        }
    }
    return c;
}

}  // namespace sprp
