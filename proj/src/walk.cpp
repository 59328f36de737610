#include "sprp/walk.hpp"

#include <algorithm>
#include <numeric>

namespace sprp {

namespace {

struct Branch {
    std::int64_t aisle;
    Side side;
    std::int64_t target;
    Rat cost;
};

// Variant-independent description of a solution's travel structure.
struct TourPlan {
    std::int64_t m = 0;
    std::vector<int> top_cross, bottom_cross;  // loop crossings per gap (0..2)
    std::vector<int> aisle_pass;               // loop traversals per aisle (0..2)
    std::vector<Branch> branches;              // cart branch-and-pick tours

    std::vector<int> path_top, path_bottom;  // multidepot: removed crossings
    std::vector<int> path_aisle;
    std::optional<Depot> end_depot;

    std::vector<int> walk_top, walk_bottom;  // decoupling: +1 right, -1 left
    std::vector<Branch> alone_branches;
    std::int64_t capacity = 0;
    Rat beta = 1;
};

int value_of(const VarMap& vars, const mip::Assignment& sol, const std::string& sym,
             std::int64_t j, std::int64_t i = -1) {
    return static_cast<int>(sol.at(vars.id(sym, j, i)));
}

TourPlan core_plan(const Geometry& g, const std::vector<std::set<std::int64_t>>& positions,
                   const VarMap& vars, const mip::Assignment& sol) {
    TourPlan plan;
    plan.m = g.num_aisles;
    plan.top_cross.assign(plan.m - 1 >= 0 ? plan.m - 1 : 0, 0);
    plan.bottom_cross = plan.top_cross;
    plan.aisle_pass.assign(plan.m, 0);
    for (std::int64_t j = 0; j + 1 < plan.m; ++j) {
        int x2t = value_of(vars, sol, "x2t", j), x2b = value_of(vars, sol, "x2b", j);
        int xtb = value_of(vars, sol, "xtb", j), x2tb = value_of(vars, sol, "x2tb", j);
        plan.top_cross[j] = 2 * x2t + xtb + 2 * x2tb;
        plan.bottom_cross[j] = 2 * x2b + xtb + 2 * x2tb;
    }
    for (std::int64_t j = 0; j < plan.m; ++j) {
        plan.aisle_pass[j] = value_of(vars, sol, "xu", j) + 2 * value_of(vars, sol, "x2u", j);
        for (auto i : positions[j]) {
            if (value_of(vars, sol, "xpt", j, i))
                plan.branches.push_back({j, Side::Top, i, rat(2 * g.depth[i])});
            if (value_of(vars, sol, "xpb", j, i))
                plan.branches.push_back({j, Side::Bottom, i, rat(2 * (g.aisle_length - g.depth[i]))});
        }
    }
    return plan;
}

// ---- validation ----------------------------------------------------------

class Validator {
  public:
    Validator(const Geometry& g, const Depot& depot, TourPlan plan)
        : g_(g), depot_(depot), plan_(std::move(plan)) {
        effective_edges();
    }

    PickerWalk run(const std::vector<std::set<std::int64_t>>& must_cover) {
        check_degrees();
        check_connectivity();
        check_coverage(must_cover);
        PickerWalk walk;
        walk.alone_walks = alone_walks_;
        walk.end_depot = plan_.end_depot;
        walk.cost = total_cost();
        build_route(walk);
        return walk;
    }

    // Decoupling: walker excursions must anchor at the cart, not overlap the
    // cart tour, and respect the carrying capacity.
    void
    check_walker(const DecouplingInstance& inst) {
        for (std::int64_t j = 0; j + 1 < plan_.m; ++j) {
            if (plan_.walk_top[j] && plan_.top_cross[j])
                throw WalkError("walker overlaps cart tour on top cross aisle at gap " +
                                std::to_string(j));
            if (plan_.walk_bottom[j] && plan_.bottom_cross[j])
                throw WalkError("walker overlaps cart tour on bottom cross aisle at gap " +
                                std::to_string(j));
        }
        collect_excursions(Side::Top, plan_.walk_top);
        collect_excursions(Side::Bottom, plan_.walk_bottom);
        assign_alone_branches(inst);
    }

  private:
    const Geometry& g_;
    Depot depot_;
    TourPlan plan_;
    std::vector<int> top_eff_, bottom_eff_, aisle_eff_;
    std::vector<AloneWalk> alone_walks_;

    std::int64_t m() const { return plan_.m; }
    int node(std::int64_t j, Side s) const { return static_cast<int>(2 * j + (s == Side::Bottom)); }

    void effective_edges() {
        top_eff_ = plan_.top_cross;
        bottom_eff_ = plan_.bottom_cross;
        aisle_eff_ = plan_.aisle_pass;
        if (!plan_.path_aisle.empty()) {
            for (std::int64_t j = 0; j + 1 < m(); ++j) {
                if (plan_.path_top[j] && plan_.top_cross[j] != 2)
                    throw WalkError("path uses a top crossing the loop does not traverse twice");
                if (plan_.path_bottom[j] && plan_.bottom_cross[j] != 2)
                    throw WalkError("path uses a bottom crossing the loop does not traverse twice");
                top_eff_[j] -= plan_.path_top[j];
                bottom_eff_[j] -= plan_.path_bottom[j];
            }
            for (std::int64_t j = 0; j < m(); ++j) {
                if (plan_.path_aisle[j] && plan_.aisle_pass[j] != 2)
                    throw WalkError("path uses an aisle the loop does not traverse twice");
                aisle_eff_[j] -= plan_.path_aisle[j];
            }
        }
    }

    int degree(std::int64_t j, Side s) const {
        int d = s == Side::Top ? (j > 0 ? top_eff_[j - 1] : 0) + (j + 1 < m() ? top_eff_[j] : 0)
                               : (j > 0 ? bottom_eff_[j - 1] : 0) + (j + 1 < m() ? bottom_eff_[j] : 0);
        d += aisle_eff_[j];
        for (const auto& b : plan_.branches)
            if (b.aisle == j && b.side == s) d += 2;
        return d;
    }

    void check_degrees() {
        std::vector<int> odd;
        for (std::int64_t j = 0; j < m(); ++j)
            for (Side s : {Side::Top, Side::Bottom})
                if (degree(j, s) % 2) odd.push_back(node(j, s));
        if (plan_.end_depot && !(plan_.end_depot->aisle == depot_.aisle &&
                                 plan_.end_depot->side == depot_.side)) {
            std::vector<int> expect{node(depot_.aisle, depot_.side),
                                    node(plan_.end_depot->aisle, plan_.end_depot->side)};
            std::sort(expect.begin(), expect.end());
            if (odd != expect)
                throw WalkError("open trail must have odd degree exactly at the start and end depot");
        } else if (!odd.empty()) {
            throw WalkError("odd degree at " + std::to_string(odd.size()) + " entry node(s)");
        }
    }

    void check_connectivity() {
        std::vector<int> parent(2 * m());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (std::int64_t j = 0; j + 1 < m(); ++j) {
            if (top_eff_[j]) unite(node(j, Side::Top), node(j + 1, Side::Top));
            if (bottom_eff_[j]) unite(node(j, Side::Bottom), node(j + 1, Side::Bottom));
        }
        for (std::int64_t j = 0; j < m(); ++j)
            if (aisle_eff_[j]) unite(node(j, Side::Top), node(j, Side::Bottom));

        int depot_node = node(depot_.aisle, depot_.side);
        if (degree(depot_.aisle, depot_.side) == 0)
            throw WalkError("depot entry is not on the tour");
        int root = find(depot_node);
        for (std::int64_t j = 0; j < m(); ++j)
            for (Side s : {Side::Top, Side::Bottom})
                if (degree(j, s) > 0 && find(node(j, s)) != root)
                    throw WalkError("tour is disconnected at aisle " + std::to_string(j));
    }

    void check_coverage(const std::vector<std::set<std::int64_t>>& must_cover) {
        for (std::int64_t j = 0; j < m(); ++j) {
            for (auto i : must_cover[j]) {
                if (aisle_eff_[j] > 0) continue;
                bool covered = false;
                for (const auto& b : plan_.branches)
                    if (b.aisle == j &&
                        (b.side == Side::Top ? b.target >= i : b.target <= i))
                        covered = true;
                for (const auto& b : plan_.alone_branches)
                    if (b.aisle == j &&
                        (b.side == Side::Top ? b.target >= i : b.target <= i))
                        covered = true;
                if (!covered)
                    throw WalkError("required position " + std::to_string(i) + " in aisle " +
                                    std::to_string(j) + " is not covered");
            }
        }
    }

    Rat total_cost() const {
        Rat cost = 0;
        for (std::int64_t j = 0; j + 1 < m(); ++j)
            cost += rat(g_.cross_gap[j]) * rat(top_eff_[j] + bottom_eff_[j]);
        for (std::int64_t j = 0; j < m(); ++j) cost += rat(g_.aisle_length) * rat(aisle_eff_[j]);
        for (const auto& b : plan_.branches) cost += b.cost;
        for (const auto& w : alone_walks_) cost += w.cost;
        return cost;
    }

    void collect_excursions(Side side, const std::vector<int>& walk) {
        for (std::int64_t j = 0; j + 1 < m();) {
            if (walk[j] == 0) {
                ++j;
                continue;
            }
            int dir = walk[j];
            std::int64_t start = j;
            while (j + 1 < m() && walk[j] == dir) ++j;
            std::int64_t last_gap = j - 1;
            AloneWalk w;
            w.side = side;
            w.rightward = dir > 0;
            w.anchor_aisle = w.rightward ? start : last_gap + 1;
            w.last_aisle = w.rightward ? last_gap + 1 : start;
            w.cost = 0;
            for (std::int64_t gap = start; gap <= last_gap; ++gap)
                w.cost += plan_.beta * rat(2 * g_.cross_gap[gap]);
            // The cart must stand at the anchor entry.
            if (degree(w.anchor_aisle, side) == 0)
                throw WalkError("picker-alone excursion anchored off the cart tour at aisle " +
                                std::to_string(w.anchor_aisle));
            alone_walks_.push_back(std::move(w));
        }
    }

    // Attaches each alone branch to an excursion passing its aisle without
    // exceeding the capacity; leftmost anchor first, with backtracking as
    // the tie-breaker only.
    void assign_alone_branches(const DecouplingInstance& inst) {
        std::vector<std::vector<std::size_t>> options(plan_.alone_branches.size());
        for (std::size_t b = 0; b < plan_.alone_branches.size(); ++b) {
            const Branch& br = plan_.alone_branches[b];
            for (std::size_t w = 0; w < alone_walks_.size(); ++w) {
                const AloneWalk& walk = alone_walks_[w];
                if (walk.side != br.side) continue;
                bool passes = walk.rightward
                                  ? br.aisle > walk.anchor_aisle && br.aisle <= walk.last_aisle
                                  : br.aisle >= walk.last_aisle && br.aisle < walk.anchor_aisle;
                if (passes) options[b].push_back(w);
            }
            if (options[b].empty())
                throw WalkError("picker-alone branch at aisle " + std::to_string(br.aisle) +
                                " lies on no excursion");
            std::sort(options[b].begin(), options[b].end(), [&](std::size_t a, std::size_t c) {
                return alone_walks_[a].anchor_aisle < alone_walks_[c].anchor_aisle;
            });
        }
        std::vector<std::int64_t> load(alone_walks_.size(), 0);
        std::vector<std::size_t> pick(plan_.alone_branches.size(), 0);
        auto items_of = [&](const Branch& br) {
            return items_prefix(inst, br.aisle, br.target, br.side);
        };
        std::size_t b = 0;
        while (b < plan_.alone_branches.size()) {
            bool placed = false;
            for (; pick[b] < options[b].size(); ++pick[b]) {
                std::size_t w = options[b][pick[b]];
                if (load[w] + items_of(plan_.alone_branches[b]) <= plan_.capacity) {
                    load[w] += items_of(plan_.alone_branches[b]);
                    placed = true;
                    ++b;
                    break;
                }
            }
            if (placed) continue;
            // Backtrack.
            pick[b] = 0;
            if (b == 0)
                throw WalkError("picker capacity exceeded on an alone excursion");
            --b;
            load[options[b][pick[b]]] -= items_of(plan_.alone_branches[b]);
            ++pick[b];
        }
        // Record picks and items on the chosen excursions.
        for (std::size_t i = 0; i < plan_.alone_branches.size(); ++i) {
            const Branch& br = plan_.alone_branches[i];
            AloneWalk& w = alone_walks_[options[i][pick[i]]];
            w.picks.push_back({br.aisle, br.target});
            w.items += items_of(br);
            w.cost += br.cost;
        }
    }

    // Hierholzer over the effective multigraph; branches become excursions
    // attached to their entry stop.
    void build_route(PickerWalk& walk) const {
        std::vector<std::multiset<int>> adj(2 * m());
        for (std::int64_t j = 0; j + 1 < m(); ++j) {
            for (int k = 0; k < top_eff_[j]; ++k) {
                adj[node(j, Side::Top)].insert(node(j + 1, Side::Top));
                adj[node(j + 1, Side::Top)].insert(node(j, Side::Top));
            }
            for (int k = 0; k < bottom_eff_[j]; ++k) {
                adj[node(j, Side::Bottom)].insert(node(j + 1, Side::Bottom));
                adj[node(j + 1, Side::Bottom)].insert(node(j, Side::Bottom));
            }
        }
        for (std::int64_t j = 0; j < m(); ++j)
            for (int k = 0; k < aisle_eff_[j]; ++k) {
                adj[node(j, Side::Top)].insert(node(j, Side::Bottom));
                adj[node(j, Side::Bottom)].insert(node(j, Side::Top));
            }

        int start = node(depot_.aisle, depot_.side);
        std::vector<int> stack{start}, trail;
        while (!stack.empty()) {
            int v = stack.back();
            if (adj[v].empty()) {
                trail.push_back(v);
                stack.pop_back();
            } else {
                int u = *adj[v].begin();
                adj[v].erase(adj[v].begin());
                adj[u].erase(adj[u].find(v));
                stack.push_back(u);
            }
        }
        std::reverse(trail.begin(), trail.end());
        std::int64_t edges = std::accumulate(aisle_eff_.begin(), aisle_eff_.end(), std::int64_t(0));
        for (std::int64_t j = 0; j + 1 < m(); ++j) edges += top_eff_[j] + bottom_eff_[j];
        if (static_cast<std::int64_t>(trail.size()) != edges + 1)
            throw WalkError("route does not traverse every tour edge");

        for (int v : trail) {
            WalkStop stop;
            stop.aisle = v / 2;
            stop.side = v % 2 ? Side::Bottom : Side::Top;
            walk.circuit.push_back(stop);
        }
        // Attach branch picks to the first matching stop.
        for (const auto& b : plan_.branches) {
            for (auto& stop : walk.circuit) {
                if (stop.aisle == b.aisle && stop.side == b.side) {
                    stop.branch_picks.push_back(b.target);
                    break;
                }
            }
        }
    }
};

std::vector<int> walker_direction(const VarMap& vars, const mip::Assignment& sol, std::int64_t m,
                                  const char* right_sym, const char* left_sym) {
    std::vector<int> out(m - 1 >= 0 ? m - 1 : 0, 0);
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        if (value_of(vars, sol, right_sym, j)) out[j] = 1;
        if (value_of(vars, sol, left_sym, j)) out[j] = out[j] ? 2 : -1;
        if (out[j] == 2) throw WalkError("walker uses one gap in both directions");
    }
    return out;
}

}  // namespace

PickerWalk reconstruct_walk(const StandardInstance& inst, const VarMap& vars,
                            const mip::Assignment& solution) {
    TourPlan plan = core_plan(inst.geometry, inst.required, vars, solution);
    Validator v(inst.geometry, inst.depot, std::move(plan));
    return v.run(inst.required);
}

PickerWalk reconstruct_walk(const ScatteredInstance& inst, const VarMap& vars,
                            const mip::Assignment& solution) {
    auto candidates = inst.candidate_positions();
    TourPlan plan = core_plan(inst.geometry, candidates, vars, solution);
    // Selected positions must be covered and the selection must meet every
    // demand; both re-checked from instance data.
    std::vector<std::set<std::int64_t>> selected(inst.geometry.num_aisles);
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        for (auto i : candidates[j])
            if (value_of(vars, solution, "p", j, i)) selected[j].insert(i);
    for (const auto& [sku, need] : inst.demand) {
        std::int64_t got = 0;
        for (const auto& [key, qty] : inst.supply) {
            const auto& [aisle, pos, s] = key;
            if (s == sku && selected[aisle].count(pos)) got += qty;
        }
        if (got < need)
            throw WalkError("selection under-covers SKU " + std::to_string(sku));
    }
    Validator v(inst.geometry, inst.depot, std::move(plan));
    return v.run(selected);
}

PickerWalk reconstruct_walk(const DecouplingInstance& inst, const CostCoefficients& coeffs,
                            const VarMap& vars, const mip::Assignment& solution) {
    auto required = inst.required_positions();
    TourPlan plan = core_plan(inst.geometry, required, vars, solution);
    // Cart branches carry the cart-parking cost.
    for (auto& b : plan.branches)
        b.cost = b.side == Side::Top ? coeffs.branch_top.at({b.aisle, b.target})
                                     : coeffs.branch_bottom.at({b.aisle, b.target});
    plan.capacity = inst.capacity;
    plan.beta = inst.beta;
    plan.walk_top = walker_direction(vars, solution, plan.m, "wtr", "wtl");
    plan.walk_bottom = walker_direction(vars, solution, plan.m, "wbr", "wbl");
    for (std::int64_t j = 0; j < plan.m; ++j) {
        for (auto i : required[j]) {
            if (vars.has("xptp", j, i) && solution[vars.id("xptp", j, i)])
                plan.alone_branches.push_back(
                    {j, Side::Top, i, inst.beta * rat(2 * inst.geometry.depth[i])});
            if (vars.has("xpbp", j, i) && solution[vars.id("xpbp", j, i)])
                plan.alone_branches.push_back(
                    {j, Side::Bottom, i,
                     inst.beta * rat(2 * (inst.geometry.aisle_length - inst.geometry.depth[i]))});
        }
    }
    Validator v(inst.geometry, inst.depot, std::move(plan));
    v.check_walker(inst);
    return v.run(required);
}

PickerWalk reconstruct_walk(const MultiDepotInstance& inst, const VarMap& vars,
                            const mip::Assignment& solution) {
    TourPlan plan = core_plan(inst.geometry, inst.required, vars, solution);
    std::int64_t m = inst.geometry.num_aisles;
    plan.path_top.assign(m > 0 ? m - 1 : 0, 0);
    plan.path_bottom = plan.path_top;
    plan.path_aisle.assign(m, 0);
    for (std::int64_t j = 0; j + 1 < m; ++j) {
        int ytb = value_of(vars, solution, "ytb", j);
        plan.path_top[j] = value_of(vars, solution, "yt", j) + ytb;
        plan.path_bottom[j] = value_of(vars, solution, "yb", j) + ytb;
    }
    for (std::int64_t j = 0; j < m; ++j) plan.path_aisle[j] = value_of(vars, solution, "yu", j);
    int ends = 0;
    for (std::int64_t j = 0; j < m; ++j) {
        if (value_of(vars, solution, "et", j)) {
            plan.end_depot = Depot{j, Side::Top};
            ++ends;
        }
        if (value_of(vars, solution, "eb", j)) {
            plan.end_depot = Depot{j, Side::Bottom};
            ++ends;
        }
    }
    if (ends > 1) throw WalkError("more than one end depot selected");
    Validator v(inst.geometry, inst.start, std::move(plan));
    PickerWalk walk = v.run(inst.required);
    if (!walk.end_depot) walk.end_depot = inst.start;
    return walk;
}

PickerWalk walk_from_dp(const StandardInstance& inst, const DpResult& result) {
    const Geometry& g = inst.geometry;
    TourPlan plan;
    plan.m = g.num_aisles;
    plan.top_cross.assign(plan.m > 0 ? plan.m - 1 : 0, 0);
    plan.bottom_cross = plan.top_cross;
    plan.aisle_pass.assign(plan.m, 0);
    for (std::int64_t j = 0; j + 1 < plan.m; ++j) {
        switch (result.gap_configs[j]) {
            case GapConfig::TopTwice: plan.top_cross[j] = 2; break;
            case GapConfig::BottomTwice: plan.bottom_cross[j] = 2; break;
            case GapConfig::BothOnce: plan.top_cross[j] = plan.bottom_cross[j] = 1; break;
            case GapConfig::BothTwice: plan.top_cross[j] = plan.bottom_cross[j] = 2; break;
        }
    }
    for (std::int64_t j = 0; j < plan.m; ++j) {
        switch (result.aisle_actions[j]) {
            case AisleAction::None: break;
            case AisleAction::Traverse: plan.aisle_pass[j] = 1; break;
            case AisleAction::TraverseTwice: plan.aisle_pass[j] = 2; break;
            case AisleAction::BranchTop: {
                std::int64_t deepest = *inst.required[j].rbegin();
                plan.branches.push_back({j, Side::Top, deepest, rat(2 * g.depth[deepest])});
                break;
            }
            case AisleAction::BranchBottom: {
                std::int64_t shallowest = *inst.required[j].begin();
                plan.branches.push_back(
                    {j, Side::Bottom, shallowest, rat(2 * (g.aisle_length - g.depth[shallowest]))});
                break;
            }
            case AisleAction::SplitLargestGap: {
                auto [top_target, bottom_target] = result.splits[j];
                plan.branches.push_back({j, Side::Top, top_target, rat(2 * g.depth[top_target])});
                plan.branches.push_back({j, Side::Bottom, bottom_target,
                                         rat(2 * (g.aisle_length - g.depth[bottom_target]))});
                break;
            }
        }
    }
    Validator v(g, inst.depot, std::move(plan));
    return v.run(inst.required);
}

}  // namespace sprp
