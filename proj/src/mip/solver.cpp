#include "sprp/mip/solver.hpp"

#include <chrono>
#include <queue>
#include <stdexcept>

#include "sprp/mip/simplex.hpp"

namespace sprp::mip {

namespace {

struct Node {
    Rat bound;
    std::int64_t seq = 0;
    std::vector<std::int64_t> lower, upper;

    bool operator>(const Node& other) const {
        if (bound != other.bound) return bound > other.bound;
        return seq > other.seq;
    }
};

// Every integer assignment has an objective that is a multiple of
// gcd(coefficients), so LP bounds can be rounded up onto that lattice before
// pruning.
Rat objective_lattice(const Model& model) {
    mpz_class d(1);
    for (const auto& t : model.objective)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_class g(0);
    for (const auto& t : model.objective) {
        mpz_class scaled = t.coeff.get_num() * (d / t.coeff.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    if (g == 0) g = 1;
    Rat step(g, d);
    step.canonicalize();
    return step;
}

Rat lattice_ceil(const Rat& v, const Rat& step) {
    return Rat(rat_ceil(Rat(v / step))) * step;
}

// Interval propagation over the node's integer boxes. Only implied
// tightenings, so the feasible set is unchanged; returns false when a box
// empties.
bool propagate_bounds(const Model& model, std::vector<std::int64_t>& lower,
                      std::vector<std::int64_t>& upper) {
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 10) {
        changed = false;
        for (const auto& c : model.constraints) {
            Rat amin = 0, amax = 0;
            for (const auto& t : c.terms) {
                if (t.coeff > 0) {
                    amin += t.coeff * rat(lower[t.var]);
                    amax += t.coeff * rat(upper[t.var]);
                } else {
                    amin += t.coeff * rat(upper[t.var]);
                    amax += t.coeff * rat(lower[t.var]);
                }
            }
            if (c.sense != Sense::GE && amin > c.rhs) return false;
            if (c.sense != Sense::LE && amax < c.rhs) return false;
            for (const auto& t : c.terms) {
                if (t.coeff == 0) continue;
                // Activity range of the other terms.
                Rat rest_min, rest_max;
                if (t.coeff > 0) {
                    rest_min = amin - t.coeff * rat(lower[t.var]);
                    rest_max = amax - t.coeff * rat(upper[t.var]);
                } else {
                    rest_min = amin - t.coeff * rat(upper[t.var]);
                    rest_max = amax - t.coeff * rat(lower[t.var]);
                }
                if (c.sense != Sense::GE) {  // coeff * x <= rhs - rest_min
                    Rat room = c.rhs - rest_min;
                    if (t.coeff > 0) {
                        std::int64_t hi = to_int64(rat_floor(room / t.coeff));
                        if (hi < upper[t.var]) {
                            upper[t.var] = hi;
                            changed = true;
                        }
                    } else {
                        std::int64_t lo = to_int64(rat_ceil(room / t.coeff));
                        if (lo > lower[t.var]) {
                            lower[t.var] = lo;
                            changed = true;
                        }
                    }
                }
                if (c.sense != Sense::LE) {  // coeff * x >= rhs - rest_max
                    Rat need = c.rhs - rest_max;
                    if (t.coeff > 0) {
                        std::int64_t lo = to_int64(rat_ceil(need / t.coeff));
                        if (lo > lower[t.var]) {
                            lower[t.var] = lo;
                            changed = true;
                        }
                    } else {
                        std::int64_t hi = to_int64(rat_floor(need / t.coeff));
                        if (hi < upper[t.var]) {
                            upper[t.var] = hi;
                            changed = true;
                        }
                    }
                }
                if (lower[t.var] > upper[t.var]) return false;
            }
        }
    }
    return true;
}

std::vector<Rat> to_rat(const std::vector<std::int64_t>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(rat(x));
    return out;
}

// Most fractional binary first, ties by declaration order; integers only
// when no binary is fractional.
int pick_branch_variable(const Model& model, const std::vector<Rat>& x) {
    int branch = -1;
    Rat best_score(-1);
    bool branch_is_binary = false;
    for (std::size_t j = 0; j < model.variables.size(); ++j) {
        if (is_integer(x[j])) continue;
        Rat frac = x[j] - Rat(rat_floor(x[j]));
        Rat score = std::min(frac, Rat(1 - frac));
        bool is_bin = model.variables[j].kind == VarKind::Binary;
        if (branch < 0 || (is_bin && !branch_is_binary) ||
            (is_bin == branch_is_binary && score > best_score)) {
            branch = static_cast<int>(j);
            best_score = score;
            branch_is_binary = is_bin;
        }
    }
    return branch;
}

}  // namespace

Solution solve_bb(const Model& model, const SolveLimits& limits,
                  const std::optional<Assignment>& warm_start) {
    for (const auto& v : model.variables)
        if (v.lower > v.upper) throw std::invalid_argument("solve_bb: empty domain for " + v.name);

    auto start_time = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (limits.time_seconds <= 0) return false;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_time;
        return elapsed.count() >= limits.time_seconds;
    };

    Solution sol;
    sol.status = SolveStatus::Infeasible;
    Rat lattice = objective_lattice(model);

    bool have_incumbent = false;
    auto offer_incumbent = [&](Assignment values, const Rat& objective) {
        if (!have_incumbent || objective < sol.objective) {
            sol.values = std::move(values);
            sol.objective = objective;
            have_incumbent = true;
        }
    };
    if (warm_start) {
        Evaluation ev = evaluate(model, *warm_start);
        if (ev.feasible) offer_incumbent(*warm_start, ev.objective);
    }

    std::vector<std::int64_t> root_lower, root_upper;
    for (const auto& v : model.variables) {
        root_lower.push_back(v.lower);
        root_upper.push_back(v.upper);
    }
    SimplexEngine engine(model);

    // One greedy dive seeds the incumbent: follow the LP, rounding the
    // branch variable to its nearest integer. With an exact incumbent in
    // hand, the best-bound loop prunes whole plateaus of equal bounds.
    {
        std::vector<std::int64_t> lower = root_lower, upper = root_upper;
        for (int depth = 0; depth < 400 && !out_of_time(); ++depth) {
            if (!propagate_bounds(model, lower, upper)) break;
            LpResult lp = engine.solve(to_rat(lower), to_rat(upper));
            sol.lp_pivots += lp.pivots;
            if (!lp.feasible) break;
            if (have_incumbent && lattice_ceil(lp.objective, lattice) >= sol.objective) break;
            int branch = pick_branch_variable(model, lp.x);
            if (branch < 0) {
                Assignment values(model.variables.size());
                for (std::size_t j = 0; j < values.size(); ++j)
                    values[j] = to_int64(mpz_class(lp.x[j].get_num()));
                offer_incumbent(std::move(values), lp.objective);
                break;
            }
            Rat frac = lp.x[branch] - Rat(rat_floor(lp.x[branch]));
            if (frac >= rat(1, 2))
                lower[branch] = to_int64(rat_ceil(lp.x[branch]));
            else
                upper[branch] = to_int64(rat_floor(lp.x[branch]));
        }
    }

    std::priority_queue<Node, std::vector<Node>, std::greater<>> open;
    std::int64_t seq = 0;

    Node root;
    root.seq = seq++;
    root.lower = root_lower;
    root.upper = root_upper;
    // Trivial bound from the variable boxes; tightened by the root LP.
    root.bound = 0;
    for (const auto& t : model.objective)
        root.bound +=
            t.coeff > 0 ? t.coeff * rat(root.lower[t.var]) : t.coeff * rat(root.upper[t.var]);
    open.push(std::move(root));

    bool interrupted_time = false, interrupted_nodes = false;

    while (!open.empty()) {
        if (out_of_time()) {
            interrupted_time = true;
            break;
        }
        if (limits.max_nodes > 0 && sol.nodes >= limits.max_nodes) {
            interrupted_nodes = true;
            break;
        }
        Node node = open.top();
        open.pop();
        if (have_incumbent && node.bound >= sol.objective) continue;  // pruned by a newer incumbent
        ++sol.nodes;

        if (!propagate_bounds(model, node.lower, node.upper)) continue;
        LpResult lp = engine.solve(to_rat(node.lower), to_rat(node.upper));
        sol.lp_pivots += lp.pivots;
        if (!lp.feasible) continue;
        Rat bound = lattice_ceil(lp.objective, lattice);
        if (have_incumbent && bound >= sol.objective) continue;

        int branch = pick_branch_variable(model, lp.x);
        if (branch < 0) {
            // Integral: candidate incumbent.
            Assignment values(model.variables.size());
            for (std::size_t j = 0; j < values.size(); ++j)
                values[j] = to_int64(mpz_class(lp.x[j].get_num()));
            offer_incumbent(std::move(values), lp.objective);
            continue;
        }

        Node down = node, up = node;
        down.seq = seq++;
        up.seq = seq++;
        down.bound = bound;
        up.bound = bound;
        down.upper[branch] = to_int64(rat_floor(lp.x[branch]));
        up.lower[branch] = to_int64(rat_ceil(lp.x[branch]));
        open.push(std::move(down));
        open.push(std::move(up));
    }

    Rat best_open_bound;
    bool have_open_bound = false;
    if (!open.empty()) {
        best_open_bound = open.top().bound;
        have_open_bound = true;
    }

    if (interrupted_time || interrupted_nodes) {
        sol.status = interrupted_time ? SolveStatus::TimeLimit : SolveStatus::BoundLimit;
        sol.best_bound = have_open_bound
                             ? (have_incumbent ? std::min(best_open_bound, sol.objective)
                                               : best_open_bound)
                             : sol.objective;
        return sol;
    }
    if (have_incumbent) {
        sol.status = SolveStatus::Optimal;
        sol.best_bound = sol.objective;
    }
    return sol;
}

}  // namespace sprp::mip
