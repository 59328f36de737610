#include "sprp/mip/exhaustive.hpp"

#include <stdexcept>

namespace sprp::mip {

namespace {

struct Box {
    std::int64_t lo, hi;
};

// One pass of interval propagation: for every constraint and variable,
// tighten the variable's box using the extreme activities of the others.
// Returns false on a provably empty box.
bool propagate(const Model& model, std::vector<Box>& box) {
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 50) {
        changed = false;
        for (const auto& c : model.constraints) {
            for (const auto& pivot : c.terms) {
                if (pivot.coeff == 0) continue;
                Rat rest_min = 0, rest_max = 0;
                for (const auto& t : c.terms) {
                    if (t.var == pivot.var) continue;
                    if (t.coeff > 0) {
                        rest_min += t.coeff * rat(box[t.var].lo);
                        rest_max += t.coeff * rat(box[t.var].hi);
                    } else {
                        rest_min += t.coeff * rat(box[t.var].hi);
                        rest_max += t.coeff * rat(box[t.var].lo);
                    }
                }
                // pivot.coeff * x + rest (sense) rhs
                auto apply_le = [&](const Rat& rhs) {  // coeff*x <= rhs - rest_min
                    Rat room = rhs - rest_min;
                    if (pivot.coeff > 0) {
                        std::int64_t hi = to_int64(rat_floor(room / pivot.coeff));
                        if (hi < box[pivot.var].hi) {
                            box[pivot.var].hi = hi;
                            changed = true;
                        }
                    } else {
                        std::int64_t lo = to_int64(rat_ceil(room / pivot.coeff));
                        if (lo > box[pivot.var].lo) {
                            box[pivot.var].lo = lo;
                            changed = true;
                        }
                    }
                };
                auto apply_ge = [&](const Rat& rhs) {  // coeff*x >= rhs - rest_max
                    Rat need = rhs - rest_max;
                    if (pivot.coeff > 0) {
                        std::int64_t lo = to_int64(rat_ceil(need / pivot.coeff));
                        if (lo > box[pivot.var].lo) {
                            box[pivot.var].lo = lo;
                            changed = true;
                        }
                    } else {
                        std::int64_t hi = to_int64(rat_floor(need / pivot.coeff));
                        if (hi < box[pivot.var].hi) {
                            box[pivot.var].hi = hi;
                            changed = true;
                        }
                    }
                };
                if (c.sense == Sense::LE || c.sense == Sense::EQ) apply_le(c.rhs);
                if (c.sense == Sense::GE || c.sense == Sense::EQ) apply_ge(c.rhs);
                if (box[pivot.var].lo > box[pivot.var].hi) return false;
            }
        }
    }
    return true;
}

}  // namespace

ExhaustiveResult model_exhaustive(const Model& model, int max_free_vars) {
    const std::size_t n = model.variables.size();
    std::vector<Box> box(n);
    for (std::size_t j = 0; j < n; ++j) box[j] = {model.variables[j].lower, model.variables[j].upper};

    ExhaustiveResult out;
    if (!propagate(model, box)) return out;

    int free_vars = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (box[j].lo < box[j].hi) ++free_vars;
    if (free_vars > max_free_vars)
        throw std::invalid_argument("model_exhaustive size cap exceeded: " +
                                    std::to_string(free_vars) + " free variables");

    // Activity intervals maintained incrementally as variables get fixed.
    struct Activity {
        Rat min, max;
    };
    std::vector<Activity> act(model.constraints.size());
    auto bounds_contrib = [&](const Term& t, std::size_t j) -> std::pair<Rat, Rat> {
        if (t.coeff > 0) return {Rat(t.coeff * rat(box[j].lo)), Rat(t.coeff * rat(box[j].hi))};
        return {Rat(t.coeff * rat(box[j].hi)), Rat(t.coeff * rat(box[j].lo))};
    };
    for (std::size_t ci = 0; ci < model.constraints.size(); ++ci) {
        act[ci] = {Rat(0), Rat(0)};
        for (const auto& t : model.constraints[ci].terms) {
            auto [lo, hi] = bounds_contrib(t, t.var);
            act[ci].min += lo;
            act[ci].max += hi;
        }
    }
    // Terms grouped per variable for the incremental updates.
    std::vector<std::vector<std::pair<int, Rat>>> var_terms(n);  // (constraint, coeff)
    for (std::size_t ci = 0; ci < model.constraints.size(); ++ci)
        for (const auto& t : model.constraints[ci].terms)
            var_terms[t.var].push_back({static_cast<int>(ci), t.coeff});

    std::vector<Rat> obj_coeff(n, Rat(0));
    for (const auto& t : model.objective) obj_coeff[t.var] += t.coeff;
    Rat obj_rest_min = 0;  // minimum objective contribution of unfixed variables
    for (std::size_t j = 0; j < n; ++j)
        obj_rest_min += obj_coeff[j] > 0 ? obj_coeff[j] * rat(box[j].lo)
                                         : obj_coeff[j] * rat(box[j].hi);

    Assignment current(n, 0);
    bool found = false;
    Rat best;
    Assignment best_values;

    auto consistent = [&](std::size_t ci) {
        const auto& c = model.constraints[ci];
        switch (c.sense) {
            case Sense::LE: return act[ci].min <= c.rhs;
            case Sense::GE: return act[ci].max >= c.rhs;
            case Sense::EQ: return act[ci].min <= c.rhs && act[ci].max >= c.rhs;
        }
        return true;
    };

    // Depth-first over variables in declaration order.
    auto dfs = [&](auto&& self, std::size_t j, Rat obj_min) -> void {
        if (found && obj_min >= best) return;
        if (j == n) {
            Rat value = objective_value(model, current);
            if (!found || value < best) {
                found = true;
                best = value;
                best_values = current;
            }
            return;
        }
        Box saved = box[j];
        for (std::int64_t v = saved.lo; v <= saved.hi; ++v) {
            current[j] = v;
            // Fix the variable to v and patch activity intervals.
            Rat delta_obj = obj_coeff[j] * rat(v) -
                            (obj_coeff[j] > 0 ? obj_coeff[j] * rat(saved.lo)
                                              : obj_coeff[j] * rat(saved.hi));
            std::vector<std::pair<int, std::pair<Rat, Rat>>> patches;
            bool ok = true;
            box[j] = {v, v};
            for (const auto& [ci, coeff] : var_terms[j]) {
                Rat lo_old, hi_old;
                if (coeff > 0) {
                    lo_old = coeff * rat(saved.lo);
                    hi_old = coeff * rat(saved.hi);
                } else {
                    lo_old = coeff * rat(saved.hi);
                    hi_old = coeff * rat(saved.lo);
                }
                Rat fixed = coeff * rat(v);
                patches.push_back({ci, {lo_old, hi_old}});
                act[ci].min += fixed - lo_old;
                act[ci].max += fixed - hi_old;
                if (!consistent(ci)) ok = false;
            }
            if (ok) self(self, j + 1, obj_min + delta_obj);
            for (std::size_t k = var_terms[j].size(); k-- > 0;) {
                const auto& [ci, coeff] = var_terms[j][k];
                Rat fixed = coeff * rat(v);
                act[ci].min += patches[k].second.first - fixed;
                act[ci].max += patches[k].second.second - fixed;
            }
            box[j] = saved;
        }
    };
    dfs(dfs, 0, obj_rest_min);

    out.feasible = found;
    if (found) {
        out.objective = best;
        out.values = best_values;
    }
    return out;
}

}  // namespace sprp::mip
