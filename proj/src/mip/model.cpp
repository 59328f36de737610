#include "sprp/mip/model.hpp"

#include <stdexcept>

namespace sprp::mip {

int Model::add_variable(const std::string& name, VarKind kind, std::int64_t lower,
                        std::int64_t upper) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate variable name: " + name);
    if (lower > upper) throw std::invalid_argument("empty bound range for " + name);
    if (kind == VarKind::Binary && (lower < 0 || upper > 1))
        throw std::invalid_argument("binary variable with non [0,1] bounds: " + name);
    int id = static_cast<int>(variables.size());
    variables.push_back({name, kind, lower, upper});
    by_name_[name] = id;
    return id;
}

void Model::add_constraint(const std::string& name, std::vector<Term> terms, Sense sense, Rat rhs) {
    for (const auto& t : terms)
        if (t.var < 0 || t.var >= static_cast<int>(variables.size()))
            throw std::invalid_argument("constraint " + name + " references unknown variable");
    constraints.push_back({name, std::move(terms), sense, std::move(rhs)});
}

void Model::set_objective(std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.var < 0 || t.var >= static_cast<int>(variables.size()))
            throw std::invalid_argument("objective references unknown variable");
    objective = std::move(terms);
}

int Model::var_id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("unknown variable: " + name);
    return it->second;
}

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::BoundLimit: return "bound-limit";
        case SolveStatus::TimeLimit: return "time-limit";
    }
    return "?";
}

Rat objective_value(const Model& model, const Assignment& assignment) {
    Rat v = 0;
    for (const auto& t : model.objective) v += t.coeff * rat(assignment.at(t.var));
    return v;
}

Evaluation evaluate(const Model& model, const Assignment& assignment) {
    if (assignment.size() != model.variables.size())
        throw std::invalid_argument("assignment does not cover all variables");
    Evaluation out;
    for (std::size_t v = 0; v < model.variables.size(); ++v) {
        const Variable& var = model.variables[v];
        if (assignment[v] < var.lower || assignment[v] > var.upper)
            out.violated.push_back(
                {"bound:" + var.name, rat(assignment[v]), Sense::LE, rat(var.upper)});
    }
    for (const auto& c : model.constraints) {
        Rat activity = 0;
        for (const auto& t : c.terms) activity += t.coeff * rat(assignment[t.var]);
        bool ok = c.sense == Sense::LE   ? activity <= c.rhs
                  : c.sense == Sense::GE ? activity >= c.rhs
                                         : activity == c.rhs;
        if (!ok) out.violated.push_back({c.name, activity, c.sense, c.rhs});
    }
    out.feasible = out.violated.empty();
    out.objective = objective_value(model, assignment);
    return out;
}

}  // namespace sprp::mip
