#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sprp/rational.hpp"

namespace sprp::mip {

enum class VarKind { Binary, Integer };
enum class Sense { LE, GE, EQ };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Binary;
    std::int64_t lower = 0;
    std::int64_t upper = 1;
};

struct Term {
    int var = -1;
    Rat coeff;
};

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::LE;
    Rat rhs;
};

// Solver-agnostic integer linear program, minimization only. Variable names
// are unique; every constraint references declared variables.
struct Model {
    std::vector<Variable> variables;
    std::vector<Constraint> constraints;
    std::vector<Term> objective;

    int add_variable(const std::string& name, VarKind kind, std::int64_t lower, std::int64_t upper);
    int add_binary(const std::string& name) { return add_variable(name, VarKind::Binary, 0, 1); }
    // Declared but pinned to a constant (e.g. boundary variables).
    int add_fixed(const std::string& name, std::int64_t value) {
        return add_variable(name, VarKind::Binary, value, value);
    }
    void add_constraint(const std::string& name, std::vector<Term> terms, Sense sense, Rat rhs);
    void set_objective(std::vector<Term> terms);

    int var_id(const std::string& name) const;
    const Variable& var(int id) const { return variables.at(id); }

  private:
    std::map<std::string, int> by_name_;
};

// Full assignment of integer values to the model's variables.
using Assignment = std::vector<std::int64_t>;

struct Violation {
    std::string constraint;
    Rat activity;
    Sense sense;
    Rat rhs;
};

struct Evaluation {
    bool feasible = false;
    std::vector<Violation> violated;
    Rat objective;
};

// Exact rational feasibility check of every constraint and bound.
Evaluation evaluate(const Model& model, const Assignment& assignment);

Rat objective_value(const Model& model, const Assignment& assignment);

enum class SolveStatus { Optimal, Infeasible, BoundLimit, TimeLimit };

std::string status_name(SolveStatus s);

struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    Assignment values;     // empty unless an incumbent was found
    Rat objective;         // objective of `values` when present
    Rat best_bound;        // proven lower bound
    std::int64_t nodes = 0;
    std::int64_t lp_pivots = 0;
};

}  // namespace sprp::mip
