#pragma once

#include <string>
#include <vector>

#include "sprp/mip/model.hpp"

namespace sprp::mip {

// Deterministic CPLEX-LP-format text: Minimize / Subject To / Bounds /
// Binaries / Generals / End, variables in declaration order, coefficients as
// shortest exact decimals, lines at most 255 characters. Constraint rows
// whose coefficients have no finite decimal form are scaled row-wise by the
// denominator lcm (an equivalent constraint); if the objective needs such a
// scale factor it is applied to the whole objective and recorded in a
// comment line "\ objective scaled by N".
std::string export_lp(const Model& model);

struct ParsedSolution {
    Assignment values;
    bool missing_defaulted = false;          // some variables were absent (set to 0)
    std::vector<std::string> missing_names;
};

// Reads whitespace-separated "name value" lines; '#' starts a comment.
// Values within 1e-6 of an integer are rounded; anything farther is an
// error, as are unknown variable names. Missing variables default to zero
// with a warning flag.
ParsedSolution read_solution(const Model& model, const std::string& text);

// Writes the bundled solver's assignment in the same "name value" format.
std::string write_solution(const Model& model, const Assignment& assignment);

}  // namespace sprp::mip
