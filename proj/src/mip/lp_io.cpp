#include "sprp/mip/lp_io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sprp::mip {

namespace {

mpz_class denominator_lcm(const std::vector<Term>& terms) {
    mpz_class d(1);
    for (const auto& t : terms) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
    return d;
}

bool decimal_renderable(const Rat& q) { return rat_to_decimal(q).has_value(); }

bool all_decimal(const std::vector<Term>& terms, const Rat& rhs) {
    for (const auto& t : terms)
        if (!decimal_renderable(t.coeff)) return false;
    return decimal_renderable(rhs);
}

// Appends terms as "c name" pieces, wrapping lines at 255 characters.
void append_terms(std::ostringstream& out, const Model& model, const std::vector<Term>& terms,
                  std::size_t& line_len, bool first) {
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        Rat mag = abs(t.coeff);
        std::string piece;
        if (first) {
            piece = t.coeff < 0 ? "- " : "";
            first = false;
        } else {
            piece = t.coeff < 0 ? " - " : " + ";
        }
        if (mag != 1) piece += rat_to_decimal(mag).value() + " ";
        piece += model.var(t.var).name;
        if (line_len + piece.size() > 250) {
            out << "\n ";
            line_len = 1;
            if (piece.starts_with(" ")) piece = piece.substr(1);
        }
        out << piece;
        line_len += piece.size();
    }
    if (first) {
        out << "0";  // empty expression
        ++line_len;
    }
}

}  // namespace

std::string export_lp(const Model& model) {
    std::ostringstream out;

    std::vector<Term> objective = model.objective;
    mpz_class obj_scale = denominator_lcm(objective);
    bool scaled = false;
    if (!all_decimal(objective, Rat(0))) {
        for (auto& t : objective) t.coeff *= Rat(obj_scale);
        scaled = true;
    }
    if (scaled) out << "\\ objective scaled by " << obj_scale.get_str() << "\n";
    out << "Minimize\n obj: ";
    std::size_t len = 6;
    append_terms(out, model, objective, len, true);
    out << "\n";

    out << "Subject To\n";
    for (const auto& c : model.constraints) {
        std::vector<Term> terms = c.terms;
        Rat rhs = c.rhs;
        if (!all_decimal(terms, rhs)) {
            mpz_class l = denominator_lcm(terms);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.get_den_mpz_t());
            Rat scale{l};
            for (auto& t : terms) t.coeff *= scale;
            rhs *= scale;
        }
        out << " " << c.name << ": ";
        std::size_t line_len = c.name.size() + 3;
        append_terms(out, model, terms, line_len, true);
        const char* rel = c.sense == Sense::LE ? " <= " : c.sense == Sense::GE ? " >= " : " = ";
        out << rel << rat_to_decimal(rhs).value() << "\n";
    }

    // Bounds for fixed variables and for integers with non-default ranges.
    std::vector<std::string> bound_lines;
    for (const auto& v : model.variables) {
        if (v.lower == v.upper) {
            bound_lines.push_back(" " + v.name + " = " + std::to_string(v.lower));
        } else if (v.kind == VarKind::Integer) {
            bound_lines.push_back(" " + std::to_string(v.lower) + " <= " + v.name + " <= " +
                                  std::to_string(v.upper));
        }
    }
    if (!bound_lines.empty()) {
        out << "Bounds\n";
        for (const auto& l : bound_lines) out << l << "\n";
    }

    std::string binaries, generals;
    for (const auto& v : model.variables)
        (v.kind == VarKind::Binary ? binaries : generals) += " " + v.name + "\n";
    if (!binaries.empty()) out << "Binaries\n" << binaries;
    if (!generals.empty()) out << "Generals\n" << generals;
    out << "End\n";
    return out.str();
}

ParsedSolution read_solution(const Model& model, const std::string& text) {
    ParsedSolution out;
    out.values.assign(model.variables.size(), 0);
    std::vector<bool> seen(model.variables.size(), false);

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        double value;
        if (!(ls >> value)) throw std::invalid_argument("solution line without a value: " + line);
        int id = model.var_id(name);  // throws for unknown names
        double nearest = std::round(value);
        if (std::abs(value - nearest) > 1e-6)
            throw std::invalid_argument("non-integral value for " + name + ": " +
                                        std::to_string(value));
        out.values[id] = static_cast<std::int64_t>(nearest);
        seen[id] = true;
    }
    for (std::size_t j = 0; j < seen.size(); ++j) {
        if (!seen[j]) {
            out.missing_defaulted = true;
            out.missing_names.push_back(model.variables[j].name);
        }
    }
    return out;
}

std::string write_solution(const Model& model, const Assignment& assignment) {
    std::ostringstream out;
    out << "# objective " << rat_to_string(objective_value(model, assignment)) << "\n";
    for (std::size_t j = 0; j < model.variables.size(); ++j)
        out << model.variables[j].name << " " << assignment[j] << "\n";
    return out.str();
}

}  // namespace sprp::mip
