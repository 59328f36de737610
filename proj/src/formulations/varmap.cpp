#include "sprp/formulations/varmap.hpp"

#include <sstream>
#include <stdexcept>

namespace sprp {

int VarMap::add(mip::Model& model, const std::string& symbol, std::int64_t aisle, std::int64_t pos,
                mip::VarKind kind, std::int64_t lower, std::int64_t upper) {
    std::string name = symbol + "_" + std::to_string(aisle);
    if (pos >= 0) name += "_" + std::to_string(pos);
    int id = model.add_variable(name, kind, lower, upper);
    auto key = std::make_tuple(symbol, aisle, pos);
    if (!ids_.emplace(key, id).second)
        throw std::invalid_argument("duplicate formulation variable " + name);
    entries_[id] = {symbol, aisle, pos};
    return id;
}

bool VarMap::has(const std::string& symbol, std::int64_t aisle, std::int64_t pos) const {
    return ids_.count({symbol, aisle, pos}) > 0;
}

int VarMap::id(const std::string& symbol, std::int64_t aisle, std::int64_t pos) const {
    auto it = ids_.find({symbol, aisle, pos});
    if (it == ids_.end())
        throw std::invalid_argument("no variable " + symbol + "_" + std::to_string(aisle) +
                                    (pos >= 0 ? "_" + std::to_string(pos) : ""));
    return it->second;
}

const VarMap::Entry& VarMap::entry(int id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::invalid_argument("unmapped variable id");
    return it->second;
}

std::string VarMap::sidecar() const {
    std::ostringstream out;
    out << "# variable\tsymbol\taisle\tposition\n";
    for (const auto& [id, e] : entries_) {
        out << e.symbol << "_" << e.aisle;
        if (e.pos >= 0) out << "_" << e.pos;
        out << "\t" << e.symbol << "\t" << e.aisle;
        if (e.pos >= 0) out << "\t" << e.pos;
        out << "\n";
    }
    return out.str();
}

}  // namespace sprp
