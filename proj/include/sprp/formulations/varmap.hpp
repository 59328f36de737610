#pragma once

#include <map>
#include <string>
#include <vector>

#include "sprp/mip/model.hpp"

namespace sprp {

// Bidirectional mapping between the formulation's decision variables and
// model variable ids. Model names are "<symbol>_<aisle>" or
// "<symbol>_<aisle>_<position>"; the symbol table is written next to LP
// exports so external solutions can be mapped back (see sidecar()).
//
// Boundary variables that the formulation pins to zero (cross configurations
// and the two-component flag at the last aisle, walker directions at the
// last aisle, end-depot slots without a candidate) are present with fixed
// [0,0] bounds rather than omitted.
class VarMap {
  public:
    struct Entry {
        std::string symbol;
        std::int64_t aisle = -1;
        std::int64_t pos = -1;
    };

    int add(mip::Model& model, const std::string& symbol, std::int64_t aisle, std::int64_t pos,
            mip::VarKind kind, std::int64_t lower, std::int64_t upper);
    int add_binary(mip::Model& model, const std::string& symbol, std::int64_t aisle,
                   std::int64_t pos = -1) {
        return add(model, symbol, aisle, pos, mip::VarKind::Binary, 0, 1);
    }
    int add_fixed_zero(mip::Model& model, const std::string& symbol, std::int64_t aisle,
                       std::int64_t pos = -1) {
        return add(model, symbol, aisle, pos, mip::VarKind::Binary, 0, 0);
    }

    bool has(const std::string& symbol, std::int64_t aisle, std::int64_t pos = -1) const;
    int id(const std::string& symbol, std::int64_t aisle, std::int64_t pos = -1) const;
    const Entry& entry(int id) const;

    // Tab-separated "name symbol aisle [position]" lines.
    std::string sidecar() const;

  private:
    std::map<std::tuple<std::string, std::int64_t, std::int64_t>, int> ids_;
    std::map<int, Entry> entries_;
};

}  // namespace sprp
