#include "sprp/instance.hpp"

#include <stdexcept>

namespace sprp {

std::string side_name(Side s) { return s == Side::Top ? "top" : "bottom"; }

Side side_from_name(const std::string& name) {
    if (name == "top") return Side::Top;
    if (name == "bottom") return Side::Bottom;
    throw std::invalid_argument("unknown side: " + name);
}

void Geometry::validate() const {
    if (num_aisles < 1) throw std::invalid_argument("geometry: need at least one aisle");
    if (positions_per_aisle < 1) throw std::invalid_argument("geometry: need at least one position");
    if (static_cast<std::int64_t>(cross_gap.size()) != num_aisles - 1)
        throw std::invalid_argument("geometry: cross_gap must have num_aisles-1 entries");
    for (auto g : cross_gap)
        if (g < 0) throw std::invalid_argument("geometry: negative cross gap");
    if (static_cast<std::int64_t>(depth.size()) != positions_per_aisle)
        throw std::invalid_argument("geometry: depth must have one entry per position");
    if (depth.front() <= 0) throw std::invalid_argument("geometry: first depth must be positive");
    for (std::size_t i = 1; i < depth.size(); ++i)
        if (depth[i] <= depth[i - 1])
            throw std::invalid_argument("geometry: depths must be strictly increasing");
    if (depth.back() >= aisle_length)
        throw std::invalid_argument("geometry: aisle_length must exceed the deepest position");
}

Geometry Geometry::unit(std::int64_t aisles, std::int64_t positions, std::int64_t gap) {
    Geometry g;
    g.num_aisles = aisles;
    g.positions_per_aisle = positions;
    g.cross_gap.assign(aisles > 0 ? aisles - 1 : 0, gap);
    g.depth.resize(positions);
    for (std::int64_t i = 0; i < positions; ++i) g.depth[i] = i + 1;
    g.aisle_length = positions + 1;
    g.validate();
    return g;
}

namespace {

void check_depot(const Geometry& g, const Depot& d, const char* what) {
    if (d.aisle < 0 || d.aisle >= g.num_aisles)
        throw std::invalid_argument(std::string(what) + ": aisle out of range");
}

void check_positions(const Geometry& g, const std::vector<std::set<std::int64_t>>& per_aisle) {
    if (static_cast<std::int64_t>(per_aisle.size()) != g.num_aisles)
        throw std::invalid_argument("required positions: need one set per aisle");
    for (const auto& s : per_aisle)
        for (auto i : s)
            if (i < 0 || i >= g.positions_per_aisle)
                throw std::invalid_argument("required position out of range");
}

}  // namespace

std::int64_t StandardInstance::total_required() const {
    std::int64_t n = 0;
    for (const auto& s : required) n += static_cast<std::int64_t>(s.size());
    return n;
}

void StandardInstance::validate() const {
    geometry.validate();
    check_depot(geometry, depot, "depot");
    check_positions(geometry, required);
    if (total_required() == 0) throw std::invalid_argument("nothing to pick");
}

void ScatteredInstance::validate() const {
    geometry.validate();
    check_depot(geometry, depot, "depot");
    if (demand.empty()) throw std::invalid_argument("nothing to pick");
    for (const auto& [sku, qty] : demand)
        if (qty <= 0) throw std::invalid_argument("demand must be positive");
    std::map<std::int64_t, std::int64_t> total;
    for (const auto& [key, qty] : supply) {
        const auto& [aisle, pos, sku] = key;
        if (aisle < 0 || aisle >= geometry.num_aisles)
            throw std::invalid_argument("supply aisle out of range");
        if (pos < 0 || pos >= geometry.positions_per_aisle)
            throw std::invalid_argument("supply position out of range");
        if (qty < 0) throw std::invalid_argument("supply must be nonnegative");
        total[sku] += qty;
    }
    for (const auto& [sku, qty] : demand)
        if (total[sku] < qty)
            throw std::invalid_argument("infeasible: total supply below demand for SKU " +
                                        std::to_string(sku));
}

std::vector<std::set<std::int64_t>> ScatteredInstance::candidate_positions() const {
    std::vector<std::set<std::int64_t>> cand(geometry.num_aisles);
    for (const auto& [key, qty] : supply) {
        const auto& [aisle, pos, sku] = key;
        if (qty > 0 && demand.count(sku)) cand[aisle].insert(pos);
    }
    return cand;
}

std::map<std::int64_t, std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>>
ScatteredInstance::supply_by_sku() const {
    std::map<std::int64_t, std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>> out;
    for (const auto& [key, qty] : supply) {
        const auto& [aisle, pos, sku] = key;
        if (qty > 0 && demand.count(sku)) out[sku].push_back({aisle, pos, qty});
    }
    return out;
}

void DecouplingInstance::validate() const {
    geometry.validate();
    check_depot(geometry, depot, "depot");
    if (demand_at.empty()) throw std::invalid_argument("nothing to pick");
    for (const auto& [key, qty] : demand_at) {
        if (key.first < 0 || key.first >= geometry.num_aisles)
            throw std::invalid_argument("pick aisle out of range");
        if (key.second < 0 || key.second >= geometry.positions_per_aisle)
            throw std::invalid_argument("pick position out of range");
        if (qty <= 0) throw std::invalid_argument("item counts must be positive");
    }
    if (capacity < 1) throw std::invalid_argument("picker capacity must be at least 1");
    if (beta <= 0 || beta > 1)
        throw std::invalid_argument("beta must lie in (0, 1]");
}

std::vector<std::set<std::int64_t>> DecouplingInstance::required_positions() const {
    std::vector<std::set<std::int64_t>> req(geometry.num_aisles);
    for (const auto& [key, qty] : demand_at) req[key.first].insert(key.second);
    return req;
}

StandardInstance DecouplingInstance::as_standard() const {
    StandardInstance s;
    s.geometry = geometry;
    s.depot = depot;
    s.required = required_positions();
    return s;
}

void MultiDepotInstance::validate() const {
    geometry.validate();
    check_depot(geometry, start, "start depot");
    check_positions(geometry, required);
    if (!end_candidates.count(start))
        throw std::invalid_argument("end candidates must contain the start depot");
    for (const auto& d : end_candidates) check_depot(geometry, d, "end candidate");
    std::int64_t n = 0;
    for (const auto& s : required) n += static_cast<std::int64_t>(s.size());
    if (n == 0) throw std::invalid_argument("nothing to pick");
}

StandardInstance MultiDepotInstance::as_standard() const {
    StandardInstance s;
    s.geometry = geometry;
    s.depot = start;
    s.required = required;
    return s;
}

std::int64_t items_prefix(const DecouplingInstance& inst, std::int64_t aisle, std::int64_t pos,
                          Side from) {
    if (aisle < 0 || aisle >= inst.geometry.num_aisles)
        throw std::invalid_argument("items_prefix: aisle out of range");
    if (pos < 0 || pos >= inst.geometry.positions_per_aisle)
        throw std::invalid_argument("items_prefix: position out of range");
    std::int64_t total = 0;
    for (const auto& [key, qty] : inst.demand_at) {
        if (key.first != aisle) continue;
        if (from == Side::Top ? key.second <= pos : key.second >= pos) total += qty;
    }
    return total;
}

}  // namespace sprp
