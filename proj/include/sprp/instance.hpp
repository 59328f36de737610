#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sprp/rational.hpp"

namespace sprp {

enum class Side { Top, Bottom };

inline Side opposite(Side s) { return s == Side::Top ? Side::Bottom : Side::Top; }
std::string side_name(Side s);
Side side_from_name(const std::string& name);

// Rectangular single-block warehouse. Aisles are indexed left to right,
// picking positions top to bottom. depth[i] is the travel distance from the
// top cross aisle to position i; aisle_length is the distance between the
// two cross aisles. cross_gap[j] is the distance between the entries of
// aisles j and j+1 (identical for the top and the bottom cross aisle).
// All distances are exact integers in a configurable base unit.
struct Geometry {
    std::int64_t num_aisles = 0;
    std::int64_t positions_per_aisle = 0;
    std::vector<std::int64_t> cross_gap;  // size num_aisles-1
    std::vector<std::int64_t> depth;      // size positions_per_aisle, strictly increasing
    std::int64_t aisle_length = 0;

    void validate() const;

    // Unit-cell geometry: depth[i] = i+1, aisle_length = n+1, gaps = 5.
    static Geometry unit(std::int64_t aisles, std::int64_t positions, std::int64_t gap = 5);
};

struct Depot {
    std::int64_t aisle = 0;
    Side side = Side::Bottom;

    bool operator==(const Depot&) const = default;
    auto operator<=>(const Depot&) const = default;
};

// Required picking positions per aisle (dedicated storage).
struct StandardInstance {
    Geometry geometry;
    Depot depot;
    std::vector<std::set<std::int64_t>> required;  // size num_aisles

    std::int64_t total_required() const;
    void validate() const;
};

// Scattered storage: SKUs can be available from several positions with
// limited per-position supply; demanded quantities must be collected but
// the positions to pick from are part of the decision.
struct ScatteredInstance {
    Geometry geometry;
    Depot depot;
    std::map<std::int64_t, std::int64_t> demand;  // SKU -> requested items b_h > 0
    // (aisle, position, sku) -> available items; absent means zero.
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::int64_t> supply;

    void validate() const;

    // Positions in aisle j holding at least one demanded SKU.
    std::vector<std::set<std::int64_t>> candidate_positions() const;
    // Positions of SKU h in aisle j together with the available quantity.
    std::map<std::int64_t, std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>>
    supply_by_sku() const;  // sku -> [(aisle, pos, qty)]
};

// Picker/cart decoupling: dedicated storage with item counts, picker-alone
// capacity C and travel-time multiplier beta in (0, 1].
struct DecouplingInstance {
    Geometry geometry;
    Depot depot;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> demand_at;  // (aisle,pos) -> items
    std::int64_t capacity = 1;
    Rat beta = 1;

    void validate() const;
    std::vector<std::set<std::int64_t>> required_positions() const;
    StandardInstance as_standard() const;
};

// Multiple end depots: the tour may end at any candidate depot.
struct MultiDepotInstance {
    Geometry geometry;
    Depot start;
    std::set<Depot> end_candidates;  // always contains start
    std::vector<std::set<std::int64_t>> required;

    void validate() const;
    StandardInstance as_standard() const;
};

// Number of required items stored in aisle j between the top (bottom) cross
// aisle and position i, inclusive.
std::int64_t items_prefix(const DecouplingInstance& inst, std::int64_t aisle, std::int64_t pos,
                          Side from);

}  // namespace sprp
