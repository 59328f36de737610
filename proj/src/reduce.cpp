#include "sprp/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace sprp {

namespace {

// Smallest aisle interval containing all marked aisles.
struct Span {
    std::int64_t lo, hi;
};

Span span_of(std::int64_t num_aisles, const std::vector<bool>& marked) {
    std::int64_t lo = num_aisles, hi = -1;
    for (std::int64_t j = 0; j < num_aisles; ++j) {
        if (!marked[j]) continue;
        lo = std::min(lo, j);
        hi = std::max(hi, j);
    }
    if (hi < 0) throw std::invalid_argument("nothing to pick");
    return {lo, hi};
}

Geometry slice_geometry(const Geometry& g, Span s) {
    Geometry out = g;
    out.num_aisles = s.hi - s.lo + 1;
    out.cross_gap.assign(g.cross_gap.begin() + s.lo, g.cross_gap.begin() + s.hi);
    return out;
}

}  // namespace

Reduced<StandardInstance> reduce_to_relevant(const StandardInstance& inst) {
    inst.validate();
    std::vector<bool> marked(inst.geometry.num_aisles, false);
    marked[inst.depot.aisle] = true;
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        if (!inst.required[j].empty()) marked[j] = true;
    Span s = span_of(inst.geometry.num_aisles, marked);

    StandardInstance out;
    out.geometry = slice_geometry(inst.geometry, s);
    out.depot = {inst.depot.aisle - s.lo, inst.depot.side};
    out.required.assign(inst.required.begin() + s.lo, inst.required.begin() + s.hi + 1);
    out.validate();
    return {out, s.lo};
}

Reduced<ScatteredInstance> reduce_to_relevant(const ScatteredInstance& inst) {
    inst.validate();
    std::vector<bool> marked(inst.geometry.num_aisles, false);
    marked[inst.depot.aisle] = true;
    auto cand = inst.candidate_positions();
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        if (!cand[j].empty()) marked[j] = true;
    Span s = span_of(inst.geometry.num_aisles, marked);

    ScatteredInstance out;
    out.geometry = slice_geometry(inst.geometry, s);
    out.depot = {inst.depot.aisle - s.lo, inst.depot.side};
    out.demand = inst.demand;
    for (const auto& [key, qty] : inst.supply) {
        const auto& [aisle, pos, sku] = key;
        if (aisle >= s.lo && aisle <= s.hi) out.supply[{aisle - s.lo, pos, sku}] = qty;
    }
    out.validate();
    return {out, s.lo};
}

Reduced<DecouplingInstance> reduce_to_relevant(const DecouplingInstance& inst) {
    inst.validate();
    std::vector<bool> marked(inst.geometry.num_aisles, false);
    marked[inst.depot.aisle] = true;
    for (const auto& [key, qty] : inst.demand_at) marked[key.first] = true;
    Span s = span_of(inst.geometry.num_aisles, marked);

    DecouplingInstance out;
    out.geometry = slice_geometry(inst.geometry, s);
    out.depot = {inst.depot.aisle - s.lo, inst.depot.side};
    out.capacity = inst.capacity;
    out.beta = inst.beta;
    for (const auto& [key, qty] : inst.demand_at) out.demand_at[{key.first - s.lo, key.second}] = qty;
    out.validate();
    return {out, s.lo};
}

Reduced<MultiDepotInstance> reduce_to_relevant(const MultiDepotInstance& inst) {
    inst.validate();
    std::vector<bool> marked(inst.geometry.num_aisles, false);
    marked[inst.start.aisle] = true;
    for (const auto& d : inst.end_candidates) marked[d.aisle] = true;
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        if (!inst.required[j].empty()) marked[j] = true;
    Span s = span_of(inst.geometry.num_aisles, marked);

    MultiDepotInstance out;
    out.geometry = slice_geometry(inst.geometry, s);
    out.start = {inst.start.aisle - s.lo, inst.start.side};
    for (const auto& d : inst.end_candidates) out.end_candidates.insert({d.aisle - s.lo, d.side});
    out.required.assign(inst.required.begin() + s.lo, inst.required.begin() + s.hi + 1);
    out.validate();
    return {out, s.lo};
}

bool is_reduced(const StandardInstance& inst) {
    auto r = reduce_to_relevant(inst);
    return r.offset == 0 && r.instance.geometry.num_aisles == inst.geometry.num_aisles;
}

bool is_reduced(const ScatteredInstance& inst) {
    auto r = reduce_to_relevant(inst);
    return r.offset == 0 && r.instance.geometry.num_aisles == inst.geometry.num_aisles;
}

bool is_reduced(const DecouplingInstance& inst) {
    auto r = reduce_to_relevant(inst);
    return r.offset == 0 && r.instance.geometry.num_aisles == inst.geometry.num_aisles;
}

bool is_reduced(const MultiDepotInstance& inst) {
    auto r = reduce_to_relevant(inst);
    return r.offset == 0 && r.instance.geometry.num_aisles == inst.geometry.num_aisles;
}

}  // namespace sprp
