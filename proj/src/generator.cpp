#include "sprp/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "sprp/rng.hpp"

namespace sprp {

namespace {

Geometry make_geometry(const GeneratorSpec& spec) {
    return Geometry::unit(spec.num_aisles, spec.positions, spec.cross_gap);
}

// Uniformly distributed distinct required positions; depot at the bottom
// left.
StandardInstance generate_standard(const GeneratorSpec& spec, std::uint64_t seed) {
    if (spec.picks > spec.num_aisles * spec.positions)
        throw std::invalid_argument("more required positions than the warehouse holds");
    if (spec.picks < 1) throw std::invalid_argument("need at least one pick");
    StandardInstance inst;
    inst.geometry = make_geometry(spec);
    inst.depot = {0, Side::Bottom};
    inst.required.resize(spec.num_aisles);
    auto rng = make_stream(seed, RngStream::RequiredPositions);
    for (auto cell : rng.sample_distinct(spec.num_aisles * spec.positions, spec.picks))
        inst.required[cell / spec.positions].insert(cell % spec.positions);
    inst.validate();
    return inst;
}

// Class of each SKU: the first 20% are A, the next 30% B, the rest C.
// Rounded half up so the split is exact for multiples of ten.
struct Classes {
    std::int64_t a, b, c;
};

Classes class_split(std::int64_t skus) {
    std::int64_t a = (skus * 2 + 5) / 10;
    std::int64_t b = (skus * 3 + 5) / 10;
    if (a + b > skus) b = skus - a;
    return {a, b, skus - a - b};
}

ScatteredInstance generate_scattered(const GeneratorSpec& spec, std::uint64_t seed) {
    const std::int64_t cells = spec.num_aisles * spec.positions;
    const std::int64_t skus = scattered_sku_count(spec);
    if (spec.picks < 1 || spec.picks > skus)
        throw std::invalid_argument("pick list larger than the number of SKUs");
    if (skus > cells) throw std::invalid_argument("more SKUs than picking positions");

    ScatteredInstance inst;
    inst.geometry = make_geometry(spec);
    inst.depot = {0, Side::Bottom};
    Classes cls = class_split(skus);
    auto class_of = [&](std::int64_t h) { return h < cls.a ? 0 : h < cls.a + cls.b ? 1 : 2; };

    // Every SKU gets one guaranteed position; the remaining positions draw a
    // class with probabilities 80/15/5 and then a SKU uniformly within it.
    std::vector<std::int64_t> sku_at(cells, -1);
    auto seed_rng = make_stream(seed, RngStream::SkuSeedPositions);
    auto seeds = seed_rng.sample_distinct(cells, skus);
    for (std::int64_t h = 0; h < skus; ++h) sku_at[seeds[h]] = h;

    auto class_rng = make_stream(seed, RngStream::FillClass);
    auto fill_rng = make_stream(seed, RngStream::FillSku);
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        if (sku_at[cell] >= 0) continue;
        std::int64_t roll = class_rng.uniform_int(0, 99);
        int wanted = roll < 80 ? 0 : roll < 95 ? 1 : 2;
        std::int64_t lo = wanted == 0 ? 0 : wanted == 1 ? cls.a : cls.a + cls.b;
        std::int64_t count = wanted == 0 ? cls.a : wanted == 1 ? cls.b : cls.c;
        if (count == 0) {  // empty class: fall back to a uniform SKU
            sku_at[cell] = fill_rng.uniform_int(0, skus - 1);
        } else {
            sku_at[cell] = lo + fill_rng.uniform_int(0, count - 1);
        }
    }

    auto qty_rng = make_stream(seed, RngStream::SupplyQty);
    std::vector<std::int64_t> total_supply(skus, 0);
    std::vector<std::int64_t> qty_at(cells);
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        qty_at[cell] = qty_rng.uniform_int(1, 3);
        total_supply[sku_at[cell]] += qty_at[cell];
    }

    // Pick list: distinct SKUs drawn class-weighted, then demands within the
    // available supply.
    auto pick_rng = make_stream(seed, RngStream::PickListSku);
    std::vector<bool> in_list(skus, false);
    std::int64_t chosen = 0;
    while (chosen < spec.picks) {
        std::int64_t roll = pick_rng.uniform_int(0, 99);
        int wanted = roll < 80 ? 0 : roll < 95 ? 1 : 2;
        std::vector<std::int64_t> pool;
        for (std::int64_t h = 0; h < skus; ++h)
            if (!in_list[h] && class_of(h) == wanted) pool.push_back(h);
        if (pool.empty()) {
            for (std::int64_t h = 0; h < skus; ++h)
                if (!in_list[h]) pool.push_back(h);
        }
        in_list[pool[pick_rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1)]] = true;
        ++chosen;
    }
    auto demand_rng = make_stream(seed, RngStream::DemandQty);
    for (std::int64_t h = 0; h < skus; ++h) {
        if (!in_list[h]) continue;
        inst.demand[h] = demand_rng.uniform_int(1, std::min<std::int64_t>(6, total_supply[h]));
    }

    for (std::int64_t cell = 0; cell < cells; ++cell) {
        std::int64_t aisle = cell / spec.positions, pos = cell % spec.positions;
        inst.supply[{aisle, pos, sku_at[cell]}] = qty_at[cell];
    }
    inst.validate();
    return inst;
}

DecouplingInstance generate_decoupling(const GeneratorSpec& spec, std::uint64_t seed) {
    StandardInstance base = generate_standard(spec, seed);
    DecouplingInstance inst;
    inst.geometry = base.geometry;
    inst.depot = base.depot;
    inst.capacity = spec.capacity;
    inst.beta = spec.beta;
    for (std::int64_t j = 0; j < spec.num_aisles; ++j)
        for (auto i : base.required[j]) inst.demand_at[{j, i}] = spec.items_per_pick;
    inst.validate();
    return inst;
}

MultiDepotInstance generate_multidepot(const GeneratorSpec& spec, std::uint64_t seed) {
    StandardInstance base = generate_standard(spec, seed);
    MultiDepotInstance inst;
    inst.geometry = base.geometry;
    inst.start = base.depot;
    inst.required = base.required;
    auto coin = make_stream(seed, RngStream::EndDepotCoin);
    for (std::int64_t j = 0; j < spec.num_aisles; ++j)
        for (Side s : {Side::Top, Side::Bottom})
            if (coin.chance(spec.sigma_num, spec.sigma_den)) inst.end_candidates.insert({j, s});
    inst.end_candidates.insert(inst.start);
    inst.validate();
    return inst;
}

}  // namespace

std::int64_t scattered_sku_count(const GeneratorSpec& spec) {
    if (spec.alpha < 1) throw std::invalid_argument("alpha must be positive");
    std::int64_t cells = spec.num_aisles * spec.positions;
    return std::max(spec.picks, (cells + spec.alpha - 1) / spec.alpha);
}

AnyInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed) {
    if (spec.variant == "standard") return generate_standard(spec, seed);
    if (spec.variant == "scattered") return generate_scattered(spec, seed);
    if (spec.variant == "decoupling") return generate_decoupling(spec, seed);
    if (spec.variant == "multidepot") return generate_multidepot(spec, seed);
    throw std::invalid_argument("unknown variant: " + spec.variant);
}

}  // namespace sprp
