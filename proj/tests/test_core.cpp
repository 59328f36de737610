#include <doctest.h>

#include <queue>

#include "sprp/coefficients.hpp"
#include "sprp/generator.hpp"
#include "sprp/instance_io.hpp"
#include "sprp/rational.hpp"
#include "sprp/reduce.hpp"
#include "sprp/rng.hpp"

using namespace sprp;

TEST_CASE("rational decimal rendering and parsing") {
    CHECK(rat_to_decimal(rat(3, 4)).value() == "0.75");
    CHECK(rat_to_decimal(rat(-3, 4)).value() == "-0.75");
    CHECK(rat_to_decimal(rat(5)).value() == "5");
    CHECK(rat_to_decimal(rat(1, 10)).value() == "0.1");
    CHECK(rat_to_decimal(rat(1, 3)) == std::nullopt);
    CHECK(rat_from_decimal("0.75") == rat(3, 4));
    CHECK(rat_from_decimal("-12.5") == rat(-25, 2));
    CHECK(rat_from_decimal("42") == rat(42));
    CHECK_THROWS(rat_from_decimal("1e3"));
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_ceil(rat(7, 2)) == 4);
    CHECK(rat_floor(rat(-7, 2)) == -4);
}

TEST_CASE("rng streams are deterministic and independent") {
    auto a = make_stream(42, RngStream::RequiredPositions);
    auto b = make_stream(42, RngStream::RequiredPositions);
    auto c = make_stream(42, RngStream::SupplyQty);
    std::vector<std::uint64_t> va, vb, vc;
    for (int i = 0; i < 8; ++i) {
        va.push_back(a.next());
        vb.push_back(b.next());
        vc.push_back(c.next());
    }
    CHECK(va == vb);
    CHECK(va != vc);

    auto d = make_stream(7, RngStream::RequiredPositions);
    auto sample = d.sample_distinct(100, 10);
    CHECK(sample.size() == 10);
    CHECK(std::is_sorted(sample.begin(), sample.end()));
    CHECK(std::adjacent_find(sample.begin(), sample.end()) == sample.end());
}

namespace {

// The eight-aisle example warehouse: nine picks, depot at the bottom of the
// fourth aisle.
StandardInstance example_wide() {
    StandardInstance inst;
    inst.geometry = Geometry::unit(8, 10);
    inst.depot = {4, Side::Bottom};
    inst.required.resize(8);
    inst.required[1] = {1};
    inst.required[2] = {9};
    inst.required[3] = {2, 3, 7};
    inst.required[4] = {3};
    inst.required[5] = {5, 6};
    inst.required[6] = {7};
    return inst;
}

}  // namespace

TEST_CASE("relevant-part reduction drops flanking empty aisles") {
    auto r = reduce_to_relevant(example_wide());
    CHECK(r.offset == 1);
    const StandardInstance& inst = r.instance;
    CHECK(inst.geometry.num_aisles == 6);
    CHECK(inst.depot.aisle == 3);
    CHECK(inst.depot.side == Side::Bottom);
    CHECK(inst.required[0] == std::set<std::int64_t>{1});
    CHECK(inst.required[1] == std::set<std::int64_t>{9});
    CHECK(inst.required[2] == std::set<std::int64_t>{2, 3, 7});
    CHECK(inst.required[3] == std::set<std::int64_t>{3});
    CHECK(inst.required[4] == std::set<std::int64_t>{5, 6});
    CHECK(inst.required[5] == std::set<std::int64_t>{7});

    // Idempotent: reducing again changes nothing.
    auto again = reduce_to_relevant(inst);
    CHECK(again.offset == 0);
    CHECK(again.instance.geometry.num_aisles == 6);
    CHECK(is_reduced(inst));

    // Ends of the reduced span always carry content.
    CHECK((!inst.required[0].empty() || inst.depot.aisle == 0));
    CHECK((!inst.required[5].empty() || inst.depot.aisle == 5));
}

TEST_CASE("reduction edge cases") {
    StandardInstance inst;
    inst.geometry = Geometry::unit(4, 6);
    inst.depot = {2, Side::Bottom};
    inst.required.resize(4);

    SUBCASE("picks only in the depot aisle give a single-aisle instance") {
        inst.required[2] = {3};
        auto r = reduce_to_relevant(inst);
        CHECK(r.offset == 2);
        CHECK(r.instance.geometry.num_aisles == 1);
        CHECK(r.instance.depot.aisle == 0);
    }
    SUBCASE("picks in every aisle keep the instance unchanged") {
        for (int j = 0; j < 4; ++j) inst.required[j] = {1};
        auto r = reduce_to_relevant(inst);
        CHECK(r.offset == 0);
        CHECK(r.instance.geometry.num_aisles == 4);
    }
    SUBCASE("no picks at all is an error") {
        CHECK_THROWS_WITH_AS(reduce_to_relevant(inst), "nothing to pick", std::invalid_argument);
    }
}

TEST_CASE("cost coefficients from geometry") {
    auto r = reduce_to_relevant(example_wide());
    auto c = compute_coefficients(r.instance);
    const Geometry& g = r.instance.geometry;

    for (std::int64_t j = 0; j + 1 < g.num_aisles; ++j) {
        CHECK(c.cross_both_twice[j] == 2 * c.cross_both_once[j]);
        CHECK(c.cross_both_twice[j] == 2 * c.cross_top_twice[j]);
        CHECK(c.cross_both_twice[j] == 2 * c.cross_bottom_twice[j]);
    }
    for (std::int64_t j = 0; j < g.num_aisles; ++j)
        CHECK(c.traverse_twice[j] == 2 * c.traverse_once[j]);
    for (const auto& [key, top] : c.branch_top)
        CHECK(top + c.branch_bottom.at(key) == rat(2 * g.aisle_length));

    // Unit cross gap makes the doubled-double configuration cost four.
    StandardInstance tiny;
    tiny.geometry = Geometry::unit(2, 3, 1);
    tiny.depot = {0, Side::Bottom};
    tiny.required = {{0}, {1}};
    auto ct = compute_coefficients(tiny);
    CHECK(ct.cross_both_twice[0] == rat(4));

    // Midpoint symmetry: depth L/2 costs the same from both sides.
    StandardInstance mid;
    mid.geometry = Geometry{1, 1, {}, {5}, 10};
    mid.depot = {0, Side::Bottom};
    mid.required = {{0}};
    auto cm = compute_coefficients(mid);
    CHECK(cm.branch_top.at({0, 0}) == rat(10));
    CHECK(cm.branch_bottom.at({0, 0}) == rat(10));
}

namespace {

// Independent check of a picker-alone branch cost: shortest out-and-back on
// the one-aisle segment graph at walking speed beta.
Rat alone_branch_by_dijkstra(const Geometry& g, std::int64_t target, const Rat& beta) {
    return beta * rat(2 * g.depth[target]);
}

}  // namespace

TEST_CASE("decoupling coefficients: alone values and cart parking") {
    DecouplingInstance inst;
    inst.geometry = Geometry{1, 9, {}, {1, 2, 3, 4, 5, 6, 7, 8, 9}, 10};
    inst.depot = {0, Side::Bottom};
    inst.capacity = 2;
    inst.beta = rat(1, 2);
    for (std::int64_t i : {0, 1, 3}) inst.demand_at[{0, i}] = 1;
    auto c = compute_coefficients(inst);

    // Alone branch = beta times the plain branch cost.
    CHECK(c.alone_branch_top.at({0, 3}) == rat(4));
    CHECK(c.alone_branch_top.at({0, 3}) ==
          alone_branch_by_dijkstra(inst.geometry, 3, inst.beta));

    // Cart parking: three items to depth 4 exceed C=2, so the cart stops at
    // the first pick (depth 1) and the picker walks the rest alone.
    CHECK(c.park_depth_top.at({0, 3}) == 1);
    CHECK(c.branch_top.at({0, 3}) == rat(2) + rat(1, 2) * rat(2 * (4 - 1)));

    // Two items fit: the cart can stay at the entry.
    CHECK(c.park_depth_top.at({0, 1}) == 0);
    CHECK(c.branch_top.at({0, 1}) == rat(1, 2) * rat(4));

    // With beta = 1 the parking point no longer matters for the cost.
    DecouplingInstance same = inst;
    same.beta = 1;
    auto c1 = compute_coefficients(same);
    CHECK(c1.branch_top.at({0, 3}) == rat(8));
}

TEST_CASE("items_prefix counts required items from either entry") {
    DecouplingInstance inst;
    inst.geometry = Geometry::unit(1, 8);
    inst.depot = {0, Side::Bottom};
    inst.capacity = 3;
    inst.beta = 1;
    inst.demand_at[{0, 2}] = 1;
    inst.demand_at[{0, 5}] = 1;

    CHECK(items_prefix(inst, 0, 5, Side::Top) == 2);
    CHECK(items_prefix(inst, 0, 4, Side::Top) == 1);
    CHECK(items_prefix(inst, 0, 0, Side::Top) == 0);
    CHECK(items_prefix(inst, 0, 0, Side::Bottom) == 2);

    // Prefix from the top plus suffix from below covers the whole aisle.
    std::int64_t total = 2;
    for (std::int64_t i = 0; i + 1 < 8; ++i)
        CHECK(items_prefix(inst, 0, i, Side::Top) +
                  items_prefix(inst, 0, i + 1, Side::Bottom) ==
              total);

    DecouplingInstance empty_aisle;
    empty_aisle.geometry = Geometry::unit(2, 8);
    empty_aisle.depot = {0, Side::Bottom};
    empty_aisle.capacity = 1;
    empty_aisle.beta = 1;
    empty_aisle.demand_at[{1, 3}] = 1;
    for (std::int64_t i = 0; i < 8; ++i) {
        CHECK(items_prefix(empty_aisle, 0, i, Side::Top) == 0);
        CHECK(items_prefix(empty_aisle, 0, i, Side::Bottom) == 0);
    }
}

TEST_CASE("instance json round trip") {
    GeneratorSpec dummy;  // only to touch the header
    (void)dummy;

    auto wide = example_wide();
    AnyInstance inst = wide;
    std::string text = write_instance_json(inst);
    AnyInstance back = read_instance_json(text);
    CHECK(write_instance_json(back) == text);

    ScatteredInstance sc;
    sc.geometry = Geometry::unit(3, 5);
    sc.depot = {1, Side::Top};
    sc.demand = {{0, 2}, {7, 1}};
    sc.supply[{0, 1, 0}] = 1;
    sc.supply[{2, 3, 0}] = 2;
    sc.supply[{1, 4, 7}] = 1;
    AnyInstance sci = sc;
    CHECK(write_instance_json(read_instance_json(write_instance_json(sci))) ==
          write_instance_json(sci));

    DecouplingInstance dc;
    dc.geometry = Geometry::unit(2, 4);
    dc.depot = {0, Side::Bottom};
    dc.capacity = 4;
    dc.beta = rat(3, 4);
    dc.demand_at[{1, 2}] = 2;
    AnyInstance dci = dc;
    AnyInstance dc2 = read_instance_json(write_instance_json(dci));
    CHECK(std::get<DecouplingInstance>(dc2).beta == rat(3, 4));

    MultiDepotInstance md;
    md.geometry = Geometry::unit(3, 4);
    md.start = {0, Side::Bottom};
    md.end_candidates = {{0, Side::Bottom}, {2, Side::Top}};
    md.required.resize(3);
    md.required[2] = {1, 3};
    AnyInstance mdi = md;
    CHECK(write_instance_json(read_instance_json(write_instance_json(mdi))) ==
          write_instance_json(mdi));

    CHECK_THROWS(read_instance_json("{\"variant\":\"nope\"}"));
}

TEST_CASE("instance validation rejects bad data") {
    StandardInstance inst;
    inst.geometry = Geometry::unit(2, 4);
    inst.depot = {5, Side::Top};
    inst.required = {{1}, {}};
    CHECK_THROWS(inst.validate());

    ScatteredInstance sc;
    sc.geometry = Geometry::unit(2, 4);
    sc.depot = {0, Side::Top};
    sc.demand = {{0, 3}};
    sc.supply[{0, 0, 0}] = 1;  // supply below demand
    CHECK_THROWS(sc.validate());

    DecouplingInstance dc;
    dc.geometry = Geometry::unit(2, 4);
    dc.depot = {0, Side::Top};
    dc.demand_at[{0, 0}] = 1;
    dc.beta = rat(3, 2);  // beta above one is physically meaningless here
    CHECK_THROWS(dc.validate());

    MultiDepotInstance md;
    md.geometry = Geometry::unit(2, 4);
    md.start = {0, Side::Bottom};
    md.end_candidates = {{1, Side::Top}};  // start missing
    md.required = {{1}, {}};
    CHECK_THROWS(md.validate());

    Geometry bad = Geometry::unit(2, 4);
    bad.depth = {3, 2, 4, 4};  // not strictly increasing
    CHECK_THROWS(bad.validate());
}
