#include "sprp/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sprp {

using nlohmann::json;

namespace {

// JSON numbers arrive as doubles; beta is re-rendered with the shortest
// round-trip representation and that decimal is parsed exactly, so any beta
// written with a reasonable number of digits survives untouched.
Rat rat_from_json_number(const json& v) {
    if (v.is_number_integer()) return rat(v.get<std::int64_t>());
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v.get<double>());
    return rat_from_decimal(std::string(buf, res.ptr));
}

json geometry_to_json(const Geometry& g) {
    return json{{"num_aisles", g.num_aisles},
                {"positions_per_aisle", g.positions_per_aisle},
                {"cross_gap", g.cross_gap},
                {"depth", g.depth},
                {"aisle_length", g.aisle_length}};
}

Geometry geometry_from_json(const json& v) {
    Geometry g;
    g.num_aisles = v.at("num_aisles").get<std::int64_t>();
    g.positions_per_aisle = v.at("positions_per_aisle").get<std::int64_t>();
    g.cross_gap = v.at("cross_gap").get<std::vector<std::int64_t>>();
    g.depth = v.at("depth").get<std::vector<std::int64_t>>();
    g.aisle_length = v.at("aisle_length").get<std::int64_t>();
    return g;
}

json depot_to_json(const Depot& d) {
    return json{{"aisle", d.aisle}, {"side", side_name(d.side)}};
}

Depot depot_from_json(const json& v) {
    return Depot{v.at("aisle").get<std::int64_t>(), side_from_name(v.at("side").get<std::string>())};
}

json required_to_json(const std::vector<std::set<std::int64_t>>& required) {
    json out = json::object();
    for (std::size_t j = 0; j < required.size(); ++j)
        if (!required[j].empty()) out[std::to_string(j)] = required[j];
    return out;
}

std::vector<std::set<std::int64_t>> required_from_json(const json& v, std::int64_t num_aisles) {
    std::vector<std::set<std::int64_t>> required(num_aisles);
    for (const auto& [key, positions] : v.items()) {
        std::int64_t aisle = std::stoll(key);
        if (aisle < 0 || aisle >= num_aisles)
            throw std::invalid_argument("required aisle out of range: " + key);
        for (const auto& p : positions) required[aisle].insert(p.get<std::int64_t>());
    }
    return required;
}

}  // namespace

std::string variant_name(const AnyInstance& inst) {
    switch (inst.index()) {
        case 0: return "standard";
        case 1: return "scattered";
        case 2: return "decoupling";
        default: return "multidepot";
    }
}

const Geometry& geometry_of(const AnyInstance& inst) {
    return std::visit([](const auto& i) -> const Geometry& { return i.geometry; }, inst);
}

std::string write_instance_json(const AnyInstance& inst) {
    json out;
    out["variant"] = variant_name(inst);
    out["geometry"] = geometry_to_json(geometry_of(inst));

    if (const auto* s = std::get_if<StandardInstance>(&inst)) {
        out["depot"] = depot_to_json(s->depot);
        out["required"] = required_to_json(s->required);
    } else if (const auto* s = std::get_if<ScatteredInstance>(&inst)) {
        out["depot"] = depot_to_json(s->depot);
        json demands = json::object();
        for (const auto& [sku, qty] : s->demand) demands[std::to_string(sku)] = qty;
        json supply = json::array();
        for (const auto& [key, qty] : s->supply) {
            const auto& [aisle, pos, sku] = key;
            supply.push_back({aisle, pos, sku, qty});
        }
        out["scattered"] = json{{"demands", demands}, {"supply", supply}};
    } else if (const auto* s = std::get_if<DecouplingInstance>(&inst)) {
        out["depot"] = depot_to_json(s->depot);
        json demand_at = json::array();
        for (const auto& [key, qty] : s->demand_at)
            demand_at.push_back({key.first, key.second, qty});
        json beta = json::parse(rat_to_string(s->beta));  // finite decimal by validation
        out["decoupling"] =
            json{{"capacity", s->capacity}, {"beta", beta}, {"demand_at", demand_at}};
    } else if (const auto* s = std::get_if<MultiDepotInstance>(&inst)) {
        out["depot"] = depot_to_json(s->start);
        out["required"] = required_to_json(s->required);
        json candidates = json::array();
        for (const auto& d : s->end_candidates) candidates.push_back({d.aisle, side_name(d.side)});
        out["multidepot"] = json{{"candidates", candidates}};
    }
    return out.dump(2) + "\n";
}

AnyInstance read_instance_json(const std::string& text) {
    json v = json::parse(text);
    std::string variant = v.at("variant").get<std::string>();
    Geometry g = geometry_from_json(v.at("geometry"));
    Depot depot = depot_from_json(v.at("depot"));

    if (variant == "standard") {
        StandardInstance inst{g, depot, required_from_json(v.at("required"), g.num_aisles)};
        inst.validate();
        return inst;
    }
    if (variant == "scattered") {
        ScatteredInstance inst;
        inst.geometry = g;
        inst.depot = depot;
        const json& block = v.at("scattered");
        for (const auto& [key, qty] : block.at("demands").items())
            inst.demand[std::stoll(key)] = qty.get<std::int64_t>();
        for (const auto& row : block.at("supply")) {
            if (row.size() != 4) throw std::invalid_argument("supply rows are [aisle,pos,sku,qty]");
            inst.supply[{row[0].get<std::int64_t>(), row[1].get<std::int64_t>(),
                         row[2].get<std::int64_t>()}] += row[3].get<std::int64_t>();
        }
        inst.validate();
        return inst;
    }
    if (variant == "decoupling") {
        DecouplingInstance inst;
        inst.geometry = g;
        inst.depot = depot;
        const json& block = v.at("decoupling");
        inst.capacity = block.at("capacity").get<std::int64_t>();
        inst.beta = rat_from_json_number(block.at("beta"));
        for (const auto& row : block.at("demand_at")) {
            if (row.size() != 3) throw std::invalid_argument("demand_at rows are [aisle,pos,qty]");
            inst.demand_at[{row[0].get<std::int64_t>(), row[1].get<std::int64_t>()}] +=
                row[2].get<std::int64_t>();
        }
        inst.validate();
        return inst;
    }
    if (variant == "multidepot") {
        MultiDepotInstance inst;
        inst.geometry = g;
        inst.start = depot;
        inst.required = required_from_json(v.at("required"), g.num_aisles);
        for (const auto& row : v.at("multidepot").at("candidates")) {
            if (row.size() != 2) throw std::invalid_argument("candidates are [aisle, side]");
            inst.end_candidates.insert(
                {row[0].get<std::int64_t>(), side_from_name(row[1].get<std::string>())});
        }
        inst.validate();
        return inst;
    }
    throw std::invalid_argument("unknown variant: " + variant);
}

void save_instance(const AnyInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_instance_json(inst);
}

AnyInstance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_instance_json(ss.str());
}

}  // namespace sprp
