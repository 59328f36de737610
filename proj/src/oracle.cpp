#include "sprp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "sprp/reduce.hpp"

namespace sprp {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
}

WarehouseGraph::WarehouseGraph(const Geometry& geometry,
                               const std::vector<std::set<std::int64_t>>& positions)
    : num_aisles_(geometry.num_aisles) {
    geometry.validate();
    if (static_cast<std::int64_t>(positions.size()) != geometry.num_aisles)
        throw std::invalid_argument("graph: need one position set per aisle");

    int next = static_cast<int>(2 * num_aisles_);
    for (std::int64_t j = 0; j < num_aisles_; ++j)
        for (auto i : positions[j]) position_nodes_[{j, i}] = next++;
    adjacency_.resize(next);

    auto add_edge = [&](int a, int b, std::int64_t w) {
        adjacency_[a].push_back({b, w});
        adjacency_[b].push_back({a, w});
    };

    for (std::int64_t j = 0; j < num_aisles_; ++j) {
        // Chain within the aisle: top entry, positions in depth order, bottom.
        int prev = entry_node(j, Side::Top);
        std::int64_t prev_depth = 0;
        for (auto i : positions[j]) {
            int node = position_node(j, i);
            add_edge(prev, node, geometry.depth[i] - prev_depth);
            prev = node;
            prev_depth = geometry.depth[i];
        }
        add_edge(prev, entry_node(j, Side::Bottom), geometry.aisle_length - prev_depth);
    }
    for (std::int64_t j = 0; j + 1 < num_aisles_; ++j) {
        add_edge(entry_node(j, Side::Top), entry_node(j + 1, Side::Top), geometry.cross_gap[j]);
        add_edge(entry_node(j, Side::Bottom), entry_node(j + 1, Side::Bottom),
                 geometry.cross_gap[j]);
    }
    run_closure();
}

int WarehouseGraph::entry_node(std::int64_t aisle, Side side) const {
    if (aisle < 0 || aisle >= num_aisles_) throw std::invalid_argument("entry aisle out of range");
    return static_cast<int>(2 * aisle + (side == Side::Bottom ? 1 : 0));
}

int WarehouseGraph::position_node(std::int64_t aisle, std::int64_t pos) const {
    auto it = position_nodes_.find({aisle, pos});
    if (it == position_nodes_.end()) throw std::invalid_argument("position not in graph");
    return it->second;
}

void WarehouseGraph::run_closure() {
    int n = node_count();
    closure_.assign(n, std::vector<std::int64_t>(n, kInf));
    for (int src = 0; src < n; ++src) {
        auto& dist = closure_[src];
        dist[src] = 0;
        using Item = std::pair<std::int64_t, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.push({0, src});
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[u]) continue;
            for (auto [v, w] : adjacency_[u]) {
                if (d + w < dist[v]) {
                    dist[v] = d + w;
                    heap.push({d + w, v});
                }
            }
        }
    }
}

namespace {

// dp[mask][t] = cheapest walk from `start` visiting exactly the terminals in
// mask and currently standing at terminal t.
std::vector<std::vector<std::int64_t>> held_karp_table(const WarehouseGraph& graph,
                                                       const std::vector<int>& required,
                                                       int start) {
    std::size_t k = required.size();
    if (k > 16) throw std::invalid_argument("oracle size cap exceeded");
    std::vector<std::vector<std::int64_t>> dp(std::size_t(1) << k,
                                              std::vector<std::int64_t>(std::max<std::size_t>(k, 1), kInf));
    for (std::size_t t = 0; t < k; ++t)
        dp[std::size_t(1) << t][t] = graph.distance(start, required[t]);
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        for (std::size_t t = 0; t < k; ++t) {
            if (!(mask >> t & 1) || dp[mask][t] >= kInf) continue;
            for (std::size_t u = 0; u < k; ++u) {
                if (mask >> u & 1) continue;
                std::size_t next = mask | std::size_t(1) << u;
                std::int64_t cost = dp[mask][t] + graph.distance(required[t], required[u]);
                dp[next][u] = std::min(dp[next][u], cost);
            }
        }
    }
    return dp;
}

}  // namespace

std::int64_t steiner_tsp_closed(const WarehouseGraph& graph, const std::vector<int>& required,
                                int depot) {
    if (required.size() > 13)
        throw std::invalid_argument("oracle size cap exceeded (more than 13 required nodes)");
    if (required.empty()) return 0;
    auto dp = held_karp_table(graph, required, depot);
    std::size_t full = (std::size_t(1) << required.size()) - 1;
    std::int64_t best = kInf;
    for (std::size_t t = 0; t < required.size(); ++t)
        best = std::min(best, dp[full][t] + graph.distance(required[t], depot));
    return best;
}

std::int64_t steiner_tsp_open(const WarehouseGraph& graph, const std::vector<int>& required,
                              int start, int end) {
    if (required.size() > 13)
        throw std::invalid_argument("oracle size cap exceeded (more than 13 required nodes)");
    if (required.empty()) return graph.distance(start, end);
    auto dp = held_karp_table(graph, required, start);
    std::size_t full = (std::size_t(1) << required.size()) - 1;
    std::int64_t best = kInf;
    for (std::size_t t = 0; t < required.size(); ++t)
        best = std::min(best, dp[full][t] + graph.distance(required[t], end));
    return best;
}

std::int64_t oracle_standard(const StandardInstance& inst) {
    inst.validate();
    WarehouseGraph graph(inst.geometry, inst.required);
    std::vector<int> required;
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        for (auto i : inst.required[j]) required.push_back(graph.position_node(j, i));
    return steiner_tsp_closed(graph, required, graph.entry_node(inst.depot.aisle, inst.depot.side));
}

std::int64_t oracle_multidepot(const MultiDepotInstance& inst) {
    inst.validate();
    WarehouseGraph graph(inst.geometry, inst.required);
    std::vector<int> required;
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        for (auto i : inst.required[j]) required.push_back(graph.position_node(j, i));
    int start = graph.entry_node(inst.start.aisle, inst.start.side);
    std::int64_t best = kInf;
    for (const auto& d : inst.end_candidates) {
        int end = graph.entry_node(d.aisle, d.side);
        best = std::min(best, steiner_tsp_open(graph, required, start, end));
    }
    return best;
}

std::int64_t scattered_bruteforce(const ScatteredInstance& inst) {
    inst.validate();
    auto candidates = inst.candidate_positions();
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;  // (aisle, pos)
    for (std::int64_t j = 0; j < inst.geometry.num_aisles; ++j)
        for (auto i : candidates[j]) cells.push_back({j, i});
    if (cells.size() > 16)
        throw std::invalid_argument("oracle size cap exceeded (more than 16 candidate positions)");

    // Per-cell supply vector over the demanded SKUs.
    std::vector<std::int64_t> skus;
    std::vector<std::int64_t> need;
    for (const auto& [sku, qty] : inst.demand) {
        skus.push_back(sku);
        need.push_back(qty);
    }
    std::vector<std::vector<std::int64_t>> cell_supply(cells.size(),
                                                       std::vector<std::int64_t>(skus.size(), 0));
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::size_t h = 0; h < skus.size(); ++h) {
            auto it = inst.supply.find({cells[c].first, cells[c].second, skus[h]});
            if (it != inst.supply.end()) cell_supply[c][h] = it->second;
        }

    WarehouseGraph graph(inst.geometry, candidates);
    int depot = graph.entry_node(inst.depot.aisle, inst.depot.side);

    auto covers = [&](std::uint32_t mask) {
        for (std::size_t h = 0; h < skus.size(); ++h) {
            std::int64_t got = 0;
            for (std::size_t c = 0; c < cells.size(); ++c)
                if (mask >> c & 1) got += cell_supply[c][h];
            if (got < need[h]) return false;
        }
        return true;
    };

    std::int64_t best = kInf;
    std::uint32_t limit = std::uint32_t(1) << cells.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!covers(mask)) continue;
        // Routing cost is monotone in the visited set, so only subsets that
        // are minimal w.r.t. coverage need to be routed.
        bool minimal = true;
        for (std::size_t c = 0; c < cells.size() && minimal; ++c)
            if ((mask >> c & 1) && covers(mask & ~(std::uint32_t(1) << c))) minimal = false;
        if (!minimal) continue;
        std::vector<int> nodes;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (mask >> c & 1) nodes.push_back(graph.position_node(cells[c].first, cells[c].second));
        if (nodes.empty()) {
            best = 0;
            continue;
        }
        auto dp = held_karp_table(graph, nodes, depot);
        std::size_t full = (std::size_t(1) << nodes.size()) - 1;
        for (std::size_t t = 0; t < nodes.size(); ++t)
            best = std::min(best, dp[full][t] + graph.distance(nodes[t], depot));
    }
    if (best >= kInf) throw std::invalid_argument("scattered brute force: no covering selection");
    return best;
}

}  // namespace sprp
