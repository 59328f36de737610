#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sprp/instance.hpp"

namespace sprp {

namespace mip {
struct Model;
struct ExhaustiveResult;
}  // namespace mip

// Physical travel graph of a warehouse: aisle entry nodes plus the given
// picking positions; positions between them are contracted into the edge
// lengths. Distances are exact integers (the geometry's base unit) and the
// all-pairs closure is computed with Dijkstra.
class WarehouseGraph {
  public:
    WarehouseGraph(const Geometry& geometry, const std::vector<std::set<std::int64_t>>& positions);

    int entry_node(std::int64_t aisle, Side side) const;
    int position_node(std::int64_t aisle, std::int64_t pos) const;
    int node_count() const { return static_cast<int>(adjacency_.size()); }
    std::int64_t distance(int a, int b) const { return closure_[a][b]; }

  private:
    std::vector<std::vector<std::pair<int, std::int64_t>>> adjacency_;
    std::vector<std::vector<std::int64_t>> closure_;
    std::map<std::pair<std::int64_t, std::int64_t>, int> position_nodes_;
    std::int64_t num_aisles_;

    void run_closure();
};

// Exact minimum cost of a closed walk that starts and ends at `depot` and
// visits every node in `required` (Held-Karp on the metric closure).
// Requires |required| <= 13.
std::int64_t steiner_tsp_closed(const WarehouseGraph& graph, const std::vector<int>& required,
                                int depot);

// Open-walk variant from `start` to `end`.
std::int64_t steiner_tsp_open(const WarehouseGraph& graph, const std::vector<int>& required,
                              int start, int end);

// Convenience wrappers working directly on instances.
std::int64_t oracle_standard(const StandardInstance& inst);
std::int64_t oracle_multidepot(const MultiDepotInstance& inst);

// Exhaustive selection x exact routing for scattered storage: minimum over
// all demand-covering position subsets of the closed-walk optimum. Requires
// at most 16 candidate positions.
std::int64_t scattered_bruteforce(const ScatteredInstance& inst);

}  // namespace sprp
