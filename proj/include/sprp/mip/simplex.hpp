#pragma once

#include <memory>
#include <vector>

#include "sprp/mip/model.hpp"

namespace sprp::mip {

struct LpResult {
    bool feasible = false;
    std::vector<Rat> x;  // structural variables only
    Rat objective;
    std::int64_t pivots = 0;
};

// Exact rational simplex over box-constrained variables (every bound
// finite); all arithmetic is exact, so there are no tolerances.
//
// The engine keeps its tableau across solves: the first call runs a primal
// two-phase from the slack basis (artificial variables absorb the initial
// infeasibility; Dantzig pricing with a switch to Bland's rule while the
// iteration stalls, so cycling is impossible). Later calls only move bounds,
// which preserves dual feasibility, and reoptimize with the bounded dual
// simplex — the standard warm start for branch-and-bound. If the dual loop
// exceeds its pivot budget it falls back to a fresh primal solve.
class SimplexEngine {
  public:
    explicit SimplexEngine(const Model& model);
    ~SimplexEngine();
    SimplexEngine(SimplexEngine&&) noexcept;
    SimplexEngine& operator=(SimplexEngine&&) noexcept;

    LpResult solve(const std::vector<Rat>& lower, const std::vector<Rat>& upper);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot convenience wrapper.
LpResult solve_lp_relaxation(const Model& model, const std::vector<Rat>& lower,
                             const std::vector<Rat>& upper);

}  // namespace sprp::mip
