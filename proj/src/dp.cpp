#include "sprp/dp.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sprp/reduce.hpp"

namespace sprp {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Degree class of a frontier node: no edges, odd degree, or positive even.
enum Deg : int { D0 = 0, DU = 1, DE = 2 };

// Equivalence class of a partial tour seen from the entries of the current
// aisle: degree classes at the top and bottom entry plus the number of edge
// components. Valid states have every component touching the frontier.
struct State {
    int top, bottom, comps;
    bool operator==(const State&) const = default;
};

// Tiny multigraph used to derive the transition tables. Nodes 0/1 are the
// frontier (top/bottom); pairs beyond that are auxiliary.
struct MicroGraph {
    int n = 2;
    std::vector<std::pair<int, int>> edges;

    int fresh() { return n++; }
    void add(int a, int b) { edges.push_back({a, b}); }

    int find(std::vector<int>& parent, int x) const {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Classifies the graph w.r.t. frontier nodes (t, b). Returns false if a
    // component fails to touch the frontier (it could never reconnect).
    bool classify(int t, int b, State& out) const {
        std::vector<int> deg(n, 0), parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        for (auto [a, c] : edges) {
            ++deg[a];
            ++deg[c];
            parent[find(parent, a)] = find(parent, c);
        }
        std::set<int> comps;
        for (auto [a, c] : edges) comps.insert(find(parent, a));
        for (int v = 0; v < n; ++v)
            if (deg[v] > 0 && find(parent, v) != find(parent, t) &&
                find(parent, v) != find(parent, b))
                return false;
        auto cls = [&](int v) { return deg[v] == 0 ? D0 : deg[v] % 2 ? DU : DE; };
        out = {cls(t), cls(b), static_cast<int>(comps.size())};
        return true;
    }
};

constexpr int kNumActions = 6;  // AisleAction values
constexpr int kNumConfigs = 4;  // GapConfig values

// All states that can occur between transitions.
std::vector<State> enumerate_states() {
    std::vector<State> states;
    for (int t : {D0, DU, DE})
        for (int b : {D0, DU, DE})
            for (int c : {0, 1, 2}) {
                if (c == 0 && (t != D0 || b != D0)) continue;
                if (c > 0 && t == D0 && b == D0) continue;
                if (c == 2 && (t == D0 || b == D0)) continue;
                states.push_back({t, b, c});
            }
    return states;
}

// Builds a representative multigraph of a state.
MicroGraph representative(const State& s) {
    MicroGraph g;
    if (s.comps == 0) return g;
    if (s.top == DU) g.add(0, g.fresh());
    if (s.top == DE) {
        int a = g.fresh();
        g.add(0, a);
        g.add(0, a);
    }
    if (s.bottom == DU) g.add(1, g.fresh());
    if (s.bottom == DE) {
        int a = g.fresh();
        g.add(1, a);
        g.add(1, a);
    }
    // One component: tie the two masses together away from the frontier.
    if (s.comps == 1 && s.top != D0 && s.bottom != D0) g.add(2, g.n - 1);
    return g;
}

struct Tables {
    std::vector<State> states;
    // aisle[s][action] -> next state id or -1
    std::vector<std::array<int, kNumActions>> aisle;
    // gap[s][config] -> state id at the next aisle's entries, or -1
    std::vector<std::array<int, kNumConfigs>> gap;
    // does the action/config add an edge at the given side of the aisle/gap
    std::array<std::array<bool, 2>, kNumActions> action_touches;  // [action][side]
    std::array<std::array<bool, 2>, kNumConfigs> config_touches;  // [config][side(at j and j+1)]

    int id(const State& s) const {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == s) return static_cast<int>(i);
        return -1;
    }
};

Tables build_tables() {
    Tables t;
    t.states = enumerate_states();
    t.aisle.resize(t.states.size());
    t.gap.resize(t.states.size());

    for (std::size_t s = 0; s < t.states.size(); ++s) {
        for (int a = 0; a < kNumActions; ++a) {
            MicroGraph g = representative(t.states[s]);
            switch (static_cast<AisleAction>(a)) {
                case AisleAction::None: break;
                case AisleAction::Traverse: g.add(0, 1); break;
                case AisleAction::TraverseTwice:
                    g.add(0, 1);
                    g.add(0, 1);
                    break;
                case AisleAction::BranchTop: {
                    int x = g.fresh();
                    g.add(0, x);
                    g.add(0, x);
                    break;
                }
                case AisleAction::BranchBottom: {
                    int x = g.fresh();
                    g.add(1, x);
                    g.add(1, x);
                    break;
                }
                case AisleAction::SplitLargestGap: {
                    int x = g.fresh(), y = g.fresh();
                    g.add(0, x);
                    g.add(0, x);
                    g.add(1, y);
                    g.add(1, y);
                    break;
                }
            }
            State next{};
            t.aisle[s][a] = g.classify(0, 1, next) ? t.id(next) : -1;
        }
        for (int c = 0; c < kNumConfigs; ++c) {
            MicroGraph g = representative(t.states[s]);
            int nt = g.fresh(), nb = g.fresh();
            auto cfg = static_cast<GapConfig>(c);
            if (cfg == GapConfig::TopTwice || cfg == GapConfig::BothTwice) {
                g.add(0, nt);
                g.add(0, nt);
            }
            if (cfg == GapConfig::BottomTwice || cfg == GapConfig::BothTwice) {
                g.add(1, nb);
                g.add(1, nb);
            }
            if (cfg == GapConfig::BothOnce) {
                g.add(0, nt);
                g.add(1, nb);
            }
            // The old entries are now interior: their degree must be even.
            int dt = 0, db = 0;
            for (auto [x, y] : g.edges) {
                dt += (x == 0) + (y == 0);
                db += (x == 1) + (y == 1);
            }
            State next{};
            bool ok = dt % 2 == 0 && db % 2 == 0 && g.classify(nt, nb, next);
            t.gap[s][c] = ok ? t.id(next) : -1;
        }
    }

    t.action_touches = {};
    auto set_touch = [&](AisleAction a, bool top, bool bottom) {
        t.action_touches[static_cast<int>(a)] = {top, bottom};
    };
    set_touch(AisleAction::None, false, false);
    set_touch(AisleAction::Traverse, true, true);
    set_touch(AisleAction::TraverseTwice, true, true);
    set_touch(AisleAction::BranchTop, true, false);
    set_touch(AisleAction::BranchBottom, false, true);
    set_touch(AisleAction::SplitLargestGap, true, true);

    t.config_touches = {};
    t.config_touches[static_cast<int>(GapConfig::TopTwice)] = {true, false};
    t.config_touches[static_cast<int>(GapConfig::BottomTwice)] = {false, true};
    t.config_touches[static_cast<int>(GapConfig::BothOnce)] = {true, true};
    t.config_touches[static_cast<int>(GapConfig::BothTwice)] = {true, true};
    return t;
}

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

struct ActionChoice {
    AisleAction action;
    std::int64_t cost;
    std::int64_t split_top = -1, split_bottom = -1;
};

std::vector<ActionChoice> aisle_choices(const Geometry& g, const std::set<std::int64_t>& picks) {
    std::vector<ActionChoice> out;
    std::int64_t L = g.aisle_length;
    if (picks.empty()) out.push_back({AisleAction::None, 0});
    out.push_back({AisleAction::Traverse, L});
    out.push_back({AisleAction::TraverseTwice, 2 * L});
    if (!picks.empty()) {
        std::int64_t deepest = g.depth[*picks.rbegin()];
        std::int64_t shallowest = g.depth[*picks.begin()];
        out.push_back({AisleAction::BranchTop, 2 * deepest});
        out.push_back({AisleAction::BranchBottom, 2 * (L - shallowest)});
        if (picks.size() >= 2) {
            // Serve from both sides, skipping the largest gap between
            // consecutive required positions.
            std::int64_t best = kInf, bt = -1, bb = -1;
            for (auto it = picks.begin(); std::next(it) != picks.end(); ++it) {
                std::int64_t p = *it, q = *std::next(it);
                std::int64_t cost = 2 * g.depth[p] + 2 * (L - g.depth[q]);
                if (cost < best) {
                    best = cost;
                    bt = p;
                    bb = q;
                }
            }
            out.push_back({AisleAction::SplitLargestGap, best, bt, bb});
        }
    }
    return out;
}

}  // namespace

DpResult solve_dp(const StandardInstance& inst) {
    inst.validate();
    if (!is_reduced(inst)) throw std::invalid_argument("solve_dp requires a reduced instance");
    const Tables& tab = tables();
    const Geometry& geo = inst.geometry;
    std::int64_t m = geo.num_aisles;
    int depot_side = inst.depot.side == Side::Top ? 0 : 1;
    std::int64_t l = inst.depot.aisle;

    // cost[state][depot_done]; parents for trace reconstruction.
    std::size_t ns = tab.states.size();
    auto fresh_layer = [&] {
        return std::vector<std::array<std::int64_t, 2>>(ns, {kInf, kInf});
    };
    struct Parent {
        int state = -1, done = -1, choice = -1;
    };
    std::vector<std::vector<std::array<Parent, 2>>> parent_aisle(m),
        parent_gap(std::max<std::int64_t>(m - 1, 0));
    std::vector<std::vector<ActionChoice>> choices(m);

    State empty{D0, D0, 0};
    auto layer = fresh_layer();
    layer[tab.id(empty)][0] = 0;

    for (std::int64_t j = 0; j < m; ++j) {
        choices[j] = aisle_choices(geo, inst.required[j]);
        auto next = fresh_layer();
        parent_aisle[j].assign(ns, {});
        for (std::size_t s = 0; s < ns; ++s) {
            for (int done = 0; done < 2; ++done) {
                if (layer[s][done] >= kInf) continue;
                for (std::size_t c = 0; c < choices[j].size(); ++c) {
                    const auto& ch = choices[j][c];
                    int to = tab.aisle[s][static_cast<int>(ch.action)];
                    if (to < 0) continue;
                    int nd = done;
                    if (j == l && tab.action_touches[static_cast<int>(ch.action)][depot_side])
                        nd = 1;
                    std::int64_t cost = layer[s][done] + ch.cost;
                    if (cost < next[to][nd]) {
                        next[to][nd] = cost;
                        parent_aisle[j][to][nd] = {static_cast<int>(s), done,
                                                   static_cast<int>(c)};
                    }
                }
            }
        }
        layer = std::move(next);

        if (j + 1 < m) {
            auto after_gap = fresh_layer();
            parent_gap[j].assign(ns, {});
            for (std::size_t s = 0; s < ns; ++s) {
                for (int done = 0; done < 2; ++done) {
                    if (layer[s][done] >= kInf) continue;
                    for (int c = 0; c < kNumConfigs; ++c) {
                        int to = tab.gap[s][c];
                        if (to < 0) continue;
                        int nd = done;
                        // The gap configs on either side of aisle l touch its
                        // entries; config c touches the depot side there.
                        if ((j == l - 1 || j == l) && tab.config_touches[c][depot_side]) nd = 1;
                        std::int64_t gap_cost = geo.cross_gap[j] *
                                                (c == static_cast<int>(GapConfig::BothTwice) ? 4 : 2);
                        std::int64_t cost = layer[s][done] + gap_cost;
                        if (cost < after_gap[to][nd]) {
                            after_gap[to][nd] = cost;
                            parent_gap[j][to][nd] = {static_cast<int>(s), done, c};
                        }
                    }
                }
            }
            layer = std::move(after_gap);
        }
    }

    // Accept: single component, even (possibly zero) degrees, depot visited.
    std::int64_t best = kInf;
    int best_state = -1;
    for (std::size_t s = 0; s < ns; ++s) {
        const State& st = tab.states[s];
        if (st.comps != 1 || st.top == DU || st.bottom == DU) continue;
        if (layer[s][1] < best) {
            best = layer[s][1];
            best_state = static_cast<int>(s);
        }
    }
    if (best_state < 0) throw std::runtime_error("dp: no feasible tour");

    DpResult res;
    res.objective = rat(best);
    res.aisle_actions.assign(m, AisleAction::None);
    res.gap_configs.assign(std::max<std::int64_t>(m - 1, 0), GapConfig::TopTwice);
    res.splits.assign(m, {-1, -1});

    int s = best_state, done = 1;
    for (std::int64_t j = m - 1; j >= 0; --j) {
        if (j < m - 1) {
            const Parent& p = parent_gap[j][s][done];
            res.gap_configs[j] = static_cast<GapConfig>(p.choice);
            s = p.state;
            done = p.done;
        }
        const Parent& p = parent_aisle[j][s][done];
        const ActionChoice& ch = choices[j][p.choice];
        res.aisle_actions[j] = ch.action;
        if (ch.action == AisleAction::SplitLargestGap) res.splits[j] = {ch.split_top, ch.split_bottom};
        s = p.state;
        done = p.done;
    }
    return res;
}

}  // namespace sprp
