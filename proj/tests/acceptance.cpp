// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   1  oracle triangle on 500 standard instances within five minutes
//   2  published worked examples feasible and reconstructible
//   3  scattered optimum = selection brute force; unique supply = standard
//   4  decoupling bounds, monotonicity, and aggregate savings trend
//   5  tiny decoupling models match exhaustive enumeration
//   6  multidepot optimum = open-walk oracle; savings magnitude moderate
//   7  ten thousand random feasible assignments are connected and even
//   8  scaling smoke test: m=15, n=45, a=30 within 120 seconds

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "sprp/dp.hpp"
#include "sprp/formulations/build.hpp"
#include "sprp/generator.hpp"
#include "sprp/mip/exhaustive.hpp"
#include "sprp/mip/solver.hpp"
#include "sprp/oracle.hpp"
#include "sprp/reduce.hpp"
#include "sprp/rng.hpp"
#include "sprp/walk.hpp"

using namespace sprp;

namespace {

int failures = 0;

struct Criterion {
    int number;
    std::string label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    std::mutex mutex;

    Criterion(int num, std::string text) : number(num), label(std::move(text)) {}

    void fail(const std::string& why) {
        std::lock_guard<std::mutex> lock(mutex);
        if (problems.size() < 5) problems.push_back(why);
    }

    double finish() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = problems.empty();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " ("
                  << std::fixed << std::setprecision(1) << secs << "s)\n";
        for (const auto& p : problems) std::cout << "        " << p << "\n";
        if (!ok) ++failures;
        return secs;
    }
};

// Deterministic parallel for: worker w handles indices w, w+J, w+2J, ...
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body) {
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    std::atomic<std::int64_t> next{0};
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

StandardInstance random_standard(std::uint64_t seed, std::int64_t max_m, std::int64_t max_n,
                                 std::int64_t max_a) {
    auto rng = make_stream(seed, RngStream::EndDepotCoin);
    GeneratorSpec spec;
    spec.num_aisles = rng.uniform_int(1, max_m);
    spec.positions = rng.uniform_int(2, max_n);
    spec.picks = rng.uniform_int(1, std::min(max_a, spec.num_aisles * spec.positions));
    spec.cross_gap = rng.uniform_int(1, 5);
    auto inst = std::get<StandardInstance>(generate_instance(spec, seed * 31 + 7));
    inst.depot.aisle = rng.uniform_int(0, spec.num_aisles - 1);
    inst.depot.side = rng.uniform_int(0, 1) ? Side::Top : Side::Bottom;
    return reduce_to_relevant(inst).instance;
}

void criterion_1() {
    Criterion c(1, "oracle triangle: solve_bb = solve_dp = held-karp on 500 instances");
    parallel_for(500, [&](std::int64_t seed) {
        StandardInstance inst = random_standard(static_cast<std::uint64_t>(seed), 6, 8, 8);
        auto built = build_standard(inst, compute_coefficients(inst));
        mip::Solution milp = solve_bb(built.model);
        if (milp.status != mip::SolveStatus::Optimal) {
            c.fail("seed " + std::to_string(seed) + ": solver not optimal");
            return;
        }
        Rat dp = solve_dp(inst).objective;
        Rat hk = rat(oracle_standard(inst));
        if (milp.objective != dp || dp != hk)
            c.fail("seed " + std::to_string(seed) + ": objectives differ (bb " +
                   rat_to_string(milp.objective) + ", dp " + rat_to_string(dp) + ", hk " +
                   rat_to_string(hk) + ")");
    });
    double secs = c.finish();
    if (secs > 300) {
        std::cout << "[FAIL] criterion 1 runtime bound: " << secs << "s > 300s\n";
        ++failures;
    }
}

// The four published worked examples, asserted verbatim; helpers complete
// the equality-determined variables.
mip::Assignment with_half_degrees(const BuiltModel& built, std::int64_t m,
                                  const std::map<std::string, std::int64_t>& ones) {
    mip::Assignment a(built.model.variables.size(), 0);
    for (const auto& [name, value] : ones) a[built.model.var_id(name)] = value;
    auto v = [&](const char* sym, std::int64_t j) { return a[built.vars.id(sym, j)]; };
    for (std::int64_t j = 0; j < m; ++j) {
        std::int64_t top = v("xtb", j) + 2 * v("x2tb", j) + 2 * v("x2t", j) + v("xu", j) +
                           2 * v("x2u", j);
        std::int64_t bottom = v("xtb", j) + 2 * v("x2tb", j) + 2 * v("x2b", j) + v("xu", j) +
                              2 * v("x2u", j);
        if (j > 0) {
            top += v("xtb", j - 1) + 2 * v("x2tb", j - 1) + 2 * v("x2t", j - 1);
            bottom += v("xtb", j - 1) + 2 * v("x2tb", j - 1) + 2 * v("x2b", j - 1);
        }
        a[built.vars.id("kt", j)] = top / 2;
        a[built.vars.id("kb", j)] = bottom / 2;
    }
    return a;
}

void criterion_2() {
    Criterion c(2, "published worked examples feasible, walks reconstruct");
    try {
        {  // standard example
            StandardInstance inst;
            inst.geometry = Geometry::unit(6, 10);
            inst.depot = {3, Side::Bottom};
            inst.required = {{1}, {9}, {2, 3, 7}, {3}, {5, 6}, {7}};
            auto built = build_standard(inst, compute_coefficients(inst));
            std::map<std::string, std::int64_t> ones{
                {"xpt_0_1", 1}, {"x2t_0", 1},   {"xpb_1_9", 1}, {"x2tb_1", 1},
                {"xu_2", 1},    {"xtb_2", 1},   {"xpt_3_3", 1}, {"xtb_3", 1},
                {"xu_4", 1},    {"x2b_4", 1},   {"xpb_5_7", 1}};
            mip::Assignment a = with_half_degrees(built, 6, ones);
            a[built.vars.id("z", 1)] = 1;
            mip::Evaluation ev = evaluate(built.model, a);
            if (!ev.feasible)
                c.fail("standard example infeasible: " + ev.violated.front().constraint);
            else if (a[built.vars.id("kt", 2)] != 2 || a[built.vars.id("kb", 3)] != 1)
                c.fail("standard example: published half-degrees do not match");
            else if (reconstruct_walk(inst, built.vars, a).cost != ev.objective)
                c.fail("standard example: walk cost mismatch");
        }
        {  // scattered example
            ScatteredInstance inst;
            inst.geometry = Geometry::unit(6, 10);
            inst.depot = {3, Side::Bottom};
            for (std::int64_t h = 0; h < 9; ++h) inst.demand[h] = 1;
            inst.supply[{0, 5, 0}] = 1;
            inst.supply[{1, 7, 1}] = 1;
            inst.supply[{1, 8, 2}] = 1;
            inst.supply[{1, 9, 3}] = 1;
            inst.supply[{3, 2, 4}] = 1;
            inst.supply[{3, 5, 5}] = 1;
            inst.supply[{3, 8, 0}] = 1;
            inst.supply[{4, 9, 6}] = 1;
            inst.supply[{5, 2, 7}] = 1;
            inst.supply[{5, 6, 8}] = 1;
            auto built = build_scattered(inst, compute_coefficients(inst));
            std::map<std::string, std::int64_t> ones{
                {"xpb_1_7", 1}, {"x2b_1", 1}, {"x2b_2", 1}, {"xu_3", 1},   {"xtb_3", 1},
                {"xpb_4_9", 1}, {"xtb_4", 1}, {"xu_5", 1},  {"p_1_7", 1},  {"p_1_8", 1},
                {"p_1_9", 1},   {"p_3_2", 1}, {"p_3_5", 1}, {"p_3_8", 1},  {"p_4_9", 1},
                {"p_5_2", 1},   {"p_5_6", 1}, {"g_1", 1},   {"g_2", 1},    {"g_3", 1},
                {"g_4", 1},     {"g_5", 1}};
            mip::Assignment a = with_half_degrees(built, 6, ones);
            mip::Evaluation ev = evaluate(built.model, a);
            if (!ev.feasible)
                c.fail("scattered example infeasible: " + ev.violated.front().constraint);
            else if (reconstruct_walk(inst, built.vars, a).cost != ev.objective)
                c.fail("scattered example: walk cost mismatch");
        }
        {  // decoupling example
            DecouplingInstance inst;
            inst.geometry = Geometry::unit(5, 10);
            inst.depot = {0, Side::Top};
            inst.capacity = 2;
            inst.beta = rat(1, 2);
            for (auto [j, i] : std::initializer_list<std::pair<int, int>>{
                     {0, 0}, {0, 1}, {0, 3}, {1, 5}, {2, 2}, {3, 6}, {4, 1}, {4, 4}, {4, 9}})
                inst.demand_at[{j, i}] = 1;
            auto built = build_decoupling(inst, compute_coefficients(inst));
            std::map<std::string, std::int64_t> ones{
                {"xpt_0_3", 1},  {"x2t_0", 1}, {"xu_1", 1},  {"xtb_1", 1}, {"xpt_2_2", 1},
                {"xtb_2", 1},    {"xu_3", 1},  {"wtr_3", 1}, {"xptp_4_4", 1}, {"wbr_3", 1},
                {"xpbp_4_9", 1}, {"g_0", 1},   {"g_1", 1},   {"g_2", 1},   {"g_3", 1},
                {"qb_4", 1}};
            mip::Assignment a = with_half_degrees(built, 5, ones);
            mip::Evaluation ev = evaluate(built.model, a);
            if (!ev.feasible)
                c.fail("decoupling example infeasible: " + ev.violated.front().constraint);
            else {
                PickerWalk walk =
                    reconstruct_walk(inst, compute_coefficients(inst), built.vars, a);
                if (walk.cost != ev.objective) c.fail("decoupling example: walk cost mismatch");
                if (walk.alone_walks.size() != 2)
                    c.fail("decoupling example: expected two alone excursions");
            }
        }
        {  // multidepot example
            MultiDepotInstance inst;
            inst.geometry = Geometry::unit(5, 10);
            inst.start = {3, Side::Bottom};
            inst.end_candidates = {
                {3, Side::Bottom}, {1, Side::Bottom}, {0, Side::Top}, {4, Side::Top}};
            inst.required = {{2}, {5}, {4}, {1}, {7}};
            auto built = build_multidepot(inst, compute_coefficients(inst));
            std::map<std::string, std::int64_t> ones{
                {"x2b_0", 1}, {"xpb_0_2", 1}, {"x2b_1", 1}, {"xpb_1_5", 1}, {"x2u_2", 1},
                {"x2t_2", 1}, {"x2u_3", 1},   {"x2b_3", 1}, {"xpb_4_7", 1}, {"g_0", 1},
                {"g_1", 1},   {"g_2", 1},     {"g_3", 1},   {"g_4", 1},     {"yu_3", 1},
                {"yt_2", 1},  {"yu_2", 1},    {"yb_1", 1},  {"eb_1", 1},    {"kpt_2", 1},
                {"kpb_2", 1}, {"kpt_3", 1}};
            mip::Assignment a = with_half_degrees(built, 5, ones);
            mip::Evaluation ev = evaluate(built.model, a);
            if (!ev.feasible)
                c.fail("multidepot example infeasible: " + ev.violated.front().constraint);
            else {
                PickerWalk walk = reconstruct_walk(inst, built.vars, a);
                if (walk.cost != ev.objective) c.fail("multidepot example: walk cost mismatch");
                if (!walk.end_depot || walk.end_depot->aisle != 1 ||
                    walk.end_depot->side != Side::Bottom)
                    c.fail("multidepot example: trail does not end at the published depot");
            }
        }
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    c.finish();
}

void criterion_3() {
    Criterion c(3, "scattered = selection brute force on 200 instances; unique supply = standard");
    parallel_for(200, [&](std::int64_t k) {
        std::uint64_t seed = static_cast<std::uint64_t>(k);
        auto rng = make_stream(seed, RngStream::FillSku);
        GeneratorSpec spec;
        spec.variant = "scattered";
        spec.num_aisles = rng.uniform_int(2, 4);
        spec.positions = rng.uniform_int(2, 5);
        spec.alpha = k % 4 == 0 ? 1 : rng.uniform_int(2, 4);
        spec.picks = rng.uniform_int(1, 3);
        ScatteredInstance raw;
        bool found = false;
        for (std::uint64_t attempt = 0; attempt < 64 && !found; ++attempt) {
            auto candidate =
                std::get<ScatteredInstance>(generate_instance(spec, seed ^ (attempt * 7919)));
            auto cand = candidate.candidate_positions();
            std::int64_t total = 0;
            for (const auto& s : cand) total += static_cast<std::int64_t>(s.size());
            if (total <= 16) {
                raw = candidate;
                found = true;
            }
        }
        if (!found) {
            c.fail("seed " + std::to_string(seed) + ": no instance within the candidate cap");
            return;
        }
        ScatteredInstance inst = reduce_to_relevant(raw).instance;
        auto built = build_scattered(inst, compute_coefficients(inst));
        mip::Solution s = solve_bb(built.model);
        if (s.status != mip::SolveStatus::Optimal) {
            c.fail("seed " + std::to_string(seed) + ": solver not optimal");
            return;
        }
        if (s.objective != rat(scattered_bruteforce(inst))) {
            c.fail("seed " + std::to_string(seed) + ": differs from the brute force");
            return;
        }
        if (spec.alpha == 1) {
            StandardInstance st;
            st.geometry = inst.geometry;
            st.depot = inst.depot;
            st.required = inst.candidate_positions();
            Rat dp = solve_dp(reduce_to_relevant(st).instance).objective;
            if (s.objective != dp)
                c.fail("seed " + std::to_string(seed) + ": unique supply differs from standard");
        }
    });
    c.finish();
}

void criterion_4() {
    Criterion c(4, "decoupling bounds, monotonicity in C and beta, savings trend");
    const std::vector<std::int64_t> caps{2, 4, 6};
    const std::vector<Rat> betas{rat(1, 2), rat(3, 4), rat(1)};
    std::vector<double> save_low(200, 0), save_high(200, 0);  // (C=2,b=.75) and (C=6,b=.5)
    parallel_for(200, [&](std::int64_t k) {
        std::uint64_t seed = static_cast<std::uint64_t>(k);
        auto rng = make_stream(seed, RngStream::DemandQty);
        GeneratorSpec spec;
        spec.variant = "decoupling";
        spec.num_aisles = rng.uniform_int(1, 4);
        spec.positions = rng.uniform_int(2, 6);
        spec.picks = rng.uniform_int(1, std::min<std::int64_t>(4, spec.num_aisles * spec.positions));
        spec.cross_gap = rng.uniform_int(1, 5);
        auto base = std::get<DecouplingInstance>(generate_instance(spec, seed * 131 + 11));
        Rat standard = solve_dp(reduce_to_relevant(base.as_standard()).instance).objective;

        std::map<std::pair<std::int64_t, int>, Rat> opt;  // (C, beta index)
        for (auto cap : caps) {
            for (std::size_t bi = 0; bi < betas.size(); ++bi) {
                DecouplingInstance variant = base;
                variant.capacity = cap;
                variant.beta = betas[bi];
                DecouplingInstance inst = reduce_to_relevant(variant).instance;
                auto built = build_decoupling(inst, compute_coefficients(inst));
                mip::Solution s = solve_bb(built.model);
                if (s.status != mip::SolveStatus::Optimal) {
                    c.fail("seed " + std::to_string(seed) + ": solver not optimal");
                    return;
                }
                opt[{cap, static_cast<int>(bi)}] = s.objective;
                // Exact sandwich.
                if (s.objective > standard || s.objective < betas[bi] * standard) {
                    c.fail("seed " + std::to_string(seed) + ": bound sandwich violated");
                    return;
                }
            }
        }
        for (std::size_t bi = 0; bi < betas.size(); ++bi)  // nonincreasing in C
            if (opt[{4, (int)bi}] > opt[{2, (int)bi}] || opt[{6, (int)bi}] > opt[{4, (int)bi}]) {
                c.fail("seed " + std::to_string(seed) + ": not monotone in capacity");
                return;
            }
        for (auto cap : caps)  // nondecreasing in beta
            if (opt[{cap, 1}] < opt[{cap, 0}] || opt[{cap, 2}] < opt[{cap, 1}]) {
                c.fail("seed " + std::to_string(seed) + ": not monotone in beta");
                return;
            }
        for (auto cap : caps)  // beta = 1: no gain over the standard tour
            if (opt[{cap, 2}] != standard) {
                c.fail("seed " + std::to_string(seed) + ": beta=1 optimum differs from standard");
                return;
            }
        if (standard != 0) {
            save_low[k] = 100.0 * (1.0 - Rat(opt[{2, 1}] / standard).get_d());
            save_high[k] = 100.0 * (1.0 - Rat(opt[{6, 0}] / standard).get_d());
        }
    });
    double avg_low = 0, avg_high = 0;
    for (double v : save_low) avg_low += v / save_low.size();
    for (double v : save_high) avg_high += v / save_high.size();
    if (!(avg_high > avg_low))
        c.fail("aggregate savings do not grow from (C=2,b=0.75) to (C=6,b=0.5): " +
               std::to_string(avg_low) + " vs " + std::to_string(avg_high));
    c.finish();
    std::cout << "        average savings " << std::fixed << std::setprecision(2) << avg_low
              << "% (C=2, beta=0.75) -> " << avg_high << "% (C=6, beta=0.5)\n";
}

void criterion_5() {
    Criterion c(5, "tiny decoupling models: solve_bb = exhaustive enumeration on 50 instances");
    std::atomic<int> done{0};
    parallel_for(400, [&](std::int64_t k) {
        if (done.load() >= 50) return;
        std::uint64_t seed = static_cast<std::uint64_t>(k + 9000);
        auto rng = make_stream(seed, RngStream::DemandQty);
        GeneratorSpec spec;
        spec.variant = "decoupling";
        spec.num_aisles = rng.uniform_int(1, 2);
        spec.positions = rng.uniform_int(2, 6);
        spec.picks = rng.uniform_int(1, std::min<std::int64_t>(3, spec.num_aisles * spec.positions));
        spec.capacity = 2;
        spec.beta = rat(1, 2);
        auto inst =
            reduce_to_relevant(std::get<DecouplingInstance>(generate_instance(spec, seed))).instance;
        auto built = build_decoupling(inst, compute_coefficients(inst));
        std::int64_t free_vars = 0;
        for (const auto& v : built.model.variables)
            if (v.lower < v.upper) ++free_vars;
        if (free_vars > 26) return;
        if (done.fetch_add(1) >= 50) return;
        mip::ExhaustiveResult ex = mip::model_exhaustive(built.model);
        mip::Solution s = solve_bb(built.model);
        if (!ex.feasible || s.status != mip::SolveStatus::Optimal)
            c.fail("seed " + std::to_string(seed) + ": unexpected infeasibility");
        else if (s.objective != ex.objective)
            c.fail("seed " + std::to_string(seed) + ": solver differs from enumeration");
    });
    if (done.load() < 50) c.fail("fewer than 50 models within the 26-variable cap");
    c.finish();
}

void criterion_6() {
    Criterion c(6, "multidepot = open-walk oracle on 200 instances; moderate savings");
    std::vector<double> sigma_one_delta;
    std::mutex delta_mutex;
    parallel_for(200, [&](std::int64_t k) {
        std::uint64_t seed = static_cast<std::uint64_t>(k);
        auto rng = make_stream(seed, RngStream::PickListSku);
        GeneratorSpec spec;
        spec.variant = "multidepot";
        spec.num_aisles = rng.uniform_int(1, 5);
        spec.positions = rng.uniform_int(2, 7);
        spec.picks = rng.uniform_int(1, std::min<std::int64_t>(12, spec.num_aisles * spec.positions));
        spec.cross_gap = rng.uniform_int(1, 5);
        int sigma_case = k % 4;
        spec.sigma_num = sigma_case == 0 ? 1 : sigma_case == 1 ? 1 : sigma_case == 2 ? 10 : 0;
        spec.sigma_den = sigma_case == 0 ? 10 : sigma_case == 1 ? 2 : 10;
        auto inst =
            reduce_to_relevant(std::get<MultiDepotInstance>(generate_instance(spec, seed * 53 + 29)))
                .instance;
        if (sigma_case == 3) inst.end_candidates = {inst.start};

        auto built = build_multidepot(inst, compute_coefficients(inst));
        mip::Solution s = solve_bb(built.model);
        if (s.status != mip::SolveStatus::Optimal) {
            c.fail("seed " + std::to_string(seed) + ": solver not optimal");
            return;
        }
        Rat oracle = rat(oracle_multidepot(inst));
        if (s.objective != oracle) {
            c.fail("seed " + std::to_string(seed) + ": differs from the open-walk oracle");
            return;
        }
        Rat standard = solve_dp(reduce_to_relevant(inst.as_standard()).instance).objective;
        if (sigma_case == 3 && s.objective != standard) {
            c.fail("seed " + std::to_string(seed) + ": start-only differs from standard");
            return;
        }
        if (sigma_case == 2 && standard != 0) {  // sigma = 1.0
            std::lock_guard<std::mutex> lock(delta_mutex);
            sigma_one_delta.push_back(100.0 * (Rat(s.objective / standard).get_d() - 1.0));
        }
    });
    double avg = 0;
    for (double d : sigma_one_delta) avg += d / sigma_one_delta.size();
    if (sigma_one_delta.empty() || !(std::abs(avg) < 10.0))
        c.fail("sigma=1 average savings " + std::to_string(avg) + "% not below 10%");
    c.finish();
    std::cout << "        sigma=1.0 average gap " << std::fixed << std::setprecision(2) << avg
              << "% over " << sigma_one_delta.size() << " instances\n";
}

void criterion_7() {
    Criterion c(7, "10000 solver-sampled feasible assignments: even degree and connected");
    std::atomic<std::int64_t> checked{0};
    parallel_for(100, [&](std::int64_t inst_id) {
        StandardInstance inst = random_standard(static_cast<std::uint64_t>(inst_id + 40000), 4, 6, 5);
        auto built = build_standard(inst, compute_coefficients(inst));
        auto rng = make_stream(static_cast<std::uint64_t>(inst_id), RngStream::FillClass);
        for (int round = 0; round < 100; ++round) {
            // Random objective over the same feasible set.
            mip::Model probe = built.model;
            std::vector<mip::Term> obj;
            for (std::size_t v = 0; v < probe.variables.size(); ++v)
                obj.push_back({static_cast<int>(v), rat(rng.uniform_int(-3, 12))});
            probe.set_objective(obj);
            mip::Solution s = solve_bb(probe);
            if (s.status != mip::SolveStatus::Optimal) {
                c.fail("instance " + std::to_string(inst_id) + ": sample solve failed");
                return;
            }
            try {
                reconstruct_walk(inst, built.vars, s.values);
            } catch (const WalkError& e) {
                c.fail("instance " + std::to_string(inst_id) + " round " +
                       std::to_string(round) + ": " + e.what());
                return;
            }
            ++checked;
        }
    });
    if (checked.load() != 10000 && c.problems.empty())
        c.fail("checked " + std::to_string(checked.load()) + " assignments, expected 10000");
    c.finish();
}

void criterion_8() {
    Criterion c(8, "scaling smoke test: m=15, n=45, a=30 solved within 120s");
    GeneratorSpec spec;
    spec.num_aisles = 15;
    spec.positions = 45;
    spec.picks = 30;
    auto inst = reduce_to_relevant(std::get<StandardInstance>(generate_instance(spec, 0))).instance;
    auto built = build_standard(inst, compute_coefficients(inst));
    auto t0 = std::chrono::steady_clock::now();
    mip::Solution s = solve_bb(built.model);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s.status != mip::SolveStatus::Optimal)
        c.fail("not solved to optimality");
    else if (s.objective != solve_dp(inst).objective)
        c.fail("solver disagrees with the dynamic program");
    if (secs > 120) c.fail("took " + std::to_string(secs) + "s");
    c.finish();
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n================\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
