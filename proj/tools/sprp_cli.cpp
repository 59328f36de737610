// Command-line interface: generate benchmark instances, solve them with the
// bundled solvers or export the model for an external one, validate
// solutions against the reconstructed walk, and run experiment grids.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure,
// 3 solver limit reached.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sprp/dp.hpp"
#include "sprp/formulations/build.hpp"
#include "sprp/generator.hpp"
#include "sprp/instance_io.hpp"
#include "sprp/mip/exhaustive.hpp"
#include "sprp/mip/lp_io.hpp"
#include "sprp/mip/solver.hpp"
#include "sprp/oracle.hpp"
#include "sprp/reduce.hpp"
#include "sprp/walk.hpp"

namespace {

using namespace sprp;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

Rat parse_decimal_flag(const std::string& text, const char* what) {
    try {
        return rat_from_decimal(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": not a plain decimal: " + text);
    }
}

GeneratorSpec spec_from_flags(const std::string& variant, std::int64_t m, std::int64_t n,
                              std::int64_t a, std::int64_t alpha, const std::string& beta,
                              std::int64_t capacity, const std::string& sigma, std::int64_t gap) {
    GeneratorSpec spec;
    spec.variant = variant;
    spec.num_aisles = m;
    spec.positions = n;
    spec.picks = a;
    spec.alpha = alpha;
    spec.capacity = capacity;
    spec.cross_gap = gap;
    spec.beta = parse_decimal_flag(beta, "--beta");
    Rat s = parse_decimal_flag(sigma, "--sigma");
    spec.sigma_num = to_int64(mpz_class(s.get_num()));
    spec.sigma_den = to_int64(mpz_class(s.get_den()));
    return spec;
}

struct ReducedAny {
    AnyInstance instance;
    std::int64_t offset = 0;
};

ReducedAny reduce_any(const AnyInstance& inst) {
    return std::visit(
        [](const auto& i) -> ReducedAny {
            auto r = reduce_to_relevant(i);
            return {r.instance, r.offset};
        },
        inst);
}

BuiltModel build_model_for(const StandardInstance& i) {
    return build_standard(i, compute_coefficients(i));
}
BuiltModel build_model_for(const ScatteredInstance& i) {
    return build_scattered(i, compute_coefficients(i));
}
BuiltModel build_model_for(const DecouplingInstance& i) {
    return build_decoupling(i, compute_coefficients(i));
}
BuiltModel build_model_for(const MultiDepotInstance& i) {
    return build_multidepot(i, compute_coefficients(i));
}

BuiltModel build_any(const AnyInstance& reduced) {
    return std::visit([](const auto& i) { return build_model_for(i); }, reduced);
}

PickerWalk walk_for(const AnyInstance& reduced, const VarMap& vars,
                    const mip::Assignment& values) {
    if (const auto* s = std::get_if<StandardInstance>(&reduced))
        return reconstruct_walk(*s, vars, values);
    if (const auto* s = std::get_if<ScatteredInstance>(&reduced))
        return reconstruct_walk(*s, vars, values);
    if (const auto* s = std::get_if<DecouplingInstance>(&reduced))
        return reconstruct_walk(*s, compute_coefficients(*s), vars, values);
    return reconstruct_walk(std::get<MultiDepotInstance>(reduced), vars, values);
}

Rat oracle_for(const AnyInstance& reduced) {
    if (const auto* s = std::get_if<StandardInstance>(&reduced)) return rat(oracle_standard(*s));
    if (const auto* s = std::get_if<ScatteredInstance>(&reduced))
        return rat(scattered_bruteforce(*s));
    if (const auto* s = std::get_if<MultiDepotInstance>(&reduced))
        return rat(oracle_multidepot(*s));
    // Decoupling has no walk-level oracle; certify through the model.
    const auto& inst = std::get<DecouplingInstance>(reduced);
    auto built = build_decoupling(inst, compute_coefficients(inst));
    auto ex = mip::model_exhaustive(built.model);
    if (!ex.feasible) throw std::runtime_error("exhaustive oracle: infeasible model");
    return ex.objective;
}

void describe_walk(std::ostream& out, const PickerWalk& walk) {
    out << "walk: " << walk.circuit.size() << " stops";
    std::size_t picks = 0;
    for (const auto& stop : walk.circuit) picks += stop.branch_picks.size();
    out << ", " << picks << " branch picks";
    if (!walk.alone_walks.empty()) out << ", " << walk.alone_walks.size() << " alone excursions";
    if (walk.end_depot)
        out << ", ends at " << side_name(walk.end_depot->side) << " of aisle "
            << walk.end_depot->aisle;
    out << "\n";
}

int cmd_generate(const GeneratorSpec& spec, std::int64_t seeds, std::int64_t seed0,
                 const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (std::int64_t k = 0; k < seeds; ++k) {
        std::uint64_t seed = static_cast<std::uint64_t>(seed0 + k);
        AnyInstance inst = generate_instance(spec, seed);
        std::ostringstream name;
        name << spec.variant << "_m" << spec.num_aisles << "_n" << spec.positions << "_a"
             << spec.picks << "_s" << seed << ".json";
        std::filesystem::path path = std::filesystem::path(out_dir) / name.str();
        save_instance(inst, path.string());
        std::cout << path.string() << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& path, const std::string& solver, const std::string& export_lp_path,
              const std::string& varmap_path, const std::string& import_sol,
              const std::string& write_sol, bool validate, double time_limit,
              std::int64_t node_limit) {
    AnyInstance raw = load_instance(path);
    ReducedAny reduced = reduce_any(raw);
    std::string variant = variant_name(reduced.instance);
    Timer timer;

    std::cout << "instance: " << path << " (" << variant << ", "
              << geometry_of(reduced.instance).num_aisles << " relevant aisles, offset "
              << reduced.offset << ")\n";
    if (const auto* d = std::get_if<DecouplingInstance>(&reduced.instance))
        if (d->beta < rat(1, 2))
            std::cout << "note: model-optimal (beta < 0.5: horizontal tours limited to one per "
                         "side, walk may not be globally optimal)\n";

    if (solver == "dp") {
        if (variant != "standard") {
            std::cerr << "error: --solver dp applies to the standard variant only\n";
            return 1;
        }
        const auto& inst = std::get<StandardInstance>(reduced.instance);
        DpResult res = solve_dp(inst);
        std::cout << "objective: " << rat_to_string(res.objective) << "\nstatus: optimal\n";
        PickerWalk walk = walk_from_dp(inst, res);
        describe_walk(std::cout, walk);
        std::cout << "time: " << std::fixed << std::setprecision(3) << timer.seconds() << "s\n";
        return 0;
    }

    if (solver == "oracle") {
        Rat obj = oracle_for(reduced.instance);
        std::cout << "objective: " << rat_to_string(obj) << "\nstatus: optimal\n";
        std::cout << "time: " << std::fixed << std::setprecision(3) << timer.seconds() << "s\n";
        return 0;
    }

    BuiltModel built = build_any(reduced.instance);
    std::cout << "model: " << built.model.variables.size() << " variables, "
              << built.model.constraints.size() << " constraints\n";

    if (!export_lp_path.empty() || solver == "external") {
        std::string lp_path = export_lp_path.empty() ? path + ".lp" : export_lp_path;
        std::ofstream lp(lp_path, std::ios::binary);
        lp << mip::export_lp(built.model);
        std::string side = varmap_path.empty() ? lp_path + ".vars" : varmap_path;
        std::ofstream vars(side, std::ios::binary);
        vars << built.vars.sidecar();
        std::cout << "wrote " << lp_path << " and " << side << "\n";
    }

    mip::Assignment values;
    Rat objective;
    if (solver == "external") {
        if (import_sol.empty()) {
            std::cout << "status: exported (pass --import-sol to validate a solution)\n";
            return 0;
        }
        std::ifstream in(import_sol, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << import_sol << "\n";
            return 1;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        mip::ParsedSolution parsed = mip::read_solution(built.model, ss.str());
        if (parsed.missing_defaulted) {
            std::cout << "warning: " << parsed.missing_names.size()
                      << " variables missing from the solution file, defaulted to 0\n";
        }
        mip::Evaluation ev = evaluate(built.model, parsed.values);
        if (!ev.feasible) {
            std::cout << "status: infeasible assignment (" << ev.violated.size()
                      << " violations, first: " << ev.violated.front().constraint << ")\n";
            return 2;
        }
        values = parsed.values;
        objective = ev.objective;
        std::cout << "objective: " << rat_to_string(objective) << "\nstatus: feasible\n";
    } else if (solver == "bb") {
        mip::SolveLimits limits;
        limits.time_seconds = time_limit;
        limits.max_nodes = node_limit;
        mip::Solution sol = solve_bb(built.model, limits);
        std::cout << "status: " << mip::status_name(sol.status) << "\n";
        std::cout << "nodes: " << sol.nodes << ", lp pivots: " << sol.lp_pivots << "\n";
        if (sol.status == mip::SolveStatus::Infeasible) return 1;
        if (!sol.values.empty())
            std::cout << "objective: " << rat_to_string(sol.objective) << "\n";
        if (sol.status != mip::SolveStatus::Optimal) {
            std::cout << "best bound: " << rat_to_string(sol.best_bound) << "\n";
            return 3;
        }
        values = sol.values;
        objective = sol.objective;
        if (!write_sol.empty()) {
            std::ofstream out(write_sol, std::ios::binary);
            out << mip::write_solution(built.model, values);
            std::cout << "wrote " << write_sol << "\n";
        }
    } else {
        std::cerr << "error: unknown solver " << solver << "\n";
        return 1;
    }

    if (validate || solver == "external") {
        try {
            PickerWalk walk = walk_for(reduced.instance, built.vars, values);
            if (walk.cost != objective) {
                std::cout << "validation: cost mismatch (walk "
                          << rat_to_string(walk.cost) << " vs objective "
                          << rat_to_string(objective) << ")\n";
                return 2;
            }
            describe_walk(std::cout, walk);
            std::cout << "validation: ok\n";
        } catch (const WalkError& e) {
            std::cout << "validation: failed (" << e.what() << ")\n";
            return 2;
        }
    }
    std::cout << "time: " << std::fixed << std::setprecision(3) << timer.seconds() << "s\n";
    return 0;
}

// One bench task: an instance plus its base (closed-tour, coupled) optimum.
struct BenchRow {
    std::string group;
    std::string status = "ok";
    double delta_sum = 0;
    double t_sum = 0, t_max = 0;
    std::int64_t count = 0;
};

int cmd_bench(const GeneratorSpec& base_spec, const std::vector<std::int64_t>& ms,
              const std::vector<std::int64_t>& as, std::int64_t seeds, std::int64_t seed0,
              const std::string& out_csv, int jobs, double time_limit) {
    struct Task {
        GeneratorSpec spec;
        std::uint64_t seed;
        std::size_t row;
    };
    std::vector<Task> tasks;
    std::vector<BenchRow> rows;
    for (auto m : ms) {
        for (auto a : as) {
            GeneratorSpec spec = base_spec;
            spec.num_aisles = m;
            spec.picks = a;
            BenchRow row;
            row.group = "(" + std::to_string(m) + "," + std::to_string(a) + ")";
            std::size_t row_id = rows.size();
            rows.push_back(row);
            for (std::int64_t k = 0; k < seeds; ++k)
                tasks.push_back({spec, static_cast<std::uint64_t>(seed0 + k), row_id});
        }
    }

    struct Outcome {
        bool ok = false;
        std::string status;
        double delta = 0;
        double seconds = 0;
    };
    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const Task& task = tasks[t];
            Outcome& out = outcomes[t];
            try {
                AnyInstance raw = generate_instance(task.spec, task.seed);
                ReducedAny reduced = reduce_any(raw);

                // Base: the standard closed-tour optimum on the same picks.
                Rat base;
                if (const auto* d = std::get_if<DecouplingInstance>(&reduced.instance)) {
                    base = solve_dp(reduce_to_relevant(d->as_standard()).instance).objective;
                } else if (const auto* md = std::get_if<MultiDepotInstance>(&reduced.instance)) {
                    base = solve_dp(reduce_to_relevant(md->as_standard()).instance).objective;
                } else if (const auto* sc = std::get_if<ScatteredInstance>(&reduced.instance)) {
                    StandardInstance all;
                    all.geometry = sc->geometry;
                    all.depot = sc->depot;
                    all.required = sc->candidate_positions();
                    base = solve_dp(reduce_to_relevant(all).instance).objective;
                } else {
                    base = solve_dp(std::get<StandardInstance>(reduced.instance)).objective;
                }

                Timer timer;
                BuiltModel built = build_any(reduced.instance);
                mip::SolveLimits limits;
                limits.time_seconds = time_limit;
                mip::Solution sol = solve_bb(built.model, limits);
                out.seconds = timer.seconds();
                if (sol.status != mip::SolveStatus::Optimal) {
                    out.status = mip::status_name(sol.status);
                    return;
                }
                Rat delta = base == 0 ? Rat(0) : Rat((sol.objective - base) * 100 / base);
                out.delta = delta.get_d();
                out.ok = true;
            } catch (const std::exception& e) {
                out.status = std::string("error: ") + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(1, jobs); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (std::size_t t = 0; t < tasks.size(); ++t) {
        BenchRow& row = rows[tasks[t].row];
        const Outcome& out = outcomes[t];
        if (!out.ok) {
            if (row.status == "ok") row.status = out.status;  // abort the row
            continue;
        }
        row.delta_sum += out.delta;
        row.t_sum += out.seconds;
        row.t_max = std::max(row.t_max, out.seconds);
        ++row.count;
    }

    std::ostringstream csv;
    csv << "group,instances,delta_avg,t_avg,t_max,status\n";
    for (const auto& row : rows) {
        csv << row.group << "," << row.count << ",";
        if (row.status == "ok" && row.count > 0) {
            csv << std::fixed << std::setprecision(2) << row.delta_sum / row.count << ","
                << std::setprecision(3) << row.t_sum / row.count << "," << row.t_max << ",ok\n";
        } else {
            csv << ",,," << row.status << "\n";
        }
    }
    if (out_csv.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_csv, std::ios::binary);
        out << csv.str();
        std::cout << "wrote " << out_csv << "\n";
    }
    for (const auto& row : rows)
        if (row.status != "ok") return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single picker routing: compact models, exact solvers, oracles"};
    app.require_subcommand(1);

    std::string variant = "standard";
    std::int64_t m = 5, n = 45, a = 30, alpha = 5, capacity = 2, gap = 5;
    std::string beta = "0.5", sigma = "0.5";

    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--variant", variant, "standard|scattered|decoupling|multidepot");
        cmd->add_option("--m", m, "number of aisles");
        cmd->add_option("--n", n, "picking positions per aisle");
        cmd->add_option("--a", a, "required positions / pick-list SKUs");
        cmd->add_option("--alpha", alpha, "scattered: SKU duplication factor");
        cmd->add_option("--beta", beta, "decoupling: picker-alone time factor (decimal)");
        cmd->add_option("--capacity", capacity, "decoupling: picker-alone capacity");
        cmd->add_option("--sigma", sigma, "multidepot: candidate probability (decimal)");
        cmd->add_option("--gap", gap, "cross-aisle gap between adjacent aisles");
    };

    auto* gen = app.add_subcommand("generate", "write sprp-v1 instance files");
    std::int64_t seeds = 1, seed0 = 0;
    std::string out_dir = ".";
    add_spec_flags(gen);
    gen->add_option("--seeds", seeds, "number of instances");
    gen->add_option("--seed0", seed0, "first seed");
    gen->add_option("--out", out_dir, "output directory");

    auto* solve = app.add_subcommand("solve", "solve one instance file");
    std::string instance_path, solver = "bb", export_lp_path, varmap_path, import_sol, write_sol;
    bool validate = false;
    double time_limit = 60;
    std::int64_t node_limit = 0;
    solve->add_option("instance", instance_path, "sprp-v1 instance file")->required();
    solve->add_option("--solver", solver, "bb|dp|oracle|external");
    solve->add_option("--export-lp", export_lp_path, "write the model in LP format");
    solve->add_option("--varmap", varmap_path, "sidecar path (default: <lp>.vars)");
    solve->add_option("--import-sol", import_sol, "read an external 'name value' solution");
    solve->add_option("--write-sol", write_sol, "write the solver's solution");
    solve->add_flag("--validate", validate, "reconstruct and check the walk");
    solve->add_option("--time-limit", time_limit, "seconds, 0 = unlimited");
    solve->add_option("--node-limit", node_limit, "branch-and-bound nodes, 0 = unlimited");

    auto* bench = app.add_subcommand("bench", "run an experiment grid, emit CSV");
    std::vector<std::int64_t> ms{5}, as{30};
    std::int64_t bench_seeds = 30, bench_seed0 = 0;
    std::string out_csv;
    int jobs = 1;
    double bench_time_limit = 60;
    add_spec_flags(bench);
    bench->add_option("--m-list", ms, "aisle counts")->delimiter(',');
    bench->add_option("--a-list", as, "pick counts")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "instances per group");
    bench->add_option("--seed0", bench_seed0, "first seed");
    bench->add_option("--out", out_csv, "CSV path (default: stdout)");
    bench->add_option("--jobs", jobs, "parallel workers");
    bench->add_option("--time-limit", bench_time_limit, "seconds per solve");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            GeneratorSpec spec =
                spec_from_flags(variant, m, n, a, alpha, beta, capacity, sigma, gap);
            return cmd_generate(spec, seeds, seed0, out_dir);
        }
        if (solve->parsed()) {
            return cmd_solve(instance_path, solver, export_lp_path, varmap_path, import_sol,
                             write_sol, validate, time_limit, node_limit);
        }
        if (bench->parsed()) {
            GeneratorSpec spec =
                spec_from_flags(variant, m, n, a, alpha, beta, capacity, sigma, gap);
            return cmd_bench(spec, ms, as, bench_seeds, bench_seed0, out_csv, jobs,
                             bench_time_limit);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
