#ifndef AVLA_CLI_HPP
#define AVLA_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "avla/benchmarks.hpp"
#include "avla/engine.hpp"
#include "avla/harness.hpp"

namespace avla::cli {

// Exit codes: 0 success, 1 usage, 2 validation, 3 I/O.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_io = 3;

/// Override bundle shared by the run/experiment/sweep subcommands. Values
/// left unset fall back to the per-algorithm defaults.
struct AlgorithmFlags {
    std::string algo = "avla";
    std::optional<std::size_t> pop, iters, history, stagnation;
    std::optional<double> cr;
    std::optional<double> gamma;

    AlgorithmConfig build() const {
        AlgorithmConfig cfg;
        if (algo == "avla") {
            cfg.mode = AdaptationMode::adaptive;
            cfg.stagnation_limit = 6;
        } else if (algo == "vla") {
            cfg.mode = AdaptationMode::fixed;
            cfg.stagnation_limit = 10;
            cfg.fixed_cr = 0.25;
        } else {
            throw std::invalid_argument("unknown algorithm '" + algo + "' (expected avla or vla)");
        }
        if (pop) cfg.pop_size = *pop;
        if (iters) cfg.max_iters = *iters;
        if (history) cfg.memory_size = *history;
        if (stagnation) cfg.stagnation_limit = *stagnation;
        if (gamma) cfg.gamma = *gamma;
        if (cr) {
            if (algo != "vla") throw std::invalid_argument("--cr applies only to vla");
            cfg.fixed_cr = *cr;
        }
        cfg.validate();
        return cfg;
    }
};

inline std::vector<int> parse_problem_list(const std::string& csv) {
    std::vector<int> ids;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) ids.push_back(bench::parse_id(token));
    if (ids.empty()) throw std::invalid_argument("empty problem list");
    return ids;
}

inline std::vector<std::size_t> parse_value_list(const std::string& csv) {
    std::vector<std::size_t> values;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) values.push_back(std::stoul(token));
    return values;
}

inline void print_catalog(std::ostream& out) {
    out << "id\tname\tfamily\tdim\trange\tf_min\n";
    for (const auto& e : bench::catalog()) {
        out << 'F' << e.id << '\t' << e.name << '\t' << bench::family_name(e.family) << '\t'
            << e.default_dim << "\t[" << e.range_lo << ',' << e.range_hi << "]\t"
            << harness::full_precision(e.f_min(e.default_dim)) << '\n';
    }
}

/// Load an ExperimentPlan from a JSON manifest. Recognized keys: problems
/// (list of "F1" strings or {id, dim} objects), algorithms (list of "avla" /
/// "vla" strings or {label, algo, pop, iters, H, n_R, cr, gamma} objects),
/// runs, base_seed, jobs.
inline harness::ExperimentPlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument("config parse error in '" + path + "': " + ex.what());
    }
    harness::ExperimentPlan plan;
    if (doc.contains("runs")) plan.runs = doc["runs"].get<std::size_t>();
    if (doc.contains("base_seed")) plan.base_seed = doc["base_seed"].get<std::uint64_t>();
    if (doc.contains("jobs")) plan.jobs = doc["jobs"].get<std::size_t>();
    for (const auto& p : doc.value("problems", nlohmann::json::array())) {
        harness::ProblemRef ref;
        if (p.is_string()) {
            ref.id = bench::parse_id(p.get<std::string>());
        } else {
            ref.id = bench::parse_id(p.at("id").get<std::string>());
            ref.dim = p.value("dim", std::size_t{0});
        }
        plan.problems.push_back(ref);
    }
    for (const auto& a : doc.value("algorithms", nlohmann::json::array())) {
        AlgorithmFlags flags;
        std::string label;
        if (a.is_string()) {
            flags.algo = a.get<std::string>();
            label = flags.algo;
        } else {
            flags.algo = a.value("algo", std::string("avla"));
            label = a.value("label", flags.algo);
            if (a.contains("pop")) flags.pop = a["pop"].get<std::size_t>();
            if (a.contains("iters")) flags.iters = a["iters"].get<std::size_t>();
            if (a.contains("H")) flags.history = a["H"].get<std::size_t>();
            if (a.contains("n_R")) flags.stagnation = a["n_R"].get<std::size_t>();
            if (a.contains("cr")) flags.cr = a["cr"].get<double>();
            if (a.contains("gamma")) flags.gamma = a["gamma"].get<double>();
        }
        plan.algorithms.push_back({label, flags.build()});
    }
    return plan;
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    CLI::App app{"AVLA/VLA global optimizer and benchmark harness"};
    app.require_subcommand(1);

    AlgorithmFlags flags;
    std::string problem_arg = "F1";
    std::string problems_arg;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::string trace_path;
    std::string param_name = "H";
    std::string values_arg;
    std::size_t dim = 0;
    std::size_t runs = 30;
    std::size_t jobs = 1;
    std::uint64_t seed = 1;

    auto add_algo_flags = [&](CLI::App* cmd) {
        cmd->add_option("--algo", flags.algo, "algorithm: avla or vla");
        cmd->add_option("--pop", flags.pop, "population size N");
        cmd->add_option("--iters", flags.iters, "iteration budget maxNumIter");
        cmd->add_option("--H", flags.history, "success-history size H");
        cmd->add_option("--stagnation", flags.stagnation, "group-reflection trigger n_R");
        cmd->add_option("--cr", flags.cr, "fixed CR (vla only)");
        cmd->add_option("--gamma", flags.gamma, "learning-curve radius gamma");
    };

    CLI::App* list_cmd = app.add_subcommand("list", "print the benchmark catalog");
    (void)list_cmd;

    CLI::App* run_cmd = app.add_subcommand("run", "execute one seeded optimization run");
    run_cmd->add_option("--problem", problem_arg, "benchmark id, e.g. F9");
    run_cmd->add_option("--dim", dim, "dimension override (scalable problems)");
    run_cmd->add_option("--seed", seed, "run seed");
    run_cmd->add_option("--trace-out", trace_path, "write the per-iteration best trace as CSV");
    add_algo_flags(run_cmd);

    std::string algos_arg = "avla,vla";
    CLI::App* exp_cmd = app.add_subcommand("experiment", "multi-run experiment over problems");
    exp_cmd->add_option("--problems", problems_arg, "comma-separated ids (default: all 29)");
    exp_cmd->add_option("--algos", algos_arg, "comma-separated algorithms (default: avla,vla)");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "one-parameter sensitivity sweep");

    // options shared by experiment/sweep
    for (CLI::App* cmd : {exp_cmd, sweep_cmd}) {
        cmd->add_option("--runs", runs, "independent runs per cell");
        cmd->add_option("--seed", seed, "base seed");
        cmd->add_option("--jobs", jobs, "worker threads across runs");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--format", format, "csv or report")
            ->check(CLI::IsMember({"csv", "report"}));
    }
    exp_cmd->add_option("--dim", dim, "dimension override for every scalable problem");
    exp_cmd->add_option("--config", config_path, "JSON experiment manifest");
    add_algo_flags(exp_cmd);
    sweep_cmd->add_option("--problem", problem_arg, "benchmark id");
    sweep_cmd->add_option("--dim", dim, "dimension override");
    sweep_cmd->add_option("--param", param_name, "one of H, n_R, N, maxNumIter");
    sweep_cmd->add_option("--values", values_arg, "comma-separated parameter values")
        ->required();
    add_algo_flags(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (app.got_subcommand("list")) {
            print_catalog(out);
            return exit_ok;
        }

        if (app.got_subcommand("run")) {
            int id = bench::parse_id(problem_arg);
            AlgorithmConfig cfg = flags.build();
            ObjectiveProblem problem =
                bench::make_problem(id, dim, seed);
            RunResult result = run(problem, cfg, seed);
            out << "problem " << problem.name << " dim " << problem.dim << " algo "
                << flags.algo << " seed " << seed << " pop " << cfg.pop_size << " iters "
                << cfg.max_iters << '\n';
            out << "best " << harness::full_precision(result.best_fitness) << '\n';
            out << "position";
            for (double v : result.best_position) out << ' ' << harness::full_precision(v);
            out << '\n';
            out << "evals " << result.eval_count << '\n';
            if (!trace_path.empty()) {
                harness::persist_to_file(trace_path, [&](std::ostream& file) {
                    file << "iter,best\n";
                    for (std::size_t t = 0; t < result.trace.size(); ++t)
                        file << t << ',' << harness::full_precision(result.trace[t]) << '\n';
                });
            }
            return exit_ok;
        }

        if (app.got_subcommand("experiment")) {
            harness::ExperimentPlan plan;
            if (!config_path.empty()) plan = load_plan(config_path);
            // flags override / fill the manifest
            if (plan.problems.empty()) {
                std::vector<int> ids;
                if (!problems_arg.empty()) {
                    ids = parse_problem_list(problems_arg);
                } else {
                    for (int id = 1; id <= 29; ++id) ids.push_back(id);
                }
                for (int id : ids) plan.problems.push_back({id, dim});
            }
            if (plan.algorithms.empty()) {
                std::istringstream in(algos_arg);
                std::string token;
                while (std::getline(in, token, ',')) {
                    AlgorithmFlags f = flags;
                    f.algo = token;
                    plan.algorithms.push_back({token, f.build()});
                }
            }
            if (exp_cmd->count("--runs")) plan.runs = runs;
            if (exp_cmd->count("--seed")) plan.base_seed = seed;
            if (exp_cmd->count("--jobs")) plan.jobs = jobs;
            harness::ExperimentStats stats = harness::run_experiment(plan);
            auto writer = [&](std::ostream& o) {
                if (format == "csv")
                    harness::write_stats_csv(stats, o);
                else
                    harness::write_stats_report(stats, o);
            };
            if (out_path.empty())
                writer(out);
            else
                harness::persist_to_file(out_path, writer);
            return exit_ok;
        }

        if (app.got_subcommand("sweep")) {
            int id = bench::parse_id(problem_arg);
            harness::SweepParam param = harness::parse_sweep_param(param_name);
            std::vector<std::size_t> values = parse_value_list(values_arg);
            AlgorithmConfig base_cfg = flags.build();
            auto columns =
                harness::sweep({id, dim}, base_cfg, param, values, runs, seed, jobs);
            auto writer = [&](std::ostream& o) {
                if (format == "csv")
                    harness::write_sweep_csv(param, columns, o);
                else
                    harness::write_sweep_report(param, columns, o);
            };
            if (out_path.empty())
                writer(out);
            else
                harness::persist_to_file(out_path, writer);
            return exit_ok;
        }
    } catch (const std::invalid_argument& ex) {
        err << "validation error: " << ex.what() << '\n';
        return exit_validation;
    } catch (const std::runtime_error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_io;
    }
    return exit_usage;
}

} // namespace avla::cli

#endif
