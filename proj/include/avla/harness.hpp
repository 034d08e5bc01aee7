#ifndef AVLA_HARNESS_HPP
#define AVLA_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "avla/benchmarks.hpp"
#include "avla/core.hpp"
#include "avla/engine.hpp"

namespace avla::harness {

struct ProblemRef {
    int id = 1;
    std::size_t dim = 0;  // 0 = catalog default
};

struct AlgorithmRef {
    std::string label;
    AlgorithmConfig config;
};

/// A multi-run experiment: every (problem, algorithm, run) triple gets a
/// deterministically derived seed, so re-running a plan reproduces it.
struct ExperimentPlan {
    std::vector<ProblemRef> problems;
    std::vector<AlgorithmRef> algorithms;
    std::size_t runs = 30;
    std::uint64_t base_seed = 1;
    std::size_t jobs = 1;

    void validate() const {
        if (problems.empty() || algorithms.empty())
            throw std::invalid_argument("plan: needs at least one problem and one algorithm");
        if (runs < 1) throw std::invalid_argument("plan: runs must be >= 1");
        for (const auto& a : algorithms) a.config.validate();
    }
};

inline std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t problem_index,
                                 std::size_t algorithm_index, std::size_t run_index) {
    return RandomStream(base_seed)
        .fork(0x70 + problem_index)
        .fork(0x61 + algorithm_index)
        .fork(run_index)
        .seed();
}

struct CellStats {
    std::string problem;
    std::string algorithm;
    std::size_t dim = 0;
    std::size_t runs = 0;
    double ave = 0.0;
    double std_dev = 0.0;
    double best = 0.0;
    std::uint64_t base_seed = 0;
    std::vector<double> finals;  // raw per-run final best values, run order
};

struct ExperimentStats {
    std::vector<CellStats> cells;  // problem-major, algorithm-minor order
};

/// Sample (n-1) statistics over a value list.
inline void summarize(const std::vector<double>& values, double& ave, double& std_dev,
                      double& best) {
    double sum = 0.0;
    best = std::numeric_limits<double>::infinity();
    for (double v : values) {
        sum += v;
        best = std::min(best, v);
    }
    ave = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - ave) * (v - ave);
    std_dev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
}

namespace detail {

inline void parallel_for(std::size_t count, std::size_t jobs,
                         const std::function<void(std::size_t)>& body) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace detail

inline ExperimentStats run_experiment(const ExperimentPlan& plan) {
    plan.validate();
    ExperimentStats stats;
    for (std::size_t pi = 0; pi < plan.problems.size(); ++pi) {
        const ProblemRef& pref = plan.problems[pi];
        const bench::BenchmarkEntry& entry = bench::get(pref.id);
        std::size_t dim = pref.dim == 0 ? entry.default_dim : pref.dim;
        for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
            const AlgorithmRef& algo = plan.algorithms[ai];
            std::vector<double> finals(plan.runs);
            detail::parallel_for(plan.runs, plan.jobs, [&](std::size_t r) {
                std::uint64_t seed = derive_seed(plan.base_seed, pi, ai, r);
                // Fresh problem instance per run so F7's noise stream is
                // run-local and seeded reproducibly.
                ObjectiveProblem problem = bench::make_problem(pref.id, dim, seed);
                try {
                    finals[r] = run(problem, algo.config, seed).best_fitness;
                } catch (const std::exception& ex) {
                    throw std::runtime_error("run failed at (" + problem.name + ", "
                                             + algo.label + ", run " + std::to_string(r)
                                             + "): " + ex.what());
                }
            });
            CellStats cell;
            cell.problem = "F" + std::to_string(pref.id);
            cell.algorithm = algo.label;
            cell.dim = dim;
            cell.runs = plan.runs;
            cell.base_seed = plan.base_seed;
            cell.finals = std::move(finals);
            summarize(cell.finals, cell.ave, cell.std_dev, cell.best);
            stats.cells.push_back(std::move(cell));
        }
    }
    return stats;
}

struct RankRow {
    std::string algorithm;
    std::size_t tops = 0;
    std::size_t rank = 0;
};

struct RankTable {
    std::vector<RankRow> rows;  // plan algorithm order
};

/// Dense ranking by descending top counts; equal counts share a rank.
inline RankTable rank_by_tops(const std::vector<std::string>& algorithms,
                              const std::vector<std::size_t>& tops) {
    RankTable table;
    for (std::size_t i = 0; i < algorithms.size(); ++i)
        table.rows.push_back({algorithms[i], tops[i], 0});
    std::vector<std::size_t> distinct = tops;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& row : table.rows) {
        auto it = std::find(distinct.begin(), distinct.end(), row.tops);
        row.rank = static_cast<std::size_t>(it - distinct.begin()) + 1;
    }
    return table;
}

/// Count, per algorithm, the problems on which its mean is (tied-)lowest.
/// Ties within 1e-9 relative all receive credit.
inline RankTable count_tops(const ExperimentStats& stats) {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::map<std::pair<std::string, std::string>, double> ave;
    for (const auto& c : stats.cells) {
        if (std::find(algorithms.begin(), algorithms.end(), c.algorithm) == algorithms.end())
            algorithms.push_back(c.algorithm);
        if (std::find(problems.begin(), problems.end(), c.problem) == problems.end())
            problems.push_back(c.problem);
        ave[{c.problem, c.algorithm}] = c.ave;
    }
    std::vector<std::size_t> tops(algorithms.size(), 0);
    for (const auto& p : problems) {
        double lowest = std::numeric_limits<double>::infinity();
        for (const auto& a : algorithms) {
            auto it = ave.find({p, a});
            if (it == ave.end())
                throw std::invalid_argument("count_tops: missing cell (" + p + ", " + a + ")");
            lowest = std::min(lowest, it->second);
        }
        double tol = 1e-9 * std::max(1e-300, std::abs(lowest));
        for (std::size_t i = 0; i < algorithms.size(); ++i)
            if (ave[{p, algorithms[i]}] <= lowest + tol) ++tops[i];
    }
    return rank_by_tops(algorithms, tops);
}

struct SweepColumn {
    double value = 0.0;
    double ave = 0.0;
    double std_dev = 0.0;
};

enum class SweepParam { history, stagnation, pop_size, max_iters };

inline SweepParam parse_sweep_param(const std::string& name) {
    if (name == "H" || name == "h" || name == "history") return SweepParam::history;
    if (name == "nR" || name == "n_R" || name == "stagnation") return SweepParam::stagnation;
    if (name == "N" || name == "pop") return SweepParam::pop_size;
    if (name == "maxNumIter" || name == "iters") return SweepParam::max_iters;
    throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

inline std::string sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::history: return "H";
        case SweepParam::stagnation: return "n_R";
        case SweepParam::pop_size: return "N";
        case SweepParam::max_iters: return "maxNumIter";
    }
    return "?";
}

/// One-parameter sensitivity sweep: each value gets a full multi-run
/// experiment with everything else fixed.
inline std::vector<SweepColumn> sweep(const ProblemRef& problem,
                                      const AlgorithmConfig& base_cfg, SweepParam param,
                                      const std::vector<std::size_t>& values,
                                      std::size_t runs, std::uint64_t base_seed,
                                      std::size_t jobs = 1) {
    if (values.empty()) throw std::invalid_argument("sweep: values must be non-empty");
    std::vector<SweepColumn> columns;
    for (std::size_t value : values) {
        AlgorithmConfig cfg = base_cfg;
        switch (param) {
            case SweepParam::history: cfg.memory_size = value; break;
            case SweepParam::stagnation: cfg.stagnation_limit = value; break;
            case SweepParam::pop_size: cfg.pop_size = value; break;
            case SweepParam::max_iters: cfg.max_iters = value; break;
        }
        ExperimentPlan plan;
        plan.problems = {problem};
        plan.algorithms = {{"sweep", cfg}};
        plan.runs = runs;
        plan.base_seed = base_seed;
        plan.jobs = jobs;
        const CellStats& cell = run_experiment(plan).cells.front();
        columns.push_back({static_cast<double>(value), cell.ave, cell.std_dev});
    }
    return columns;
}

// ---- persistence ---------------------------------------------------------

/// Full-precision number formatting (17 significant digits round-trips
/// doubles losslessly).
inline std::string full_precision(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

/// Paper-style scientific notation with 3 significant digits.
inline std::string short_sci(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << v;
    return os.str();
}

inline void write_stats_csv(const ExperimentStats& stats, std::ostream& out) {
    out << "problem,algorithm,dim,runs,ave,std,best,seed\n";
    for (const auto& c : stats.cells)
        out << c.problem << ',' << c.algorithm << ',' << c.dim << ',' << c.runs << ','
            << full_precision(c.ave) << ',' << full_precision(c.std_dev) << ','
            << full_precision(c.best) << ',' << c.base_seed << '\n';
}

inline void write_stats_report(const ExperimentStats& stats, std::ostream& out) {
    out << "problem  algorithm  dim  runs  Ave        Std        Best\n";
    for (const auto& c : stats.cells)
        out << c.problem << "  " << c.algorithm << "  " << c.dim << "  " << c.runs << "  "
            << short_sci(c.ave) << "  " << short_sci(c.std_dev) << "  " << short_sci(c.best)
            << '\n';
}

inline void write_sweep_csv(SweepParam param, const std::vector<SweepColumn>& columns,
                            std::ostream& out) {
    out << sweep_param_name(param) << ",ave,std\n";
    for (const auto& c : columns)
        out << full_precision(c.value) << ',' << full_precision(c.ave) << ','
            << full_precision(c.std_dev) << '\n';
}

/// Table 12/13 layout: a header row of parameter values and Ave/Std rows.
inline void write_sweep_report(SweepParam param, const std::vector<SweepColumn>& columns,
                               std::ostream& out) {
    out << sweep_param_name(param);
    for (const auto& c : columns) out << '\t' << c.value;
    out << "\nAve";
    for (const auto& c : columns) out << '\t' << short_sci(c.ave);
    out << "\nStd";
    for (const auto& c : columns) out << '\t' << short_sci(c.std_dev);
    out << '\n';
}

inline ExperimentStats read_stats_csv(std::istream& in) {
    ExperimentStats stats;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("stats csv: empty input");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        CellStats c;
        std::string field;
        std::getline(row, c.problem, ',');
        std::getline(row, c.algorithm, ',');
        std::getline(row, field, ',');
        c.dim = std::stoul(field);
        std::getline(row, field, ',');
        c.runs = std::stoul(field);
        std::getline(row, field, ',');
        c.ave = std::stod(field);
        std::getline(row, field, ',');
        c.std_dev = std::stod(field);
        std::getline(row, field, ',');
        c.best = std::stod(field);
        std::getline(row, field, ',');
        c.base_seed = std::stoull(field);
        stats.cells.push_back(std::move(c));
    }
    return stats;
}

inline void persist_to_file(const std::string& path,
                            const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    writer(out);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace avla::harness

#endif
