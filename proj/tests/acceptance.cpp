// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Heavy multi-run criteria parallelize across runs.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "avla/benchmarks.hpp"
#include "avla/core.hpp"
#include "avla/engine.hpp"
#include "avla/harness.hpp"

using namespace avla;
namespace harness = avla::harness;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << " (" << label
              << "): " << detail << std::endl;
    if (!ok) ++failures;
}

std::size_t jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 4 : hc;
}

AlgorithmConfig avla_defaults() { return AlgorithmConfig{}; }

AlgorithmConfig vla_defaults() {
    AlgorithmConfig cfg;
    cfg.mode = AdaptationMode::fixed;
    cfg.fixed_cr = 0.25;
    cfg.stagnation_limit = 10;
    return cfg;
}

harness::CellStats cell_for(int id, std::size_t dim, const AlgorithmConfig& cfg,
                            std::size_t runs, std::uint64_t base_seed) {
    harness::ExperimentPlan plan;
    plan.problems = {{id, dim}};
    plan.algorithms = {{"algo", cfg}};
    plan.runs = runs;
    plan.base_seed = base_seed;
    plan.jobs = jobs();
    return harness::run_experiment(plan).cells.front();
}

std::string stats_line(const harness::CellStats& c) {
    return "ave=" + harness::short_sci(c.ave) + " std=" + harness::short_sci(c.std_dev)
           + " best=" + harness::short_sci(c.best);
}

void criterion1() {
    harness::CellStats c = cell_for(1, 30, avla_defaults(), 30, 1);
    bool ok = c.ave <= 1e-30 && c.best <= 1e-60;
    report(1, "AVLA sphere convergence", ok,
           stats_line(c) + " need ave<=1e-30 best<=1e-60");
}

void criterion2() {
    harness::CellStats rast = cell_for(9, 30, avla_defaults(), 30, 2);
    harness::CellStats ack = cell_for(10, 30, avla_defaults(), 30, 3);
    bool ok = rast.ave <= 1e-8 && ack.ave <= 1e-14;
    report(2, "AVLA multimodal convergence", ok,
           "rastrigin " + stats_line(rast) + " (need ave<=1e-8); ackley " + stats_line(ack)
               + " (need ave<=1e-14)");
}

void criterion3() {
    struct Target {
        int id;
        double value;
    };
    const std::vector<Target> targets{
        {16, -1.0316285}, {17, 0.39788735772973816}, {18, 3.0}, {21, -10.1532}};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& t : targets) {
        harness::CellStats c = cell_for(t.id, 0, avla_defaults(), 30, 4);
        double worst = 0.0;
        for (double v : c.finals) worst = std::max(worst, std::abs(v - t.value));
        bool hit = worst <= 1e-4;
        ok = ok && hit;
        detail << "F" << t.id << " max|err|=" << harness::short_sci(worst) << ' ';
    }
    report(3, "AVLA fixed-dimension optima", ok, detail.str() + "need <=1e-4 per run");
}

void criterion4() {
    harness::CellStats c = cell_for(1, 30, vla_defaults(), 30, 5);
    report(4, "VLA sphere sanity", c.ave <= 1e-20, stats_line(c) + " need ave<=1e-20");
}

void criterion5() {
    harness::CellStats c = cell_for(8, 10, avla_defaults(), 30, 6);
    report(5, "AVLA Schwefel D=10", c.ave <= -4.15e3, stats_line(c) + " need ave<=-4.15e3");
}

void criterion6() {
    bool ok = true;
    std::ostringstream detail;

    AlgorithmConfig cfg;
    if (elite_probability(cfg.max_iters / 2, cfg.max_iters, cfg.gamma) != 0.5) {
        ok = false;
        detail << "LE(mid)!=0.5 ";
    }
    if (std::abs(elite_probability(0, 2000, 6.0) - 1.0 / (1.0 + std::exp(6.0))) > 1e-12) {
        ok = false;
        detail << "LE(0) off ";
    }
    if (elite_count(0, cfg) != 3 || elite_count(cfg.max_iters, cfg) != 10) {
        ok = false;
        detail << "elite_count endpoints off ";
    }
    if (std::abs(weighted_lehmer_mean({0.2, 0.8}, {1.0, 1.0}) - 0.68) > 1e-12) {
        ok = false;
        detail << "lehmer({0.2,0.8})!=0.68 ";
    }
    BoundsBox box(3, -2.0, 7.0);
    RandomStream s(606);
    for (int i = 0; i < 10000 && ok; ++i) {
        Vector x(3);
        for (double& v : x) v = -2.0 + 9.0 * s.uniform01();
        Vector back = opposite(opposite(x, box), box);
        for (std::size_t j = 0; j < 3; ++j)
            if (std::abs(back[j] - x[j]) > 1e-12) {
                ok = false;
                detail << "opposite not involutive ";
            }
    }
    report(6, "analytic unit oracles", ok, ok ? "all identities hold" : detail.str());
}

void criterion7() {
    bool ok = true;
    std::ostringstream detail;

    // monotone non-increasing trace on 100 random (problem, seed) pairs
    RandomStream s(707);
    std::vector<std::pair<int, std::uint64_t>> pairs;
    for (int i = 0; i < 100; ++i)
        pairs.emplace_back(1 + static_cast<int>(s.uniform_index(29)), s.next_u64());
    std::vector<bool> mono(pairs.size(), false);
    harness::detail::parallel_for(pairs.size(), jobs(), [&](std::size_t i) {
        auto [id, seed] = pairs[i];
        AlgorithmConfig cfg;
        cfg.pop_size = 12;
        cfg.max_iters = 50;
        cfg.memory_size = 5;
        ObjectiveProblem p = bench::make_problem(id, 0, seed);
        RunResult r = run(p, cfg, seed);
        bool good = r.trace.size() == 51;
        for (std::size_t t = 0; t + 1 < r.trace.size(); ++t)
            good = good && r.trace[t + 1] <= r.trace[t];
        mono[i] = good;
    });
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!mono[i]) {
            ok = false;
            detail << "non-monotone trace on F" << pairs[i].first << ' ';
            break;
        }

    // memory entries within bounds after 1e3 randomized updates
    ParameterMemory mem(10);
    RandomStream ms(708);
    for (int step = 0; step < 1000; ++step) {
        SuccessRecords records;
        std::size_t n = ms.uniform_index(5);
        for (std::size_t i = 0; i < n; ++i)
            records.add(ms.normal_truncated01(0.5, 0.4), ms.cauchy_positive_clamped(0.5, 0.3),
                        1e-6 + ms.uniform01());
        update_memory(mem, records);
    }
    for (double v : mem.m_cr)
        if (v < 0.0 || v > 1.0) {
            ok = false;
            detail << "m_cr out of range ";
        }
    for (double v : mem.m_f)
        if (v <= 0.0 || v > 1.0) {
            ok = false;
            detail << "m_f out of range ";
        }

    // bit-identical reruns
    {
        AlgorithmConfig cfg;
        cfg.pop_size = 15;
        cfg.max_iters = 60;
        ObjectiveProblem p = bench::make_problem(9, 10);
        RunResult a = run(p, cfg, 321), b = run(p, cfg, 321);
        if (a.trace != b.trace || a.best_position != b.best_position
            || a.eval_count != b.eval_count) {
            ok = false;
            detail << "rerun not bit-identical ";
        }
    }

    // all 29 f_min validations
    for (int id = 1; id <= 29; ++id) {
        if (id == 7) continue;
        ObjectiveProblem p = bench::make_problem(id);
        double v = p.evaluate(*p.known_argmin);
        double tol = 1e-9 * std::max(1.0, std::abs(*p.known_min));
        if (std::abs(v - *p.known_min) > tol) {
            ok = false;
            detail << "f_min off for F" << id << ' ';
        }
    }
    for (int id = 24; id <= 29; ++id) {
        bench::CompositeSpec spec = bench::composite_spec_for(id);
        if (std::abs(bench::evaluate_composite(spec, spec.shifts[0])) > 1e-9) {
            ok = false;
            detail << "composite F" << id << " not 0 at first shift ";
        }
        RandomStream ws(id);
        for (int trial = 0; trial < 20; ++trial) {
            Vector x(spec.dim);
            for (double& v : x) v = -5.0 + 10.0 * ws.uniform01();
            std::vector<double> w = bench::composite_weights(spec, x);
            double total = std::accumulate(w.begin(), w.end(), 0.0);
            if (std::abs(total - 1.0) > 1e-9) {
                ok = false;
                detail << "composite F" << id << " weights don't sum to 1 ";
            }
        }
    }
    report(7, "property suites", ok, ok ? "all properties hold" : detail.str());
}

void criterion8() {
    std::vector<std::string> algos{"a1", "a2", "a3", "a4", "a5",
                                   "a6", "a7", "a8", "a9", "a10"};
    std::vector<std::size_t> tops{0, 2, 3, 5, 0, 1, 0, 4, 1, 2};
    std::vector<std::size_t> expected{6, 4, 3, 1, 6, 5, 6, 2, 5, 4};
    harness::RankTable table = harness::rank_by_tops(algos, tops);
    bool ok = table.rows.size() == 10;
    std::ostringstream got;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        ok = ok && table.rows[i].rank == expected[i];
        got << table.rows[i].rank << (i + 1 < table.rows.size() ? "," : "");
    }
    report(8, "dense ranking replication", ok, "ranks " + got.str());
}

void criterion9() {
    AlgorithmConfig cfg = avla_defaults();
    std::vector<std::size_t> h_values{5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::vector<std::size_t> nr_values{6, 10, 20, 30, 40, 50, 60, 90, 100, 120, 150};
    auto h_cols =
        harness::sweep({9, 30}, cfg, harness::SweepParam::history, h_values, 10, 9, jobs());
    auto nr_cols = harness::sweep({9, 30}, cfg, harness::SweepParam::stagnation, nr_values,
                                  10, 10, jobs());
    bool ok = h_cols.size() == h_values.size() && nr_cols.size() == nr_values.size();
    auto well_formed = [&](const std::vector<harness::SweepColumn>& cols,
                           const std::vector<std::size_t>& values) {
        bool good = true;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            good = good && cols[i].value == static_cast<double>(values[i]);
            good = good && std::isfinite(cols[i].ave) && std::isfinite(cols[i].std_dev);
            good = good && cols[i].std_dev >= 0.0;
        }
        return good;
    };
    ok = ok && well_formed(h_cols, h_values) && well_formed(nr_cols, nr_values);
    std::ostringstream h_rep, nr_rep;
    harness::write_sweep_report(harness::SweepParam::history, h_cols, h_rep);
    harness::write_sweep_report(harness::SweepParam::stagnation, nr_cols, nr_rep);
    ok = ok && h_rep.str().rfind("H\t", 0) == 0 && nr_rep.str().rfind("n_R\t", 0) == 0;
    report(9, "sweep machinery", ok,
           std::to_string(h_cols.size()) + " H columns, " + std::to_string(nr_cols.size())
               + " n_R columns, all finite");
}

} // namespace

int main() {
    criterion6();
    criterion8();
    criterion7();
    criterion3();
    criterion4();
    criterion5();
    criterion2();
    criterion1();
    criterion9();
    if (failures == 0)
        std::cout << "ALL CRITERIA PASSED" << std::endl;
    else
        std::cout << "FAILED CRITERIA: " << failures << std::endl;
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
