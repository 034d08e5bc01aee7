#ifndef AVLA_ENGINE_HPP
#define AVLA_ENGINE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "avla/core.hpp"
#include "avla/random.hpp"

namespace avla {

/// Circular success-history memories for CR and F. All entries start at 0.5;
/// the write index advances only when an iteration produced successes.
struct ParameterMemory {
    std::vector<double> m_cr;
    std::vector<double> m_f;
    std::size_t k = 0;

    explicit ParameterMemory(std::size_t history_size)
        : m_cr(history_size, 0.5), m_f(history_size, 0.5) {
        if (history_size == 0)
            throw std::invalid_argument("ParameterMemory: history size must be >= 1");
    }

    std::size_t size() const { return m_cr.size(); }
};

/// Parameters of the improvements collected during one iteration, aligned
/// with the fitness gain each improvement produced.
struct SuccessRecords {
    std::vector<double> s_cr;
    std::vector<double> s_f;
    std::vector<double> delta_fit;

    bool empty() const { return s_cr.empty(); }

    void clear() {
        s_cr.clear();
        s_f.clear();
        delta_fit.clear();
    }

    void add(double cr, double f, double gain) {
        s_cr.push_back(cr);
        s_f.push_back(f);
        delta_fit.push_back(gain);
    }
};

/// Sign of the learning step relative to a peer: +1 moves toward a
/// better-performing peer, -1 away; ties fall into the -1 branch.
inline int sign_toward(double fit_self, double fit_other) {
    return fit_self > fit_other ? 1 : -1;
}

/// Probability that a common member learns from an elite at iteration t.
/// A logistic curve rising from near 0 to near 1 over the run; gamma sets the
/// steepness.
inline double elite_probability(std::size_t t, std::size_t max_iters, double gamma) {
    double m = static_cast<double>(max_iters);
    return 1.0 / (1.0 + std::exp((2.0 * gamma / m) * (m / 2.0 - static_cast<double>(t))));
}

/// Elite-group size at iteration t: grows linearly from elite_floor to
/// elite_cap_fraction * N, rounded half away from zero.
inline std::size_t elite_count(std::size_t t, const AlgorithmConfig& cfg) {
    double floor_n = static_cast<double>(cfg.elite_floor);
    double cap_n = static_cast<double>(cfg.elite_cap());
    double value = floor_n + static_cast<double>(t) * (cap_n - floor_n)
                                 / static_cast<double>(cfg.max_iters);
    return static_cast<std::size_t>(std::llround(value));
}

/// Draw one (CR, F) pair from the history: a single memory slot r feeds both
/// the truncated-normal CR draw and the clamped-Cauchy F draw.
inline std::pair<double, double> sample_member_parameters(const ParameterMemory& mem,
                                                          RandomStream& s) {
    std::size_t r = s.uniform_index(mem.size());
    double cr = s.normal_truncated01(mem.m_cr[r], 0.1);
    double f = s.cauchy_positive_clamped(mem.m_f[r], 0.1);
    return {cr, f};
}

inline Population init_population(const ObjectiveProblem& problem,
                                  const AlgorithmConfig& cfg, RandomStream& s) {
    Population pop;
    pop.members.resize(cfg.pop_size);
    for (auto& m : pop.members) {
        m.position.resize(problem.dim);
        for (std::size_t j = 0; j < problem.dim; ++j) {
            double u = s.uniform01();
            m.position[j] = problem.bounds.lower[j]
                            + u * (problem.bounds.upper[j] - problem.bounds.lower[j]);
        }
        m.fitness = problem.evaluate(m.position);
        pop.observe(m.position, m.fitness);
    }
    pop.eval_count = cfg.pop_size;
    pop.sort_members();
    return pop;
}

namespace detail {

/// Uniform pick from [0, n) excluding one index; no rejection loop.
inline std::size_t pick_excluding(RandomStream& s, std::size_t n, std::size_t skip) {
    std::size_t r = static_cast<std::size_t>(s.uniform_index(n - 1));
    return r >= skip ? r + 1 : r;
}

/// Uniform pick from [0, n) excluding two distinct indices.
inline std::size_t pick_excluding2(RandomStream& s, std::size_t n, std::size_t skip_a,
                                   std::size_t skip_b) {
    if (skip_a > skip_b) std::swap(skip_a, skip_b);
    std::size_t r = static_cast<std::size_t>(s.uniform_index(n - 2));
    if (r >= skip_a) ++r;
    if (r >= skip_b) ++r;
    return r;
}

} // namespace detail

/// Ideal learning of the elite at sorted index e: a two-peer difference move
/// with performance-driven signs, clamped to the bounds box. Signs compare
/// live fitness values, so improvements accepted earlier in the same sweep
/// are already visible to later learners.
inline Vector ideal_learn_elite(const Population& pop, std::size_t e, std::size_t n_elite,
                                double f, const BoundsBox& bounds, RandomStream& s) {
    if (n_elite < 3 || e >= n_elite)
        throw std::invalid_argument("ideal_learn_elite: need >= 3 elites and an elite index");
    std::size_t e1 = detail::pick_excluding(s, n_elite, e);
    std::size_t e2 = detail::pick_excluding2(s, n_elite, e, e1);
    const Member& self = pop.members[e];
    const Member& p1 = pop.members[e1];
    const Member& p2 = pop.members[e2];
    int s1 = sign_toward(self.fitness, p1.fitness);
    int s2 = sign_toward(self.fitness, p2.fitness);
    Vector v(self.position.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = self.position[j] + s1 * f * (p1.position[j] - self.position[j])
               + s2 * f * (p2.position[j] - self.position[j]);
        v[j] = bounds.clamp(j, v[j]);
    }
    return v;
}

/// Ideal learning of the common member at sorted index i. With probability
/// LE(t) the first difference term points at a random elite (no sign), else
/// both peers are commons with performance-driven signs. Peers are drawn from
/// the donor block [n_elite, donor_end): the worst members, which the tail
/// reflection keeps replacing, still learn but do not serve as donors. Signs
/// compare live fitness values.
inline Vector ideal_learn_common(const Population& pop, std::size_t i, std::size_t n_elite,
                                 std::size_t donor_end, double f, std::size_t t,
                                 const AlgorithmConfig& cfg, const BoundsBox& bounds,
                                 RandomStream& s) {
    std::size_t n = pop.size();
    if (i < n_elite || i >= n)
        throw std::invalid_argument("ideal_learn_common: index must be a common member");
    if (donor_end <= n_elite || donor_end > n || donor_end - n_elite < 3)
        throw std::invalid_argument("ideal_learn_common: need >= 3 donor commons");
    const Member& self = pop.members[i];
    std::size_t pool = donor_end - n_elite;
    bool in_pool = i < donor_end;
    std::size_t ci = i - n_elite;          // index within the donor block, if inside
    Vector v(self.position.size());
    if (s.uniform01() > elite_probability(t, cfg.max_iters, cfg.gamma)) {
        std::size_t c1 = in_pool ? detail::pick_excluding(s, pool, ci)
                                 : static_cast<std::size_t>(s.uniform_index(pool));
        std::size_t c2 = in_pool ? detail::pick_excluding2(s, pool, ci, c1)
                                 : detail::pick_excluding(s, pool, c1);
        const Member& p1 = pop.members[n_elite + c1];
        const Member& p2 = pop.members[n_elite + c2];
        int s1 = sign_toward(self.fitness, p1.fitness);
        int s2 = sign_toward(self.fitness, p2.fitness);
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = self.position[j] + s1 * f * (p1.position[j] - self.position[j])
                   + s2 * f * (p2.position[j] - self.position[j]);
            v[j] = bounds.clamp(j, v[j]);
        }
    } else {
        std::size_t e = static_cast<std::size_t>(s.uniform_index(n_elite));
        std::size_t c2 = in_pool ? detail::pick_excluding(s, pool, ci)
                                 : static_cast<std::size_t>(s.uniform_index(pool));
        const Member& elite = pop.members[e];
        const Member& p2 = pop.members[n_elite + c2];
        int s2 = sign_toward(self.fitness, p2.fitness);
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = self.position[j] + f * (elite.position[j] - self.position[j])
                   + s2 * f * (p2.position[j] - self.position[j]);
            v[j] = bounds.clamp(j, v[j]);
        }
    }
    return v;
}

/// Coordinate-wise crossover: take the trial coordinate where a fresh uniform
/// falls at or below cr, and always at the forced index j_rand.
inline Vector practical_crossover(const Vector& x, const Vector& v, double cr,
                                  RandomStream& s) {
    if (x.size() != v.size())
        throw std::invalid_argument("practical_crossover: length mismatch");
    std::size_t j_rand = static_cast<std::size_t>(s.uniform_index(x.size()));
    Vector out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = (s.uniform01() <= cr || j == j_rand) ? v[j] : x[j];
    return out;
}

/// Greedy acceptance. The crossed-over trial is evaluated, and a strict
/// improvement replaces the member. When the pre-crossover ideal vector is
/// supplied, a strict improvement also triggers its evaluation — its fitness
/// is the reference point for the success weight — and the member keeps the
/// better of the two evaluated states. A success stores the member's (CR, F)
/// pair weighted by the gain relative to the ideal state (or the trial when
/// no ideal is supplied); pass records = nullptr to suppress recording. An
/// accepted member is re-inserted at its sorted rank immediately, so later
/// members of the same sweep learn against the updated standings.
inline bool actual_accept(Population& pop, const ObjectiveProblem& problem, std::size_t idx,
                          const Vector& trial, const Vector* ideal,
                          SuccessRecords* records) {
    double trial_fit = problem.evaluate(trial);
    pop.eval_count += 1;
    pop.observe(trial, trial_fit);
    Member& m = pop.members[idx];
    if (!(trial_fit < m.fitness)) return false;
    double old_fit = m.fitness;
    const Vector* winner = &trial;
    double winner_fit = trial_fit;
    double reference_fit = trial_fit;
    if (ideal != nullptr) {
        double ideal_fit = problem.evaluate(*ideal);
        pop.eval_count += 1;
        pop.observe(*ideal, ideal_fit);
        reference_fit = ideal_fit;
        if (ideal_fit < winner_fit) {
            winner = ideal;
            winner_fit = ideal_fit;
        }
    }
    if (records != nullptr)
        records->add(m.cr_rate, m.f_rate, std::abs(reference_fit - old_fit));
    m.position = *winner;
    m.fitness = winner_fit;
    insert_sorted(pop, idx);
    return true;
}

/// Reflection of x through the center of the bounds box, coordinate-wise.
inline Vector opposite(const Vector& x, const BoundsBox& bounds) {
    Vector r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        r[j] = bounds.lower[j] + bounds.upper[j] - x[j];
    return r;
}

/// Tail reflection: each of the worst n_E(t) members moves to its opposite
/// position if that is a strict improvement, otherwise it is replaced by a
/// fresh random solution.
inline void reflect_tail(Population& pop, const ObjectiveProblem& problem,
                         const AlgorithmConfig& cfg, std::size_t t, RandomStream& s) {
    std::size_t n = pop.size();
    std::size_t tail = std::min(elite_count(t, cfg), n);
    for (std::size_t i = n - tail; i < n; ++i) {
        Member& m = pop.members[i];
        Vector r = opposite(m.position, problem.bounds);
        double fr = problem.evaluate(r);
        pop.eval_count += 1;
        pop.observe(r, fr);
        if (fr < m.fitness) {
            m.position = std::move(r);
            m.fitness = fr;
        } else {
            for (std::size_t j = 0; j < problem.dim; ++j) {
                double u = s.uniform01();
                m.position[j] = problem.bounds.lower[j]
                                + u * (problem.bounds.upper[j] - problem.bounds.lower[j]);
            }
            m.fitness = problem.evaluate(m.position);
            pop.eval_count += 1;
            pop.observe(m.position, m.fitness);
        }
    }
    pop.sort_members();
}

/// Whole-group reflection after prolonged stagnation: every member's opposite
/// is evaluated; non-tail members keep the better position, tail members move
/// to the opposite unconditionally.
inline void reflect_group(Population& pop, const ObjectiveProblem& problem,
                          const AlgorithmConfig& cfg, std::size_t t) {
    std::size_t n = pop.size();
    std::size_t tail = std::min(elite_count(t, cfg), n);
    for (std::size_t i = 0; i < n; ++i) {
        Member& m = pop.members[i];
        Vector r = opposite(m.position, problem.bounds);
        double fr = problem.evaluate(r);
        pop.eval_count += 1;
        pop.observe(r, fr);
        if (i >= n - tail || fr < m.fitness) {
            m.position = std::move(r);
            m.fitness = fr;
        }
    }
    pop.sort_members();
}

/// Weighted Lehmer mean with gain-proportional weights. Biases the memory
/// toward larger successful parameter values.
inline double weighted_lehmer_mean(const std::vector<double>& values,
                                   const std::vector<double>& gains) {
    double gain_total = 0.0;
    for (double g : gains) gain_total += g;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double w = gains[i] / gain_total;
        num += w * values[i] * values[i];
        den += w * values[i];
    }
    return den > 0.0 ? num / den : 0.0;
}

/// Write one memory slot from the iteration's successes and advance the
/// circular index; an empty record set leaves the memory untouched. Both
/// memories take the weighted Lehmer mean, whose upward bias counteracts the
/// selection pressure toward ever-smaller surviving rates and step sizes.
/// Records whose gains are all zero advance the index without overwriting
/// the slot.
inline void update_memory(ParameterMemory& mem, const SuccessRecords& records) {
    if (records.empty()) return;
    double gain_total = 0.0;
    for (double g : records.delta_fit) gain_total += g;
    if (gain_total > 0.0) {
        mem.m_cr[mem.k] = weighted_lehmer_mean(records.s_cr, records.delta_fit);
        mem.m_f[mem.k] = weighted_lehmer_mean(records.s_f, records.delta_fit);
    }
    mem.k = (mem.k + 1) % mem.size();
}

/// Root-mean-square spread of the first block_end members around their
/// centroid, summed over coordinates. Gauges whether the donor block has
/// collapsed onto a single basin.
inline double donor_block_spread(const Population& pop, std::size_t block_end) {
    if (block_end == 0 || block_end > pop.size())
        throw std::invalid_argument("donor_block_spread: bad block size");
    std::size_t dim = pop.members.front().position.size();
    double total = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        double mu = 0.0;
        for (std::size_t i = 0; i < block_end; ++i) mu += pop.members[i].position[j];
        mu /= static_cast<double>(block_end);
        double var = 0.0;
        for (std::size_t i = 0; i < block_end; ++i) {
            double d = pop.members[i].position[j] - mu;
            var += d * d;
        }
        total += var / static_cast<double>(block_end);
    }
    return std::sqrt(total);
}

/// One full seeded optimization run.
inline RunResult run(const ObjectiveProblem& problem, const AlgorithmConfig& cfg,
                     std::uint64_t seed) {
    cfg.validate();
    if (problem.dim == 0 || problem.bounds.dim() != problem.dim)
        throw std::invalid_argument("run: problem dimension/bounds mismatch");

    RandomStream stream = RandomStream(seed).fork(0x41564c41);  // run-level stream
    Population pop = init_population(problem, cfg, stream);
    ParameterMemory memory(cfg.memory_size);

    RunResult result;
    result.seed = seed;
    result.trace.reserve(cfg.max_iters + 1);
    result.trace.push_back(pop.best_fitness);

    SuccessRecords records;
    for (std::size_t t = 1; t <= cfg.max_iters; ++t) {
        pop.t = t;
        double best_at_start = pop.best_fitness;
        std::size_t n_elite = elite_count(t, cfg);
        std::size_t donor_end = pop.size() - n_elite;
        records.clear();
        bool adaptive = cfg.mode == AdaptationMode::adaptive;

        // Members inside the reflection tail [donor_end, N) are churned by
        // the reflections: they are excluded from the donor pool and from the
        // success records (their immigrant-sized gains would poison the
        // parameter history), so in adaptive mode their (CR, F) pairs come
        // from wide exploration ranges instead of the adapted memory. Once
        // the donor block collapses onto one basin, the tail switches to
        // high-CR draws, which keep full-length immigrant moves available as
        // an escape route out of a deceptive basin.
        bool collapsed = adaptive && donor_block_spread(pop, donor_end) < 0.01;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            Member& m = pop.members[i];
            if (!adaptive) {
                m.f_rate = stream.uniform01();
                m.cr_rate = cfg.fixed_cr;
            } else if (i >= donor_end) {
                m.cr_rate = collapsed ? 0.85 + 0.15 * stream.uniform01() : stream.uniform01();
                m.f_rate = 0.1 + 0.6 * stream.uniform01();
            } else {
                auto [cr, f] = sample_member_parameters(memory, stream);
                m.cr_rate = cr;
                m.f_rate = f;
            }
        }

        // Learning sweep against the live population: every acceptance
        // re-inserts the member at its sorted rank, so later learners in the
        // same sweep see the updated standings and a fast riser can be
        // learned from (or re-encountered) before the iteration ends.
        for (std::size_t i = 0; i < pop.size(); ++i) {
            const Member& m = pop.members[i];
            Vector ideal = i < n_elite
                ? ideal_learn_elite(pop, i, n_elite, m.f_rate, problem.bounds, stream)
                : ideal_learn_common(pop, i, n_elite, donor_end, m.f_rate, t, cfg,
                                     problem.bounds, stream);
            Vector trial = practical_crossover(m.position, ideal, m.cr_rate, stream);
            actual_accept(pop, problem, i, trial, adaptive ? &ideal : nullptr,
                          adaptive && i < donor_end ? &records : nullptr);
        }

        if (adaptive) update_memory(memory, records);

        if (pop.best_fitness < best_at_start)
            pop.stagnation = 0;
        else
            pop.stagnation += 1;
        if (pop.stagnation >= cfg.stagnation_limit) {
            pop.stagnation = 0;
            reflect_group(pop, problem, cfg, t);
        } else {
            reflect_tail(pop, problem, cfg, t, stream);
        }

        result.trace.push_back(pop.best_fitness);
    }

    result.best_position = pop.best_position;
    result.best_fitness = pop.best_fitness;
    result.eval_count = pop.eval_count;
    return result;
}

} // namespace avla

#endif
