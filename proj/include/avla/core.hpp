#ifndef AVLA_CORE_HPP
#define AVLA_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace avla {

using Vector = std::vector<double>;

/// Per-dimension interval bounds [lower_j, upper_j].
struct BoundsBox {
    Vector lower;
    Vector upper;

    BoundsBox() = default;
    BoundsBox(Vector lo, Vector up) : lower(std::move(lo)), upper(std::move(up)) {
        validate();
    }
    /// Uniform bounds [lo, up]^dim.
    BoundsBox(std::size_t dim, double lo, double up)
        : lower(dim, lo), upper(dim, up) {
        validate();
    }

    std::size_t dim() const { return lower.size(); }

    bool contains(const Vector& x) const {
        if (x.size() != dim()) return false;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] < lower[j] || x[j] > upper[j]) return false;
        return true;
    }

    double clamp(std::size_t j, double v) const {
        return std::min(std::max(v, lower[j]), upper[j]);
    }

    void clamp(Vector& x) const {
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = clamp(j, x[j]);
    }

    void validate() const {
        if (lower.size() != upper.size() || lower.empty())
            throw std::invalid_argument("BoundsBox: lower/upper must have equal positive length");
        for (std::size_t j = 0; j < lower.size(); ++j)
            if (!(lower[j] < upper[j]))
                throw std::invalid_argument("BoundsBox: lower must be strictly below upper");
    }
};

/// A minimization problem over a bounds box. The evaluation map must be total
/// on the box and safe to call concurrently from many runs.
struct ObjectiveProblem {
    std::string name;
    std::size_t dim = 0;
    BoundsBox bounds;
    std::function<double(const Vector&)> objective;
    std::optional<double> known_min;
    std::optional<Vector> known_argmin;

    double evaluate(const Vector& x) const { return objective(x); }
};

/// Wrap a problem with a static quadratic penalty: f(x) + rho * sum max(0, g_m(x))^2.
/// An empty constraint list is a no-op. The known optimum is cleared because
/// it refers to the unconstrained problem.
inline ObjectiveProblem make_penalized(
    const ObjectiveProblem& problem,
    std::vector<std::function<double(const Vector&)>> constraints,
    double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("make_penalized: rho must be positive");
    if (constraints.empty()) return problem;
    ObjectiveProblem penalized = problem;
    penalized.name = problem.name + "+penalty";
    penalized.known_min.reset();
    penalized.known_argmin.reset();
    auto base = problem.objective;
    penalized.objective = [base, constraints = std::move(constraints), rho](const Vector& x) {
        double value = base(x);
        for (const auto& g : constraints) {
            double v = g(x);
            if (v > 0.0) value += rho * v * v;
        }
        return value;
    };
    return penalized;
}

/// One solution in the learning group: position, cached fitness, and the
/// per-iteration learning parameters F (acceptance rate) and CR (practical
/// learning factor).
struct Member {
    Vector position;
    double fitness = std::numeric_limits<double>::infinity();
    double f_rate = 0.5;
    double cr_rate = 0.5;
};

/// The sorted population plus run bookkeeping. Members are kept sorted by
/// fitness, best first; best_so_far is a running minimum over every evaluated
/// point, not just surviving members.
struct Population {
    std::vector<Member> members;
    std::size_t t = 0;
    Vector best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::size_t stagnation = 0;   // nR
    std::size_t eval_count = 0;

    std::size_t size() const { return members.size(); }

    /// Feed every evaluated point through here so best_so_far never misses one.
    void observe(const Vector& x, double fx) {
        if (fx < best_fitness) {
            best_fitness = fx;
            best_position = x;
        }
    }

    void sort_members() {
        std::stable_sort(members.begin(), members.end(),
                         [](const Member& a, const Member& b) { return a.fitness < b.fitness; });
    }
};

/// Restore sort order after exactly one member's fitness changed.
/// Stable: the moved member lands after existing equal-fitness members.
inline void insert_sorted(Population& pop, std::size_t updated_index) {
    if (updated_index >= pop.members.size())
        throw std::out_of_range("insert_sorted: member index out of range");
    Member moved = std::move(pop.members[updated_index]);
    pop.members.erase(pop.members.begin() + static_cast<std::ptrdiff_t>(updated_index));
    auto it = std::upper_bound(pop.members.begin(), pop.members.end(), moved.fitness,
                               [](double f, const Member& m) { return f < m.fitness; });
    pop.members.insert(it, std::move(moved));
    pop.observe(pop.members.front().position, pop.members.front().fitness);
}

enum class AdaptationMode { adaptive, fixed };

/// Run configuration. Defaults follow the standard setting N=50,
/// maxNumIter=2000, H=50 with n_R=6 for the adaptive variant (the fixed
/// variant conventionally uses n_R=10 and CR=0.25; see cli defaults).
struct AlgorithmConfig {
    std::size_t pop_size = 50;
    std::size_t max_iters = 2000;
    std::size_t memory_size = 50;        // H
    std::size_t stagnation_limit = 6;    // n_R
    double gamma = 6.0;
    std::size_t elite_floor = 3;
    double elite_cap_fraction = 0.2;
    AdaptationMode mode = AdaptationMode::adaptive;
    double fixed_cr = 0.25;
    std::uint64_t seed = 0;

    /// Final elite count; clamped up to the floor so small populations keep a
    /// constant elite group instead of becoming invalid.
    std::size_t elite_cap() const {
        auto cap = static_cast<std::size_t>(
            std::llround(elite_cap_fraction * static_cast<double>(pop_size)));
        return std::max(cap, elite_floor);
    }

    void validate() const {
        if (max_iters < 1) throw std::invalid_argument("config: max_iters must be >= 1");
        if (memory_size < 1) throw std::invalid_argument("config: memory_size must be >= 1");
        if (stagnation_limit < 1) throw std::invalid_argument("config: stagnation_limit must be >= 1");
        if (!(gamma > 0.0)) throw std::invalid_argument("config: gamma must be positive");
        if (elite_floor < 3)
            throw std::invalid_argument("config: elite learning needs at least 3 elites");
        // Common learning draws two distinct donors from the common block
        // that excludes the reflection tail (whose size mirrors the elite
        // group), so pop_size - 2 * n_elite must stay >= 3 at every iteration.
        if (pop_size < 2 * elite_floor + 3)
            throw std::invalid_argument("config: pop_size must be >= 2 * elite_floor + 3");
        if (!(elite_cap_fraction > 0.0 && elite_cap_fraction < 1.0))
            throw std::invalid_argument("config: elite_cap_fraction must lie strictly inside (0,1)");
        if (pop_size < 2 * elite_cap() + 3)
            throw std::invalid_argument("config: donor group shrinks below 3 at the elite cap");
        if (mode == AdaptationMode::fixed && !(fixed_cr > 0.0 && fixed_cr < 1.0))
            throw std::invalid_argument("config: fixed_cr must lie strictly inside (0,1)");
    }
};

/// Outcome of one seeded run. trace[0] is the post-initialization best;
/// trace[t] is the best after iteration t.
struct RunResult {
    Vector best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::vector<double> trace;
    std::size_t eval_count = 0;
    std::uint64_t seed = 0;
};

} // namespace avla

#endif
