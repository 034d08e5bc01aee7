#ifndef AVLA_BENCHMARKS_HPP
#define AVLA_BENCHMARKS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "avla/core.hpp"
#include "avla/random.hpp"

// The 29-function benchmark catalog: F1-F7 unimodal, F8-F13 multimodal,
// F14-F23 fixed-dimension multimodal, F24-F29 composites built from shifted,
// scaled basic functions. Formulas follow the canonical literature forms of
// the named functions; minima are validated against the catalog's f_min
// column at 1e-9.

namespace avla::bench {

inline constexpr double pi = std::numbers::pi;

// ---- basic scalable functions -------------------------------------------

inline double sphere(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// Schwefel 2.22
inline double abs_sum_prod(const Vector& x) {
    double s = 0.0, p = 1.0;
    for (double v : x) {
        s += std::abs(v);
        p *= std::abs(v);
    }
    return s + p;
}

// Schwefel 1.2
inline double rotated_hyper_ellipsoid(const Vector& x) {
    double total = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        total += prefix * prefix;
    }
    return total;
}

// Schwefel 2.21
inline double max_abs(const Vector& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

inline double rosenbrock(const Vector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        double a = x[i + 1] - x[i] * x[i];
        double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

inline double step(const Vector& x) {
    double s = 0.0;
    for (double v : x) {
        double f = std::floor(v + 0.5);
        s += f * f;
    }
    return s;
}

inline double quartic_noiseless(const Vector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * x[i] * x[i] * x[i] * x[i];
    return s;
}

inline double schwefel_sine(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

inline double rastrigin(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    return s;
}

inline double ackley(const Vector& x) {
    double n = static_cast<double>(x.size());
    double sq = 0.0, cs1 = 0.0;
    for (double v : x) {
        sq += v * v;
        // cos(2*pi*v) - 1 == -2*sin^2(pi*v), evaluated without cancellation so the
        // function stays smooth all the way down to the minimum instead of being
        // quantised at the rounding error of the constant offsets.
        double s = std::sin(pi * v);
        cs1 += -2.0 * s * s;
    }
    return -20.0 * std::expm1(-0.2 * std::sqrt(sq / n))
           - std::numbers::e * std::expm1(cs1 / n);
}

inline double griewank(const Vector& x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

inline double boundary_penalty(double v, double a, double k, double m) {
    if (v > a) return k * std::pow(v - a, m);
    if (v < -a) return k * std::pow(-v - a, m);
    return 0.0;
}

inline double penalized1(const Vector& x) {
    std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * std::pow(std::sin(pi * y(0)), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double d = y(i) - 1.0;
        s += d * d * (1.0 + 10.0 * std::pow(std::sin(pi * y(i + 1)), 2));
    }
    double dn = y(n - 1) - 1.0;
    s += dn * dn;
    s *= pi / static_cast<double>(n);
    for (double v : x) s += boundary_penalty(v, 10.0, 100.0, 4.0);
    return s;
}

inline double penalized2(const Vector& x) {
    std::size_t n = x.size();
    double s = std::pow(std::sin(3.0 * pi * x[0]), 2);
    for (std::size_t i = 0; i < n; ++i) {
        double d = x[i] - 1.0;
        s += d * d * (1.0 + std::pow(std::sin(3.0 * pi * x[i] + 1.0), 2));
    }
    double dn = x[n - 1] - 1.0;
    s += dn * dn * (1.0 + std::pow(std::sin(2.0 * pi * x[n - 1]), 2));
    s *= 0.1;
    for (double v : x) s += boundary_penalty(v, 5.0, 100.0, 4.0);
    return s;
}

inline double weierstrass(const Vector& x) {
    constexpr double a = 0.5, b = 3.0;
    constexpr int kmax = 20;
    double s = 0.0, offset = 0.0;
    for (int k = 0; k <= kmax; ++k)
        offset += std::pow(a, k) * std::cos(2.0 * pi * std::pow(b, k) * 0.5);
    for (double v : x) {
        for (int k = 0; k <= kmax; ++k)
            s += std::pow(a, k) * std::cos(2.0 * pi * std::pow(b, k) * (v + 0.5));
    }
    return s - static_cast<double>(x.size()) * offset;
}

// ---- fixed-dimension functions ------------------------------------------

inline double shekel_foxholes(const Vector& x) {
    static constexpr std::array<double, 5> base{-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        double d1 = x[0] - base[j % 5];
        double d2 = x[1] - base[j / 5];
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(d1, 6) + std::pow(d2, 6));
    }
    return 1.0 / s;
}

inline double kowalik(const Vector& x) {
    static constexpr std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.16,  0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static constexpr std::array<double, 11> b_inv{0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double b = 1.0 / b_inv[i];
        double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
    }
    return s;
}

inline double six_hump_camel(const Vector& x) {
    double x1 = x[0], x2 = x[1];
    return 4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2
           - 4.0 * x2 * x2 + 4.0 * std::pow(x2, 4);
}

inline double branin(const Vector& x) {
    double x1 = x[0], x2 = x[1];
    double a = x2 - 5.1 / (4.0 * pi * pi) * x1 * x1 + 5.0 / pi * x1 - 6.0;
    return a * a + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x1) + 10.0;
}

inline double goldstein_price(const Vector& x) {
    double x1 = x[0], x2 = x[1];
    double t1 = 1.0 + std::pow(x1 + x2 + 1.0, 2)
                          * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2
                             + 3.0 * x2 * x2);
    double t2 = 30.0 + std::pow(2.0 * x1 - 3.0 * x2, 2)
                           * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2
                              + 27.0 * x2 * x2);
    return t1 * t2;
}

inline double hartmann3(const Vector& x) {
    static constexpr double A[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
    static constexpr double c[4] = {1.0, 1.2, 3.0, 3.2};
    static constexpr double p[4][3] = {{0.3689, 0.117, 0.2673},
                                       {0.4699, 0.4387, 0.747},
                                       {0.1091, 0.8732, 0.5547},
                                       {0.03815, 0.5743, 0.8828}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) e += A[i][j] * std::pow(x[j] - p[i][j], 2);
        s -= c[i] * std::exp(-e);
    }
    return s;
}

inline double hartmann6(const Vector& x) {
    static constexpr double A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                       {0.05, 10, 17, 0.1, 8, 14},
                                       {3, 3.5, 1.7, 10, 17, 8},
                                       {17, 8, 0.05, 10, 0.1, 14}};
    static constexpr double c[4] = {1.0, 1.2, 3.0, 3.2};
    static constexpr double p[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                       {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                       {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.665},
                                       {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j) e += A[i][j] * std::pow(x[j] - p[i][j], 2);
        s -= c[i] * std::exp(-e);
    }
    return s;
}

inline double shekel(const Vector& x, int m) {
    static constexpr double a[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8},
                                        {6, 6, 6, 6}, {3, 7, 3, 7}, {2, 9, 2, 9},
                                        {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2},
                                        {7, 3.6, 7, 3.6}};
    static constexpr double c[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = c[i];
        for (int j = 0; j < 4; ++j) d += std::pow(x[j] - a[i][j], 2);
        s -= 1.0 / d;
    }
    return s;
}

// ---- composite construction ---------------------------------------------

/// A shifted, scaled, weighted blend of 10 basic functions. Shift locations
/// come from a fixed documented seed; biases are 0, 100, ..., 900 so the
/// global minimum is 0 at the first shifted optimum.
struct CompositeSpec {
    std::vector<double (*)(const Vector&)> components;  // 10 entries
    std::vector<double> sigmas;
    std::vector<double> lambdas;
    std::vector<Vector> shifts;
    std::vector<double> biases;
    std::vector<double> scales;  // probe-based |f_max| per component
    std::size_t dim = 10;
};

inline constexpr std::uint64_t composite_shift_seed = 20240501;

inline CompositeSpec make_composite_spec(std::vector<double (*)(const Vector&)> components,
                                         std::vector<double> sigmas,
                                         std::vector<double> lambdas,
                                         std::uint64_t shift_label) {
    CompositeSpec spec;
    spec.components = std::move(components);
    spec.sigmas = std::move(sigmas);
    spec.lambdas = std::move(lambdas);
    spec.dim = 10;
    RandomStream s = RandomStream(composite_shift_seed).fork(shift_label);
    for (std::size_t k = 0; k < 10; ++k) {
        Vector o(spec.dim);
        for (double& v : o) v = -5.0 + 10.0 * s.uniform01();
        spec.shifts.push_back(std::move(o));
        spec.biases.push_back(100.0 * static_cast<double>(k));
        // Scale estimate from a probe at the far corner of the box.
        Vector probe(spec.dim, 5.0 / spec.lambdas[k]);
        spec.scales.push_back(std::max(std::abs(spec.components[k](probe)), 1e-12));
    }
    return spec;
}

inline std::vector<double> composite_weights(const CompositeSpec& spec, const Vector& x) {
    std::vector<double> w(10);
    double wmax = 0.0;
    for (std::size_t k = 0; k < 10; ++k) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < spec.dim; ++j) {
            double d = x[j] - spec.shifts[k][j];
            d2 += d * d;
        }
        w[k] = std::exp(-d2 / (2.0 * static_cast<double>(spec.dim) * spec.sigmas[k]
                               * spec.sigmas[k]));
        wmax = std::max(wmax, w[k]);
    }
    double damp = 1.0 - std::pow(wmax, 10);
    double total = 0.0;
    for (double& v : w) {
        if (v != wmax) v *= damp;
        total += v;
    }
    for (double& v : w) v /= total;
    return w;
}

inline double evaluate_composite(const CompositeSpec& spec, const Vector& x) {
    constexpr double common_scale = 2000.0;
    std::vector<double> w = composite_weights(spec, x);
    double value = 0.0;
    Vector z(spec.dim);
    for (std::size_t k = 0; k < 10; ++k) {
        if (w[k] == 0.0) continue;
        for (std::size_t j = 0; j < spec.dim; ++j)
            z[j] = (x[j] - spec.shifts[k][j]) / spec.lambdas[k];
        double normalized = common_scale * spec.components[k](z) / spec.scales[k];
        value += w[k] * (normalized + spec.biases[k]);
    }
    return value;
}

// ---- catalog -------------------------------------------------------------

enum class Family { unimodal, multimodal, fixed_dimension, composite };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::unimodal: return "unimodal";
        case Family::multimodal: return "multimodal";
        case Family::fixed_dimension: return "fixed-dimension";
        case Family::composite: return "composite";
    }
    return "?";
}

struct BenchmarkEntry {
    int id = 0;  // 1..29
    std::string name;
    Family family = Family::unimodal;
    std::size_t default_dim = 30;
    double range_lo = 0.0;
    double range_hi = 0.0;
    bool scalable = false;
    /// f_min as a function of dimension (only F8 actually scales).
    double f_min(std::size_t dim) const {
        return f_min_per_dim_ ? f_min_value_ * static_cast<double>(dim) : f_min_value_;
    }
    std::optional<Vector> reference_argmin(std::size_t dim) const;

    double f_min_value_ = 0.0;
    bool f_min_per_dim_ = false;
};

inline CompositeSpec composite_spec_for(int id) {
    using Fn = double (*)(const Vector&);
    std::vector<double> ones(10, 1.0);
    std::vector<double> l5_100(10, 5.0 / 100.0);
    switch (id) {
        case 24:
            return make_composite_spec(std::vector<Fn>(10, &sphere), ones, l5_100, 1);
        case 25:
            return make_composite_spec(std::vector<Fn>(10, &griewank), ones, l5_100, 2);
        case 26:
            return make_composite_spec(std::vector<Fn>(10, &griewank), ones, ones, 3);
        case 27:
            return make_composite_spec(
                {&ackley, &ackley, &rastrigin, &rastrigin, &weierstrass, &weierstrass,
                 &griewank, &griewank, &sphere, &sphere},
                ones,
                {5.0 / 32, 5.0 / 32, 1, 1, 5.0 / 0.5, 5.0 / 0.5, 5.0 / 100, 5.0 / 100,
                 5.0 / 100, 5.0 / 100},
                4);
        case 28:
            return make_composite_spec(
                {&rastrigin, &rastrigin, &weierstrass, &weierstrass, &griewank, &griewank,
                 &ackley, &ackley, &sphere, &sphere},
                ones,
                {1.0 / 5, 1.0 / 5, 5.0 / 0.5, 5.0 / 0.5, 5.0 / 100, 5.0 / 100, 5.0 / 32,
                 5.0 / 32, 5.0 / 100, 5.0 / 100},
                5);
        case 29:
            return make_composite_spec(
                {&rastrigin, &rastrigin, &weierstrass, &weierstrass, &griewank, &griewank,
                 &ackley, &ackley, &sphere, &sphere},
                {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0},
                {0.1 * 1.0 / 5, 0.2 * 1.0 / 5, 0.3 * 5.0 / 0.5, 0.4 * 5.0 / 0.5,
                 0.5 * 5.0 / 100, 0.6 * 5.0 / 100, 0.7 * 5.0 / 32, 0.8 * 5.0 / 32,
                 0.9 * 5.0 / 100, 1.0 * 5.0 / 100},
                6);
        default:
            throw std::invalid_argument("composite_spec_for: id must be in [24, 29]");
    }
}

inline const std::vector<BenchmarkEntry>& catalog() {
    static const std::vector<BenchmarkEntry> entries = [] {
        std::vector<BenchmarkEntry> v;
        auto add = [&](int id, std::string name, Family fam, std::size_t dim, double lo,
                       double hi, bool scalable, double fmin, bool per_dim = false) {
            BenchmarkEntry e;
            e.id = id;
            e.name = std::move(name);
            e.family = fam;
            e.default_dim = dim;
            e.range_lo = lo;
            e.range_hi = hi;
            e.scalable = scalable;
            e.f_min_value_ = fmin;
            e.f_min_per_dim_ = per_dim;
            v.push_back(std::move(e));
        };
        using enum Family;
        add(1, "sphere", unimodal, 30, -100, 100, true, 0.0);
        add(2, "schwefel-2.22", unimodal, 30, -10, 10, true, 0.0);
        add(3, "schwefel-1.2", unimodal, 30, -100, 100, true, 0.0);
        add(4, "schwefel-2.21", unimodal, 30, -100, 100, true, 0.0);
        add(5, "rosenbrock", unimodal, 30, -30, 30, true, 0.0);
        add(6, "step", unimodal, 30, -100, 100, true, 0.0);
        add(7, "quartic-noise", unimodal, 30, -1.28, 1.28, true, 0.0);
        add(8, "schwefel-sine", multimodal, 30, -500, 500, true, -418.98288727243371, true);
        add(9, "rastrigin", multimodal, 30, -5.12, 5.12, true, 0.0);
        add(10, "ackley", multimodal, 30, -32, 32, true, 0.0);
        add(11, "griewank", multimodal, 30, -512, 512, true, 0.0);
        add(12, "penalized-1", multimodal, 30, -50, 50, true, 0.0);
        add(13, "penalized-2", multimodal, 30, -50, 50, true, 0.0);
        add(14, "shekel-foxholes", fixed_dimension, 2, -65.536, 65.536, false,
            0.9980038377944498);
        add(15, "kowalik", fixed_dimension, 4, -5, 5, false, 0.0003074859878056051);
        add(16, "six-hump-camel", fixed_dimension, 2, -5, 5, false, -1.0316284534898776);
        add(17, "branin", fixed_dimension, 2, -5, 5, false, 0.39788735772973816);
        add(18, "goldstein-price", fixed_dimension, 2, -2, 2, false, 3.0);
        add(19, "hartmann-3", fixed_dimension, 3, 0, 1, false, -3.8627821478207554);
        add(20, "hartmann-6", fixed_dimension, 6, 0, 1, false, -3.322368011415515);
        add(21, "shekel-5", fixed_dimension, 4, 0, 10, false, -10.153199679058229);
        add(22, "shekel-7", fixed_dimension, 4, 0, 10, false, -10.402940566818662);
        add(23, "shekel-10", fixed_dimension, 4, 0, 10, false, -10.536409816692045);
        for (int id = 24; id <= 29; ++id)
            add(id, "composite-" + std::to_string(id - 23), composite, 10, -5, 5, false, 0.0);
        return v;
    }();
    return entries;
}

inline const BenchmarkEntry& get(int id) {
    if (id < 1 || id > 29) throw std::invalid_argument("unknown benchmark id F" + std::to_string(id));
    return catalog()[static_cast<std::size_t>(id - 1)];
}

/// Parse "F9" / "f9" / "9" into a benchmark id.
inline int parse_id(const std::string& token) {
    std::string digits = token;
    if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits = digits.substr(1);
    try {
        std::size_t pos = 0;
        int id = std::stoi(digits, &pos);
        if (pos == digits.size() && id >= 1 && id <= 29) return id;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("unknown benchmark id '" + token + "'");
}

inline std::optional<Vector> BenchmarkEntry::reference_argmin(std::size_t dim) const {
    switch (id) {
        case 1: case 2: case 3: case 4: case 6: case 9: case 10: case 11:
            return Vector(dim, 0.0);
        case 5: case 13:
            return Vector(dim, 1.0);
        case 12:
            return Vector(dim, -1.0);
        case 8:
            return Vector(dim, 420.96874635998203);
        case 14:
            return Vector{-31.978333571397261, -31.978336789414364};
        case 15:
            return Vector{0.19283345304274813, 0.19083624027597035, 0.12311729907598003,
                          0.13576599033984466};
        case 16:
            return Vector{0.089842016529270985, -0.71265640138072017};
        case 17:
            return Vector{pi, 2.275};
        case 18:
            return Vector{0.0, -1.0};
        case 19:
            return Vector{0.11461432790029832, 0.55564885044201406, 0.85254695468893138};
        case 20:
            return Vector{0.20168951289229051, 0.15001069323742897, 0.47687397676117682,
                          0.27533243078395081, 0.31165161848739587, 0.65730053499891417};
        case 21:
            return Vector{4.0000371523765494, 4.0001332786575663, 4.0000371510575548,
                          4.0001332770904252};
        case 22:
            return Vector{4.0005729142770843, 4.0006893660408887, 3.9994897107938447,
                          3.9996061600067923};
        case 23:
            return Vector{4.0007465302533127, 4.0005929367797091, 3.9996633957714787,
                          3.9995097993299975};
        case 24: case 25: case 26: case 27: case 28: case 29:
            return composite_spec_for(id).shifts[0];
        default:
            return std::nullopt;  // F7: noisy, no exact argmin check
    }
}

/// Build an evaluatable problem from a catalog entry. Scalable families
/// accept a dimension override; F7's noise draws from a stream owned by the
/// returned problem (seeded by noise_seed), so each run should build its own
/// instance.
inline ObjectiveProblem make_problem(int id, std::size_t dim = 0,
                                     std::uint64_t noise_seed = 0) {
    const BenchmarkEntry& e = get(id);
    if (dim == 0) dim = e.default_dim;
    if (!e.scalable && dim != e.default_dim)
        throw std::invalid_argument("F" + std::to_string(id) + " has fixed dimension "
                                    + std::to_string(e.default_dim));
    if (dim < 2) throw std::invalid_argument("dimension must be >= 2");

    ObjectiveProblem p;
    p.name = "F" + std::to_string(id);
    p.dim = dim;
    p.bounds = BoundsBox(dim, e.range_lo, e.range_hi);
    p.known_min = e.f_min(dim);
    if (auto argmin = e.reference_argmin(dim); argmin && id != 7) p.known_argmin = *argmin;

    switch (id) {
        case 1: p.objective = sphere; break;
        case 2: p.objective = abs_sum_prod; break;
        case 3: p.objective = rotated_hyper_ellipsoid; break;
        case 4: p.objective = max_abs; break;
        case 5: p.objective = rosenbrock; break;
        case 6: p.objective = step; break;
        case 7: {
            auto noise = std::make_shared<RandomStream>(RandomStream(noise_seed).fork(7));
            p.objective = [noise](const Vector& x) {
                return quartic_noiseless(x) + noise->uniform01();
            };
            break;
        }
        case 8: p.objective = schwefel_sine; break;
        case 9: p.objective = rastrigin; break;
        case 10: p.objective = ackley; break;
        case 11: p.objective = griewank; break;
        case 12: p.objective = penalized1; break;
        case 13: p.objective = penalized2; break;
        case 14: p.objective = shekel_foxholes; break;
        case 15: p.objective = kowalik; break;
        case 16: p.objective = six_hump_camel; break;
        case 17: p.objective = branin; break;
        case 18: p.objective = goldstein_price; break;
        case 19: p.objective = hartmann3; break;
        case 20: p.objective = hartmann6; break;
        case 21: p.objective = [](const Vector& x) { return shekel(x, 5); }; break;
        case 22: p.objective = [](const Vector& x) { return shekel(x, 7); }; break;
        case 23: p.objective = [](const Vector& x) { return shekel(x, 10); }; break;
        default: {
            auto spec = std::make_shared<CompositeSpec>(composite_spec_for(id));
            p.objective = [spec](const Vector& x) { return evaluate_composite(*spec, x); };
            break;
        }
    }
    return p;
}

} // namespace avla::bench

#endif
