#pragma once

#include <cstdint>
#include <optional>

#include "pbias/boolean_function.hpp"

namespace pbias {

// OR of tribe_count disjoint ANDs of tribe_size consecutive coordinates.
struct TribesParams {
    int tribe_size = 1;
    std::uint64_t tribe_count = 1;

    std::uint64_t n() const { return static_cast<std::uint64_t>(tribe_size) * tribe_count; }
};

// +1 (TRUE) iff some tribe has all coordinates +1, else -1.
BooleanFunction make_tribes(const TribesParams& params);

// x_i.
BooleanFunction make_dictator(int n, int i);

// sign(x_1 + ... + x_n), n odd.
BooleanFunction make_majority(int n);

// prod_{i in mask} x_i; mask 0 gives the constant 1.
BooleanFunction make_parity(int n, SubsetMask mask);

enum class RandomDistribution {
    Gaussian,  // standard normal values
    Sign,      // uniform on {-1, +1}
    Uniform,   // uniform on [-1, 1)
};

// Seed-deterministic random table (std::mt19937_64).
BooleanFunction make_random(int n, std::uint64_t seed, RandomDistribution distribution);

// Per-coordinate influence 2^-(l-1) (1 - 2^-l)^(T-1) of tribes at p = 1/2.
double tribes_influence(int tribe_size, double tribe_count);

// 4 (1 - 2^-l)^T (1 - (1 - 2^-l)^T) at p = 1/2.
double tribes_variance(int tribe_size, double tribe_count);

struct TribesRatio {
    double n;                // m 2^(m+k)
    double influence;        // closed form at l = m, T = 2^(m+k)
    double variance;
    double finite_m_ratio;   // influence / (variance ln(n) / n)
    double corrected_ratio;  // finite_m_ratio (m + k + log2 m) / m
    double limit;            // (1/2) 2^k log2(e) / (1 - e^(-2^k))
};

// Shifted tribes family with tribe size m and 2^(m+k) tribes. "log" in the
// limit is log2 and "ln" is natural, so log2(n) = m + k + log2(m) and the
// corrected ratio tends to the limit as m grows.
TribesRatio tribes_ratio(int m, int k);

// The m -> infinity limit alone; defined for every integer k.
double tribes_ratio_limit(int k);

}  // namespace pbias
