#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "pbias/boolean_function.hpp"

namespace pbias {

// n! for n = 8; the exact symmetry check is skipped above this many permutations.
inline constexpr std::uint64_t kDefaultPermutationLimit = 40320;

// g(p_1..p_n) = E[f] under the product measure with the given biases. With
// strict = false biases in the closed interval [0,1] are accepted, which
// evaluates g at the corners of the cube.
double mean_extension(const BooleanFunction& f, std::span<const double> biases, bool strict = true);

// dg/dp_i = E[f o tau_i^+ - f o tau_i^-].
double partial_derivative(const BooleanFunction& f, std::span<const double> biases, int i);

// d/dp E_p[f] = sum_i E_p[Delta_i f] for the p-biased measure.
double russo_derivative(const BooleanFunction& f, double p);

// Checks f(tau_i^- x) <= f(tau_i^+ x) on all n 2^(n-1) edges of the cube.
bool is_monotone(const BooleanFunction& f);

// Whether the symmetry group {pi : f o pi = f} acts transitively on the
// coordinates, with [pi(x)]_i = x_pi(i). Empty ("skipped") when n! exceeds
// perm_limit; permutations are never sampled.
std::optional<bool> is_transitive_symmetric(const BooleanFunction& f,
                                            std::uint64_t perm_limit = kDefaultPermutationLimit);

// sum_i E[Delta_i f] / sum_i E|Delta_i f|, in [-1, 1]; empty for constant f.
std::optional<double> weak_mono_ratio(const BooleanFunction& f, double p);

// sum_i E|Delta_i f| / (n max_i E|Delta_i f|), in (0, 1]; empty for constant f.
std::optional<double> weak_sym_ratio(const BooleanFunction& f, double p);

struct MonotoneBound {
    double derivative;         // d/dp E[f]
    double l1_influence_sum;   // sum_i ||f - E_i f||_1
    double margin;             // derivative - 2 l1_influence_sum, >= 0 for monotone f
    double identity_residual;  // derivative - l1_influence_sum / (2 p (1-p)), zero for monotone f
};

// Throws DomainError when f is not monotone.
MonotoneBound monotone_bound_check(const BooleanFunction& f, double p);

// Right-hand side (9 / (10 b)) var ln(n) / (1 + |ln(p/(1-p))|) of the derivative
// lower bound for bounded (|f| <= b) monotone symmetric families.
double derivative_lower_bound(double p, double bound, double var, int n);

struct ThresholdReport {
    double p = 0.5;
    double mean = 0.0;
    double derivative = 0.0;
    double l1_influence_sum = 0.0;
    std::optional<double> weak_mono_ratio;
    std::optional<double> weak_sym_ratio;
    bool monotone = false;
    std::optional<bool> transitive_symmetric;  // empty: skipped, n too large
};

ThresholdReport threshold_report(const BooleanFunction& f, double p,
                                 std::uint64_t perm_limit = kDefaultPermutationLimit);

}  // namespace pbias
