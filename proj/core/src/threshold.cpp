#include "pbias/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pbias/core.hpp"
#include "pbias/detail/integrate.hpp"
#include "pbias/error.hpp"

namespace pbias {

namespace {

void check_extension_biases(const BooleanFunction& f, std::span<const double> biases, bool strict) {
    check_same_dimension(f.n(), static_cast<int>(biases.size()));
    for (double p : biases) {
        if (strict) {
            check_bias(p);
        } else if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("bias must lie in [0,1], got " + std::to_string(p));
        }
    }
}

std::uint64_t saturating_factorial(int n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) {
        if (r > cap / static_cast<std::uint64_t>(k)) {
            return cap + 1;
        }
        r *= static_cast<std::uint64_t>(k);
    }
    return r;
}

// Index of pi(x), whose bit (i-1) is bit (pi(i)-1) of x. perm is 0-based.
PointIndex permute_point(PointIndex x, const std::vector<int>& perm) {
    PointIndex y = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        y |= ((x >> perm[i]) & 1u) << i;
    }
    return y;
}

bool is_invariant(const BooleanFunction& f, const std::vector<int>& perm) {
    for (PointIndex x = 0; x < f.size(); ++x) {
        if (f[permute_point(x, perm)] != f[x]) {
            return false;
        }
    }
    return true;
}

std::vector<double> derivative_l1_all(const BooleanFunction& f, double p) {
    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(f.n()));
    for (int i = 1; i <= f.n(); ++i) {
        out.push_back(derivative_l1(f, mu, i));
    }
    return out;
}

}  // namespace

double mean_extension(const BooleanFunction& f, std::span<const double> biases, bool strict) {
    check_extension_biases(f, biases, strict);
    return detail::integrate(biases, [&](PointIndex x) { return f[x]; });
}

double partial_derivative(const BooleanFunction& f, std::span<const double> biases, int i) {
    check_extension_biases(f, biases, false);
    return derivative_mean(f, biases, i);
}

double russo_derivative(const BooleanFunction& f, double p) {
    check_bias(p);
    const std::vector<double> biases(static_cast<std::size_t>(f.n()), p);
    double sum = 0.0;
    for (int i = 1; i <= f.n(); ++i) {
        sum += derivative_mean(f, biases, i);
    }
    return sum;
}

bool is_monotone(const BooleanFunction& f) {
    for (int i = 1; i <= f.n(); ++i) {
        const PointIndex bit = coordinate_bit(i);
        for (PointIndex x = 0; x < f.size(); ++x) {
            if ((x & bit) == 0 && f[x] > f[x | bit]) {
                return false;
            }
        }
    }
    return true;
}

std::optional<bool> is_transitive_symmetric(const BooleanFunction& f, std::uint64_t perm_limit) {
    const int n = f.n();
    if (saturating_factorial(n, perm_limit) > perm_limit) {
        return std::nullopt;
    }
    // The symmetry group is a group, so transitivity is equivalent to the
    // orbit of coordinate 1 being everything.
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    reached[0] = true;
    int remaining = n - 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    while (remaining > 0 && std::next_permutation(perm.begin(), perm.end())) {
        const auto image = static_cast<std::size_t>(perm[0]);
        if (!reached[image] && is_invariant(f, perm)) {
            reached[image] = true;
            --remaining;
        }
    }
    return remaining == 0;
}

std::optional<double> weak_mono_ratio(const BooleanFunction& f, double p) {
    const std::vector<double> l1 = derivative_l1_all(f, p);
    const double denominator = std::accumulate(l1.begin(), l1.end(), 0.0);
    if (denominator == 0.0) {
        return std::nullopt;
    }
    return russo_derivative(f, p) / denominator;
}

std::optional<double> weak_sym_ratio(const BooleanFunction& f, double p) {
    const std::vector<double> l1 = derivative_l1_all(f, p);
    const double largest = *std::max_element(l1.begin(), l1.end());
    if (largest == 0.0) {
        return std::nullopt;
    }
    const double sum = std::accumulate(l1.begin(), l1.end(), 0.0);
    return sum / (static_cast<double>(f.n()) * largest);
}

MonotoneBound monotone_bound_check(const BooleanFunction& f, double p) {
    if (!is_monotone(f)) {
        throw DomainError("monotone derivative bound requires a monotone function");
    }
    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
    MonotoneBound r{};
    r.derivative = russo_derivative(f, p);
    for (int i = 1; i <= f.n(); ++i) {
        r.l1_influence_sum += lq_influence(f, mu, i, 1.0);
    }
    r.margin = r.derivative - 2.0 * r.l1_influence_sum;
    r.identity_residual = r.derivative - r.l1_influence_sum / (2.0 * p * (1.0 - p));
    return r;
}

double derivative_lower_bound(double p, double bound, double var, int n) {
    check_bias(p);
    if (!(bound > 0.0)) {
        throw DomainError("function bound must be positive");
    }
    if (n < 1) {
        throw DomainError("n must be positive");
    }
    return 9.0 / (10.0 * bound) / (1.0 + std::fabs(std::log(p / (1.0 - p)))) * var * std::log(static_cast<double>(n));
}

ThresholdReport threshold_report(const BooleanFunction& f, double p, std::uint64_t perm_limit) {
    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
    ThresholdReport r;
    r.p = p;
    r.mean = expectation(f, mu);
    r.derivative = russo_derivative(f, p);
    for (int i = 1; i <= f.n(); ++i) {
        r.l1_influence_sum += lq_influence(f, mu, i, 1.0);
    }
    r.weak_mono_ratio = weak_mono_ratio(f, p);
    r.weak_sym_ratio = weak_sym_ratio(f, p);
    r.monotone = is_monotone(f);
    r.transitive_symmetric = is_transitive_symmetric(f, perm_limit);
    return r;
}

}  // namespace pbias
