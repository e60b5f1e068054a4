#include "pbias/fourier.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "pbias/core.hpp"
#include "pbias/detail/integrate.hpp"
#include "pbias/error.hpp"

namespace pbias {

namespace {

// Per-degree multipliers delta^k, k = 0..n, with delta^0 = 1 even for delta = 0.
std::vector<double> degree_powers(int n, double delta) {
    std::vector<double> pw(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k) {
        pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k) - 1] * delta;
    }
    return pw;
}

template <class Pair>
void butterfly(std::vector<double>& v, int n, Pair&& pair) {
    const std::size_t size = v.size();
    for (int i = 1; i <= n; ++i) {
        const std::size_t half = std::size_t{1} << (i - 1);
        for (std::size_t base = 0; base < size; base += 2 * half) {
            for (std::size_t j = base; j < base + half; ++j) {
                pair(i, v[j], v[j + half]);
            }
        }
    }
}

}  // namespace

FourierExpansion::FourierExpansion(ProductMeasure measure, std::vector<double> coeffs)
    : measure_(std::move(measure)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != (std::size_t{1} << measure_.n())) {
        throw DimensionMismatch("expansion over n = " + std::to_string(measure_.n()) + " needs " +
                                std::to_string(std::size_t{1} << measure_.n()) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
    }
}

double chi_value(const ProductMeasure& mu, int i, Sign sign) {
    const double p = mu.bias(i);
    return sign == Sign::Plus ? std::sqrt((1.0 - p) / p) : -std::sqrt(p / (1.0 - p));
}

FourierExpansion transform(const BooleanFunction& f, const ProductMeasure& mu) {
    check_same_dimension(f.n(), mu.n());
    std::vector<double> v(f.values().begin(), f.values().end());
    std::vector<double> half_sigma(static_cast<std::size_t>(f.n()));
    for (int i = 1; i <= f.n(); ++i) {
        half_sigma[static_cast<std::size_t>(i - 1)] = mu.sigma(i) / 2.0;
    }
    butterfly(v, f.n(), [&](int i, double& lo, double& hi) {
        const double p = mu.biases()[static_cast<std::size_t>(i - 1)];
        const double a = lo;
        const double b = hi;
        lo = a + p * (b - a);
        hi = (b - a) * half_sigma[static_cast<std::size_t>(i - 1)];
    });
    return FourierExpansion(mu, std::move(v));
}

BooleanFunction inverse(const FourierExpansion& e) {
    const ProductMeasure& mu = e.measure();
    std::vector<double> v(e.coeffs().begin(), e.coeffs().end());
    std::vector<double> chi_minus(static_cast<std::size_t>(e.n()));
    std::vector<double> chi_plus(static_cast<std::size_t>(e.n()));
    for (int i = 1; i <= e.n(); ++i) {
        chi_minus[static_cast<std::size_t>(i - 1)] = chi_value(mu, i, Sign::Minus);
        chi_plus[static_cast<std::size_t>(i - 1)] = chi_value(mu, i, Sign::Plus);
    }
    butterfly(v, e.n(), [&](int i, double& lo, double& hi) {
        const double c0 = lo;
        const double c1 = hi;
        lo = c0 + c1 * chi_minus[static_cast<std::size_t>(i - 1)];
        hi = c0 + c1 * chi_plus[static_cast<std::size_t>(i - 1)];
    });
    return BooleanFunction(e.n(), std::move(v));
}

FourierExpansion noise_operator(const FourierExpansion& e, double delta) {
    const auto pw = degree_powers(e.n(), delta);
    std::vector<double> out(e.coeffs().begin(), e.coeffs().end());
    for (std::size_t s = 0; s < out.size(); ++s) {
        out[s] *= pw[static_cast<std::size_t>(std::popcount(s))];
    }
    return FourierExpansion(e.measure(), std::move(out));
}

double smoothed_l2_norm_sq(const FourierExpansion& e, double delta) {
    const auto pw = degree_powers(e.n(), delta * delta);
    const auto c = e.coeffs();
    return detail::pairwise_sum(0, c.size(), [&](std::size_t s) {
        return pw[static_cast<std::size_t>(std::popcount(s))] * c[s] * c[s];
    });
}

double spectral_mass(const FourierExpansion& e, const SpectralSelector& selector) {
    const auto c = e.coeffs();
    if (std::holds_alternative<AllSubsets>(selector)) {
        return detail::pairwise_sum(0, c.size(), [&](std::size_t s) { return c[s] * c[s]; });
    }
    if (const auto* range = std::get_if<DegreeRange>(&selector)) {
        return detail::pairwise_sum(0, c.size(), [&](std::size_t s) {
            const int d = std::popcount(s);
            return d >= range->min_degree && d <= range->max_degree ? c[s] * c[s] : 0.0;
        });
    }
    const auto& masks = std::get<std::vector<SubsetMask>>(selector);
    for (SubsetMask s : masks) {
        if (s >= c.size()) {
            throw DomainError("subset mask " + std::to_string(s) + " out of range for n = " + std::to_string(e.n()));
        }
    }
    return detail::pairwise_sum(0, masks.size(), [&](std::size_t k) { return c[masks[k]] * c[masks[k]]; });
}

double spectral_influence(const FourierExpansion& e, int i) {
    check_coordinate(e.n(), i);
    const auto c = e.coeffs();
    const SubsetMask bit = coordinate_bit(i);
    return detail::pairwise_sum(0, c.size(), [&](std::size_t s) { return (s & bit) != 0 ? c[s] * c[s] : 0.0; });
}

double total_influence_spectral(const FourierExpansion& e) {
    const auto c = e.coeffs();
    return detail::pairwise_sum(0, c.size(), [&](std::size_t s) { return std::popcount(s) * c[s] * c[s]; });
}

double parseval_residual(const FourierExpansion& e, const BooleanFunction& f) {
    return std::fabs(spectral_mass(e, AllSubsets{}) - lp_norm_pow(f, e.measure(), 2.0));
}

}  // namespace pbias
