#pragma once

#include <variant>
#include <vector>

#include "pbias/boolean_function.hpp"
#include "pbias/measure.hpp"

namespace pbias {

// Coefficients of f in the orthonormal basis chi_S = prod_{i in S} chi_i of a
// product measure. coeffs[S] with bit (i-1) of S set iff i is in S.
class FourierExpansion {
public:
    FourierExpansion(ProductMeasure measure, std::vector<double> coeffs);

    int n() const { return measure_.n(); }
    const ProductMeasure& measure() const { return measure_; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](SubsetMask s) const { return coeffs_[s]; }

private:
    ProductMeasure measure_;
    std::vector<double> coeffs_;
};

// chi_i at x_i = sign: -sqrt(p/(1-p)) at -1, sqrt((1-p)/p) at +1.
double chi_value(const ProductMeasure& mu, int i, Sign sign);

// O(n 2^n) in-place butterfly. On the fiber of coordinate i the pair
// (a at x_i = -1, b at x_i = +1) is written as c0 + c1 chi_i; solving the two
// equations c0 - c1 sqrt(p/(1-p)) = a, c0 + c1 sqrt((1-p)/p) = b gives
//   c0 = (1-p) a + p b,   c1 = (b - a) sigma / 2,   sigma = 2 sqrt(p(1-p)).
// Applying this for i = 1..n expands f in the tensor basis chi_S.
FourierExpansion transform(const BooleanFunction& f, const ProductMeasure& mu);

// Inverse butterfly: a = c0 - c1 sqrt(p/(1-p)), b = c0 + c1 sqrt((1-p)/p).
BooleanFunction inverse(const FourierExpansion& e);

// T_delta: multiplies coeffs[S] by delta^|S|.
FourierExpansion noise_operator(const FourierExpansion& e, double delta);

// ||T_delta f||_2^2 = sum_S delta^(2|S|) coeffs[S]^2, without materialising T_delta f.
double smoothed_l2_norm_sq(const FourierExpansion& e, double delta);

struct AllSubsets {};

// Subsets with min_degree <= |S| <= max_degree (both inclusive). The set
// {S : a < |S| <= b} is DegreeRange{a + 1, b}.
struct DegreeRange {
    int min_degree;
    int max_degree;
};

using SpectralSelector = std::variant<AllSubsets, DegreeRange, std::vector<SubsetMask>>;

// nu(E) = sum_{S in E} coeffs[S]^2.
double spectral_mass(const FourierExpansion& e, const SpectralSelector& selector);

// sum_{S contains i} coeffs[S]^2, which equals lq_influence(f, mu, i, 2).
double spectral_influence(const FourierExpansion& e, int i);

// I = sum_S |S| coeffs[S]^2.
double total_influence_spectral(const FourierExpansion& e);

// |sum_S coeffs[S]^2 - E[f^2]|.
double parseval_residual(const FourierExpansion& e, const BooleanFunction& f);

}  // namespace pbias
