#include "pbias/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "pbias/error.hpp"

namespace pbias::oracle {

namespace {

void check_oracle_capacity(int n) {
    if (n > kOracleMaxCoordinates) {
        throw CapacityError("oracles are limited to n <= " + std::to_string(kOracleMaxCoordinates) + ", got " +
                            std::to_string(n));
    }
}

double chi(const ProductMeasure& mu, int i, PointIndex x) {
    const double p = mu.bias(i);
    return is_plus(x, i) ? std::sqrt((1.0 - p) / p) : -std::sqrt(p / (1.0 - p));
}

}  // namespace

FourierExpansion naive_transform(const BooleanFunction& f, const ProductMeasure& mu) {
    check_same_dimension(f.n(), mu.n());
    check_oracle_capacity(f.n());
    const std::size_t size = f.size();
    std::vector<double> coeffs(size, 0.0);
    std::vector<double> chi_s(size);
    for (PointIndex x = 0; x < size; ++x) {
        // chi_S(x) for every S, built from chi_{S minus lowest element}(x).
        chi_s[0] = 1.0;
        for (std::size_t s = 1; s < size; ++s) {
            const int lowest = std::countr_zero(s) + 1;
            chi_s[s] = chi_s[s & (s - 1)] * chi(mu, lowest, x);
        }
        const double weight = f[x] * mu.point_mass(x);
        for (std::size_t s = 0; s < size; ++s) {
            coeffs[s] += weight * chi_s[s];
        }
    }
    return FourierExpansion(mu, std::move(coeffs));
}

double naive_influence(const BooleanFunction& f, const ProductMeasure& mu, int i, double q) {
    check_same_dimension(f.n(), mu.n());
    check_oracle_capacity(f.n());
    check_coordinate(f.n(), i);
    if (!(q >= 1.0)) {
        throw DomainError("norm exponent must be >= 1");
    }
    const double p = mu.bias(i);
    const PointIndex bit = coordinate_bit(i);
    double sum = 0.0;
    for (PointIndex x = 0; x < f.size(); ++x) {
        const double averaged = (1.0 - p) * f[x & ~bit] + p * f[x | bit];
        sum += std::pow(std::fabs(f[x] - averaged), q) * mu.point_mass(x);
    }
    return sum;
}

double pivotal_probability(const BooleanFunction& f, int i) {
    check_coordinate(f.n(), i);
    if (!f.is_boolean()) {
        throw DomainError("pivotal probability requires a +-1-valued function");
    }
    const PointIndex bit = coordinate_bit(i);
    std::size_t pivotal = 0;
    for (PointIndex x = 0; x < f.size(); ++x) {
        if (f[x | bit] != f[x & ~bit]) {
            ++pivotal;
        }
    }
    return static_cast<double>(pivotal) / static_cast<double>(f.size());
}

}  // namespace pbias::oracle
