#include "pbias/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbias/detail/integrate.hpp"
#include "pbias/error.hpp"

namespace pbias {

namespace {

void check_exponent(double q) {
    if (!(q >= 1.0)) {
        throw DomainError("norm exponent must be >= 1, got " + std::to_string(q));
    }
}

double abs_pow(double v, double q) {
    const double a = std::fabs(v);
    if (q == 1.0) {
        return a;
    }
    if (q == 2.0) {
        return a * a;
    }
    return std::pow(a, q);
}

template <class Map>
BooleanFunction map_fibers(const BooleanFunction& f, int i, Map&& map) {
    check_coordinate(f.n(), i);
    const PointIndex bit = coordinate_bit(i);
    return BooleanFunction::tabulate(f.n(), [&](PointIndex x) {
        return map(f[x & ~bit], f[x | bit], is_plus(x, i));
    });
}

}  // namespace

double expectation(const BooleanFunction& f, const ProductMeasure& mu) {
    check_same_dimension(f.n(), mu.n());
    return detail::integrate(mu.biases(), [&](PointIndex x) { return f[x]; });
}

double lp_norm_pow(const BooleanFunction& f, const ProductMeasure& mu, double q) {
    check_exponent(q);
    check_same_dimension(f.n(), mu.n());
    if (std::isinf(q)) {
        return sup_norm(f);
    }
    return detail::integrate(mu.biases(), [&](PointIndex x) { return abs_pow(f[x], q); });
}

double lp_norm(const BooleanFunction& f, const ProductMeasure& mu, double q) {
    const double s = lp_norm_pow(f, mu, q);
    if (q == 1.0 || std::isinf(q)) {
        return s;
    }
    if (q == 2.0) {
        return std::sqrt(s);
    }
    return std::pow(s, 1.0 / q);
}

double sup_norm(const BooleanFunction& f) {
    double m = 0.0;
    for (double v : f.values()) {
        m = std::max(m, std::fabs(v));
    }
    return m;
}

double variance(const BooleanFunction& f, const ProductMeasure& mu) {
    const double mean = expectation(f, mu);
    if (f.is_constant()) {
        return 0.0;
    }
    return detail::integrate(mu.biases(), [&](PointIndex x) {
        const double d = f[x] - mean;
        return d * d;
    });
}

BooleanFunction restrict_tau(const BooleanFunction& f, int i, Sign sign) {
    return map_fibers(f, i, [sign](double minus, double plus, bool) { return sign == Sign::Plus ? plus : minus; });
}

BooleanFunction discrete_derivative(const BooleanFunction& f, int i) {
    return map_fibers(f, i, [](double minus, double plus, bool) { return plus - minus; });
}

BooleanFunction conditional_expectation(const BooleanFunction& f, const ProductMeasure& mu, int i) {
    check_same_dimension(f.n(), mu.n());
    const double p = mu.bias(i);
    return map_fibers(f, i, [p](double minus, double plus, bool) { return minus + p * (plus - minus); });
}

double lq_influence(const BooleanFunction& f, const ProductMeasure& mu, int i, double q) {
    check_exponent(q);
    check_same_dimension(f.n(), mu.n());
    check_coordinate(f.n(), i);
    const double p = mu.bias(i);
    const PointIndex bit = coordinate_bit(i);
    if (std::isinf(q)) {
        double m = 0.0;
        for (PointIndex x = 0; x < f.size(); ++x) {
            const double delta = f[x | bit] - f[x & ~bit];
            m = std::max(m, std::fabs(delta) * (is_plus(x, i) ? 1.0 - p : p));
        }
        return m;
    }
    return detail::integrate(mu.biases(), [&](PointIndex x) {
        const double delta = f[x | bit] - f[x & ~bit];
        const double deviation = is_plus(x, i) ? (1.0 - p) * delta : -p * delta;
        return abs_pow(deviation, q);
    });
}

double derivative_l1(const BooleanFunction& f, const ProductMeasure& mu, int i) {
    check_same_dimension(f.n(), mu.n());
    check_coordinate(f.n(), i);
    const PointIndex bit = coordinate_bit(i);
    return detail::integrate(mu.biases(), [&](PointIndex x) { return std::fabs(f[x | bit] - f[x & ~bit]); });
}

double derivative_mean(const BooleanFunction& f, std::span<const double> biases, int i) {
    check_same_dimension(f.n(), static_cast<int>(biases.size()));
    check_coordinate(f.n(), i);
    const PointIndex bit = coordinate_bit(i);
    return detail::integrate(biases, [&](PointIndex x) { return f[x | bit] - f[x & ~bit]; });
}

}  // namespace pbias
