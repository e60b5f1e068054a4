#include "pbias/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbias/error.hpp"

namespace pbias {

void check_bias(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("bias must lie strictly inside (0,1), got " + std::to_string(p));
    }
}

void check_same_dimension(int function_n, int measure_n) {
    if (function_n != measure_n) {
        throw DimensionMismatch("function has n = " + std::to_string(function_n) + " but measure has n = " +
                                std::to_string(measure_n));
    }
}

double lambda_of(double p) {
    check_bias(p);
    return std::min(p, 1.0 - p);
}

ProductMeasure::ProductMeasure(std::vector<double> biases) : biases_(std::move(biases)) {
    BooleanFunction::check_coordinate_count(static_cast<int>(biases_.size()));
    for (double p : biases_) {
        check_bias(p);
    }
}

ProductMeasure ProductMeasure::uniform(int n, double p) {
    BooleanFunction::check_coordinate_count(n);
    return ProductMeasure(std::vector<double>(static_cast<std::size_t>(n), p));
}

double ProductMeasure::bias(int i) const {
    check_coordinate(n(), i);
    return biases_[static_cast<std::size_t>(i - 1)];
}

double ProductMeasure::sigma(int i) const {
    const double p = bias(i);
    return 2.0 * std::sqrt(p * (1.0 - p));
}

std::optional<double> ProductMeasure::uniform_bias() const {
    for (double p : biases_) {
        if (p != biases_.front()) {
            return std::nullopt;
        }
    }
    return biases_.front();
}

double ProductMeasure::lambda() const {
    const auto p = uniform_bias();
    if (!p) {
        throw DomainError("lambda is defined only for a uniform (p-biased) measure");
    }
    return lambda_of(*p);
}

double ProductMeasure::point_mass(PointIndex x) const {
    if (static_cast<std::size_t>(x) >= (std::size_t{1} << n())) {
        throw DomainError("point index " + std::to_string(x) + " out of range for n = " + std::to_string(n()));
    }
    double mass = 1.0;
    for (int i = 1; i <= n(); ++i) {
        const double p = biases_[static_cast<std::size_t>(i - 1)];
        mass *= is_plus(x, i) ? p : 1.0 - p;
    }
    return mass;
}

}  // namespace pbias
