#include "pbias/boolean_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbias/error.hpp"

namespace pbias {

void BooleanFunction::check_coordinate_count(int n) {
    if (n < 1) {
        throw DomainError("coordinate count must be at least 1, got " + std::to_string(n));
    }
    if (n > kMaxCoordinates) {
        throw CapacityError("coordinate count " + std::to_string(n) + " exceeds the dense limit of " +
                            std::to_string(kMaxCoordinates));
    }
}

void check_coordinate(int n, int i) {
    if (i < 1 || i > n) {
        throw DomainError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
}

BooleanFunction::BooleanFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    check_coordinate_count(n);
    if (values_.size() != (std::size_t{1} << n)) {
        throw DimensionMismatch("expected " + std::to_string(std::size_t{1} << n) + " values for n = " +
                                std::to_string(n) + ", got " + std::to_string(values_.size()));
    }
    const auto bad = std::find_if(values_.begin(), values_.end(), [](double v) { return !std::isfinite(v); });
    if (bad != values_.end()) {
        throw DomainError("function value at index " + std::to_string(bad - values_.begin()) + " is not finite");
    }
}

BooleanFunction BooleanFunction::constant(int n, double c) {
    check_coordinate_count(n);
    return BooleanFunction(n, std::vector<double>(std::size_t{1} << n, c));
}

BooleanFunction BooleanFunction::scaled(double c) const {
    std::vector<double> out(values_);
    for (double& v : out) {
        v *= c;
    }
    return BooleanFunction(n_, std::move(out));
}

bool BooleanFunction::is_boolean() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 1.0 || v == -1.0; });
}

bool BooleanFunction::is_constant() const {
    return std::all_of(values_.begin(), values_.end(), [&](double v) { return v == values_.front(); });
}

}  // namespace pbias
