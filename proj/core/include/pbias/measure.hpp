#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pbias/boolean_function.hpp"

namespace pbias {

// Product of two-point measures on {-1,1}^n: coordinate i is +1 with
// probability p_i and -1 with probability 1 - p_i, every p_i in (0,1).
class ProductMeasure {
public:
    explicit ProductMeasure(std::vector<double> biases);

    static ProductMeasure uniform(int n, double p);

    int n() const { return static_cast<int>(biases_.size()); }
    std::span<const double> biases() const { return biases_; }
    double bias(int i) const;

    // sigma_i = sqrt(4 p_i (1 - p_i)), the standard deviation of x_i.
    double sigma(int i) const;

    // Common bias when all coordinates agree exactly.
    std::optional<double> uniform_bias() const;
    bool is_uniform() const { return uniform_bias().has_value(); }

    // min{p, 1-p}; requires a uniform measure.
    double lambda() const;

    double point_mass(PointIndex x) const;

    friend bool operator==(const ProductMeasure&, const ProductMeasure&) = default;

private:
    std::vector<double> biases_;
};

double lambda_of(double p);

void check_bias(double p);

void check_same_dimension(int function_n, int measure_n);

}  // namespace pbias
