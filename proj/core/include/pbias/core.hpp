#pragma once

#include <limits>

#include "pbias/boolean_function.hpp"
#include "pbias/measure.hpp"

namespace pbias {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

double expectation(const BooleanFunction& f, const ProductMeasure& mu);

// sum_x |f(x)|^q mu(x). q = kInfinity gives max |f| (every point has positive mass).
double lp_norm_pow(const BooleanFunction& f, const ProductMeasure& mu, double q);
double lp_norm(const BooleanFunction& f, const ProductMeasure& mu, double q);

double sup_norm(const BooleanFunction& f);

double variance(const BooleanFunction& f, const ProductMeasure& mu);

// f o tau_i^sign: coordinate i overwritten by sign.
BooleanFunction restrict_tau(const BooleanFunction& f, int i, Sign sign);

// Delta_i f = f o tau_i^+ - f o tau_i^-.
BooleanFunction discrete_derivative(const BooleanFunction& f, int i);

// E_i f = (1 - p_i) f o tau_i^- + p_i f o tau_i^+.
BooleanFunction conditional_expectation(const BooleanFunction& f, const ProductMeasure& mu,
                                        int i);

// The L^q influence ||f - E_i f||_q^q (the q-th power, not the norm).
//
// f - E_i f is evaluated as (1 - p_i) Delta_i f at x_i = +1 and -p_i Delta_i f
// at x_i = -1, so a coordinate f does not depend on has influence exactly 0.
double lq_influence(const BooleanFunction& f, const ProductMeasure& mu, int i, double q);

// E|Delta_i f| under mu.
double derivative_l1(const BooleanFunction& f, const ProductMeasure& mu, int i);

// E[Delta_i f] under the product measure with the given biases in [0,1].
double derivative_mean(const BooleanFunction& f, std::span<const double> biases, int i);

}  // namespace pbias
