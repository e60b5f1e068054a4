#pragma once

#include "pbias/boolean_function.hpp"
#include "pbias/fourier.hpp"
#include "pbias/measure.hpp"

// Slow reference implementations written straight from the definitions.
// They back the property tests and the oracle-diff command only.
namespace pbias::oracle {

inline constexpr int kOracleMaxCoordinates = 12;

// coeffs[S] = sum_x f(x) chi_S(x) mu(x), O(4^n).
FourierExpansion naive_transform(const BooleanFunction& f, const ProductMeasure& mu);

// sum_x |f(x) - (E_i f)(x)|^q mu(x) with E_i f formed literally.
double naive_influence(const BooleanFunction& f, const ProductMeasure& mu, int i, double q);

// Fraction of points x with f(tau_i^+ x) != f(tau_i^- x), for +-1-valued f.
double pivotal_probability(const BooleanFunction& f, int i);

}  // namespace pbias::oracle
