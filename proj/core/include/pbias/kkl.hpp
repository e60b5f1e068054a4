#pragma once

#include <optional>
#include <vector>

#include "pbias/boolean_function.hpp"
#include "pbias/hyper.hpp"

namespace pbias {

// Upper end of the alpha search for C0. The objective decays like 1/alpha,
// so the supremum is attained well below this.
inline constexpr double kDefaultAlphaMax = 64.0;

// max over coordinates with nonzero influence of L2 influence / L1 influence
// under the p-biased measure. Empty when f is constant.
std::optional<double> m_statistic(const BooleanFunction& f, double p);

// tanh(alpha/2) / (alpha - ln rho2(alpha)^2). Throws Error when the
// denominator is not positive, which would mean rho2 > 1.
double c0_objective(RhoForm form, double alpha, double lambda);

// The alpha -> 0+ limit of c0_objective.
double c0_boundary_limit(RhoForm form, double lambda);

struct C0Result {
    double c0;
    // Empty when the supremum is the alpha -> 0+ boundary limit.
    std::optional<double> argmax_alpha;
};

// sup over alpha in (0, alpha_max] of c0_objective: a dense log-spaced grid
// locates the peak, golden-section search refines it, and the result is
// compared against the boundary limit.
C0Result c0_constant(RhoForm form, double lambda, double alpha_max = kDefaultAlphaMax);

// max_i ||f - E_i f||_1 / (var(f) ln(n) / n). Requires n >= 2 and var(f) > 0.
double kkl_ratio(const BooleanFunction& f, double p);

// (9/20) / sup_norm / (1 + |ln(p/(1-p))|).
double eq1_rhs(double p, double sup_norm);

struct KklReport {
    int n = 0;
    double p = 0.5;
    RhoForm form = RhoForm::SqrtOdds;
    std::vector<double> l1_influences;
    std::vector<double> l2_influences;
    double variance = 0.0;
    std::optional<double> m_stat;
    std::optional<double> ratio_stat;
    std::optional<std::size_t> argmax_coordinate;  // 1-based coordinate of max L1 influence
    double c0 = 0.0;
    std::optional<double> c0_argmax_alpha;
    std::optional<double> eq1_rhs;
    // ratio_stat >= c0 / m_stat; a finite-n observation, empty when either side is undefined.
    std::optional<bool> dominance_flag;
};

KklReport kkl_report(const BooleanFunction& f, double p, RhoForm form);

}  // namespace pbias
