#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "pbias/boolean_function.hpp"
#include "pbias/measure.hpp"

namespace pbias {

// The three admissible smoothing parameters rho(q, lambda) for q >= 2 and
// lambda = min{p, 1-p} in (0, 1/2]:
//   PowerLaw            (i)   lambda^(1/2 - 1/q)
//   LatalaOleszkiewicz  (ii)  sqrt(q-1) sqrt(sinh(t/q) / sinh((1 - 1/q) t)),  t = ln((1-lambda)/lambda)
//   SqrtOdds            (iii) sqrt(lambda / (1-lambda))
enum class RhoForm { PowerLaw, LatalaOleszkiewicz, SqrtOdds };

inline constexpr std::array<RhoForm, 3> kAllRhoForms{RhoForm::PowerLaw, RhoForm::LatalaOleszkiewicz,
                                                     RhoForm::SqrtOdds};

// "i", "ii", "iii".
std::string_view to_string(RhoForm form);

// Accepts the roman numeral or the enumerator name (case-insensitive).
RhoForm parse_rho_form(std::string_view text);

// Form (ii) switches to its analytic limit 1 when |t| drops below this.
inline constexpr double kOddsLimitThreshold = 1e-8;

// q may be +infinity, in which case the q -> infinity limit is returned.
double rho(RhoForm form, double q, double lambda);

// ln(rho(q)^2), evaluated in the log domain so large q and small lambda stay finite.
double log_rho_sq(RhoForm form, double q, double lambda);

// gamma = rho(q) / sqrt(q - 1); zero at q = infinity.
double gamma(RhoForm form, double q, double lambda);

// rho1(delta) = rho(1/delta^2 + 1), delta in (0,1].
double rho1(RhoForm form, double delta, double lambda);

// rho2(alpha) = rho(e^alpha + 1), alpha > 0.
double rho2(RhoForm form, double alpha, double lambda);
double log_rho2_sq(RhoForm form, double alpha, double lambda);

// ||f||_2 - ||T_gamma f||_q under the uniform measure mu. Nonnegative by the
// hypercontractive inequality. q = +infinity uses gamma = 0, i.e. |E f|.
// The margin is signed so near-violations stay visible.
double check_theorem2(const BooleanFunction& f, const ProductMeasure& mu, double q, RhoForm form);

// ||f||_{1+delta^2} - ||T_{rho1(delta) delta} f||_2 under the uniform measure mu.
double check_corollary(const BooleanFunction& f, const ProductMeasure& mu, double delta, RhoForm form);

struct RhoComparisonRow {
    double q;
    double lambda;
    std::array<double, 3> rho;  // indexed like kAllRhoForms
};

// Side-by-side values of the three forms; no ordering among them is implied.
std::vector<RhoComparisonRow> rho_comparison(std::span<const double> q_grid, std::span<const double> lambda_grid);

}  // namespace pbias
