#include "pbias/hyper.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "pbias/core.hpp"
#include "pbias/error.hpp"
#include "pbias/fourier.hpp"

namespace pbias {

namespace {

void check_q(double q) {
    if (!(q >= 2.0)) {
        throw DomainError("q must be >= 2, got " + std::to_string(q));
    }
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 0.5)) {
        throw DomainError("lambda must lie in (0, 1/2], got " + std::to_string(lambda));
    }
}

// ln sinh(x) for x > 0.
double log_sinh(double x) {
    if (x < 1.0) {
        return std::log(std::sinh(x));
    }
    return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

double log_odds_gap(double lambda) { return std::log((1.0 - lambda) / lambda); }

double uniform_lambda(const ProductMeasure& mu) {
    if (!mu.is_uniform()) {
        throw DomainError("hypercontractivity checks require a uniform (p-biased) measure");
    }
    return mu.lambda();
}

}  // namespace

std::string_view to_string(RhoForm form) {
    switch (form) {
        case RhoForm::PowerLaw:
            return "i";
        case RhoForm::LatalaOleszkiewicz:
            return "ii";
        case RhoForm::SqrtOdds:
            return "iii";
    }
    return "?";
}

RhoForm parse_rho_form(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "i" || s == "1" || s == "powerlaw" || s == "power-law") {
        return RhoForm::PowerLaw;
    }
    if (s == "ii" || s == "2" || s == "latalaoleszkiewicz" || s == "latala-oleszkiewicz") {
        return RhoForm::LatalaOleszkiewicz;
    }
    if (s == "iii" || s == "3" || s == "sqrtodds" || s == "sqrt-odds") {
        return RhoForm::SqrtOdds;
    }
    throw DomainError("unknown rho form '" + std::string(text) + "' (expected i, ii or iii)");
}

double log_rho_sq(RhoForm form, double q, double lambda) {
    check_q(q);
    check_lambda(lambda);
    switch (form) {
        case RhoForm::PowerLaw:
            // 2 (1/2 - 1/q) ln(lambda)
            return (1.0 - 2.0 / q) * std::log(lambda);
        case RhoForm::LatalaOleszkiewicz: {
            const double t = log_odds_gap(lambda);
            if (std::fabs(t) < kOddsLimitThreshold) {
                return 0.0;
            }
            if (std::isinf(q)) {
                // (q-1) sinh(t/q) -> t
                return std::log(t) - log_sinh(t);
            }
            return std::log(q - 1.0) + log_sinh(t / q) - log_sinh((1.0 - 1.0 / q) * t);
        }
        case RhoForm::SqrtOdds:
            return std::log(lambda / (1.0 - lambda));
    }
    throw DomainError("invalid rho form");
}

double rho(RhoForm form, double q, double lambda) {
    if (form == RhoForm::SqrtOdds) {
        check_q(q);
        check_lambda(lambda);
        return std::sqrt(lambda / (1.0 - lambda));
    }
    if (form == RhoForm::LatalaOleszkiewicz && q == 2.0) {
        check_lambda(lambda);
        return 1.0;
    }
    return std::exp(0.5 * log_rho_sq(form, q, lambda));
}

double gamma(RhoForm form, double q, double lambda) {
    const double r = rho(form, q, lambda);
    if (std::isinf(q)) {
        return 0.0;
    }
    return r / std::sqrt(q - 1.0);
}

double rho1(RhoForm form, double delta, double lambda) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw DomainError("delta must lie in (0, 1], got " + std::to_string(delta));
    }
    return rho(form, 1.0 / (delta * delta) + 1.0, lambda);
}

double rho2(RhoForm form, double alpha, double lambda) {
    if (!(alpha > 0.0)) {
        throw DomainError("alpha must be > 0, got " + std::to_string(alpha));
    }
    return rho(form, std::exp(alpha) + 1.0, lambda);
}

double log_rho2_sq(RhoForm form, double alpha, double lambda) {
    if (!(alpha > 0.0)) {
        throw DomainError("alpha must be > 0, got " + std::to_string(alpha));
    }
    if (form == RhoForm::PowerLaw) {
        // 1 - 2/(e^alpha + 1) = tanh(alpha/2), without the cancellation near alpha = 0.
        check_lambda(lambda);
        return std::tanh(alpha / 2.0) * std::log(lambda);
    }
    return log_rho_sq(form, std::exp(alpha) + 1.0, lambda);
}

double check_theorem2(const BooleanFunction& f, const ProductMeasure& mu, double q, RhoForm form) {
    check_same_dimension(f.n(), mu.n());
    const double lambda = uniform_lambda(mu);
    check_q(q);
    const double lhs_bound = lp_norm(f, mu, 2.0);
    const FourierExpansion e = transform(f, mu);
    if (std::isinf(q)) {
        // T_0 f is the constant E f.
        return lhs_bound - std::fabs(e[0]);
    }
    const BooleanFunction smoothed = inverse(noise_operator(e, gamma(form, q, lambda)));
    return lhs_bound - lp_norm(smoothed, mu, q);
}

double check_corollary(const BooleanFunction& f, const ProductMeasure& mu, double delta, RhoForm form) {
    check_same_dimension(f.n(), mu.n());
    const double lambda = uniform_lambda(mu);
    const double smoothing = rho1(form, delta, lambda) * delta;
    const FourierExpansion e = transform(f, mu);
    return lp_norm(f, mu, 1.0 + delta * delta) - std::sqrt(smoothed_l2_norm_sq(e, smoothing));
}

std::vector<RhoComparisonRow> rho_comparison(std::span<const double> q_grid, std::span<const double> lambda_grid) {
    std::vector<RhoComparisonRow> rows;
    rows.reserve(q_grid.size() * lambda_grid.size());
    for (double q : q_grid) {
        for (double lambda : lambda_grid) {
            RhoComparisonRow row{q, lambda, {}};
            for (std::size_t k = 0; k < kAllRhoForms.size(); ++k) {
                row.rho[k] = rho(kAllRhoForms[k], q, lambda);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace pbias
