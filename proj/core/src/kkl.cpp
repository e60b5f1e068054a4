#include "pbias/kkl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbias/core.hpp"
#include "pbias/detail/golden_section.hpp"
#include "pbias/error.hpp"

namespace pbias {

namespace {

constexpr int kAlphaGridPoints = 4096;
constexpr double kAlphaGridFloor = 1e-6;
constexpr double kBoundaryTieTolerance = 1e-9;

}  // namespace

std::optional<double> m_statistic(const BooleanFunction& f, double p) {
    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
    std::optional<double> best;
    for (int i = 1; i <= f.n(); ++i) {
        const double l1 = lq_influence(f, mu, i, 1.0);
        if (l1 == 0.0) {
            continue;
        }
        const double ratio = lq_influence(f, mu, i, 2.0) / l1;
        if (!best || ratio > *best) {
            best = ratio;
        }
    }
    return best;
}

double c0_objective(RhoForm form, double alpha, double lambda) {
    const double denominator = alpha - log_rho2_sq(form, alpha, lambda);
    if (!(denominator > 0.0)) {
        throw Error("nonpositive C0 denominator " + std::to_string(denominator) + " at alpha = " +
                    std::to_string(alpha) + ": rho2 exceeds 1");
    }
    return std::tanh(alpha / 2.0) / denominator;
}

double c0_boundary_limit(RhoForm form, double lambda) {
    if (!(lambda > 0.0 && lambda <= 0.5)) {
        throw DomainError("lambda must lie in (0, 1/2], got " + std::to_string(lambda));
    }
    // tanh(alpha/2) ~ alpha/2, so the limit is 0 when rho(2) < 1 and
    // (1/2) / (1 + D) when rho(2) = 1, D = d/dalpha[-ln rho2(alpha)^2] at 0.
    const double t = std::log((1.0 - lambda) / lambda);
    const bool balanced = std::fabs(t) < kOddsLimitThreshold;
    switch (form) {
        case RhoForm::PowerLaw:
            // D = -ln(lambda) / 2
            return 1.0 / (2.0 - std::log(lambda));
        case RhoForm::LatalaOleszkiewicz:
            // D = (t/2) coth(t/2) - 1
            return balanced ? 0.5 : std::tanh(t / 2.0) / t;
        case RhoForm::SqrtOdds:
            return balanced ? 0.5 : 0.0;
    }
    throw DomainError("invalid rho form");
}

C0Result c0_constant(RhoForm form, double lambda, double alpha_max) {
    if (!(alpha_max > kAlphaGridFloor)) {
        throw DomainError("alpha_max must exceed " + std::to_string(kAlphaGridFloor));
    }
    const double boundary = c0_boundary_limit(form, lambda);
    const auto objective = [&](double alpha) { return c0_objective(form, alpha, lambda); };

    const double log_lo = std::log(kAlphaGridFloor);
    const double log_step = (std::log(alpha_max) - log_lo) / (kAlphaGridPoints - 1);
    const auto grid = [&](int k) { return k == kAlphaGridPoints - 1 ? alpha_max : std::exp(log_lo + k * log_step); };

    int best = 0;
    double best_value = objective(grid(0));
    for (int k = 1; k < kAlphaGridPoints; ++k) {
        const double v = objective(grid(k));
        if (v > best_value) {
            best = k;
            best_value = v;
        }
    }
    const double a = grid(std::max(best - 1, 0));
    const double b = grid(std::min(best + 1, kAlphaGridPoints - 1));
    detail::ScalarMaximum peak = detail::golden_section_maximize(objective, a, b);
    if (best_value > peak.value) {
        peak = {grid(best), best_value};
    }
    // Near the grid floor the objective carries ~1e-10 relative cancellation
    // noise, so a peak that close to the boundary value is the boundary.
    if (best == 0 || boundary >= peak.value * (1.0 - kBoundaryTieTolerance)) {
        return {boundary, std::nullopt};
    }
    return {peak.value, peak.argmax};
}

double kkl_ratio(const BooleanFunction& f, double p) {
    if (f.n() < 2) {
        throw DomainError("kkl ratio needs n >= 2 so that ln n > 0");
    }
    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
    const double var = variance(f, mu);
    if (!(var > 0.0)) {
        throw DomainError("kkl ratio is undefined for a constant function");
    }
    double max_influence = 0.0;
    for (int i = 1; i <= f.n(); ++i) {
        max_influence = std::max(max_influence, lq_influence(f, mu, i, 1.0));
    }
    const double n = f.n();
    return max_influence / (var * std::log(n) / n);
}

double eq1_rhs(double p, double sup_norm) {
    check_bias(p);
    if (!(sup_norm > 0.0) || std::isinf(sup_norm)) {
        throw DomainError("sup norm must be positive and finite, got " + std::to_string(sup_norm));
    }
    return 9.0 / 20.0 / sup_norm / (1.0 + std::fabs(std::log(p / (1.0 - p))));
}

KklReport kkl_report(const BooleanFunction& f, double p, RhoForm form) {
    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
    KklReport r;
    r.n = f.n();
    r.p = p;
    r.form = form;
    r.l1_influences.reserve(static_cast<std::size_t>(f.n()));
    r.l2_influences.reserve(static_cast<std::size_t>(f.n()));
    for (int i = 1; i <= f.n(); ++i) {
        r.l1_influences.push_back(lq_influence(f, mu, i, 1.0));
        r.l2_influences.push_back(lq_influence(f, mu, i, 2.0));
    }
    r.variance = variance(f, mu);

    std::optional<double> m;
    for (std::size_t k = 0; k < r.l1_influences.size(); ++k) {
        if (r.l1_influences[k] != 0.0) {
            const double ratio = r.l2_influences[k] / r.l1_influences[k];
            m = m ? std::max(*m, ratio) : ratio;
        }
    }
    r.m_stat = m;

    if (r.variance > 0.0 && f.n() >= 2) {
        std::size_t arg = 0;
        for (std::size_t k = 1; k < r.l1_influences.size(); ++k) {
            if (r.l1_influences[k] > r.l1_influences[arg]) {
                arg = k;
            }
        }
        const double n = f.n();
        r.ratio_stat = r.l1_influences[arg] / (r.variance * std::log(n) / n);
        r.argmax_coordinate = arg + 1;
    }

    const C0Result c0 = c0_constant(form, lambda_of(p));
    r.c0 = c0.c0;
    r.c0_argmax_alpha = c0.argmax_alpha;

    const double sup = sup_norm(f);
    if (sup > 0.0) {
        r.eq1_rhs = pbias::eq1_rhs(p, sup);
    }
    if (r.ratio_stat && r.m_stat) {
        r.dominance_flag = *r.ratio_stat >= r.c0 / *r.m_stat;
    }
    return r;
}

}  // namespace pbias
