#include "pbias/families.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pbias/error.hpp"

namespace pbias {

namespace {

constexpr int kMaxClosedFormTribeSize = 50;

void check_closed_form(int tribe_size, double tribe_count) {
    if (tribe_size < 1 || tribe_size > kMaxClosedFormTribeSize) {
        throw DomainError("tribe size must lie in 1.." + std::to_string(kMaxClosedFormTribeSize) + ", got " +
                          std::to_string(tribe_size));
    }
    if (!(tribe_count >= 1.0) || std::isinf(tribe_count)) {
        throw DomainError("tribe count must be a finite number >= 1");
    }
}

// ln(1 - 2^-l), the log-probability that one tribe is not all +1.
double log_tribe_fails(int tribe_size) { return std::log1p(-std::ldexp(1.0, -tribe_size)); }

}  // namespace

BooleanFunction make_tribes(const TribesParams& params) {
    if (params.tribe_size < 1 || params.tribe_count < 1) {
        throw DomainError("tribe size and count must be >= 1");
    }
    if (params.n() > static_cast<std::uint64_t>(kMaxCoordinates)) {
        throw CapacityError("tribes with n = " + std::to_string(params.n()) + " exceeds the dense limit of " +
                            std::to_string(kMaxCoordinates));
    }
    const int n = static_cast<int>(params.n());
    const PointIndex tribe_mask = (PointIndex{1} << params.tribe_size) - 1;
    return BooleanFunction::tabulate(n, [&](PointIndex x) {
        for (std::uint64_t t = 0; t < params.tribe_count; ++t) {
            const PointIndex shifted = tribe_mask << (t * static_cast<std::uint64_t>(params.tribe_size));
            if ((x & shifted) == shifted) {
                return 1.0;
            }
        }
        return -1.0;
    });
}

BooleanFunction make_dictator(int n, int i) {
    BooleanFunction::check_coordinate_count(n);
    check_coordinate(n, i);
    return BooleanFunction::tabulate(n, [i](PointIndex x) { return is_plus(x, i) ? 1.0 : -1.0; });
}

BooleanFunction make_majority(int n) {
    BooleanFunction::check_coordinate_count(n);
    if (n % 2 == 0) {
        throw DomainError("majority needs an odd number of coordinates, got " + std::to_string(n));
    }
    return BooleanFunction::tabulate(n, [n](PointIndex x) { return 2 * std::popcount(x) > n ? 1.0 : -1.0; });
}

BooleanFunction make_parity(int n, SubsetMask mask) {
    BooleanFunction::check_coordinate_count(n);
    if (mask >= (SubsetMask{1} << n)) {
        throw DomainError("parity mask " + std::to_string(mask) + " has coordinates beyond n = " + std::to_string(n));
    }
    // x_i = -1 exactly where bit (i-1) is clear.
    return BooleanFunction::tabulate(n, [mask](PointIndex x) { return std::popcount(~x & mask) % 2 == 0 ? 1.0 : -1.0; });
}

BooleanFunction make_random(int n, std::uint64_t seed, RandomDistribution distribution) {
    BooleanFunction::check_coordinate_count(n);
    std::mt19937_64 rng(seed);
    std::vector<double> values(std::size_t{1} << n);
    switch (distribution) {
        case RandomDistribution::Gaussian: {
            std::normal_distribution<double> dist(0.0, 1.0);
            for (double& v : values) {
                v = dist(rng);
            }
            break;
        }
        case RandomDistribution::Sign: {
            std::bernoulli_distribution dist(0.5);
            for (double& v : values) {
                v = dist(rng) ? 1.0 : -1.0;
            }
            break;
        }
        case RandomDistribution::Uniform: {
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            for (double& v : values) {
                v = dist(rng);
            }
            break;
        }
    }
    return BooleanFunction(n, std::move(values));
}

double tribes_influence(int tribe_size, double tribe_count) {
    check_closed_form(tribe_size, tribe_count);
    return std::ldexp(std::exp((tribe_count - 1.0) * log_tribe_fails(tribe_size)), 1 - tribe_size);
}

double tribes_variance(int tribe_size, double tribe_count) {
    check_closed_form(tribe_size, tribe_count);
    const double log_all_fail = tribe_count * log_tribe_fails(tribe_size);
    return 4.0 * std::exp(log_all_fail) * -std::expm1(log_all_fail);
}

double tribes_ratio_limit(int k) {
    const double shift = std::ldexp(1.0, k);
    return 0.5 * shift * std::numbers::log2e / -std::expm1(-shift);
}

TribesRatio tribes_ratio(int m, int k) {
    if (m < 1 || m > kMaxClosedFormTribeSize) {
        throw DomainError("m must lie in 1.." + std::to_string(kMaxClosedFormTribeSize) + ", got " +
                          std::to_string(m));
    }
    if (m + k < 0) {
        throw DomainError("shifted tribes need 2^(m+k) >= 1 tribes");
    }
    const double tribe_count = std::ldexp(1.0, m + k);
    const double log2_n = std::log2(static_cast<double>(m)) + m + k;
    if (!(log2_n > 0.0)) {
        throw DomainError("shifted tribes need n = m 2^(m+k) >= 2");
    }
    TribesRatio r{};
    r.n = static_cast<double>(m) * tribe_count;
    r.influence = tribes_influence(m, tribe_count);
    r.variance = tribes_variance(m, tribe_count);
    // n * influence = m 2^(k+1) (1 - 2^-m)^(T-1), formed without the 2^(m+k) and 2^-(m-1) factors.
    const double n_times_influence =
        static_cast<double>(m) * std::ldexp(std::exp((tribe_count - 1.0) * log_tribe_fails(m)), k + 1);
    const double ln_n = log2_n * std::numbers::ln2;
    r.finite_m_ratio = n_times_influence / (r.variance * ln_n);
    r.corrected_ratio = r.finite_m_ratio * log2_n / m;
    r.limit = tribes_ratio_limit(k);
    return r;
}

}  // namespace pbias
