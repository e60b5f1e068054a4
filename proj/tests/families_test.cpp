#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pbias/core.hpp"
#include "pbias/error.hpp"
#include "pbias/families.hpp"
#include "pbias/fourier.hpp"
#include "pbias/oracle.hpp"
#include "pbias/threshold.hpp"
#include "support/brute_force.hpp"

using namespace pbias;
using doctest::Approx;

namespace {

// Counts assignments of the other coordinates for which coordinate i is pivotal.
double brute_pivotal(const BooleanFunction& f, int i) {
    const PointIndex bit = coordinate_bit(i);
    std::uint64_t count = 0;
    for (PointIndex x = 0; x < f.size(); ++x) {
        if ((x & bit) == 0 && f[x] != f[x | bit]) {
            ++count;
        }
    }
    return static_cast<double>(count) / static_cast<double>(f.size() / 2);
}

}  // namespace

TEST_SUITE("families") {
    TEST_CASE("make_tribes examples") {
        CHECK(make_tribes({1, 1}) == make_dictator(1, 1));
        const BooleanFunction t = make_tribes({2, 2});
        int trues = 0;
        for (double v : t.values()) {
            trues += v == 1.0 ? 1 : 0;
        }
        CHECK(trues == 7);
        CHECK(t.is_boolean());
        CHECK(is_monotone(t));
        CHECK(*is_transitive_symmetric(t));
        CHECK(t[0b0011] == 1.0);
        CHECK(t[0b1100] == 1.0);
        CHECK(t[0b0101] == -1.0);
        CHECK_THROWS_AS(make_tribes({5, 5}), CapacityError);
        CHECK_THROWS_AS(make_tribes({0, 2}), DomainError);
    }

    TEST_CASE("instantiated tribes are monotone and transitive-symmetric") {
        for (int l = 1; l <= 4; ++l) {
            for (std::uint64_t t = 1; l * t <= 8; ++t) {
                const BooleanFunction f = make_tribes({l, t});
                CHECK(is_monotone(f));
                CHECK(*is_transitive_symmetric(f));
            }
        }
    }

    TEST_CASE("simple family examples") {
        const BooleanFunction d = make_dictator(2, 1);
        CHECK(d[0] == -1.0);
        CHECK(d[1] == 1.0);
        CHECK(d[2] == -1.0);
        CHECK(d[3] == 1.0);
        const BooleanFunction maj = make_majority(3);
        const auto half = ProductMeasure::uniform(3, 0.5);
        for (int i = 1; i <= 3; ++i) {
            CHECK(lq_influence(maj, half, i, 1.0) == 0.5);
        }
        const FourierExpansion par = transform(make_parity(2, 0b11), ProductMeasure::uniform(2, 0.5));
        CHECK(par[0] == 0.0);
        CHECK(par[1] == 0.0);
        CHECK(par[2] == 0.0);
        CHECK(par[3] == 1.0);
        CHECK(make_parity(3, 0) == BooleanFunction::constant(3, 1.0));
        CHECK_THROWS_AS(make_dictator(2, 3), DomainError);
        CHECK_THROWS_AS(make_majority(4), DomainError);
        CHECK_THROWS_AS(make_parity(2, 0b100), DomainError);
        CHECK_THROWS_AS(make_dictator(25, 1), CapacityError);
    }

    TEST_CASE("make_random is seed-deterministic") {
        for (RandomDistribution dist : {RandomDistribution::Gaussian, RandomDistribution::Sign, RandomDistribution::Uniform}) {
            CHECK(make_random(6, 17, dist) == make_random(6, 17, dist));
            CHECK_FALSE(make_random(6, 17, dist) == make_random(6, 18, dist));
        }
        CHECK(make_random(5, 3, RandomDistribution::Sign).is_boolean());
        for (double v : make_random(8, 4, RandomDistribution::Uniform).values()) {
            CHECK(v >= -1.0);
            CHECK(v < 1.0);
        }
    }

    TEST_CASE("tribes closed-form examples") {
        CHECK(tribes_influence(2, 2) == Approx(0.375).epsilon(1e-15));
        CHECK(tribes_influence(1, 1) == 1.0);
        CHECK(tribes_influence(3, 2) == Approx(7.0 / 32.0).epsilon(1e-15));
        CHECK(tribes_variance(2, 2) == Approx(63.0 / 64.0).epsilon(1e-15));
        CHECK(tribes_variance(1, 1) == 1.0);
        CHECK(tribes_variance(2, 3) == Approx(999.0 / 1024.0).epsilon(1e-15));
    }

    TEST_CASE("tribes closed forms match enumeration") {
        for (int l = 1; l <= 16; ++l) {
            for (std::uint64_t t = 1; l * t <= 16; ++t) {
                const BooleanFunction f = make_tribes({l, t});
                const auto half = ProductMeasure::uniform(f.n(), 0.5);
                const double infl = tribes_influence(l, static_cast<double>(t));
                for (int i = 1; i <= f.n(); ++i) {
                    CHECK(std::fabs(infl - brute_pivotal(f, i)) <= 1e-14);
                }
                CHECK(std::fabs(tribes_variance(l, static_cast<double>(t)) - variance(f, half)) <= 1e-14);
                CHECK(std::fabs(tribes_variance(l, static_cast<double>(t)) - testing::brute_variance(f, half.biases())) <=
                      1e-14);
            }
        }
    }

    TEST_CASE("tribes ratio limit examples") {
        const double log2e = std::numbers::log2e;
        CHECK(tribes_ratio_limit(0) == Approx(0.5 * log2e / (1.0 - std::exp(-1.0))).epsilon(1e-15));
        CHECK(tribes_ratio_limit(0) == Approx(1.14116).epsilon(1e-5));
        CHECK(std::fabs(tribes_ratio_limit(-20) - 0.5 * log2e) <= 1e-6);
        CHECK(tribes_ratio_limit(-20) > 0.5 * log2e);
        for (int k = -30; k < 5; ++k) {
            CHECK(tribes_ratio_limit(k) < tribes_ratio_limit(k + 1));
        }
    }

    TEST_CASE("tribes_ratio converges to the limit") {
        const TribesRatio r = tribes_ratio(40, 0);
        CHECK(std::fabs(r.corrected_ratio - r.limit) <= 1e-6);
        CHECK(r.n == Approx(40.0 * std::ldexp(1.0, 40)));
        CHECK(r.corrected_ratio == Approx(r.finite_m_ratio * (40.0 + std::log2(40.0)) / 40.0).epsilon(1e-15));
        double previous = std::fabs(tribes_ratio(10, 0).corrected_ratio - tribes_ratio(10, 0).limit);
        for (int m = 11; m <= 40; ++m) {
            const TribesRatio rm = tribes_ratio(m, 0);
            const double dev = std::fabs(rm.corrected_ratio - rm.limit);
            CHECK(dev < previous);
            previous = dev;
        }
        const TribesRatio small = tribes_ratio(2, 0);
        CHECK(small.influence == Approx(tribes_influence(2, 4.0)).epsilon(1e-15));
        CHECK(small.variance == Approx(tribes_variance(2, 4.0)).epsilon(1e-15));
        CHECK_THROWS_AS(tribes_ratio(3, -4), DomainError);
        CHECK_THROWS_AS(tribes_ratio(51, 0), DomainError);
    }

    TEST_CASE("tribes_ratio matches instantiated functions") {
        // m = 2, k = 0: 4 tribes of size 2 on 8 coordinates.
        const BooleanFunction f = make_tribes({2, 4});
        const auto half = ProductMeasure::uniform(8, 0.5);
        const double var = variance(f, half);
        const double expected = lq_influence(f, half, 1, 1.0) / (var * std::log(8.0) / 8.0);
        CHECK(tribes_ratio(2, 0).finite_m_ratio == Approx(expected).epsilon(1e-13));
    }
}
