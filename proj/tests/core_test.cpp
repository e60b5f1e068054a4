#include <doctest.h>

#include <random>

#include "pbias/core.hpp"
#include "pbias/error.hpp"
#include "pbias/families.hpp"
#include "support/brute_force.hpp"

using namespace pbias;
using doctest::Approx;

namespace {

BooleanFunction and2() { return make_tribes({2, 1}); }

BooleanFunction from_values(int n, std::vector<double> v) { return BooleanFunction(n, std::move(v)); }

ProductMeasure random_measure(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> bias(0.02, 0.98);
    std::vector<double> b(static_cast<std::size_t>(n));
    for (double& p : b) {
        p = bias(rng);
    }
    return ProductMeasure(std::move(b));
}

}  // namespace

TEST_SUITE("core") {
    TEST_CASE("boolean function construction enforces the table invariants") {
        CHECK_THROWS_AS(BooleanFunction(2, {1.0, 2.0, 3.0}), DimensionMismatch);
        CHECK_THROWS_AS(BooleanFunction(1, {1.0, std::nan("")}), DomainError);
        CHECK_THROWS_AS(BooleanFunction(1, {1.0, INFINITY}), DomainError);
        CHECK_THROWS_AS(BooleanFunction::constant(25, 0.0), CapacityError);
        CHECK_THROWS_AS(BooleanFunction::constant(0, 0.0), DomainError);
        CHECK(make_dictator(2, 1).is_boolean());
        CHECK_FALSE(make_dictator(2, 1).scaled(3.0).is_boolean());
    }

    TEST_CASE("product measure rejects degenerate biases") {
        CHECK_THROWS_AS(ProductMeasure({0.0, 0.5}), DomainError);
        CHECK_THROWS_AS(ProductMeasure({0.5, 1.0}), DomainError);
        CHECK_THROWS_AS(ProductMeasure::uniform(3, -0.1), DomainError);
        const ProductMeasure mu({0.3, 0.7});
        CHECK_FALSE(mu.is_uniform());
        CHECK_THROWS_AS(mu.lambda(), DomainError);
        CHECK(ProductMeasure::uniform(4, 0.9).lambda() == Approx(0.1));
        CHECK(mu.sigma(1) == Approx(2.0 * std::sqrt(0.21)));
    }

    TEST_CASE("point_mass examples") {
        CHECK(ProductMeasure::uniform(1, 0.5).point_mass(1) == 0.5);
        CHECK(ProductMeasure::uniform(2, 0.9).point_mass(0b11) == Approx(0.81).epsilon(1e-15));
        // x = (-1, +1) has only bit 1 set.
        CHECK(ProductMeasure({0.3, 0.7}).point_mass(0b10) == Approx(0.49).epsilon(1e-15));
        CHECK_THROWS_AS(ProductMeasure::uniform(2, 0.5).point_mass(4), DomainError);
    }

    TEST_CASE("point masses sum to one") {
        std::mt19937_64 rng(11);
        for (int n = 1; n <= 12; ++n) {
            const ProductMeasure mu = random_measure(n, rng);
            double total = 0.0;
            for (PointIndex x = 0; x < (PointIndex{1} << n); ++x) {
                total += mu.point_mass(x);
            }
            CHECK(std::fabs(total - 1.0) <= 1e-12);
        }
    }

    TEST_CASE("expectation examples") {
        const auto uniform = ProductMeasure::uniform(3, 0.5);
        CHECK(expectation(BooleanFunction::constant(3, 0.1), ProductMeasure({0.3, 0.6, 0.9})) == 0.1);
        CHECK(expectation(make_dictator(3, 1), uniform) == 0.0);
        CHECK(expectation(make_dictator(3, 1), ProductMeasure::uniform(3, 0.9)) == Approx(0.8).epsilon(1e-15));
        CHECK_THROWS_AS(expectation(make_dictator(2, 1), uniform), DimensionMismatch);
    }

    TEST_CASE("expectation agrees with direct summation on random inputs") {
        std::mt19937_64 rng(12);
        for (int n = 1; n <= 14; ++n) {
            const ProductMeasure mu = random_measure(n, rng);
            const BooleanFunction f = testing::gaussian_function(n, rng);
            CHECK(expectation(f, mu) == Approx(testing::brute_mean(f, mu.biases())).epsilon(1e-12));
        }
    }

    TEST_CASE("lp_norm examples and errors") {
        std::mt19937_64 rng(13);
        const BooleanFunction s = testing::sign_function(5, rng);
        for (double q : {1.0, 1.5, 2.0, 3.0, 8.0}) {
            CHECK(lp_norm(s, random_measure(5, rng), q) == Approx(1.0).epsilon(1e-14));
        }
        const auto half = ProductMeasure::uniform(1, 0.5);
        CHECK(lp_norm(make_dictator(1, 1).scaled(2.0), half, 2.0) == Approx(2.0));
        CHECK(lp_norm(from_values(1, {0.0, 2.0}), half, 1.0) == Approx(1.0));
        CHECK(lp_norm_pow(from_values(1, {0.0, 2.0}), half, 2.0) == Approx(2.0));
        CHECK(lp_norm(from_values(1, {-3.0, 2.0}), half, kInfinity) == 3.0);
        CHECK_THROWS_AS(lp_norm(s, ProductMeasure::uniform(5, 0.5), 0.5), DomainError);
    }

    TEST_CASE("lp_norm is nondecreasing in q") {
        std::mt19937_64 rng(14);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + trial % 8;
            const ProductMeasure mu = random_measure(n, rng);
            const BooleanFunction f = testing::gaussian_function(n, rng);
            double prev = 0.0;
            for (double q : {1.0, 1.5, 2.0, 4.0, 8.0}) {
                const double norm = lp_norm(f, mu, q);
                CHECK(norm >= prev * (1.0 - 1e-14));
                prev = norm;
            }
        }
    }

    TEST_CASE("variance examples") {
        const auto half = ProductMeasure::uniform(4, 0.5);
        CHECK(variance(BooleanFunction::constant(4, 0.3), ProductMeasure::uniform(4, 0.37)) == 0.0);
        CHECK(variance(make_dictator(4, 2), half) == Approx(1.0));
        CHECK(variance(make_tribes({2, 2}), half) == Approx(63.0 / 64.0).epsilon(1e-15));
        std::mt19937_64 rng(15);
        const BooleanFunction f = testing::gaussian_function(6, rng);
        const ProductMeasure mu = random_measure(6, rng);
        CHECK(variance(f, mu) == Approx(testing::brute_variance(f, mu.biases())).epsilon(1e-12));
    }

    TEST_CASE("restrict_tau examples") {
        const BooleanFunction d2 = make_dictator(3, 2);
        CHECK(restrict_tau(d2, 1, Sign::Plus) == d2);
        CHECK(restrict_tau(make_dictator(2, 1), 1, Sign::Plus) == BooleanFunction::constant(2, 1.0));
        CHECK(restrict_tau(and2(), 1, Sign::Minus) == BooleanFunction::constant(2, -1.0));
        CHECK_THROWS_AS(restrict_tau(d2, 4, Sign::Plus), DomainError);
        CHECK_THROWS_AS(restrict_tau(d2, 0, Sign::Plus), DomainError);
    }

    TEST_CASE("restriction output does not depend on the fixed coordinate") {
        std::mt19937_64 rng(16);
        const BooleanFunction f = testing::gaussian_function(5, rng);
        for (int i = 1; i <= 5; ++i) {
            const BooleanFunction r = restrict_tau(f, i, Sign::Minus);
            const PointIndex bit = coordinate_bit(i);
            for (PointIndex x = 0; x < f.size(); ++x) {
                CHECK(r[x] == f[x & ~bit]);
                CHECK(r[x] == r[x ^ bit]);
            }
        }
    }

    TEST_CASE("discrete_derivative examples") {
        CHECK(discrete_derivative(BooleanFunction::constant(2, 4.0), 2) == BooleanFunction::constant(2, 0.0));
        CHECK(discrete_derivative(make_dictator(2, 1), 1) == BooleanFunction::constant(2, 2.0));
        CHECK(discrete_derivative(make_parity(2, 0b11), 1) == make_dictator(2, 2).scaled(2.0));
        CHECK_THROWS_AS(discrete_derivative(make_dictator(2, 1), 3), DomainError);
    }

    TEST_CASE("discrete_derivative vanishes exactly when f ignores the coordinate") {
        std::mt19937_64 rng(17);
        const BooleanFunction f = restrict_tau(testing::gaussian_function(4, rng), 3, Sign::Plus);
        CHECK(discrete_derivative(f, 3) == BooleanFunction::constant(4, 0.0));
        CHECK_FALSE(discrete_derivative(f, 1) == BooleanFunction::constant(4, 0.0));
    }

    TEST_CASE("conditional_expectation examples") {
        const BooleanFunction d2 = make_dictator(2, 2);
        CHECK(conditional_expectation(d2, ProductMeasure::uniform(2, 0.3), 1) == d2);
        CHECK(conditional_expectation(make_dictator(2, 1), ProductMeasure::uniform(2, 0.5), 1) ==
              BooleanFunction::constant(2, 0.0));
        const BooleanFunction e = conditional_expectation(make_dictator(2, 1), ProductMeasure::uniform(2, 0.9), 1);
        for (double v : e.values()) {
            CHECK(v == Approx(0.8).epsilon(1e-15));
        }
    }

    TEST_CASE("conditional_expectation is idempotent exactly") {
        std::mt19937_64 rng(18);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + trial % 9;
            const ProductMeasure mu = random_measure(n, rng);
            const BooleanFunction f = testing::gaussian_function(n, rng);
            const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            const BooleanFunction once = conditional_expectation(f, mu, i);
            CHECK(conditional_expectation(once, mu, i) == once);
        }
    }

    TEST_CASE("lq_influence examples") {
        const auto half = ProductMeasure::uniform(2, 0.5);
        CHECK(lq_influence(make_dictator(2, 2), half, 1, 1.0) == 0.0);
        CHECK(lq_influence(make_dictator(2, 1), half, 1, 1.0) == 1.0);
        CHECK(lq_influence(make_dictator(2, 1), half, 1, 2.0) == 1.0);
        CHECK(lq_influence(and2(), half, 1, 1.0) == 0.5);
        CHECK_THROWS_AS(lq_influence(and2(), half, 3, 1.0), DomainError);
        CHECK_THROWS_AS(lq_influence(and2(), half, 1, 0.9), DomainError);
    }

    TEST_CASE("lq_influence matches the literal definition") {
        std::mt19937_64 rng(19);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + trial % 10;
            const ProductMeasure mu = random_measure(n, rng);
            const BooleanFunction f = testing::gaussian_function(n, rng);
            for (int i = 1; i <= n; ++i) {
                for (double q : {1.0, 1.5, 2.0, 3.0}) {
                    CHECK(lq_influence(f, mu, i, q) == Approx(testing::brute_influence(f, mu.biases(), i, q)).epsilon(1e-10));
                }
            }
        }
    }

    TEST_CASE("factorization identity ||f - E_i f||_1 = 2 p_i (1 - p_i) E|Delta_i f|") {
        std::mt19937_64 rng(20);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + trial % 10;
            const ProductMeasure mu = random_measure(n, rng);
            const BooleanFunction f = testing::gaussian_function(n, rng);
            for (int i = 1; i <= n; ++i) {
                const double p = mu.bias(i);
                const double lhs = testing::brute_influence(f, mu.biases(), i, 1.0);
                const double rhs = 2.0 * p * (1.0 - p) * testing::brute_derivative_l1(f, mu.biases(), i);
                CHECK(std::fabs(lhs - rhs) <= 1e-10);
                CHECK(std::fabs(lq_influence(f, mu, i, 1.0) - rhs) <= 1e-10);
                CHECK(derivative_l1(f, mu, i) == Approx(testing::brute_derivative_l1(f, mu.biases(), i)).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("L1 and L2 influences coincide for boolean functions at p = 1/2") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + trial % 10;
            const BooleanFunction f = testing::sign_function(n, rng);
            const auto half = ProductMeasure::uniform(n, 0.5);
            for (int i = 1; i <= n; ++i) {
                CHECK(lq_influence(f, half, i, 1.0) == lq_influence(f, half, i, 2.0));
            }
        }
    }
}
