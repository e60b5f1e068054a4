#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pbias {

inline constexpr int kMaxCoordinates = 24;

using PointIndex = std::uint32_t;
using SubsetMask = std::uint32_t;

enum class Sign { Minus, Plus };

// Bit (i-1) of a point index is set iff x_i = +1. Coordinates are numbered
// 1..n throughout the public API.
constexpr PointIndex coordinate_bit(int i) { return PointIndex{1} << (i - 1); }

constexpr bool is_plus(PointIndex x, int i) { return (x & coordinate_bit(i)) != 0; }

// Dense table of 2^n finite reals representing f: {-1,1}^n -> R.
class BooleanFunction {
public:
    BooleanFunction(int n, std::vector<double> values);

    static BooleanFunction constant(int n, double c);

    // Builds the table by evaluating gen(index) for every point index.
    template <class Generator>
    static BooleanFunction tabulate(int n, Generator&& gen) {
        check_coordinate_count(n);
        std::vector<double> values(std::size_t{1} << n);
        for (std::size_t k = 0; k < values.size(); ++k) {
            values[k] = gen(static_cast<PointIndex>(k));
        }
        return BooleanFunction(n, std::move(values));
    }

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](PointIndex x) const { return values_[x]; }

    BooleanFunction scaled(double c) const;

    // True when every value is exactly -1 or +1.
    bool is_boolean() const;
    bool is_constant() const;

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

    static void check_coordinate_count(int n);

private:
    int n_;
    std::vector<double> values_;
};

// Throws DomainError unless 1 <= i <= n.
void check_coordinate(int n, int i);

}  // namespace pbias
