#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "pbias/boolean_function.hpp"

namespace pbias::detail {

inline constexpr int kBlockBits = 12;

// Marginalises coordinate 1, then 2, ... out of a buffer of 2^k values in
// place. Each level maps the pair (a at x_i = -1, b at x_i = +1) to
// a + p_i (b - a), which is exact when a == b; the reduction is a fixed
// binary tree.
inline double fold_in_place(std::span<double> buf, std::span<const double> biases) {
    std::size_t size = buf.size();
    for (double p : biases) {
        size /= 2;
        for (std::size_t j = 0; j < size; ++j) {
            buf[j] = buf[2 * j] + p * (buf[2 * j + 1] - buf[2 * j]);
        }
    }
    return buf[0];
}

// Returns sum_x g(x) mu(x) for the product measure with the given biases.
// Biases are only required to lie in [0,1] here. Evaluation order is fixed,
// so results are bit-reproducible; memory is O(2^12 + 2^(n-12)).
template <class G>
double integrate(std::span<const double> biases, G&& g) {
    const int n = static_cast<int>(biases.size());
    if (n == 0) {
        return g(PointIndex{0});
    }
    const int low = std::min(n, kBlockBits);
    const std::size_t block = std::size_t{1} << low;
    const std::size_t blocks = std::size_t{1} << (n - low);
    const double p0 = biases[0];

    std::vector<double> partial(blocks);
    std::vector<double> buf(block / 2);
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto base = static_cast<PointIndex>(b << low);
        for (std::size_t j = 0; j < block / 2; ++j) {
            const auto x = static_cast<PointIndex>(base + 2 * j);
            const double a = g(x);
            buf[j] = a + p0 * (g(x + 1) - a);
        }
        partial[b] = fold_in_place(buf, biases.subspan(1, low - 1));
    }
    return fold_in_place(partial, biases.subspan(low));
}

// Pairwise (cascade) summation with a fixed split, for coefficient reductions.
template <class G>
double pairwise_sum(std::size_t first, std::size_t last, G&& term) {
    constexpr std::size_t kLeaf = 64;
    if (last - first <= kLeaf) {
        double s = 0.0;
        for (std::size_t k = first; k < last; ++k) {
            s += term(k);
        }
        return s;
    }
    const std::size_t mid = first + (last - first) / 2;
    return pairwise_sum(first, mid, term) + pairwise_sum(mid, last, term);
}

}  // namespace pbias::detail
