#pragma once

#include <cmath>

namespace pbias::detail {

struct ScalarMaximum {
    double argmax;
    double value;
};

// Golden-section search for the maximum of a unimodal function on [a, b].
template <class F>
ScalarMaximum golden_section_maximize(F&& f, double a, double b, double tolerance = 1e-12, int max_iterations = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iterations && (b - a) > tolerance * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

}  // namespace pbias::detail
