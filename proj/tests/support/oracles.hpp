#pragma once

// Test-side oracles: independent of the library paths they check.

#include <cmath>
#include <random>

#include "ortho/orthoscheme.hpp"
#include "ortho/random.hpp"

namespace testsup {

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * ortho::uniform01(g);
}

// Random valid (h, r, theta) with r cos(theta) < 1, away from the domain edges.
inline ortho::OrthoschemeParams random_params(std::mt19937_64& g, double h_lo,
                                              double h_hi, double r_lo, double r_hi) {
    for (;;) {
        const double r = uniform(g, r_lo, r_hi);
        const double theta = uniform(g, 0.05, 1.52);
        if (!(r * std::cos(theta) < 0.995)) continue;
        return {uniform(g, h_lo, h_hi), r, theta};
    }
}

// Central difference, delta = 1e-6 unless stated otherwise.
template <class F>
double central_diff(F&& f, double x, double delta = 1e-6) {
    return (f(x + delta) - f(x - delta)) / (2.0 * delta);
}

// Five-point stencil; error O(delta^4 f^(5)).
template <class F>
double five_point_diff(F&& f, double x, double delta = 1e-3) {
    return (-f(x + 2.0 * delta) + 8.0 * f(x + delta) - 8.0 * f(x - delta) +
            f(x - 2.0 * delta)) /
           (12.0 * delta);
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::fabs(want), 1e-30);
    return std::fabs(got - want) / scale;
}

struct Mc2DResult {
    double value = 0.0;
    double std_error = 0.0;
};

// Monte-Carlo area of the truncated 2D orthoscheme (P0 = (r,0), P1 = 0,
// P2 = (0,h)) with the disc-model density (1 - |x|^2)^(-3/2). Membership uses
// the raw affine half-plane data, nothing from the library's area path.
inline Mc2DResult mc_area_2d(double h, double r, long long samples,
                             std::uint64_t seed) {
    const double bx = std::min(1.0, r);
    const double by = std::min(1.0, h);
    std::mt19937_64 rng(ortho::splitmix64(seed));
    double s1 = 0.0, s2 = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const double x = ortho::uniform01(rng) * bx;
        const double y = ortho::uniform01(rng) * by;
        const double n2 = x * x + y * y;
        if (n2 >= 1.0) continue;
        if (h * x + r * y > r * h) continue;          // hypotenuse side
        if (r > 1.0 && x > 1.0 / r) continue;         // polar line of P0
        if (h > 1.0 && y > 1.0 / h) continue;         // polar line of P2
        const double w = 1.0 / std::pow(1.0 - n2, 1.5);
        s1 += w;
        s2 += w * w;
    }
    const double n = static_cast<double>(samples);
    const double mean = s1 / n;
    const double var = std::max(0.0, s2 / n - mean * mean);
    return {bx * by * mean, bx * by * std::sqrt(var / n)};
}

} // namespace testsup
