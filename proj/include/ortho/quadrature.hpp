#pragma once

#include <cmath>
#include <utility>

namespace ortho {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // accumulated |K15 - G7| estimate
    long long evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 on [-1, 1]; nodes never touch the endpoints, so
// integrable endpoint singularities are safe to hand in.
inline constexpr double kGK15Node[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
inline constexpr double kGK15WK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
inline constexpr double kGK15WG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <class F>
void gk15(F& f, double a, double b, double& k15, double& err, long long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double acc_k = kGK15WK[7] * f0;
    double acc_g = kGK15WG[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Node[i];
        const double s = f(mid + dx) + f(mid - dx);
        acc_k += kGK15WK[i] * s;
        if (i % 2 == 1) acc_g += kGK15WG[i / 2] * s;
    }
    evals += 15;
    k15 = acc_k * half;
    err = std::fabs((acc_k - acc_g) * half);
}

template <class F>
void adapt(F& f, double a, double b, double tol, int depth, QuadratureResult& out) {
    double v, e;
    gk15(f, a, b, v, e, out.evaluations);
    if (e <= tol || depth <= 0 || !(b - a > 0.0)) {
        out.value += v;
        out.error += e;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1, out);
    adapt(f, m, b, 0.5 * tol, depth - 1, out);
}

} // namespace detail

// Adaptive bisection Gauss-Kronrod to an absolute tolerance.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    int max_depth = 48) {
    QuadratureResult out;
    if (!(b > a)) return out;
    detail::adapt(f, a, b, abs_tol, max_depth, out);
    return out;
}

} // namespace ortho
