#include "ortho/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ortho/schlafli.hpp"

namespace ortho {

namespace {

constexpr double kEdgeOffset = 1e-9;   // initial offset from singular endpoints
constexpr double kHTol = 1e-12;        // convergence criterion on h itself

void validate_rtheta(double r, double theta) {
    validate(OrthoschemeParams{2.0, r, theta});
}

double dvdh_at(double r, double theta, double h) {
    return dV_dh({h, r, theta}).dV_dh;
}

// Bracketed bisection on [lo, hi] with f(lo) > 0 > f(hi).
double bisect(double lo, double hi, double r, double theta, int& iterations) {
    iterations = 0;
    while (hi - lo > kHTol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // ulp floor
        (root_equation(r, theta, mid) > 0.0 ? lo : hi) = mid;
        ++iterations;
    }
    return 0.5 * (lo + hi);
}

} // namespace

namespace detail {

MaximizerResult bisect_root_equation(double r, double theta) {
    validate_rtheta(r, theta);
    MaximizerResult res;
    const bool beyond_one = r > 1.0 + kClassEps;

    double lo = 1.0 + kEdgeOffset;
    double hi;
    if (beyond_one) {
        const double b = lambert_threshold(r);
        const double d = std::min(kEdgeOffset, 0.25 * (b - 1.0));
        lo = 1.0 + d;
        hi = b - d;
        if (root_equation(r, theta, hi) > 0.0) {
            // One-signed on the open interval: the maximum sits at the
            // ideal-vertex boundary itself, where the root equation's
            // one-sided limit is exactly zero.
            res.h_star = b;
            res.boundary_max = true;
            res.regime_at_max = CombinatorialType::DoubleFrustumIdealVertex;
            res.residual = 0.0;
            res.bracket_lo = lo;
            res.bracket_hi = b + d;
            res.iterations = 0;
            return res;
        }
    } else {
        hi = 2.0;
        while (root_equation(r, theta, hi) > 0.0) {
            hi *= 2.0;
            if (hi > 1e15)
                throw regime_error("maximizer bracket failure: no sign change of the "
                                   "root equation below h = 1e15 (bug signal)");
        }
    }
    if (!(root_equation(r, theta, lo) > 0.0))
        throw regime_error("maximizer bracket failure: root equation not positive at "
                           "the lower bracket endpoint (bug signal)");

    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.h_star = bisect(lo, hi, r, theta, res.iterations);
    res.residual = root_equation(r, theta, res.h_star);
    res.regime_at_max = classify({res.h_star, r, theta});
    return res;
}

} // namespace detail

MaximizerResult find_max(double r, double theta) {
    validate_rtheta(r, theta);
    if (std::fabs(r - 1.0) <= kClassEps) {
        // Closed form: -1/2 log(h^2 - 1) + log 2 - l01 = 0 with l01 = log(2 sin theta).
        const double s = std::sin(theta);
        MaximizerResult res;
        res.h_star = std::sqrt(1.0 + 1.0 / (s * s));
        res.residual = root_equation(r, theta, res.h_star);
        res.regime_at_max = classify({res.h_star, r, theta});
        res.bracket_lo = 1.0 + kEdgeOffset;
        double hi = 2.0 * res.h_star;
        while (root_equation(r, theta, hi) > 0.0) hi *= 2.0;
        res.bracket_hi = hi;
        res.iterations = 0;
        return res;
    }
    return detail::bisect_root_equation(r, theta);
}

UniquenessReport verify_uniqueness(double r, double theta, int grid_n) {
    validate_rtheta(r, theta);
    if (grid_n < 2) throw domain_error("uniqueness grid needs at least 2 points");

    UniquenessReport rep;
    const bool beyond_one = r > 1.0 + kClassEps;
    rep.scan_lo = 1.0 + 1e-6;
    if (beyond_one) {
        const double b = lambert_threshold(r);
        rep.scan_hi = b - std::min(1e-9, 1e-3 * (b - 1.0));
    } else {
        rep.scan_hi = 4.0;
        while (dvdh_at(r, theta, rep.scan_hi) > 0.0) rep.scan_hi *= 2.0;
    }

    const double step = (rep.scan_hi - rep.scan_lo) / (grid_n - 1);
    int last_sign = 0;
    for (int i = 0; i < grid_n; ++i) {
        const double h = rep.scan_lo + i * step;
        const int sign = dvdh_at(r, theta, h) >= 0.0 ? 1 : -1;
        if (i > 0 && sign != last_sign) ++rep.sign_changes;
        last_sign = sign;
    }
    rep.total_changes = rep.sign_changes;
    if (beyond_one && last_sign > 0) {
        // Still increasing at the threshold: the unique crossing is the
        // boundary itself, with the Lambert side strictly decreasing.
        rep.boundary_sign_change = true;
        ++rep.total_changes;
    }

    if (beyond_one) {
        int g_last = 0;
        for (int i = 0; i < grid_n; ++i) {
            const double h = rep.scan_lo + i * step;
            const int sign = aux_G(r, theta, h) >= 0.0 ? 1 : -1;
            if (i > 0 && sign != g_last) ++rep.g_sign_changes;
            g_last = sign;
        }
    }

    rep.ok = rep.total_changes == 1 && rep.g_sign_changes <= 1;
    return rep;
}

LambertDecreaseReport verify_lambert_decrease(double r, double theta, int samples) {
    validate_rtheta(r, theta);
    if (!(r > 1.0 + kClassEps))
        throw domain_error("the Lambert range requires r > 1");
    if (samples < 2) throw domain_error("need at least 2 samples");

    LambertDecreaseReport rep;
    rep.samples = samples;
    rep.scan_lo = lambert_threshold(r) * (1.0 + 1e-6);
    rep.scan_hi = 1e3;
    rep.max_dv_dh = -std::numeric_limits<double>::infinity();
    const double llo = std::log(rep.scan_lo);
    const double lhi = std::log(rep.scan_hi);
    for (int i = 0; i < samples; ++i) {
        const double h = std::exp(llo + (lhi - llo) * i / (samples - 1));
        const double d = dvdh_at(r, theta, h);
        rep.max_dv_dh = std::max(rep.max_dv_dh, d);
        if (d >= 0.0) ++rep.violations;
    }
    rep.ok = rep.violations == 0;
    return rep;
}

} // namespace ortho
