#pragma once

#include "ortho/orthoscheme.hpp"

namespace ortho {

struct MaximizerResult {
    double h_star = 0.0;
    CombinatorialType regime_at_max = CombinatorialType::OrdinaryOrthoscheme;
    double residual = 0.0;        // root_equation at h_star (one-sided limit at a boundary max)
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    bool boundary_max = false;    // maximum sits at h = r / sqrt(r^2 - 1)
};

// Unique volume-maximizing height on (1, +inf) for fixed (r, theta).
// r < 1: bisection of root_equation over (1 + d0, H) with H grown to a sign
// change. r = 1: closed form sqrt(1 + 1/sin^2 theta), residual-verified.
// r > 1: bisection over (1 + d, b - d); when the root equation is one-signed
// there the maximum is reported at the ideal-vertex boundary b itself.
MaximizerResult find_max(double r, double theta);

struct UniquenessReport {
    double scan_lo = 0.0;
    double scan_hi = 0.0;
    int sign_changes = 0;            // of dV/dh over the scanned non-Lambert grid
    bool boundary_sign_change = false; // r > 1: crossing sits at the Lambert threshold
    int total_changes = 0;           // grid changes plus the boundary one
    int g_sign_changes = 0;          // r > 1: sign changes of G on (1, b)
    bool ok = false;
};

// Counts sign changes of dV/dh over a grid_n-point grid on the non-Lambert
// range. For r > 1 a derivative still positive at the threshold counts as one
// boundary crossing (the Lambert side is strictly negative). ok means
// total_changes == 1 and, for r > 1, at most one root of G.
UniquenessReport verify_uniqueness(double r, double theta, int grid_n);

struct LambertDecreaseReport {
    double scan_lo = 0.0;
    double scan_hi = 0.0;
    int samples = 0;
    int violations = 0;
    double max_dv_dh = 0.0;
    bool ok = false;
};

// Samples dV/dh at log-spaced points of (b (1 + 1e-6), 1e3); all must be negative.
LambertDecreaseReport verify_lambert_decrease(double r, double theta, int samples);

namespace detail {
// Bracketed bisection of root_equation; callable for r = 1 as well, where
// find_max returns the closed form instead.
MaximizerResult bisect_root_equation(double r, double theta);
} // namespace detail

} // namespace ortho
