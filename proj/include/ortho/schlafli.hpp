#pragma once

#include "ortho/metrics.hpp"
#include "ortho/orthoscheme.hpp"

namespace ortho {

struct DerivativeReport {
    double h = 0.0;
    CombinatorialType regime = CombinatorialType::OrdinaryOrthoscheme;
    double dV_dh = 0.0;
    double l03 = 0.0, l01 = 0.0;
    double dtheta12_dh = 0.0, dtheta23_dh = 0.0;
};

// Derivatives of the non-right dihedral angles with respect to h; h > 1.
// Regime-dispatched: the Lambert regime uses the polar-plane angle for (1,2).
double dtheta12_dh(const OrthoschemeParams& p);
double dtheta23_dh(const OrthoschemeParams& p);

// C = l01 * sqrt(1 - r^2 cos^2 t) / (r sin t); positive on the valid domain.
double aux_C(double r, double theta);

// F(h) = log((sqrt(E) + 1) / sqrt(h^2 - 1)) - C sqrt(E) with E = (1-r^2) h^2 + r^2.
// Evaluated in split-log form so the h -> 1 divergence stays accurate.
double aux_F(double r, double theta, double h);

// G(h) = C (1 - r^2)(h^2 - 1) + 1; G(1) = 1 exactly.
double aux_G(double r, double theta, double h);

// F'(h) = -h G(h) / ((h^2 - 1) sqrt(E)).
double aux_F_prime(double r, double theta, double h);

// The factor of dV/dh whose root locates the maximizer:
// F(h) - (1/2) log(1 - r^2) for r < 1, F(h) for r = 1,
// F(h) - (1/2) log(r^2 - 1) for r > 1. Same sign as dV/dh off the Lambert range.
double root_equation(double r, double theta, double h);

// dV/dh = -1/2 (l03 * dtheta12/dh + l01 * dtheta23/dh), regime-correct
// components; h > 1 required. horosphere_scale feeds the r = 1 rescale hook
// and must leave the result unchanged.
DerivativeReport dV_dh(const OrthoschemeParams& p, double horosphere_scale = 1.0);

// Factored form 1/2 (-dtheta12/dh)(root_equation); non-Lambert regimes only.
double dV_dh_factored(const OrthoschemeParams& p);

namespace detail {
// Regime-forced evaluation used by the volume integrator so that quadrature
// nodes straddling the classification tolerance band never mis-dispatch.
double dV_dh_forced(double h, double r, double theta, bool lambert);
} // namespace detail

} // namespace ortho
