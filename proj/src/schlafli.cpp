#include "ortho/schlafli.hpp"

#include <cmath>

namespace ortho {

namespace {

void validate_rtheta(double r, double theta) {
    validate(OrthoschemeParams{2.0, r, theta});
}

bool r_ideal(double r) { return std::fabs(r - 1.0) <= kClassEps; }

// E = (1 - r^2) h^2 + r^2, the square of the common normalizer of the
// non-Lambert formulas. Positive for 0 < r <= 1 and any h; for r > 1 it
// vanishes at the Lambert threshold, where roundoff-level negatives clamp to
// an exact 0 (F needs the boundary identity) and anything beyond the
// kClassEps band is a regime violation.
double e_of(double r, double h) {
    const double e = (1.0 - r * r) * h * h + r * r;
    if (e >= 0.0) return e;
    if (h <= lambert_threshold(r) + kClassEps) return 0.0;
    throw regime_error("(1 - r^2) h^2 + r^2 < 0: h is in the Lambert range");
}

struct Pieces {
    double l03, l01, t12, t23;
};

Pieces nonlambert_pieces(double h, double r, double theta, double scale) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double hh1 = (h - 1.0) * (h + 1.0);
    Pieces out{};
    if (r_ideal(r)) {
        const double d = h * h * s * s + c * c;
        out.l03 = std::log(2.0 / std::sqrt(hh1)) + std::log(scale);
        out.l01 = std::log(2.0 * s) + std::log(scale);
        out.t12 = -s * c / d;
        out.t23 = s * c / d;
        return out;
    }
    const double rc = r * c;
    const double d = (1.0 - rc * rc) * h * h + rc * rc;
    double e = e_of(r, h);
    if (r > 1.0) {
        // The derivative pieces stay finite through the ideal-vertex boundary
        // band by flooring E at its h = b - kClassEps value, the nearest
        // regular parameter on the smaller-h side.
        const double b = lambert_threshold(r);
        e = std::max(e, 2.0 * (r * r - 1.0) * b * kClassEps);
    }
    const double root_e = std::sqrt(e);
    const double ab = std::sqrt(std::fabs((r - 1.0) * (r + 1.0)));
    out.l03 = std::log((root_e + 1.0) / (ab * std::sqrt(hh1)));
    out.l01 = r < 1.0 ? stable_acosh(std::sqrt(1.0 - rc * rc) / ab)
                      : std::asinh(std::sqrt(1.0 - rc * rc) / ab);
    out.t12 = -r * r * s * c / (d * root_e);
    out.t23 = r * std::sqrt(1.0 - rc * rc) * c / d;
    return out;
}

Pieces lambert_pieces(double h, double r, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double rc = r * c;
    const double d = (1.0 - rc * rc) * h * h + rc * rc;
    // Floored at the h = b + kClassEps value so roundoff just above the
    // threshold cannot spike the derivative.
    const double b = lambert_threshold(r);
    const double s2 = std::max((r * r - 1.0) * h * h - r * r,
                               2.0 * (r * r - 1.0) * b * kClassEps);
    Pieces out{};
    out.l03 = std::log((h * s + std::sqrt(s2) * c) / std::sqrt(d));
    out.l01 = std::asinh(std::sqrt(1.0 - rc * rc) / std::sqrt((r - 1.0) * (r + 1.0)));
    out.t12 = h / (((h - 1.0) * (h + 1.0)) * std::sqrt(s2));
    out.t23 = r * std::sqrt(1.0 - rc * rc) * c / d;
    return out;
}

Pieces pieces_for(const OrthoschemeParams& p, CombinatorialType t, double scale) {
    if (t == CombinatorialType::LambertCube) return lambert_pieces(p.h, p.r, p.theta);
    return nonlambert_pieces(p.h, p.r, p.theta, scale);
}

CombinatorialType require_above_one(const OrthoschemeParams& p) {
    const CombinatorialType t = classify(p);
    if (t == CombinatorialType::OrdinaryOrthoscheme)
        throw regime_error("analytic derivative defined for h > 1; use the volume oracle");
    return t;
}

} // namespace

double dtheta12_dh(const OrthoschemeParams& p) {
    validate(p);
    return pieces_for(p, require_above_one(p), 1.0).t12;
}

double dtheta23_dh(const OrthoschemeParams& p) {
    validate(p);
    return pieces_for(p, require_above_one(p), 1.0).t23;
}

double aux_C(double r, double theta) {
    validate_rtheta(r, theta);
    const double l01 = edge_l01({2.0, r, theta}).length;
    const double c = std::cos(theta);
    return l01 * std::sqrt(1.0 - r * r * c * c) / (r * std::sin(theta));
}

double aux_F(double r, double theta, double h) {
    validate_rtheta(r, theta);
    if (!(h > 1.0)) throw regime_error("F is defined for h > 1");
    const double e = e_of(r, h);
    const double root_e = std::sqrt(e);
    // Split log form keeps the h -> 1 divergence accurate.
    return std::log(root_e + 1.0) - 0.5 * std::log((h - 1.0) * (h + 1.0)) -
           aux_C(r, theta) * root_e;
}

double aux_G(double r, double theta, double h) {
    validate_rtheta(r, theta);
    return aux_C(r, theta) * (1.0 - r * r) * ((h - 1.0) * (h + 1.0)) + 1.0;
}

double aux_F_prime(double r, double theta, double h) {
    validate_rtheta(r, theta);
    if (!(h > 1.0)) throw regime_error("F' is defined for h > 1");
    const double e = e_of(r, h);
    if (e == 0.0) throw regime_error("F' undefined at the Lambert threshold");
    return -h * aux_G(r, theta, h) / (((h - 1.0) * (h + 1.0)) * std::sqrt(e));
}

double root_equation(double r, double theta, double h) {
    double target = 0.0;
    if (!r_ideal(r))
        target = 0.5 * std::log(std::fabs((r - 1.0) * (r + 1.0)));
    return aux_F(r, theta, h) - target;
}

DerivativeReport dV_dh(const OrthoschemeParams& p, double horosphere_scale) {
    validate(p);
    if (!(horosphere_scale > 0.0)) throw domain_error("horosphere scale must be positive");
    const CombinatorialType t = require_above_one(p);
    const Pieces pc = pieces_for(p, t, horosphere_scale);
    DerivativeReport rep;
    rep.h = p.h;
    rep.regime = t;
    rep.l03 = pc.l03;
    rep.l01 = pc.l01;
    rep.dtheta12_dh = pc.t12;
    rep.dtheta23_dh = pc.t23;
    rep.dV_dh = -0.5 * (pc.l03 * pc.t12 + pc.l01 * pc.t23);
    return rep;
}

double dV_dh_factored(const OrthoschemeParams& p) {
    validate(p);
    const CombinatorialType t = require_above_one(p);
    if (t == CombinatorialType::LambertCube)
        throw regime_error("factored dV/dh form only exists off the Lambert range");
    const Pieces pc = pieces_for(p, t, 1.0);
    return 0.5 * (-pc.t12) * root_equation(p.r, p.theta, p.h);
}

namespace detail {

double dV_dh_forced(double h, double r, double theta, bool lambert) {
    const Pieces pc = lambert ? lambert_pieces(h, r, theta)
                              : nonlambert_pieces(h, r, theta, 1.0);
    return -0.5 * (pc.l03 * pc.t12 + pc.l01 * pc.t23);
}

} // namespace detail

} // namespace ortho
