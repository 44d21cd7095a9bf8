#include "ortho/orthoscheme.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ortho {

void validate(const OrthoschemeParams& p) {
    if (!(std::isfinite(p.h) && std::isfinite(p.r) && std::isfinite(p.theta)))
        throw domain_error("parameters must be finite");
    if (!(p.h > 0.0)) throw domain_error("height h must be positive");
    if (!(p.r > 0.0)) throw domain_error("base length r must be positive");
    if (!(p.theta > 0.0 && p.theta < 0.5 * std::numbers::pi))
        throw domain_error("theta must lie in (0, pi/2)");
    if (!(p.r * std::cos(p.theta) < 1.0))
        throw domain_error("r cos(theta) must be < 1 so vertex v1 stays inside the ball");
}

const char* to_string(CombinatorialType t) {
    switch (t) {
        case CombinatorialType::OrdinaryOrthoscheme: return "OrdinaryOrthoscheme";
        case CombinatorialType::SimpleFrustum: return "SimpleFrustum";
        case CombinatorialType::SimpleFrustumIdealV0: return "SimpleFrustumIdealV0";
        case CombinatorialType::DoubleFrustum: return "DoubleFrustum";
        case CombinatorialType::DoubleFrustumIdealVertex: return "DoubleFrustumIdealVertex";
        case CombinatorialType::LambertCube: return "LambertCube";
    }
    return "?";
}

double lambert_threshold(double r) {
    if (r <= 1.0 + kClassEps) return std::numeric_limits<double>::infinity();
    return r / std::sqrt((r - 1.0) * (r + 1.0));
}

CombinatorialType classify(const OrthoschemeParams& p) {
    validate(p);
    if (p.h <= 1.0 || std::fabs(p.h - 1.0) <= kClassEps)
        return CombinatorialType::OrdinaryOrthoscheme;
    if (std::fabs(p.r - 1.0) <= kClassEps)
        return CombinatorialType::SimpleFrustumIdealV0;
    if (p.r < 1.0) return CombinatorialType::SimpleFrustum;
    const double b = lambert_threshold(p.r);
    if (std::fabs(p.h - b) <= kClassEps)
        return CombinatorialType::DoubleFrustumIdealVertex;
    return p.h < b ? CombinatorialType::DoubleFrustum : CombinatorialType::LambertCube;
}

OrthoschemeGeometry build(const OrthoschemeParams& p) {
    validate(p);
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double rc = p.r * c;

    OrthoschemeGeometry g;
    g.params = p;
    g.vertex = {Vec3{p.r * s, rc, 0.0}, Vec3{0.0, rc, 0.0}, Vec3{0.0, 0.0, 0.0},
                Vec3{0.0, 0.0, p.h}};

    const bool r_ideal = std::fabs(p.r - 1.0) <= kClassEps;
    const bool h_ideal = std::fabs(p.h - 1.0) <= kClassEps;
    g.ideal_apex = h_ideal;

    // Proper inverse images per the three r-cases; ideal lifts snap to x0 = 1
    // so they land exactly on the light cone.
    if (r_ideal) {
        g.lift[0] = {1.0, s, c, 0.0};
        g.vclass[0] = PointClass::Ideal;
    } else if (p.r < 1.0) {
        const double n = 1.0 / std::sqrt((1.0 - p.r) * (1.0 + p.r));
        g.lift[0] = {n, n * p.r * s, n * rc, 0.0};
        g.vclass[0] = PointClass::Interior;
    } else {
        const double n = 1.0 / std::sqrt((p.r - 1.0) * (p.r + 1.0));
        g.lift[0] = {n, n * p.r * s, n * rc, 0.0};
        g.vclass[0] = PointClass::Ultraideal;
    }

    const double n1 = 1.0 / std::sqrt(1.0 - rc * rc);
    g.lift[1] = {n1, 0.0, n1 * rc, 0.0};
    g.vclass[1] = PointClass::Interior;
    g.lift[2] = {1.0, 0.0, 0.0, 0.0};
    g.vclass[2] = PointClass::Interior;

    if (h_ideal) {
        g.lift[3] = {1.0, 0.0, 0.0, 1.0};
        g.vclass[3] = PointClass::Ideal;
    } else if (p.h < 1.0) {
        const double n = 1.0 / std::sqrt((1.0 - p.h) * (1.0 + p.h));
        g.lift[3] = {n, 0.0, 0.0, n * p.h};
        g.vclass[3] = PointClass::Interior;
    } else {
        const double n = 1.0 / std::sqrt((p.h - 1.0) * (p.h + 1.0));
        g.lift[3] = {n, 0.0, 0.0, n * p.h};
        g.vclass[3] = PointClass::Ultraideal;
    }

    // Face poles; the normalizer of pole 2 is positive because r cos(theta) < 1.
    const double d2 = (1.0 - rc * rc) * p.h * p.h + rc * rc;
    const double nw = 1.0 / std::sqrt(d2);
    g.pole[0] = {0.0, -1.0, 0.0, 0.0};
    g.pole[1] = {0.0, c, -s, 0.0};
    g.pole[2] = {nw * p.h * rc, 0.0, nw * p.h, nw * rc};
    g.pole[3] = {0.0, 0.0, 0.0, -1.0};

    g.type = classify(p);
    return g;
}

std::vector<LorentzVec> truncation_halfspaces(const OrthoschemeGeometry& g) {
    std::vector<LorentzVec> hs;
    if (g.vclass[0] == PointClass::Ultraideal) hs.push_back(g.lift[0]);
    if (g.vclass[3] == PointClass::Ultraideal) hs.push_back(g.lift[3]);
    return hs;
}

} // namespace ortho
