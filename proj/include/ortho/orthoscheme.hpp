#pragma once

#include <array>
#include <vector>

#include "ortho/lorentz.hpp"

namespace ortho {

// Family member R(h, r, theta): base right triangle with legs meeting at the
// origin, v0 = (r sin t, r cos t, 0), v1 = (0, r cos t, 0), v2 = 0, apex
// v3 = (0, 0, h). All lengths Euclidean in the Klein ball.
struct OrthoschemeParams {
    double h = 0.0;
    double r = 0.0;
    double theta = 0.0;
};

// Throws domain_error unless h > 0, r > 0, theta in (0, pi/2) and r cos(theta) < 1.
void validate(const OrthoschemeParams& p);

enum class CombinatorialType {
    OrdinaryOrthoscheme,
    SimpleFrustum,
    SimpleFrustumIdealV0,
    DoubleFrustum,
    DoubleFrustumIdealVertex,
    LambertCube,
};

const char* to_string(CombinatorialType t);

// h value where the family switches from double frustum to Lambert cube,
// r / sqrt(r^2 - 1); +infinity for r <= 1 (the family never switches).
double lambert_threshold(double r);

CombinatorialType classify(const OrthoschemeParams& p);

struct OrthoschemeGeometry {
    OrthoschemeParams params;
    std::array<Vec3, 4> vertex;        // Klein coordinates
    std::array<LorentzVec, 4> lift;    // proper inverse images; ideal lifts keep x0 = 1
    std::array<LorentzVec, 4> pole;    // unit face poles, face i opposite vertex i
    std::array<PointClass, 4> vclass;
    CombinatorialType type = CombinatorialType::OrdinaryOrthoscheme;
    bool ideal_apex = false;           // |h - 1| <= kClassEps
};

OrthoschemeGeometry build(const OrthoschemeParams& p);

// Proper lifts of the ultraideal vertices; each cuts with {x : <x, lift> <= 0}.
// Empty for ordinary orthoschemes.
std::vector<LorentzVec> truncation_halfspaces(const OrthoschemeGeometry& g);

} // namespace ortho
