#include "ortho/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ortho {

namespace {

// Signed distance from the horosphere of a light-like lift to a point, plane
// or second horosphere; the same e^l/2 = -<u,v> convention covers all three.
Edge horo_edge(const LorentzVec& ideal, const LorentzVec& other) {
    const double ip = inner(ideal, other);
    if (ip >= 0.0) throw regime_error("improper lift pairing at an ideal vertex");
    return {std::log(-2.0 * ip), EdgeKind::HoroSigned};
}

Edge edge_between(const LorentzVec& li, PointClass ci, const LorentzVec& lj, PointClass cj) {
    if (ci == PointClass::Ideal) return horo_edge(li, lj);
    if (cj == PointClass::Ideal) return horo_edge(lj, li);
    if (ci == PointClass::Interior && cj == PointClass::Interior)
        return {dist_point_point(li, lj), EdgeKind::PointPoint};
    if (ci == PointClass::Interior)
        return {dist_point_plane(li, lj), EdgeKind::PointPlane};
    if (cj == PointClass::Interior)
        return {dist_point_plane(lj, li), EdgeKind::PointPlane};
    return {dist_plane_plane(li, lj), EdgeKind::PlanePlane};
}

double clamped_acos(double x) {
    if (std::fabs(x) > 1.0 + kKernelEps)
        throw regime_error("arccos argument outside [-1, 1]");
    return std::acos(std::clamp(x, -1.0, 1.0));
}

} // namespace

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::PointPoint: return "PointPoint";
        case EdgeKind::PointPlane: return "PointPlane";
        case EdgeKind::HoroSigned: return "HoroSigned";
        case EdgeKind::PlanePlane: return "PlanePlane";
        case EdgeKind::PolarPolarIntersection: return "PolarPolarIntersection";
    }
    return "?";
}

MetricData metric_data(const OrthoschemeGeometry& g) {
    MetricData m;
    m.l01 = edge_between(g.lift[0], g.vclass[0], g.lift[1], g.vclass[1]);
    m.l02 = edge_between(g.lift[0], g.vclass[0], g.lift[2], g.vclass[2]);
    m.l12 = edge_between(g.lift[1], g.vclass[1], g.lift[2], g.vclass[2]);
    m.l13 = edge_between(g.lift[1], g.vclass[1], g.lift[3], g.vclass[3]);
    m.l23 = edge_between(g.lift[2], g.vclass[2], g.lift[3], g.vclass[3]);

    // Lambert cube: both principal vertices ultraideal with intersecting polar
    // planes. The (0,3) slot then carries the polar planes' common edge and
    // theta12 the angle between those planes.
    const bool both_ultra = g.vclass[0] == PointClass::Ultraideal &&
                            g.vclass[3] == PointClass::Ultraideal;
    const bool lambert = both_ultra && -inner(g.lift[0], g.lift[3]) < 1.0;
    if (lambert) {
        m.l03 = {dist_plane_plane(g.pole[1], g.pole[2]), EdgeKind::PolarPolarIntersection};
        m.theta12 = dihedral_angle(g.lift[0], g.lift[3]);
    } else {
        m.l03 = edge_between(g.lift[0], g.vclass[0], g.lift[3], g.vclass[3]);
        m.theta12 = dihedral_angle(g.pole[1], g.pole[2]);
    }

    m.theta01 = dihedral_angle(g.pole[0], g.pole[1]);
    m.theta02 = dihedral_angle(g.pole[0], g.pole[2]);
    m.theta03 = dihedral_angle(g.pole[0], g.pole[3]);
    m.theta13 = dihedral_angle(g.pole[1], g.pole[3]);
    m.theta23 = dihedral_angle(g.pole[2], g.pole[3]);
    return m;
}

Edge edge_l03(const OrthoschemeParams& p, double horosphere_scale) {
    validate(p);
    if (!(horosphere_scale > 0.0)) throw domain_error("horosphere scale must be positive");
    const CombinatorialType t = classify(p);
    if (t == CombinatorialType::OrdinaryOrthoscheme)
        throw regime_error("closed-form l03 requires h > 1; evaluate the lifts directly below");

    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double hh1 = (p.h - 1.0) * (p.h + 1.0);

    switch (t) {
        case CombinatorialType::SimpleFrustum: {
            const double e = (1.0 - p.r * p.r) * p.h * p.h + p.r * p.r;
            return {std::log((std::sqrt(e) + 1.0) /
                             (std::sqrt((1.0 - p.r) * (1.0 + p.r)) * std::sqrt(hh1))),
                    EdgeKind::PointPlane};
        }
        case CombinatorialType::SimpleFrustumIdealV0:
            return {std::log(2.0 / std::sqrt(hh1)) + std::log(horosphere_scale),
                    EdgeKind::HoroSigned};
        case CombinatorialType::DoubleFrustum:
        case CombinatorialType::DoubleFrustumIdealVertex: {
            const double e = std::max(0.0, (1.0 - p.r * p.r) * p.h * p.h + p.r * p.r);
            return {std::log((std::sqrt(e) + 1.0) /
                             (std::sqrt((p.r - 1.0) * (p.r + 1.0)) * std::sqrt(hh1))),
                    EdgeKind::PlanePlane};
        }
        case CombinatorialType::LambertCube: {
            const double s2 = (p.r * p.r - 1.0) * p.h * p.h - p.r * p.r;
            if (s2 < 0.0)
                throw regime_error("Lambert l03 form requires (r^2-1) h^2 - r^2 >= 0");
            const double d = (1.0 - p.r * p.r * c * c) * p.h * p.h + p.r * p.r * c * c;
            return {std::log((p.h * s + std::sqrt(s2) * c) / std::sqrt(d)),
                    EdgeKind::PolarPolarIntersection};
        }
        default:
            break;
    }
    throw regime_error("unreachable l03 regime");
}

Edge edge_l01(const OrthoschemeParams& p, double horosphere_scale) {
    validate(p);
    if (!(horosphere_scale > 0.0)) throw domain_error("horosphere scale must be positive");
    const double c = std::cos(p.theta);
    const double q = std::sqrt(1.0 - p.r * p.r * c * c);
    if (std::fabs(p.r - 1.0) <= kClassEps)
        return {std::log(2.0 * std::sin(p.theta)) + std::log(horosphere_scale),
                EdgeKind::HoroSigned};
    if (p.r < 1.0)
        return {stable_acosh(q / std::sqrt((1.0 - p.r) * (1.0 + p.r))), EdgeKind::PointPoint};
    return {std::asinh(q / std::sqrt((p.r - 1.0) * (p.r + 1.0))), EdgeKind::PointPlane};
}

DihedralAngles angles(const OrthoschemeParams& p) {
    validate(p);
    const double s = std::sin(p.theta);
    const double c = std::cos(p.theta);
    const double rc = p.r * c;
    const double d = (1.0 - rc * rc) * p.h * p.h + rc * rc;
    const double n = std::sqrt(d);

    DihedralAngles a;
    a.theta01 = p.theta;
    a.theta02 = 0.5 * std::numbers::pi;
    a.theta03 = 0.5 * std::numbers::pi;
    a.theta13 = 0.5 * std::numbers::pi;
    a.theta23 = clamped_acos(rc / n);
    if (classify(p) == CombinatorialType::LambertCube) {
        a.theta12 = clamped_acos(1.0 / (std::sqrt((p.r - 1.0) * (p.r + 1.0)) *
                                        std::sqrt((p.h - 1.0) * (p.h + 1.0))));
    } else {
        a.theta12 = clamped_acos(p.h * s / n);
    }
    return a;
}

} // namespace ortho
