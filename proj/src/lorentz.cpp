#include "ortho/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace ortho {

double inner(const LorentzVec& u, const LorentzVec& v) {
    return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

PointClass classify_klein(const Vec3& p) {
    const double d = 1.0 - p.norm2();
    if (std::fabs(d) <= kClassEps) return PointClass::Ideal;
    return d > 0.0 ? PointClass::Interior : PointClass::Ultraideal;
}

double stable_acosh(double x) {
    if (x < 1.0) {
        if (x > 1.0 - kKernelEps) return 0.0;
        throw regime_error("acosh argument below 1");
    }
    const double t = x - 1.0;
    return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double dist_point_plane(const LorentzVec& u, const LorentzVec& v) {
    const double ip = inner(u, v);
    if (ip > kKernelEps)
        throw regime_error("point lies outside the half-space of the plane (improper lift)");
    return std::asinh(std::max(0.0, -ip));
}

double dist_horo_plane(const LorentzVec& u, const LorentzVec& v) {
    const double ip = inner(u, v);
    if (ip >= 0.0)
        throw regime_error("horosphere center not inside the half-space of the plane");
    return std::log(-2.0 * ip);
}

double dihedral_angle(const LorentzVec& u, const LorentzVec& v) {
    const double ip = inner(u, v);
    if (ip < -1.0 - kKernelEps)
        throw regime_error("planes are ultraparallel; no dihedral angle");
    if (ip > 1.0 + kKernelEps)
        throw regime_error("planes intersect beyond the ball boundary");
    return std::acos(std::clamp(-ip, -1.0, 1.0));
}

double dist_plane_plane(const LorentzVec& u, const LorentzVec& v) {
    const double ip = inner(u, v);
    if (ip > -1.0 + kKernelEps)
        throw regime_error("planes intersect; no common perpendicular segment");
    return stable_acosh(-ip);
}

double dist_point_point(const LorentzVec& u, const LorentzVec& v) {
    return stable_acosh(std::max(1.0, -inner(u, v)));
}

Vec3 klein_project(const LorentzVec& v) {
    if (v.x0 == 0.0)
        throw domain_error("point at infinity of projective space (x0 = 0)");
    return {v.x1 / v.x0, v.x2 / v.x0, v.x3 / v.x0};
}

LorentzVec klein_lift(const Vec3& p, PointClass cls) {
    const double n2 = p.norm2();
    switch (cls) {
        case PointClass::Ideal:
            return {1.0, p.x, p.y, p.z};
        case PointClass::Interior: {
            if (n2 >= 1.0 - kClassEps)
                throw domain_error("interior lift requires |p| < 1");
            const double s = 1.0 / std::sqrt(1.0 - n2);
            return {s, s * p.x, s * p.y, s * p.z};
        }
        case PointClass::Ultraideal: {
            if (n2 <= 1.0 + kClassEps)
                throw domain_error("ultraideal lift requires |p| > 1");
            const double s = 1.0 / std::sqrt(n2 - 1.0);
            return {s, s * p.x, s * p.y, s * p.z};
        }
    }
    throw domain_error("unknown point class");
}

} // namespace ortho
