#include "ortho/ortho2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ortho/lorentz.hpp" // kClassEps, kKernelEps

namespace ortho {

namespace d2 {

double inner(const LVec& u, const LVec& v) {
    return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2;
}

LVec lift_point(double x, double y) {
    const double n2 = x * x + y * y;
    if (std::fabs(n2 - 1.0) <= kClassEps) return {1.0, x, y};
    const double s = 1.0 / std::sqrt(std::fabs(1.0 - n2));
    return {s, s * x, s * y};
}

double angle_between(const LVec& u, const LVec& v) {
    const double ip = inner(u, v);
    if (std::fabs(ip) > 1.0 + kKernelEps)
        throw regime_error("2D lines do not intersect in the disc");
    return std::acos(std::clamp(-ip, -1.0, 1.0));
}

} // namespace d2

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void validate2d(const Ortho2DParams& p) {
    if (!(std::isfinite(p.h) && std::isfinite(p.r)))
        throw domain_error("parameters must be finite");
    if (!(p.h > 0.0)) throw domain_error("h must be positive");
    if (!(p.r > 0.0)) throw domain_error("r must be positive");
}

AreaReport make_report(Shape2D shape, std::vector<double> angles) {
    AreaReport rep;
    rep.shape = shape;
    const double n = static_cast<double>(angles.size());
    double sum = 0.0;
    for (double a : angles) sum += a;
    rep.area = (n - 2.0) * std::numbers::pi - sum;
    rep.angles = std::move(angles);
    return rep;
}

} // namespace

const char* to_string(Shape2D s) {
    switch (s) {
        case Shape2D::Triangle: return "Triangle";
        case Shape2D::IdealTriangle: return "IdealTriangle";
        case Shape2D::Quadrilateral: return "Quadrilateral";
        case Shape2D::RightAngledPentagon: return "RightAngledPentagon";
        case Shape2D::PolarQuadrilateral: return "PolarQuadrilateral";
    }
    return "?";
}

AreaReport area(const Ortho2DParams& p) {
    validate2d(p);
    const double h = p.h;
    const double r = p.r;
    const bool r_ideal = std::fabs(r - 1.0) <= kClassEps;
    const bool h_ideal = std::fabs(h - 1.0) <= kClassEps;

    // Line normals: P0P1 is the x-axis, P1P2 the y-axis, P0P2 the hypotenuse
    // h x + r y = r h. The polygon sits on the non-positive side of each.
    const d2::LVec na{0.0, 0.0, -1.0};
    const d2::LVec nb{0.0, -1.0, 0.0};
    const double e = (1.0 - r * r) * h * h + r * r;
    const auto nc = [&]() -> d2::LVec {
        const double s = 1.0 / std::sqrt(e);
        return {s * r * h, s * h, s * r};
    };

    // Hyperbolic angles at P0 and P2, defined while those corners exist.
    const auto alpha0 = [&] { return d2::angle_between(na, nc()); };
    const auto alpha2 = [&] { return d2::angle_between(nb, nc()); };

    if (r_ideal) {
        if (h_ideal) return make_report(Shape2D::IdealTriangle, {0.0, kHalfPi, 0.0});
        if (h < 1.0) return make_report(Shape2D::IdealTriangle, {0.0, kHalfPi, alpha2()});
        return make_report(Shape2D::Quadrilateral, {0.0, kHalfPi, kHalfPi, kHalfPi});
    }
    if (r < 1.0) {
        if (h_ideal) return make_report(Shape2D::IdealTriangle, {alpha0(), kHalfPi, 0.0});
        if (h < 1.0) return make_report(Shape2D::Triangle, {alpha0(), kHalfPi, alpha2()});
        return make_report(Shape2D::Quadrilateral, {alpha0(), kHalfPi, kHalfPi, kHalfPi});
    }

    // r > 1: P0 is truncated by its polar line.
    const double b = r / std::sqrt((r - 1.0) * (r + 1.0));
    if (h_ideal)
        return make_report(Shape2D::Quadrilateral, {kHalfPi, kHalfPi, kHalfPi, 0.0});
    if (h < 1.0)
        return make_report(Shape2D::Quadrilateral, {kHalfPi, kHalfPi, kHalfPi, alpha2()});
    if (std::fabs(h - b) <= kClassEps)
        return make_report(Shape2D::PolarQuadrilateral, {kHalfPi, kHalfPi, kHalfPi, 0.0});
    if (h < b)
        return make_report(Shape2D::RightAngledPentagon,
                           {kHalfPi, kHalfPi, kHalfPi, kHalfPi, kHalfPi});
    // Both principal vertices truncated and their polar lines cross: the
    // angle between the polar lines is read off the ultraideal lifts.
    const double beta = d2::angle_between(d2::lift_point(r, 0.0), d2::lift_point(0.0, h));
    return make_report(Shape2D::PolarQuadrilateral, {kHalfPi, kHalfPi, kHalfPi, beta});
}

MaxAreaReport max_area(double r) {
    if (!(std::isfinite(r) && r > 0.0)) throw domain_error("r must be positive");
    MaxAreaReport rep;
    if (std::fabs(r - 1.0) <= kClassEps) {
        rep.h_lo = 1.0;
        rep.h_hi = std::numeric_limits<double>::infinity();
        rep.value = kHalfPi;
        rep.plateau = true;
        return rep;
    }
    if (r < 1.0) {
        rep.h_lo = rep.h_hi = 1.0;
        rep.value = area({1.0, r}).area; // pi/2 - alpha0(1)
        rep.plateau = false;
        return rep;
    }
    rep.h_lo = 1.0;
    rep.h_hi = r / std::sqrt((r - 1.0) * (r + 1.0));
    rep.value = kHalfPi;
    rep.plateau = true;
    return rep;
}

} // namespace ortho
