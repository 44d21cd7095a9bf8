#pragma once

#include <cmath>

#include "ortho/errors.hpp"

namespace ortho {

// Tolerance on |p|^2 - 1 when classifying Klein points as interior/ideal/ultraideal.
inline constexpr double kClassEps = 1e-10;

// Tolerance for sign and clamp guards on inner products inside the kernel.
inline constexpr double kKernelEps = 1e-12;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
};

// Point of Minkowski space R^{1,3} with inner product -x0*y0 + x1*y1 + x2*y2 + x3*y3.
// Carrier for H^3 points (inner = -1, x0 > 0), de Sitter plane normals (inner = +1)
// and light-like horosphere data (inner = 0, x0 > 0). Curvature -1 throughout.
struct LorentzVec {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

enum class PointClass { Interior, Ideal, Ultraideal };

double inner(const LorentzVec& u, const LorentzVec& v);

// Sign of 1 - |p|^2 with tolerance kClassEps decides the class.
PointClass classify_klein(const Vec3& p);

// acosh in log1p form; accurate for arguments just above 1 and tolerant of
// arguments within kKernelEps below 1 (returns 0 there).
double stable_acosh(double x);

// Distance from a point of H^3 to the geodesic plane of a unit space-like normal:
// sinh(l) = -<u,v>. Requires u on the plane's non-positive side.
double dist_point_plane(const LorentzVec& u, const LorentzVec& v);

// Signed distance from the horosphere of a light-like u to the geodesic plane of v:
// e^l / 2 = -<u,v>. Positive iff horosphere and plane are disjoint. Rescaling the
// light-like lift by lambda shifts the result by log(lambda).
double dist_horo_plane(const LorentzVec& u, const LorentzVec& v);

// Dihedral angle between intersecting geodesic planes: cos(theta) = -<u,v>.
double dihedral_angle(const LorentzVec& u, const LorentzVec& v);

// Distance between ultraparallel geodesic planes: cosh(l) = -<u,v>.
double dist_plane_plane(const LorentzVec& u, const LorentzVec& v);

// Distance between two points of H^3: cosh(l) = -<u,v>.
double dist_point_point(const LorentzVec& u, const LorentzVec& v);

// Radial projection to the affine chart x0 = 1 (Klein coordinates).
Vec3 klein_project(const LorentzVec& v);

// Inverse of the projection: (1,p)/sqrt(|1-|p|^2|) normalized to H^3 (interior)
// or to the de Sitter sphere (ultraideal); ideal points stay unscaled as (1,p).
LorentzVec klein_lift(const Vec3& p, PointClass cls);

} // namespace ortho
