#pragma once

#include <vector>

#include "ortho/errors.hpp"

namespace ortho {

// Two-dimensional complete orthoschemes in the Klein disc: right angle at
// P1 = (0,0), P0 = (r,0), P2 = (0,h). Note the labels differ from the 3D body:
// here the h-axis vertex is P2 and the right angle sits at P1.
struct Ortho2DParams {
    double h = 0.0;
    double r = 0.0;
};

enum class Shape2D {
    Triangle,
    IdealTriangle,
    Quadrilateral,
    RightAngledPentagon,
    PolarQuadrilateral,
};

const char* to_string(Shape2D s);

struct AreaReport {
    double area = 0.0;
    Shape2D shape = Shape2D::Triangle;
    std::vector<double> angles; // interior angles; area = (n-2) pi - sum
};

// Area by the angle-defect formula, angles from the 2D Lorentzian kernel.
AreaReport area(const Ortho2DParams& p);

struct MaxAreaReport {
    double h_lo = 0.0;
    double h_hi = 0.0;   // +infinity for the r = 1 plateau
    double value = 0.0;
    bool plateau = false;
};

// r < 1: unique maximizer h = 1 with area pi/2 - alpha0(1); r >= 1: plateau of
// value pi/2 over [1, r/sqrt(r^2-1)] (unbounded for r = 1).
MaxAreaReport max_area(double r);

namespace d2 {

// Minimal 3-coordinate Lorentz kernel for the disc model.
struct LVec {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0;
};

double inner(const LVec& u, const LVec& v);
LVec lift_point(double x, double y);   // interior or ultraideal, by |p| vs 1
double angle_between(const LVec& u, const LVec& v); // acos(-<u,v>), clamped

} // namespace d2

} // namespace ortho
