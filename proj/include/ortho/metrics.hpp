#pragma once

#include "ortho/orthoscheme.hpp"

namespace ortho {

enum class EdgeKind {
    PointPoint,             // both endpoints interior
    PointPlane,             // interior endpoint against the other's polar plane
    HoroSigned,             // signed distance from a horosphere at an ideal endpoint
    PlanePlane,             // both polar planes, mutually disjoint
    PolarPolarIntersection, // Lambert cube (0,3) slot: the polar planes' common edge
};

const char* to_string(EdgeKind k);

struct Edge {
    double length = 0.0;
    EdgeKind kind = EdgeKind::PointPoint;
};

struct MetricData {
    Edge l01, l02, l03, l12, l13, l23;
    double theta01 = 0.0, theta02 = 0.0, theta03 = 0.0;
    double theta12 = 0.0, theta13 = 0.0, theta23 = 0.0;
};

// Full edge/angle set evaluated directly on the lifts and poles; valid for any
// h > 0. In the Lambert regime the (0,3) length is the distance between the
// faces opposite v1 and v2, and theta12 the angle between the polar planes of
// v0 and v3. Ideal lifts enter with their stored x0 = 1 scaling.
MetricData metric_data(const OrthoschemeGeometry& g);

// Closed forms, h > 1 only. horosphere_scale rescales the ideal lift of v0
// (r = 1 case) by lambda, shifting the horosphere-based lengths by log(lambda).
Edge edge_l03(const OrthoschemeParams& p, double horosphere_scale = 1.0);

// h-independent; defined for every regime.
Edge edge_l01(const OrthoschemeParams& p, double horosphere_scale = 1.0);

struct DihedralAngles {
    double theta01 = 0.0, theta02 = 0.0, theta03 = 0.0;
    double theta12 = 0.0, theta13 = 0.0, theta23 = 0.0;
};

// Closed-form angles; any h > 0 (the displayed forms coincide with direct pole
// evaluation). theta02 = theta03 = theta13 = pi/2, theta01 = theta.
DihedralAngles angles(const OrthoschemeParams& p);

} // namespace ortho
