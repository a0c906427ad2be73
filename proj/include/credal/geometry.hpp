#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace credal::geom {

inline constexpr double kGeomTol = 1e-12;

struct Vec2 {
    double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Convex polygon as a counterclockwise vertex list. A point (1 vertex) and
/// a segment (2 vertices) are allowed as degenerate cases.
using Polygon = std::vector<Vec2>;

/// Half-plane {p : a*x + b*y + c >= 0}.
struct HalfPlane {
    double a = 0.0, b = 0.0, c = 0.0;
    double eval(Vec2 p) const { return a * p.x + b * p.y + c; }
};

double polygon_area(const Polygon& poly);

/// Centroid of the polygon interior (area measure). For degenerate inputs the
/// vertex mean (point) or segment midpoint is returned.
Vec2 polygon_centroid(const Polygon& poly);

/// Sutherland-Hodgman clip of a convex polygon against one half-plane.
Polygon clip(const Polygon& poly, const HalfPlane& h);

/// Intersection of two convex polygons (clip `a` by each edge of `b`).
Polygon clip_convex(const Polygon& a, const Polygon& b);

/// Monotone-chain convex hull; output counterclockwise, collinear points
/// dropped. Degenerate results (point, segment) keep their extreme vertices.
Polygon convex_hull(std::vector<Vec2> points);

/// Area of a union of convex polygons by inclusion-exclusion over pairwise
/// and higher-order intersections. Intended for small collections (<= 8).
double union_area(const std::vector<Polygon>& polys);

/// Remove consecutive duplicate vertices (within kGeomTol) including the
/// wrap-around pair.
Polygon dedup(const Polygon& poly);

}  // namespace credal::geom
