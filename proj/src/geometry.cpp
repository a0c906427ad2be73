#include "credal/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace credal::geom {

namespace {

bool near(Vec2 a, Vec2 b) {
    return std::abs(a.x - b.x) < kGeomTol && std::abs(a.y - b.y) < kGeomTol;
}

// Half-planes of a CCW polygon, interior to the left of each edge.
std::vector<HalfPlane> edges_of(const Polygon& poly) {
    std::vector<HalfPlane> hs;
    hs.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Vec2 p = poly[i];
        Vec2 q = poly[(i + 1) % poly.size()];
        Vec2 d = q - p;
        hs.push_back({-d.y, d.x, d.y * p.x - d.x * p.y});
    }
    return hs;
}

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 d = b - a;
    if (std::abs(cross(d, p - a)) > 1e-9) return false;
    double t = dot(p - a, d) / std::max(dot(d, d), kGeomTol);
    return t >= -kGeomTol && t <= 1.0 + kGeomTol;
}

Polygon degenerate_intersection(const Polygon& a, const Polygon& b) {
    // Both inputs are points or segments.
    if (a.size() == 1 && b.size() == 1) return near(a[0], b[0]) ? a : Polygon{};
    if (a.size() == 1) return point_on_segment(a[0], b[0], b[1]) ? a : Polygon{};
    if (b.size() == 1) return point_on_segment(b[0], a[0], a[1]) ? b : Polygon{};

    Vec2 d1 = a[1] - a[0], d2 = b[1] - b[0];
    double denom = cross(d1, d2);
    if (std::abs(denom) > 1e-9) {
        double t = cross(b[0] - a[0], d2) / denom;
        double u = cross(b[0] - a[0], d1) / denom;
        if (t >= -kGeomTol && t <= 1 + kGeomTol && u >= -kGeomTol && u <= 1 + kGeomTol)
            return {a[0] + t * d1};
        return {};
    }
    // Parallel: overlap only if collinear.
    if (std::abs(cross(d1, b[0] - a[0])) > 1e-9) return {};
    double len2 = dot(d1, d1);
    double t0 = dot(b[0] - a[0], d1) / len2;
    double t1 = dot(b[1] - a[0], d1) / len2;
    if (t0 > t1) std::swap(t0, t1);
    double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
    if (lo > hi + kGeomTol) return {};
    if (hi - lo < kGeomTol) return {a[0] + lo * d1};
    return {a[0] + lo * d1, a[0] + hi * d1};
}

}  // namespace

double polygon_area(const Polygon& poly) {
    if (poly.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * std::abs(twice);
}

Vec2 polygon_centroid(const Polygon& poly) {
    if (poly.empty()) throw std::invalid_argument("polygon_centroid: empty polygon");
    if (poly.size() == 1) return poly[0];
    if (poly.size() == 2) return 0.5 * (poly[0] + poly[1]);
    double twice = 0.0;
    Vec2 acc{0.0, 0.0};
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % poly.size()];
        double c = cross(p, q);
        twice += c;
        acc = acc + c * (p + q);
    }
    if (std::abs(twice) < kGeomTol) {
        // Collinear vertex set: centroid of the extreme segment.
        auto cmp = [](Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; };
        auto [mn, mx] = std::minmax_element(poly.begin(), poly.end(), cmp);
        return 0.5 * (*mn + *mx);
    }
    return (1.0 / (3.0 * twice)) * acc;
}

Polygon clip(const Polygon& poly, const HalfPlane& h) {
    if (poly.empty()) return {};
    if (poly.size() == 1) return h.eval(poly[0]) >= -kGeomTol ? poly : Polygon{};
    if (poly.size() == 2) {
        double d0 = h.eval(poly[0]), d1 = h.eval(poly[1]);
        bool in0 = d0 >= -kGeomTol, in1 = d1 >= -kGeomTol;
        if (in0 && in1) return poly;
        if (!in0 && !in1) return {};
        double t = d0 / (d0 - d1);
        Vec2 cut = poly[0] + t * (poly[1] - poly[0]);
        Polygon r = in0 ? Polygon{poly[0], cut} : Polygon{cut, poly[1]};
        return dedup(r);
    }
    Polygon out;
    out.reserve(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Vec2 cur = poly[i];
        Vec2 nxt = poly[(i + 1) % poly.size()];
        double dc = h.eval(cur), dn = h.eval(nxt);
        bool inc = dc >= -kGeomTol, inn = dn >= -kGeomTol;
        if (inc) out.push_back(cur);
        if (inc != inn) out.push_back(cur + (dc / (dc - dn)) * (nxt - cur));
    }
    return dedup(out);
}

Polygon clip_convex(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) return {};
    if (b.size() >= 3) {
        Polygon r = a;
        for (const HalfPlane& h : edges_of(b)) {
            r = clip(r, h);
            if (r.empty()) break;
        }
        return r;
    }
    if (a.size() >= 3) return clip_convex(b, a);
    return degenerate_intersection(a, b);
}

Polygon convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(),
              [](Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    pts.erase(std::unique(pts.begin(), pts.end(), near), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= kGeomTol) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= kGeomTol) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {
        // All points collinear: keep the lexicographic extremes.
        return {pts.front(), pts.back()};
    }
    return hull;
}

double union_area(const std::vector<Polygon>& polys) {
    const std::size_t n = polys.size();
    if (n == 0) return 0.0;
    if (n > 16) throw std::invalid_argument("union_area: too many polygons");
    double total = 0.0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        Polygon inter;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(s & (1u << i))) continue;
            if (first) {
                inter = polys[i];
                first = false;
            } else {
                inter = clip_convex(inter, polys[i]);
                if (inter.empty()) break;
            }
        }
        double a = polygon_area(inter);
        total += (std::popcount(s) % 2 == 1) ? a : -a;
    }
    return total;
}

Polygon dedup(const Polygon& poly) {
    Polygon out;
    for (const Vec2& p : poly) {
        if (!out.empty() && near(out.back(), p)) continue;
        out.push_back(p);
    }
    while (out.size() > 1 && near(out.front(), out.back())) out.pop_back();
    return out;
}

}  // namespace credal::geom
