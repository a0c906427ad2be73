#include "credal/ternary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace credal::ternary {

using geom::HalfPlane;
using geom::Polygon;
using geom::Vec2;

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
const Polygon kSimplex = {{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3 / 2.0}};
constexpr double kSimplexArea = kSqrt3 / 4.0;

// Barycentric coordinates as affine functions of the planar chart:
// q_i(u,v) = cu*u + cv*v + c0.
struct AffineCoord {
    double cu, cv, c0;
};
constexpr AffineCoord kBary[3] = {
    {-1.0, -1.0 / kSqrt3, 1.0},  // q_A
    {1.0, -1.0 / kSqrt3, 0.0},   // q_B
    {0.0, 2.0 / kSqrt3, 0.0},    // q_C
};

// Half-plane for alpha * q_x - beta * q_w >= 0.
HalfPlane ratio_halfplane(int x, int w, double alpha, double beta) {
    return {alpha * kBary[x].cu - beta * kBary[w].cu, alpha * kBary[x].cv - beta * kBary[w].cv,
            alpha * kBary[x].c0 - beta * kBary[w].c0};
}

Vec2 corner(int i) { return kSimplex[static_cast<std::size_t>(i)]; }

void require_frame3(const Frame& frame) {
    if (frame.size() != 3)
        throw std::invalid_argument("ternary: frame must have exactly 3 atoms");
}

// Region of labels q for which P_w(q) meets the component: the convex hull
// of the two corners opposite w together with the component's vertices.
Polygon plaus_hull(const CredalComponent& comp, int w) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 3; ++i)
        if (i != w) pts.push_back(corner(i));
    for (const BaryPoint& v : comp.vertices) pts.push_back(to_plane(v));
    return geom::convex_hull(std::move(pts));
}

double plausibility_singleton(const CredalSet3& P, int w) {
    std::vector<Polygon> hulls;
    hulls.reserve(P.components().size());
    for (const CredalComponent& comp : P.components()) hulls.push_back(plaus_hull(comp, w));
    return geom::union_area(hulls) / kSimplexArea;
}

// Region of labels q for which every point of the set lies in P_w(q):
// the simplex cut by one half-plane per (vertex, other atom) pair.
double belief_singleton(const CredalSet3& P, int w) {
    Polygon region = kSimplex;
    for (const CredalComponent& comp : P.components()) {
        for (const BaryPoint& v : comp.vertices) {
            for (int x = 0; x < 3; ++x) {
                if (x == w) continue;
                double alpha = v.coord(w), beta = v.coord(x);
                if (alpha == 0.0 && beta == 0.0) continue;
                region = geom::clip(region, ratio_halfplane(x, w, alpha, beta));
                if (region.empty()) return 0.0;
            }
        }
    }
    return geom::polygon_area(region) / kSimplexArea;
}

}  // namespace

BaryPoint::BaryPoint(double pa, double pb, double pc) : a(pa), b(pb), c(pc) {
    if (a < -1e-9 || b < -1e-9 || c < -1e-9)
        throw std::invalid_argument("BaryPoint: negative coordinate");
    double sum = a + b + c;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("BaryPoint: coordinates sum to " + std::to_string(sum));
    a = std::max(a, 0.0);
    b = std::max(b, 0.0);
    c = std::max(c, 0.0);
    sum = a + b + c;
    a /= sum;
    b /= sum;
    c /= sum;
}

Vec2 to_plane(const BaryPoint& p) { return {p.b + 0.5 * p.c, p.c * kSqrt3 / 2.0}; }

BaryPoint from_plane(Vec2 v) {
    double pc = 2.0 * v.y / kSqrt3;
    double pb = v.x - v.y / kSqrt3;
    return BaryPoint(1.0 - pb - pc, pb, pc);
}

int CredalComponent::dimension() const {
    if (vertices.size() == 1) return 0;
    if (vertices.size() == 2) return 1;
    return 2;
}

CredalSet3::CredalSet3(std::vector<CredalComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("CredalSet3: no components");
    if (components_.size() > kMaxComponents)
        throw std::invalid_argument("CredalSet3: at most 8 components supported");
    dimension_ = components_[0].dimension();
    for (const CredalComponent& comp : components_) {
        if (comp.vertices.empty())
            throw std::invalid_argument("CredalSet3: component without vertices");
        if (comp.dimension() != dimension_)
            throw std::invalid_argument("CredalSet3: mixed component dimensions");
        if (comp.dimension() == 1) {
            Vec2 d = to_plane(comp.vertices[1]) - to_plane(comp.vertices[0]);
            if (std::abs(d.x) < geom::kGeomTol && std::abs(d.y) < geom::kGeomTol)
                throw std::invalid_argument("CredalSet3: zero-length segment");
        }
        if (comp.dimension() == 2) {
            // Convex, counterclockwise, no repeated or collinear triples.
            const std::size_t n = comp.vertices.size();
            for (std::size_t i = 0; i < n; ++i) {
                Vec2 p0 = to_plane(comp.vertices[i]);
                Vec2 p1 = to_plane(comp.vertices[(i + 1) % n]);
                Vec2 p2 = to_plane(comp.vertices[(i + 2) % n]);
                if (geom::cross(p1 - p0, p2 - p1) <= geom::kGeomTol)
                    throw std::invalid_argument(
                        "CredalSet3: polygon not strictly convex counterclockwise");
            }
        }
    }
}

CredalSet3 CredalSet3::full_simplex() {
    return CredalSet3({CredalComponent{
        {BaryPoint(1, 0, 0), BaryPoint(0, 1, 0), BaryPoint(0, 0, 1)}}});
}

CredalSet3 CredalSet3::singleton(const BaryPoint& p) {
    return CredalSet3({CredalComponent{{p}}});
}

CredalSet3 CredalSet3::points(std::vector<BaryPoint> pts) {
    std::vector<CredalComponent> comps;
    comps.reserve(pts.size());
    for (BaryPoint& p : pts) comps.push_back(CredalComponent{{p}});
    return CredalSet3(std::move(comps));
}

Membership partition_membership(const BaryPoint& q, const BaryPoint& p) {
    Membership out;
    for (int w = 0; w < 3; ++w) {
        bool member = true;
        for (int x = 0; x < 3 && member; ++x) {
            if (x == w) continue;
            if (p.coord(w) * q.coord(x) < p.coord(x) * q.coord(w)) member = false;
        }
        if (member) {
            out.tie_mask |= 1u << w;
            if (out.primary < 0) out.primary = w;
        }
    }
    return out;
}

Frame default_frame3() { return Frame({"A", "B", "C"}); }

SetFunction bel_table(const CredalSet3& P, const Frame& frame) {
    require_frame3(frame);
    std::vector<double> bel(8, 0.0);
    bel[7] = 1.0;
    for (int w = 0; w < 3; ++w) {
        bel[1u << w] = belief_singleton(P, w);
        // bel of a pair is 1 - pl of the opposite singleton.
        std::uint32_t pair = 7u & ~(1u << w);
        bel[pair] = 1.0 - plausibility_singleton(P, w);
    }
    return {frame, SetKind::belief, std::move(bel)};
}

MassFunction mass_from_credal(const CredalSet3& P, const Frame& frame) {
    return mobius_inverse(bel_table(P, frame));
}

LowerProbBounds3 tighten_bounds(const LowerProbBounds3& bounds) {
    for (int i = 0; i < 3; ++i) {
        if (bounds.lower[i] < 0 || bounds.upper[i] > 1 || bounds.lower[i] > bounds.upper[i])
            throw std::invalid_argument("bounds3: need 0 <= lower <= upper <= 1");
    }
    double lsum = bounds.lower[0] + bounds.lower[1] + bounds.lower[2];
    double usum = bounds.upper[0] + bounds.upper[1] + bounds.upper[2];
    if (lsum > 1.0 + 1e-12 || usum < 1.0 - 1e-12)
        throw ContradictionError("contradictory knowledge: empty probability bounds");
    LowerProbBounds3 t;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        t.lower[i] = std::max(bounds.lower[i], 1.0 - bounds.upper[j] - bounds.upper[k]);
        t.upper[i] = std::min(bounds.upper[i], 1.0 - bounds.lower[j] - bounds.lower[k]);
        if (t.lower[i] > t.upper[i] + 1e-12)
            throw ContradictionError("contradictory knowledge: empty probability bounds");
    }
    return t;
}

SetFunction bel_from_bounds(const LowerProbBounds3& bounds, const Frame& frame) {
    require_frame3(frame);
    LowerProbBounds3 t = tighten_bounds(bounds);
    const double a = t.lower[0], b = t.lower[1], c = t.lower[2];
    const double A = t.upper[0], B = t.upper[1], C = t.upper[2];
    std::vector<double> bel(8, 0.0);
    bel[0b001] = a / (a + B + C);
    bel[0b010] = b / (A + b + C);
    bel[0b100] = c / (A + B + c);
    bel[0b011] = (1 - C) * (1 - C) + C * (a + b);
    bel[0b101] = (1 - B) * (1 - B) + B * (a + c);
    bel[0b110] = (1 - A) * (1 - A) + A * (b + c);
    bel[0b111] = 1.0;
    return {frame, SetKind::belief, std::move(bel)};
}

CredalSet3 credal_from_region(const geom::Polygon& input) {
    Polygon region = geom::dedup(input);
    if (region.empty())
        throw ContradictionError("contradictory knowledge: empty credal set");
    if (region.size() >= 3 && geom::polygon_area(region) < 1e-12) {
        // Collapse a numerically flat polygon to its extreme segment.
        auto cmp = [](Vec2 p, Vec2 q) { return p.x != q.x ? p.x < q.x : p.y < q.y; };
        auto [mn, mx] = std::minmax_element(region.begin(), region.end(), cmp);
        Vec2 lo = *mn, hi = *mx;
        region = {lo, hi};
        if (std::abs(lo.x - hi.x) < geom::kGeomTol && std::abs(lo.y - hi.y) < geom::kGeomTol)
            region = {lo};
    }
    CredalComponent comp;
    for (Vec2 v : region) comp.vertices.push_back(from_plane(v));
    return CredalSet3({comp});
}

CredalSet3 hexagon_polygon(const LowerProbBounds3& bounds) {
    Polygon region = kSimplex;
    for (int i = 0; i < 3; ++i) {
        // q_i >= lower_i and q_i <= upper_i.
        region = geom::clip(region, {kBary[i].cu, kBary[i].cv, kBary[i].c0 - bounds.lower[i]});
        region = geom::clip(region, {-kBary[i].cu, -kBary[i].cv, bounds.upper[i] - kBary[i].c0});
        if (region.empty())
            throw ContradictionError("contradictory knowledge: empty probability bounds");
    }
    return credal_from_region(region);
}

}  // namespace credal::ternary
