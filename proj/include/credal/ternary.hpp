#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "credal/frame.hpp"
#include "credal/geometry.hpp"
#include "credal/mass.hpp"

namespace credal::ternary {

/// A probability function on a 3-atom frame, in barycentric coordinates.
struct BaryPoint {
    double a = 0.0, b = 0.0, c = 0.0;

    BaryPoint() = default;
    BaryPoint(double pa, double pb, double pc);

    double coord(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

/// Affine chart of the simplex: A -> (0,0), B -> (1,0), C -> (1/2, sqrt(3)/2).
/// The equilateral embedding means area fractions match the uniform label
/// density, so the sqrt(3) density constant never appears explicitly.
geom::Vec2 to_plane(const BaryPoint& p);
BaryPoint from_plane(geom::Vec2 v);

/// One convex piece of a credal set: a point (1 vertex), a segment (2), or a
/// convex polygon (>= 3 vertices, counterclockwise).
struct CredalComponent {
    std::vector<BaryPoint> vertices;
    int dimension() const;
};

/// A credal set on the 3-atom simplex: a finite union of convex components,
/// all of the same dimension. Non-convex sets are expressed as unions; the
/// construction is sensitive to convex hulling, so components are never
/// hulled implicitly.
class CredalSet3 {
public:
    static constexpr int kMaxComponents = 8;

    explicit CredalSet3(std::vector<CredalComponent> components);

    const std::vector<CredalComponent>& components() const { return components_; }
    int dimension() const { return dimension_; }

    static CredalSet3 full_simplex();
    static CredalSet3 singleton(const BaryPoint& p);
    static CredalSet3 points(std::vector<BaryPoint> pts);

private:
    std::vector<CredalComponent> components_;
    int dimension_ = 0;
};

/// Componentwise probability bounds on the three atoms.
struct LowerProbBounds3 {
    std::array<double, 3> lower{0.0, 0.0, 0.0};
    std::array<double, 3> upper{1.0, 1.0, 1.0};
};

/// Tighten bounds to the envelope actually reachable inside the simplex.
/// Throws ContradictionError if the constrained set is empty.
LowerProbBounds3 tighten_bounds(const LowerProbBounds3& bounds);

struct Membership {
    std::uint32_t tie_mask = 0;  // all atoms achieving the max ratio
    int primary = -1;            // lowest-index member
};

/// Which corner region P_omega(q) contains p. Comparisons are multiplicative
/// (p_w * q_x >= p_x * q_w), which also fixes the zero-coordinate
/// conventions: q_w = 0 with p_w > 0 counts as an infinite ratio, and 0/0
/// pairs sit on the boundary of every region involved.
Membership partition_membership(const BaryPoint& q, const BaryPoint& p);

Frame default_frame3();

/// Exact belief table over all 8 subsets induced by the credal set, by area
/// integration of the corner-region partition (mask bit i = atom i).
SetFunction bel_table(const CredalSet3& P, const Frame& frame);

/// Mobius masses of bel_table; negatives within roundoff are clamped to 0.
MassFunction mass_from_credal(const CredalSet3& P, const Frame& frame);

/// Closed-form belief table for a bounds-defined credal set (the hexagon).
SetFunction bel_from_bounds(const LowerProbBounds3& bounds, const Frame& frame);

/// The polygon {p in simplex : lower <= p <= upper}, possibly degenerate.
/// Throws ContradictionError when empty.
CredalSet3 hexagon_polygon(const LowerProbBounds3& bounds);

/// Classify a clipped planar region as a single point/segment/polygon
/// component. Throws ContradictionError when the region is empty.
CredalSet3 credal_from_region(const geom::Polygon& region);

}  // namespace credal::ternary
