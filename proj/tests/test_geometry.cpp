#include <doctest.h>

#include "credal/geometry.hpp"

using namespace credal::geom;

TEST_CASE("polygon area and centroid") {
    Polygon unit = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(polygon_area(unit) == doctest::Approx(1.0));
    Vec2 c = polygon_centroid(unit);
    CHECK(c.x == doctest::Approx(0.5));
    CHECK(c.y == doctest::Approx(0.5));

    Polygon tri = {{0, 0}, {2, 0}, {0, 2}};
    CHECK(polygon_area(tri) == doctest::Approx(2.0));
    Vec2 ct = polygon_centroid(tri);
    CHECK(ct.x == doctest::Approx(2.0 / 3));
    CHECK(ct.y == doctest::Approx(2.0 / 3));

    CHECK(polygon_area({{0, 0}, {1, 1}}) == 0.0);
}

TEST_CASE("half-plane clipping") {
    Polygon unit = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    // keep x <= 0.5
    Polygon left = clip(unit, {-1, 0, 0.5});
    CHECK(polygon_area(left) == doctest::Approx(0.5));
    // clip to empty
    CHECK(clip(unit, {1, 0, -2.0}).empty());
    // segment clip
    Polygon seg = {{0, 0}, {1, 1}};
    Polygon half = clip(seg, {-1, 0, 0.5});
    REQUIRE(half.size() == 2);
    CHECK(half[1].x == doctest::Approx(0.5));
}

TEST_CASE("convex intersection") {
    Polygon a = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    Polygon b = {{1, 1}, {3, 1}, {3, 3}, {1, 3}};
    Polygon inter = clip_convex(a, b);
    CHECK(polygon_area(inter) == doctest::Approx(1.0));

    // segment against polygon
    Polygon seg = {{-1, 1}, {5, 1}};
    Polygon cut = clip_convex(seg, a);
    REQUIRE(cut.size() == 2);
    CHECK(std::abs(cut[0].x - cut[1].x) == doctest::Approx(2.0));

    // disjoint
    Polygon far = {{10, 10}, {11, 10}, {11, 11}};
    CHECK(clip_convex(a, far).empty());

    // collinear segments overlap
    Polygon s1 = {{0, 0}, {2, 0}};
    Polygon s2 = {{1, 0}, {3, 0}};
    Polygon ov = clip_convex(s1, s2);
    REQUIRE(ov.size() == 2);
    CHECK(std::abs(ov[1].x - ov[0].x) == doctest::Approx(1.0));
}

TEST_CASE("convex hull") {
    Polygon h = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.2, 0.8}});
    CHECK(h.size() == 4);
    CHECK(polygon_area(h) == doctest::Approx(1.0));

    Polygon line = convex_hull({{0, 0}, {0.5, 0.5}, {1, 1}});
    CHECK(line.size() == 2);

    Polygon pt = convex_hull({{0.3, 0.3}, {0.3, 0.3}});
    CHECK(pt.size() == 1);
}

TEST_CASE("union area by inclusion-exclusion") {
    Polygon a = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    Polygon b = {{1, 1}, {3, 1}, {3, 3}, {1, 3}};
    CHECK(union_area({a, b}) == doctest::Approx(7.0));
    CHECK(union_area({a, a, b}) == doctest::Approx(7.0));
    Polygon c = {{10, 0}, {11, 0}, {11, 1}, {10, 1}};
    CHECK(union_area({a, b, c}) == doctest::Approx(8.0));
}
