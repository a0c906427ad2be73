#include <doctest.h>

#include <random>

#include "credal/ternary.hpp"

using namespace credal;
using namespace credal::ternary;

namespace {

const double kTol = 1e-9;

CredalSet3 example1() {
    return CredalSet3::points({BaryPoint(.5, 0, .5), BaryPoint(.5, .5, 0)});
}

CredalSet3 example2() {
    return CredalSet3({CredalComponent{{BaryPoint(.5, 0, .5), BaryPoint(.5, .5, 0)}}});
}

CredalSet3 example3() {
    return CredalSet3({CredalComponent{
        {BaryPoint(.5, .5, 0), BaryPoint(0, .5, .5), BaryPoint(.5, 0, .5)}}});
}

BaryPoint random_point(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    double a = e(rng), b = e(rng), c = e(rng);
    double s = a + b + c;
    return BaryPoint(a / s, b / s, c / s);
}

void check_masses(const MassFunction& m, std::initializer_list<double> expect, double tol) {
    // expect ordered: A, B, C, A+B, A+C, B+C, A+B+C
    const std::uint32_t masks[] = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
    std::size_t i = 0;
    for (double e : expect) {
        INFO("mask index ", i);
        CHECK(m(masks[i]) == doctest::Approx(e).epsilon(tol).scale(1.0));
        ++i;
    }
}

}  // namespace

TEST_CASE("barycentric plane map round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        BaryPoint p = random_point(rng);
        BaryPoint q = from_plane(to_plane(p));
        CHECK(q.a == doctest::Approx(p.a).epsilon(1e-12).scale(1.0));
        CHECK(q.b == doctest::Approx(p.b).epsilon(1e-12).scale(1.0));
        CHECK(q.c == doctest::Approx(p.c).epsilon(1e-12).scale(1.0));
    }
    CHECK_THROWS(BaryPoint(0.5, 0.6, 0.2));
    CHECK_THROWS(BaryPoint(-0.2, 0.6, 0.6));
}

TEST_CASE("partition membership picks the maximal ratio atom") {
    Membership m = partition_membership(BaryPoint(1.0 / 3, 1.0 / 3, 1.0 / 3),
                                        BaryPoint(.5, .2, .3));
    CHECK(m.primary == 0);
    CHECK(m.tie_mask == 0b001);

    BaryPoint q = BaryPoint(.2, .4, .4);
    Membership tie = partition_membership(q, q);
    CHECK(tie.tie_mask == 0b111);

    Membership z = partition_membership(BaryPoint(.2, .4, .4), BaryPoint(.5, 0, .5));
    CHECK(z.primary == 0);
    CHECK(z.tie_mask == 0b001);
}

TEST_CASE("partition regions cover the simplex and stay convex") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        BaryPoint q = random_point(rng);
        int multi = 0;
        for (int i = 0; i < 1000; ++i) {
            BaryPoint p = random_point(rng);
            Membership m = partition_membership(q, p);
            REQUIRE(m.tie_mask != 0);
            if (popcount_mask(m.tie_mask) > 1) ++multi;
        }
        // Ties live on measure-zero ridges.
        CHECK(multi == 0);

        // Convexity probe: the midpoint of two points sharing a region stays
        // in the region.
        for (int i = 0; i < 200; ++i) {
            BaryPoint p1 = random_point(rng), p2 = random_point(rng);
            Membership m1 = partition_membership(q, p1);
            Membership m2 = partition_membership(q, p2);
            if (m1.primary != m2.primary) continue;
            BaryPoint mid((p1.a + p2.a) / 2, (p1.b + p2.b) / 2, (p1.c + p2.c) / 2);
            Membership mm = partition_membership(q, mid);
            CHECK((mm.tie_mask & m1.tie_mask) != 0);
        }
    }
}

TEST_CASE("two point credal set induces the worked mass table") {
    Frame f = default_frame3();
    SetFunction bel = bel_table(example1(), f);
    CHECK(bel(0b001) == doctest::Approx(1.0 / 3).epsilon(kTol).scale(1.0));
    CHECK(bel(0b010) == doctest::Approx(0.0).epsilon(kTol).scale(1.0));
    CHECK(bel(0b100) == doctest::Approx(0.0).epsilon(kTol).scale(1.0));
    CHECK(bel(0b011) == doctest::Approx(0.5).epsilon(kTol).scale(1.0));
    CHECK(bel(0b101) == doctest::Approx(0.5).epsilon(kTol).scale(1.0));
    CHECK(bel(0b110) == doctest::Approx(1.0 / 3).epsilon(kTol).scale(1.0));

    check_masses(mass_from_credal(example1(), f),
                 {1.0 / 3, 0, 0, 1.0 / 6, 1.0 / 6, 1.0 / 3, 0}, kTol);
}

TEST_CASE("segment credal set (convex hull of the two points) differs") {
    Frame f = default_frame3();
    check_masses(mass_from_credal(example2(), f),
                 {1.0 / 3, 0, 0, 1.0 / 6, 1.0 / 6, 1.0 / 4, 1.0 / 12}, kTol);
}

TEST_CASE("half-simplex triangle credal set") {
    Frame f = default_frame3();
    check_masses(mass_from_credal(example3(), f), {0, 0, 0, .25, .25, .25, .25}, kTol);
}

TEST_CASE("singleton credal sets obey the frequency principle") {
    Frame f = default_frame3();
    SetFunction bel = bel_table(CredalSet3::singleton(BaryPoint(.2, .3, .5)), f);
    CHECK(bel(0b001) == doctest::Approx(0.2).epsilon(kTol).scale(1.0));
    CHECK(bel(0b010) == doctest::Approx(0.3).epsilon(kTol).scale(1.0));
    CHECK(bel(0b100) == doctest::Approx(0.5).epsilon(kTol).scale(1.0));
    CHECK(bel(0b011) == doctest::Approx(0.5).epsilon(kTol).scale(1.0));

    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        BaryPoint p = random_point(rng);
        SetFunction b = bel_table(CredalSet3::singleton(p), f);
        CHECK(b(0b001) == doctest::Approx(p.a).epsilon(kTol).scale(1.0));
        CHECK(b(0b010) == doctest::Approx(p.b).epsilon(kTol).scale(1.0));
        CHECK(b(0b100) == doctest::Approx(p.c).epsilon(kTol).scale(1.0));
    }
}

TEST_CASE("credal masses are a valid belief assignment") {
    std::mt19937_64 rng(123);
    Frame f = default_frame3();
    for (int rep = 0; rep < 50; ++rep) {
        int npts = 1 + static_cast<int>(rng() % 4);
        std::vector<BaryPoint> pts;
        for (int i = 0; i < npts; ++i) pts.push_back(random_point(rng));
        MassFunction m = mass_from_credal(CredalSet3::points(std::move(pts)), f);
        double sum = 0.0;
        for (std::uint32_t a = 0; a < 8; ++a) {
            CHECK(m(a) >= 0.0);
            sum += m(a);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(kTol).scale(1.0));
    }
}

TEST_CASE("growing the credal set cannot increase belief") {
    std::mt19937_64 rng(321);
    Frame f = default_frame3();
    for (int rep = 0; rep < 30; ++rep) {
        BaryPoint p1 = random_point(rng), p2 = random_point(rng);
        SetFunction small = bel_table(CredalSet3::points({p1}), f);
        SetFunction big = bel_table(CredalSet3::points({p1, p2}), f);
        for (std::uint32_t a = 0; a < 8; ++a) CHECK(big(a) <= small(a) + 1e-12);
    }
}

TEST_CASE("hexagon polygon from bounds") {
    // Exact knowledge of P(A) = .5 collapses to a segment.
    CredalSet3 seg = hexagon_polygon({{.5, 0, 0}, {.5, .5, .5}});
    REQUIRE(seg.components().size() == 1);
    CHECK(seg.dimension() == 1);
    const auto& vs = seg.components()[0].vertices;
    REQUIRE(vs.size() == 2);
    for (const auto& v : vs) CHECK(v.a == doctest::Approx(.5).epsilon(1e-12).scale(1.0));

    CredalSet3 full = hexagon_polygon({{0, 0, 0}, {1, 1, 1}});
    CHECK(full.dimension() == 2);
    CHECK(full.components()[0].vertices.size() == 3);

    CredalSet3 medial = hexagon_polygon({{0, 0, 0}, {.5, .5, .5}});
    CHECK(medial.dimension() == 2);
    CHECK(medial.components()[0].vertices.size() == 3);

    CHECK_THROWS_AS(hexagon_polygon({{.6, .6, 0}, {1, 1, 1}}), ContradictionError);
}

TEST_CASE("closed-form hexagon beliefs") {
    Frame f = default_frame3();
    SetFunction vac = bel_from_bounds({{0, 0, 0}, {1, 1, 1}}, f);
    for (std::uint32_t a = 0; a < 7; ++a) CHECK(vac(a) == doctest::Approx(0.0));
    CHECK(vac(7) == 1.0);

    SetFunction ex2 = bel_from_bounds({{.5, 0, 0}, {.5, .5, .5}}, f);
    CHECK(ex2(0b001) == doctest::Approx(1.0 / 3).epsilon(kTol).scale(1.0));
    CHECK(ex2(0b110) == doctest::Approx(0.25).epsilon(kTol).scale(1.0));

    // Lower probability .5 on A does not reproduce as bel(A).
    SetFunction lower = bel_from_bounds({{.5, 0, 0}, {1, .5, .5}}, f);
    CHECK(lower(0b001) == doctest::Approx(1.0 / 3).epsilon(kTol).scale(1.0));
}

TEST_CASE("closed forms agree with the geometric engine on random bounds") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Frame f = default_frame3();
    double maxdiff = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        BaryPoint p = random_point(rng);
        LowerProbBounds3 b;
        double pc[3] = {p.a, p.b, p.c};
        for (int i = 0; i < 3; ++i) {
            b.lower[i] = pc[i] * unif(rng);
            b.upper[i] = pc[i] + (1.0 - pc[i]) * unif(rng);
        }
        SetFunction closed = bel_from_bounds(b, f);
        SetFunction geo = bel_table(hexagon_polygon(b), f);
        for (std::uint32_t a = 0; a < 8; ++a)
            maxdiff = std::max(maxdiff, std::abs(closed(a) - geo(a)));
    }
    CHECK(maxdiff <= 1e-9);
}

TEST_CASE("mixed-dimension credal sets are rejected") {
    CHECK_THROWS(CredalSet3({CredalComponent{{BaryPoint(1, 0, 0)}},
                             CredalComponent{{BaryPoint(1, 0, 0), BaryPoint(0, 1, 0)}}}));
    CHECK_THROWS(CredalSet3({}));
}
