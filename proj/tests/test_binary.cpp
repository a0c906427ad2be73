#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "credal/binary.hpp"
#include "credal/numerics.hpp"
#include "oracle.hpp"

using namespace credal;
using namespace credal::binary;

namespace {

double approx_tol(double tol) { return tol; }

// Density of the normalized evidence measure, used only by the quadrature
// oracle below.
double evidence_density(long long r, long long s, double x, double y) {
    double logc = std::lgamma(static_cast<double>(r + s + 1)) -
                  std::lgamma(static_cast<double>(r)) - std::lgamma(static_cast<double>(s));
    return std::exp(logc) * std::pow(x, static_cast<double>(r - 1)) *
           std::pow(1.0 - y, static_cast<double>(s - 1));
}

}  // namespace

TEST_CASE("evidence measure component shapes") {
    TriangleMeasure e21 = TriangleMeasure::evidence({2, 1});
    REQUIRE(e21.evidence_core().has_value());
    CHECK(e21.total_mass() == doctest::Approx(1.0));

    // Quadrature oracle: the (2,1) density is 6x on the triangle.
    double total = oracle::integrate_tri([](double x, double) { return 6.0 * x; }, 0, 1, 0, 1, 1e-8);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));

    TriangleMeasure vac = TriangleMeasure::vacuous();
    CHECK(vac.q(0.3, 0.9) == doctest::Approx(1.0));
    CHECK(vac.bel(0.0, 1.0) == doctest::Approx(1.0));
    CHECK(vac.bel(0.0, 0.9) == doctest::Approx(0.0));

    // One success: uniform line on y = 1, predictive E[x] = 1/2.
    TriangleMeasure e10 = TriangleMeasure::evidence({1, 0});
    CHECK(e10.predictive().success == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(e10.pl(0.0, 0.25) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("evidence density integrates to one") {
    for (auto [r, s] : {std::pair<long long, long long>{1, 1}, {2, 1}, {3, 2}, {15, 35}}) {
        double total = oracle::integrate_tri(
            [r = r, s = s](double x, double y) { return evidence_density(r, s, x, y); },
            0, 1, 0, 1, 1e-8);
        INFO("r=", r, " s=", s);
        CHECK(total == doctest::Approx(1.0).epsilon(approx_tol(1e-6)));
        CHECK(TriangleMeasure::evidence({r, s}).total_mass() == doctest::Approx(1.0));
    }
}

TEST_CASE("knowledge measures are focal points") {
    TriangleMeasure k = TriangleMeasure::knowledge({.3, .4});
    REQUIRE(k.points().size() == 1);
    CHECK(k.points()[0].x == .3);
    CHECK(k.points()[0].y == .4);
    CHECK(k.bel(.3, .4) == 1.0);
    CHECK(k.bel(.31, .4) == 0.0);
    CHECK(k.bel(.3, 1.0) == 1.0);
    CHECK(k.q(.35, .35) == 1.0);
    CHECK(k.pl(.0, .1) == 0.0);

    auto p = k.predictive();
    CHECK(p.success == doctest::Approx(.3).epsilon(1e-12));
    CHECK(p.failure == doctest::Approx(.6).epsilon(1e-12));
    CHECK(p.residual == doctest::Approx(.1).epsilon(1e-12));

    TriangleMeasure full = TriangleMeasure::knowledge({0, 1});
    CHECK(full.q(.2, .8) == 1.0);
    CHECK_THROWS(IntervalKnowledge(.5, .4));
}

TEST_CASE("interval knowledge threshold beliefs") {
    TriangleMeasure k = TriangleMeasure::knowledge({.3, .4});
    for (double u : {0.0, 0.1, 0.2, 0.3}) CHECK(k.bel(u, 1.0) == 1.0);
    for (double u : {0.300001, 0.35, 0.9}) CHECK(k.bel(u, 1.0) == 0.0);
}

TEST_CASE("predictive beliefs follow the trial counts") {
    TriangleMeasure e = TriangleMeasure::evidence({15, 35});
    auto p = e.predictive();
    CHECK(p.success == doctest::Approx(15.0 / 51).epsilon(1e-12));
    CHECK(p.failure == doctest::Approx(35.0 / 51).epsilon(1e-12));
    CHECK(p.residual == doctest::Approx(1.0 / 51).epsilon(1e-12));

    auto v = TriangleMeasure::vacuous().predictive();
    CHECK(v.success == 0.0);
    CHECK(v.failure == 0.0);
    CHECK(v.residual == 1.0);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        long long r = rng() % 51, s = rng() % 51;
        auto pr = TriangleMeasure::evidence({r, s}).predictive();
        double d = static_cast<double>(r + s + 1);
        CHECK(pr.success == doctest::Approx(r / d).epsilon(1e-9).scale(1.0));
        CHECK(pr.failure == doctest::Approx(s / d).epsilon(1e-9).scale(1.0));
        CHECK(pr.residual == doctest::Approx(1 / d).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("evidence combines by adding counts") {
    TriangleMeasure c = combine_measures(TriangleMeasure::evidence({1, 0}),
                                         TriangleMeasure::evidence({0, 1}));
    REQUIRE(c.evidence_core().has_value());
    CHECK(c.evidence_core()->r == 1);
    CHECK(c.evidence_core()->s == 1);
    CHECK(c.conflict() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.total_mass() == doctest::Approx(0.5).epsilon(1e-12));

    // Its commonality is the product a(1-b) of the singles' commonalities.
    for (double a : {0.2, 0.5, 0.9})
        for (double b : {0.91, 0.95})
            CHECK(c.q(a, b) == doctest::Approx(a * (1 - b)).epsilon(1e-12).scale(1.0));

    TriangleMeasure cn = combine_measures(TriangleMeasure::evidence({1, 0}),
                                          TriangleMeasure::evidence({0, 1}), true);
    CHECK(cn.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
    auto p = cn.predictive();
    CHECK(p.success == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // Commutativity and associativity through the counts.
    TriangleMeasure lhs = combine_measures(
        combine_measures(TriangleMeasure::evidence({2, 1}), TriangleMeasure::evidence({0, 3})),
        TriangleMeasure::evidence({1, 0}));
    TriangleMeasure rhs = combine_measures(
        TriangleMeasure::evidence({0, 3}),
        combine_measures(TriangleMeasure::evidence({1, 0}), TriangleMeasure::evidence({2, 1})));
    CHECK(lhs.evidence_core()->r == rhs.evidence_core()->r);
    CHECK(lhs.evidence_core()->s == rhs.evidence_core()->s);
    CHECK(lhs.evidence_core()->scale ==
          doctest::Approx(rhs.evidence_core()->scale).epsilon(1e-12).scale(1.0));
}

TEST_CASE("unnormalized accumulation carries the closed-form commonality") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        long long r = rng() % 40, s = rng() % 40;
        TriangleMeasure acc = evidence_accumulation({r, s});
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                double u = 0.1 + 0.18 * i;
                double v = u + (1.0 - u) * (0.05 + 0.22 * j);
                double expect = num::pow_real(u, static_cast<double>(r)) *
                                num::pow_real(1 - v, static_cast<double>(s));
                CHECK(acc.q(u, v) == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
            }
        }
    }
    // The worked instance: 15 successes, 35 failures at the midpoint.
    TriangleMeasure acc = evidence_accumulation({15, 35});
    CHECK(std::abs(acc.q(0.5, 0.5) / std::pow(0.5, 50) - 1.0) < 1e-9);

    // Same measure via an explicit combination chain.
    TriangleMeasure chain = TriangleMeasure::vacuous();
    for (int i = 0; i < 4; ++i)
        chain = combine_measures(chain, TriangleMeasure::evidence({1, 0}));
    for (int i = 0; i < 3; ++i)
        chain = combine_measures(chain, TriangleMeasure::evidence({0, 1}));
    for (double u : {0.2, 0.5, 0.8})
        for (double v : {0.5, 0.7, 0.9}) {
            if (u > v) continue;
            double expect = std::pow(u, 4) * std::pow(1 - v, 3);
            CHECK(chain.q(u, v) == doctest::Approx(expect).epsilon(1e-9).scale(1.0));
        }
}

TEST_CASE("evidence against interval knowledge transfers mass") {
    TriangleMeasure c = combine_measures(TriangleMeasure::evidence({1, 0}),
                                         TriangleMeasure::knowledge({.3, .4}));
    CHECK(c.conflict() == doctest::Approx(0.6).epsilon(1e-12));
    TriangleMeasure n = c.normalized();
    REQUIRE(n.points().size() == 1);
    CHECK(n.points()[0].w == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(n.points()[0].x == doctest::Approx(0.3));
    CHECK(n.points()[0].y == doctest::Approx(0.4));
    REQUIRE(n.lines().size() == 1);
    CHECK(n.lines()[0].horizontal);
    CHECK(n.lines()[0].level == doctest::Approx(0.4));
    CHECK(n.lines()[0].lo == doctest::Approx(0.3));
    CHECK(n.lines()[0].hi == doctest::Approx(0.4));
    REQUIRE(n.lines()[0].density.size() == 1);
    CHECK(n.lines()[0].density[0] == doctest::Approx(2.5).epsilon(1e-12));

    auto p = n.predictive();
    CHECK(p.success == doctest::Approx(0.3125).epsilon(1e-12));

    // Vacuous knowledge is neutral.
    TriangleMeasure e = TriangleMeasure::evidence({3, 2});
    TriangleMeasure id = combine_measures(e, TriangleMeasure::knowledge({0, 1}));
    CHECK(id.conflict() == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
    for (double u : {0.0, 0.2, 0.6})
        for (double v : {0.7, 0.95, 1.0}) {
            CHECK(id.bel(u, v) == doctest::Approx(e.bel(u, v)).epsilon(1e-12).scale(1.0));
            CHECK(id.pl(u, v) == doctest::Approx(e.pl(u, v)).epsilon(1e-12).scale(1.0));
            CHECK(id.q(u, v) == doctest::Approx(e.q(u, v)).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("concentration of evidence around the observed rate") {
    TriangleMeasure e = TriangleMeasure::evidence({900, 2100});
    CHECK(e.bel(0.27, 0.33) >= 0.999);
    CHECK(e.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("contradictory knowledge cannot be normalized") {
    TriangleMeasure c = combine_measures(TriangleMeasure::knowledge({.1, .2}),
                                         TriangleMeasure::knowledge({.5, .6}));
    CHECK(c.conflict() == doctest::Approx(1.0));
    CHECK_THROWS_AS(c.normalized(), std::domain_error);
}

namespace {

struct Prim {
    bool is_evidence;
    long long r = 0, s = 0;
    double a = 0, b = 1;

    TriangleMeasure measure() const {
        return is_evidence ? TriangleMeasure::evidence({r, s})
                           : TriangleMeasure::knowledge({a, b});
    }
    oracle::Interval sample(std::mt19937_64& rng) const {
        if (is_evidence) return oracle::EvidenceSampler{r, s}(rng);
        return {a, b};
    }
};

TriangleMeasure fold(const std::vector<Prim>& prims) {
    TriangleMeasure m = prims[0].measure();
    for (std::size_t i = 1; i < prims.size(); ++i)
        m = combine_measures(m, prims[i].measure());
    return m;
}

// Pure pushforward sampling of the product measure: completely independent
// of the component algebra in the library.
void check_against_sampler(const std::vector<Prim>& prims, std::uint64_t seed) {
    TriangleMeasure m = fold(prims);

    const std::vector<std::pair<double, double>> grid = {
        {0.0, 1.0}, {0.0, 0.55}, {0.15, 0.55}, {0.15, 0.8}, {0.35, 0.35},
        {0.35, 0.8}, {0.55, 0.8}, {0.2, 0.45},  {0.45, 0.9}, {0.3, 0.4},
    };
    const int N = 400000;
    std::mt19937_64 rng(seed);
    std::vector<int> bel_hits(grid.size(), 0), pl_hits(grid.size(), 0), q_hits(grid.size(), 0);
    int empties = 0;
    for (int n = 0; n < N; ++n) {
        oracle::Interval cur = prims[0].sample(rng);
        for (std::size_t i = 1; i < prims.size(); ++i)
            cur = oracle::intersect(cur, prims[i].sample(rng));
        if (cur.empty) {
            ++empties;
            continue;
        }
        for (std::size_t g = 0; g < grid.size(); ++g) {
            auto [u, v] = grid[g];
            if (cur.x >= u && cur.y <= v) ++bel_hits[g];
            if (cur.x <= v && cur.y >= u) ++pl_hits[g];
            if (cur.x <= u && cur.y >= v) ++q_hits[g];
        }
    }
    auto close = [&](double freq, double exact) {
        double se = std::sqrt(std::max(freq * (1 - freq), 1e-12) / N);
        return std::abs(freq - exact) <= 4 * se + 1e-5;
    };
    CHECK(close(static_cast<double>(empties) / N, m.conflict()));
    for (std::size_t g = 0; g < grid.size(); ++g) {
        auto [u, v] = grid[g];
        INFO("grid [", u, ",", v, "]");
        CHECK(close(static_cast<double>(bel_hits[g]) / N, m.bel(u, v)));
        CHECK(close(static_cast<double>(pl_hits[g]) / N, m.pl(u, v)));
        CHECK(close(static_cast<double>(q_hits[g]) / N, m.q(u, v)));
    }
}

}  // namespace

TEST_CASE("combined measures match direct pushforward sampling") {
    // Exercises every pairwise component case: points, both line kinds and
    // areas appear on both sides of the final combination.
    check_against_sampler({{true, 2, 1}, {false, 0, 0, .2, .7}}, 101);
    check_against_sampler({{true, 2, 0}, {false, 0, 0, .3, .8}}, 102);
    check_against_sampler({{true, 0, 2}, {false, 0, 0, .1, .6}}, 103);
    check_against_sampler({{true, 2, 1}, {false, 0, 0, .2, .7}, {true, 1, 2}}, 104);
    check_against_sampler(
        {{true, 2, 1}, {false, 0, 0, .2, .9}, {true, 1, 1}, {false, 0, 0, .35, .75}}, 105);
    check_against_sampler({{true, 2, 0}, {false, 0, 0, .3, .8}, {true, 0, 2}}, 106);
    check_against_sampler({{true, 3, 0}, {true, 0, 2}, {false, 0, 0, .25, .65}}, 107);
}

TEST_CASE("commonality multiplies under combination for mixed components") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 8; ++rep) {
        auto random_measure = [&](bool allow_combo) {
            double a = 0.8 * unif(rng);
            double b = a + (1.0 - a) * unif(rng);
            Prim know{false, 0, 0, a, b};
            Prim ev{true, static_cast<long long>(rng() % 4), static_cast<long long>(rng() % 4)};
            if (!allow_combo) return ev.measure();
            return combine_measures(ev.measure(), know.measure());
        };
        TriangleMeasure m1 = random_measure(rep % 2 == 0);
        TriangleMeasure m2 = random_measure(rep % 3 != 1);
        TriangleMeasure m12 = combine_measures(m1, m2);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                double u = 0.05 + 0.2 * i;
                double v = u + (1.0 - u) * (0.1 + 0.2 * j);
                CHECK(m12.q(u, v) ==
                      doctest::Approx(m1.q(u, v) * m2.q(u, v)).epsilon(1e-8).scale(1.0));
            }
        }
    }
}
