#include <doctest.h>

#include <random>

#include "credal/mass.hpp"

using namespace credal;

namespace {

Frame abc() { return Frame({"A", "B", "C"}); }
Frame sf() { return Frame({"S", "F"}); }

// Masses of the two-point credal example used throughout: A:1/3, A+B:1/6,
// A+C:1/6, B+C:1/3.
MassFunction example1_mass() {
    Frame f = abc();
    return explicit_mass(f, {{f.mask_of("A"), 1.0 / 3},
                             {f.mask_of("A+B"), 1.0 / 6},
                             {f.mask_of("A+C"), 1.0 / 6},
                             {f.mask_of("B+C"), 1.0 / 3}});
}

MassFunction random_mass(const Frame& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(1, f.full_mask());
    std::exponential_distribution<double> weight(1.0);
    std::map<std::uint32_t, double> m;
    int focal = 1 + static_cast<int>(rng() % 6);
    double sum = 0.0;
    for (int i = 0; i < focal; ++i) {
        double w = weight(rng);
        m[pick(rng)] += w;
        sum += w;
    }
    for (auto& [k, v] : m) v /= sum;
    return explicit_mass(f, m);
}

}  // namespace

TEST_CASE("frame naming and masks") {
    Frame f = abc();
    CHECK(f.size() == 3);
    CHECK(f.mask_of("A+C") == 0b101);
    CHECK(f.name_of(0b110) == "B+C");
    CHECK(f.name_of(0) == "{}");
    CHECK_THROWS(f.mask_of("D"));
    CHECK_THROWS(Frame({"A"}));
    CHECK_THROWS(Frame({"A", "A"}));
    CHECK_THROWS(Frame({"A", ""}));
}

TEST_CASE("mass constructors") {
    CHECK(vacuous_mass(sf()).m[0b11] == 1.0);

    Frame f = abc();
    double probs[] = {0.2, 0.3, 0.5};
    MassFunction bay = bayesian_mass(f, probs);
    CHECK(bay(0b001) == doctest::Approx(0.2));
    CHECK(bay(0b010) == doctest::Approx(0.3));
    CHECK(bay(0b100) == doctest::Approx(0.5));

    CHECK_NOTHROW(example1_mass());

    double bad[] = {0.2, 0.3, 0.4};
    CHECK_THROWS(bayesian_mass(f, bad));
    CHECK_THROWS(explicit_mass(f, {{1, -0.5}, {7, 1.5}}));
    CHECK_THROWS(explicit_mass(f, {{0, 0.5}, {7, 0.5}}));  // empty set in closed world
    CHECK_NOTHROW(explicit_mass(f, {{0, 0.5}, {7, 0.5}}, /*allow_empty=*/true));
}

TEST_CASE("belief, plausibility and commonality transforms") {
    Frame f = abc();
    MassFunction m1 = example1_mass();
    SetFunction bel = mobius_forward(m1, SetKind::belief);
    CHECK(bel(f.mask_of("A+B")) == doctest::Approx(0.5).epsilon(1e-12));

    MassFunction vac = vacuous_mass(f);
    SetFunction belv = mobius_forward(vac, SetKind::belief);
    SetFunction qv = mobius_forward(vac, SetKind::commonality);
    for (std::uint32_t a = 0; a < 8; ++a) {
        if (a != 7) CHECK(belv(a) == 0.0);
        CHECK(qv(a) == 1.0);
    }

    double probs[] = {0.2, 0.3, 0.5};
    SetFunction pl = mobius_forward(bayesian_mass(f, probs), SetKind::plausibility);
    CHECK(pl(0b001) == doctest::Approx(0.2));
}

TEST_CASE("mobius inversion recovers masses and rejects non-belief input") {
    Frame f = abc();
    // bel = .25 on each pair, 0 on singletons, 1 on the frame.
    SetFunction bel{f, SetKind::belief, {0, 0, 0, 0.25, 0, 0.25, 0.25, 1.0}};
    MassFunction m = mobius_inverse(bel);
    CHECK(m(0b011) == doctest::Approx(0.25));
    CHECK(m(0b101) == doctest::Approx(0.25));
    CHECK(m(0b110) == doctest::Approx(0.25));
    CHECK(m(0b111) == doctest::Approx(0.25));
    CHECK(m(0b001) == doctest::Approx(0.0));

    SetFunction belvac{f, SetKind::belief, {0, 0, 0, 0, 0, 0, 0, 1.0}};
    CHECK(mobius_inverse(belvac)(0b111) == 1.0);

    Frame g = sf();
    SetFunction bad{g, SetKind::belief, {0, 0.7, 0.7, 1.0}};
    CHECK_THROWS_WITH_AS(mobius_inverse(bad), doctest::Contains("not a belief function"),
                         std::invalid_argument);
}

TEST_CASE("conjunctive combination enumerates focal intersections") {
    Frame f = Frame({"x", "y"});
    MassFunction m1 = explicit_mass(f, {{0b01, 0.6}, {0b11, 0.4}});
    MassFunction m2 = explicit_mass(f, {{0b10, 0.5}, {0b11, 0.5}});

    CombineResult un = conjunctive_combine(m1, m2, false);
    CHECK(un.conflict == doctest::Approx(0.3));
    CHECK(un.mass(0b00) == doctest::Approx(0.3));
    CHECK(un.mass(0b01) == doctest::Approx(0.3));
    CHECK(un.mass(0b10) == doctest::Approx(0.2));
    CHECK(un.mass(0b11) == doctest::Approx(0.2));

    CombineResult norm = conjunctive_combine(m1, m2, true);
    CHECK(norm.mass(0b01) == doctest::Approx(0.3 / 0.7));

    // Vacuous is the neutral element.
    CombineResult idm = conjunctive_combine(m1, vacuous_mass(f), false);
    for (std::uint32_t a = 0; a < 4; ++a) CHECK(idm.mass(a) == doctest::Approx(m1(a)));

    // Total conflict cannot be normalized.
    MassFunction cx = categorical_mass(f, 0b01);
    MassFunction cy = categorical_mass(f, 0b10);
    CHECK_THROWS_AS(conjunctive_combine(cx, cy, true), std::domain_error);
}

TEST_CASE("conditioning transfers mass to intersections") {
    Frame f = Frame({"x", "y"});
    CombineResult r = condition(vacuous_mass(f), 0b01);
    CHECK(r.mass(0b01) == 1.0);

    MassFunction m1 = explicit_mass(f, {{0b01, 0.6}, {0b11, 0.4}});
    CombineResult u = condition(m1, 0b10, false);
    CHECK(u.conflict == doctest::Approx(0.6));
    CHECK(u.mass(0b10) == doctest::Approx(0.4));
    CombineResult n = condition(m1, 0b10, true);
    CHECK(n.mass(0b10) == doctest::Approx(1.0));

    CHECK_THROWS(condition(m1, 0));
}

TEST_CASE("transform round trip, duality and combination laws on random masses") {
    std::mt19937_64 rng(20240811);
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
        Frame f(names);
        for (int rep = 0; rep < 20; ++rep) {
            MassFunction m = random_mass(f, rng);

            SetFunction bel = mobius_forward(m, SetKind::belief);
            MassFunction back = mobius_inverse(bel);
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a)
                CHECK(back(a) == doctest::Approx(m(a)).epsilon(1e-12).scale(1.0));

            SetFunction q = mobius_forward(m, SetKind::commonality);
            MassFunction backq = mobius_inverse(q);
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a)
                CHECK(backq(a) == doctest::Approx(m(a)).epsilon(1e-12).scale(1.0));

            SetFunction pl = mobius_forward(m, SetKind::plausibility);
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a) {
                CHECK(pl(a) ==
                      doctest::Approx(1.0 - bel(f.full_mask() & ~a)).epsilon(1e-12).scale(1.0));
            }

            // Monotonicity of bel under one-bit growth.
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a)
                for (int i = 0; i < n; ++i)
                    if (!(a & (1u << i))) CHECK(bel(a) <= bel(a | (1u << i)) + 1e-12);

            // Commonality homomorphism of the unnormalized combination.
            MassFunction m2 = random_mass(f, rng);
            CombineResult comb = conjunctive_combine(m, m2, false);
            SetFunction q1 = mobius_forward(m, SetKind::commonality);
            SetFunction q2 = mobius_forward(m2, SetKind::commonality);
            SetFunction q12 = mobius_forward(comb.mass, SetKind::commonality);
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a)
                CHECK(q12(a) == doctest::Approx(q1(a) * q2(a)).epsilon(1e-12).scale(1.0));

            // Conditioning equals combination with the categorical mass.
            std::uint32_t E = 1 + static_cast<std::uint32_t>(rng() % f.full_mask());
            CombineResult c1 = condition(m, E, false);
            CombineResult c2 = conjunctive_combine(m, categorical_mass(f, E), false);
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a)
                CHECK(c1.mass(a) == doctest::Approx(c2.mass(a)).epsilon(1e-12).scale(1.0));

            // Conditioning is idempotent.
            CombineResult c3 = condition(c1.mass, E, false);
            for (std::uint32_t a = 0; a <= f.full_mask(); ++a)
                CHECK(c3.mass(a) == doctest::Approx(c1.mass(a)).epsilon(1e-12).scale(1.0));
        }
    }
}
