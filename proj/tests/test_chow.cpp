#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "torictodd/chow.hpp"
#include "torictodd/linalg.hpp"
#include "torictodd/errors.hpp"

using namespace torictodd;

namespace {

ChowClass from_map(unsigned conductor, const std::map<std::vector<int>, Rat>& m) {
    return ChowClass::from_rational(conductor, m);
}

Rat integrate_rat(const ChowRing& ring, const ChowClass& c) {
    auto r = ring.integrate(c).as_rational();
    REQUIRE(r.has_value());
    return *r;
}

}  // namespace

TEST_CASE("chow classes accumulate and prune") {
    ChowClass c;
    c.add({0}, Rat(1));
    c.add({0}, Rat(-1));
    CHECK(c.is_zero());
    c.add({1}, make_rat(1, 2));
    c.add({}, Rat(3));
    CHECK(c.degrees() == std::set<int>{0, 1});
    auto rt = c.rational_terms();
    CHECK(rt.at({1}) == make_rat(1, 2));
}

TEST_CASE("rings require complete fans") {
    Fan quadrant = Fan::validated(2, {{1, 0}, {0, 1}}, {{0, 1}}, "quadrant");
    CHECK_THROWS_AS(ChowRing{quadrant}, incomplete_fan_error);
}

TEST_CASE("products on the projective plane") {
    Fan f = make_p2();
    ChowRing ring(f);

    SUBCASE("fundamental class integrates to zero, points to one") {
        CHECK(integrate_rat(ring, ring.monomial({})) == 0);
        CHECK(integrate_rat(ring, ring.monomial({0, 1})) == 1);
        CHECK(integrate_rat(ring, ring.monomial({0, 0})) == 1);
        CHECK(integrate_rat(ring, ring.monomial({2, 2})) == 1);
    }
    SUBCASE("triple products vanish above the dimension") {
        CHECK(ring.monomial({0, 1, 2}).is_zero());
        CHECK(ring.monomial({0, 0, 0}).is_zero());
    }
    SUBCASE("all hyperplane classes are numerically equal") {
        CHECK(ring.equal(ring.divisor_class(0), ring.divisor_class(1)));
        CHECK(ring.equal(ring.divisor_class(1), ring.divisor_class(2)));
    }
    SUBCASE("step_off lands on the joint cone") {
        auto m = ring.step_off({0}, 1);
        REQUIRE(m.size() == 1);
        CHECK(m.at({0, 1}) == Rat(1));
        CHECK(ring.step_off({0, 1}, 2).empty());  // no 3-cone
    }
    SUBCASE("self-intersection through the linear relation") {
        auto m = ring.step_diag({0}, 0);
        Rat total(0);
        for (const auto& [cone, coeff] : m) {
            CHECK(cone.size() == 2);
            total += coeff;
        }
        CHECK(total == Rat(1));  // degree of O(1) on P^2
    }
}

TEST_CASE("rulings of the quadric surface") {
    Fan f = make_p1xp1();
    ChowRing ring(f);
    ChowClass h1 = ring.divisor_class(0), h2 = ring.divisor_class(2);
    CHECK(!ring.equal(h1, h2));
    CHECK(ring.equal(h1, ring.divisor_class(1)));
    CHECK(integrate_rat(ring, ring.monomial({0, 2})) == 1);
    CHECK(ring.monomial({0, 1}).is_zero());  // rays of one ruling never meet
    CHECK(integrate_rat(ring, ring.monomial({0, 0})) == 0);  // square of a fiber
}

TEST_CASE("weighted plane intersection numbers carry the multiplicity") {
    Fan f = make_p112();
    ChowRing ring(f);
    CHECK(integrate_rat(ring, ring.monomial({0, 2})) == make_rat(1, 2));
    CHECK(integrate_rat(ring, ring.monomial({0, 1})) == 1);
    // self-intersection of the weight-one ray through the linear relation
    CHECK(integrate_rat(ring, ring.monomial({2, 2})) == make_rat(1, 2));
    CHECK(integrate_rat(ring, ring.monomial({1, 1})) == Rat(2));

    Fan g = make_p123();
    ChowRing ring3(g);
    CHECK(integrate_rat(ring3, ring3.monomial({1, 2})) == make_rat(1, 2));
    CHECK(integrate_rat(ring3, ring3.monomial({0, 2})) == make_rat(1, 3));
    CHECK(integrate_rat(ring3, ring3.monomial({2, 2})) == make_rat(1, 6));
}

TEST_CASE("point classes integrate to the reciprocal multiplicity") {
    for (const Fan& f : {make_p2(), make_p112(), make_p123(), make_p3(),
                         make_nonpolytopal3()}) {
        ChowRing ring(f);
        for (const auto& c : f.max_cones()) {
            ChowClass pt = ring.monomial(c);
            Rat got = integrate_rat(ring, pt);
            CHECK(got == Rat(1) / Rat(f.multiplicity(c)));
        }
    }
}

TEST_CASE("linear relations pair to zero") {
    for (const Fan& f : {make_p2(), make_p1xp1(), make_p112(), make_p123(),
                         make_nonpolytopal3()}) {
        ChowRing ring(f);
        int d = f.dim();
        for (int i = 0; i < d; ++i) {
            // class of the relation sum_tau <e_i, n_tau> F_tau
            ChowClass rel(ring.conductor());
            for (int t = 0; t < f.ray_count(); ++t)
                rel.add({t}, Rat(f.rays()[t][i]));
            CHECK(ring.equal(rel, ChowClass(ring.conductor())));
        }
    }
}

TEST_CASE("reduction order does not matter") {
    for (const Fan& f : {make_p112(), make_p123()}) {
        ChowRing ring(f);
        std::vector<std::vector<int>> words = {{0, 2}, {2, 2}, {1, 2}, {0, 0}};
        for (const auto& w : words) {
            ChowClass forward = ring.monomial({});
            for (int ray : w) forward = ring.multiply_by_divisor(forward, ray);
            ChowClass backward = ring.monomial({});
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                backward = ring.multiply_by_divisor(backward, *it);
            CHECK(ring.equal(forward, backward));
            CHECK(ring.integrate(forward) == ring.integrate(backward));
        }
    }
}

TEST_CASE("dual functional choice does not change the relation class") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const Fan& f : {make_p2(), make_p1xp1(), make_p3()}) {
        ChowRing ring(f);
        for (const auto& dim_cones : f.cones_by_dim()) {
            for (const auto& cone : dim_cones) {
                if (cone.rays.empty() || cone.dim() == f.dim()) continue;
                for (int ray : cone.rays) {
                    // canonical m plus a random element of the null space of
                    // the ray-evaluation system stays a valid dual functional
                    RatMatrix a;
                    RatRow b;
                    for (int t : cone.rays) {
                        RatRow row;
                        for (int i = 0; i < f.dim(); ++i)
                            row.push_back(Rat(f.rays()[t][i]));
                        a.push_back(row);
                        b.push_back(t == ray ? Rat(1) : Rat(0));
                    }
                    auto m0 = solve_rational(a, b);
                    REQUIRE(m0.has_value());
                    auto null_basis = rational_nullspace(a);
                    std::vector<Rat> m = *m0;
                    for (const auto& v : null_basis) {
                        Rat s(coef(rng));
                        for (std::size_t i = 0; i < m.size(); ++i) m[i] += s * v[i];
                    }
                    auto canonical = ring.step_diag(cone.rays, ray);
                    auto shifted = ring.step_diag(cone.rays, ray, &m);
                    ChowClass ca = from_map(1, canonical), cb = from_map(1, shifted);
                    CHECK(ring.equal(ca, cb));
                }
            }
        }
    }
}

TEST_CASE("invalid dual functionals are rejected") {
    Fan f = make_p2();
    ChowRing ring(f);
    std::vector<Rat> wrong = {Rat(0), Rat(0)};  // <m, n_0> must be 1
    CHECK_THROWS_AS(ring.step_diag({0}, 0, &wrong), std::invalid_argument);
}

TEST_CASE("pairing equality demands pure degrees") {
    Fan f = make_p2();
    ChowRing ring(f);
    ChowClass mixed;
    mixed.add({}, Rat(1));
    mixed.add({0}, Rat(1));
    CHECK_THROWS_AS(ring.equal(mixed, mixed), std::invalid_argument);
}

TEST_CASE("conductor mismatches are rejected") {
    ChowClass a(2), b(3);
    a.add({0}, Rat(1));
    b.add({0}, Rat(1));
    CHECK_THROWS_AS(a += b, std::invalid_argument);
}

TEST_CASE("pairing matrix on divisors has rank equal to the Picard number") {
    struct Case {
        Fan fan;
        std::size_t rank;
    };
    // rank of (int F_i F_j) equals dim of the degree-1 part: rays - dim
    std::vector<Case> cases;
    cases.push_back({make_p2(), 1});
    cases.push_back({make_p1xp1(), 2});
    cases.push_back({make_hirzebruch1(), 2});
    cases.push_back({make_p112(), 1});
    for (const auto& [f, rank] : cases) {
        ChowRing ring(f);
        std::size_t n = static_cast<std::size_t>(f.ray_count());
        RatMatrix m(n, RatRow(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = integrate_rat(
                    ring, ring.monomial({static_cast<int>(i), static_cast<int>(j)}));
        CHECK(rational_rank(m) == rank);
    }
}

TEST_CASE("cyclotomic coefficients flow through scaling and integration") {
    Fan f = make_p112();
    ChowRing ring(f, 4);
    CycloNumber i4 = root_of_unity(make_rat(1, 4), 4);
    ChowClass c = ring.monomial({0, 1}).scaled(i4);
    CycloNumber val = ring.integrate(c);
    CHECK(val == i4);
    CHECK_THROWS_AS(c.rational_terms(), rationality_error);
}
