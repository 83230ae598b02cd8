#include <doctest.h>

#include <numeric>
#include <random>

#include "torictodd/cyclotomic.hpp"

using namespace torictodd;

namespace {

std::vector<long> coeffs_of(const std::vector<Int>& v) {
    std::vector<long> out;
    for (const auto& c : v) out.push_back(c.get_si());
    return out;
}

int moebius(unsigned n) {
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match frozen coefficients") {
    CHECK(coeffs_of(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(8)) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("euler phi via cyclotomic degree") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^n - 1") {
    for (unsigned n : {1u, 2u, 6u, 12u, 15u}) {
        // multiply all Phi_d for d | n as plain integer polynomials
        std::vector<Int> prod = {Int(1)};
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d) continue;
            auto phi = cyclotomic_polynomial(d);
            std::vector<Int> next(prod.size() + phi.size() - 1, Int(0));
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = next;
        }
        REQUIRE(prod.size() == n + 1);
        CHECK(prod[0] == -1);
        CHECK(prod[n] == 1);
        for (unsigned i = 1; i < n; ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("roots of unity") {
    CHECK(root_of_unity(Rat(0), 1).as_rational() == Rat(1));
    CHECK(root_of_unity(make_rat(1, 2), 2).as_rational() == Rat(-1));
    CHECK(root_of_unity(make_rat(1, 2), 4).as_rational() == Rat(-1));
    CHECK_THROWS_AS(root_of_unity(make_rat(1, 3), 4), std::invalid_argument);
    CHECK_THROWS_AS(root_of_unity(Rat(1), 2), std::invalid_argument);

    SUBCASE("additivity of exponents") {
        const unsigned n = 12;
        for (long a = 0; a < 12; ++a) {
            for (long b = 0; b < 12; ++b) {
                CycloNumber lhs = root_of_unity(mod_one(make_rat(a + b, 12)), n);
                CycloNumber rhs = root_of_unity(make_rat(a, 12), n) * root_of_unity(make_rat(b, 12), n);
                CHECK(lhs == rhs);
            }
        }
    }
    SUBCASE("primitive root has multiplicative order n") {
        for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
            CycloNumber z = root_of_unity(make_rat(1, n), n);
            CycloNumber p(n, Rat(1));
            for (unsigned k = 1; k < n; ++k) {
                p = p * z;
                CHECK(p.as_rational() != Rat(1));
            }
            p = p * z;
            CHECK(p.as_rational() == Rat(1));
        }
    }
}

TEST_CASE("field arithmetic") {
    CycloNumber one(4, Rat(1));
    CycloNumber z = root_of_unity(make_rat(1, 4), 4);

    SUBCASE("frozen inverse of 1 - i") {
        CycloNumber x = one - z;
        CycloNumber inv = x.inverse();
        CycloNumber expect = make_rat(1, 2) * (one + z);
        CHECK(inv == expect);
        CHECK(x * inv == one);
    }
    SUBCASE("as_rational on genuinely irrational elements is empty") {
        CHECK(!z.as_rational().has_value());
        CHECK(!root_of_unity(make_rat(1, 3), 3).as_rational().has_value());
    }
    SUBCASE("zero has no inverse") {
        CHECK_THROWS(CycloNumber(4).inverse());
    }
    SUBCASE("mixed conductors are rejected") {
        CHECK_THROWS_AS(CycloNumber(2, Rat(1)) + CycloNumber(3, Rat(1)), std::invalid_argument);
    }
    SUBCASE("random elements invert exactly") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> num(-4, 4);
        for (unsigned n : {5u, 8u, 12u}) {
            for (int trial = 0; trial < 25; ++trial) {
                CycloNumber x(n);
                bool zero = true;
                for (unsigned k = 0; k < euler_phi(n); ++k) {
                    int c = num(rng);
                    if (c) zero = false;
                    x += make_rat(c, 1 + (trial % 3)) * root_of_unity(make_rat(k, n), n);
                }
                if (zero) continue;
                CHECK(x * x.inverse() == CycloNumber(n, Rat(1)));
            }
        }
    }
}

TEST_CASE("sum of primitive roots equals the Moebius value") {
    for (unsigned n = 1; n <= 12; ++n) {
        CycloNumber sum(n);
        for (unsigned k = 0; k < n; ++k) {
            if (std::gcd(k == 0 ? n : k, n) != 1) continue;
            sum += root_of_unity(make_rat(k, n), n);
        }
        auto r = sum.as_rational();
        REQUIRE(r.has_value());
        CHECK(*r == Rat(moebius(n)));
    }
}

TEST_CASE("string rendering") {
    CHECK(CycloNumber(1, Rat(5)).str() == "5");
    CHECK(CycloNumber(3).str() == "0");
    CycloNumber z = root_of_unity(make_rat(1, 3), 3);
    CHECK(z.str().find("z") != std::string::npos);
}
