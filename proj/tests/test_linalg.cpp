#include <doctest.h>

#include <numeric>
#include <random>

#include "torictodd/linalg.hpp"

using namespace torictodd;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Int(rows[i][j]);
    return m;
}

Int abs_det(const IntMatrix& m) {
    Int d = determinant(m);
    return d < 0 ? Int(-d) : d;
}

Int gcd_of_entries(const IntMatrix& m) {
    Int g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g = int_gcd(g, m.at(i, j));
    return g;
}

void check_snf_invariants(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.u.rows() == a.rows());
    CHECK(s.v.rows() == a.cols());
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs_det(s.u) == 1);
    CHECK(abs_det(s.v) == 1);
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    bool seen_zero = false;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(s.d.at(i, i) >= 0);
        if (s.d.at(i, i) == 0) seen_zero = true;
        else CHECK(!seen_zero);  // nonzero entries precede zeros
        if (i + 1 < n && s.d.at(i + 1, i + 1) != 0)
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
    if (n > 0) CHECK(s.d.at(0, 0) == gcd_of_entries(a));
}

}  // namespace

TEST_CASE("smith normal form of frozen examples") {
    SUBCASE("identity") {
        SmithDecomposition s = smith_normal_form(IntMatrix::identity(3));
        CHECK(s.d == IntMatrix::identity(3));
    }
    SUBCASE("2x2 with nontrivial divisors") {
        SmithDecomposition s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
        CHECK(s.d.at(0, 0) == 2);
        CHECK(s.d.at(1, 1) == 4);
    }
    SUBCASE("zero matrix") {
        SmithDecomposition s = smith_normal_form(IntMatrix(2, 3));
        CHECK(s.d == IntMatrix(2, 3));
        CHECK(s.u == IntMatrix::identity(2));
        CHECK(s.v == IntMatrix::identity(3));
    }
    SUBCASE("rectangular") {
        SmithDecomposition s = smith_normal_form(from_rows({{2, 0}, {0, 3}, {0, 0}}));
        CHECK(s.d.at(0, 0) == 1);
        CHECK(s.d.at(1, 1) == 6);
    }
    SUBCASE("negative entries normalize to nonnegative diagonal") {
        SmithDecomposition s = smith_normal_form(from_rows({{-2}}));
        CHECK(s.d.at(0, 0) == 2);
    }
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = Int(entry(rng));
        check_snf_invariants(a);
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == 30);
    CHECK(determinant(from_rows({{1, 1}, {2, 2}})) == 0);
    // determinant is multiplicative
    IntMatrix a = from_rows({{3, -1, 2}, {0, 4, 1}, {-2, 5, 0}});
    IntMatrix b = from_rows({{1, 2, 0}, {-1, 0, 3}, {2, 2, 2}});
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
}

TEST_CASE("rational solve") {
    SUBCASE("unique solution") {
        RatMatrix a = {{Rat(1), Rat(0)}, {Rat(-1), Rat(-2)}};
        auto x = solve_rational(a, {Rat(0), Rat(-1)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == Rat(0));
        CHECK((*x)[1] == make_rat(1, 2));
    }
    SUBCASE("inconsistent system") {
        RatMatrix a = {{Rat(1)}, {Rat(1)}};
        CHECK(!solve_rational(a, {Rat(0), Rat(1)}).has_value());
    }
    SUBCASE("underdetermined: free variables are zero") {
        RatMatrix a = {{Rat(1), Rat(1)}};
        auto x = solve_rational(a, {Rat(2)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == Rat(2));
        CHECK((*x)[1] == Rat(0));
    }
    SUBCASE("random consistent systems stay consistent") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> entry(-5, 5);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t m = 1 + trial % 3, n = 1 + (trial / 3) % 3;
            RatMatrix a(m, RatRow(n));
            RatRow x0(n);
            for (auto& row : a)
                for (auto& v : row) v = Rat(entry(rng));
            for (auto& v : x0) v = make_rat(entry(rng), 1 + std::abs(entry(rng)));
            RatRow b(m, Rat(0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
            auto x = solve_rational(a, b);
            REQUIRE(x.has_value());
            for (std::size_t i = 0; i < m; ++i) {
                Rat lhs(0);
                for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * (*x)[j];
                CHECK(lhs == b[i]);
            }
        }
    }
}

TEST_CASE("rank and nullspace") {
    RatMatrix a = {{Rat(1), Rat(1)}};
    CHECK(rational_rank(a) == 1);
    auto ns = rational_nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] + ns[0][1] == 0);

    RatMatrix b = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(rational_rank(b) == 1);
    CHECK(rational_nullspace(b).size() == 1);

    RatMatrix c = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(rational_rank(c) == 2);
    CHECK(rational_nullspace(c).empty());
}

TEST_CASE("primitivity of lattice vectors") {
    CHECK(is_primitive({Int(1), Int(0)}));
    CHECK(is_primitive({Int(-2), Int(-3)}));
    CHECK(is_primitive({Int(0), Int(0), Int(1)}));
    CHECK(!is_primitive({Int(2), Int(4)}));
    CHECK(!is_primitive({Int(0), Int(0)}));
    CHECK(!is_primitive({Int(-3), Int(0), Int(3)}));
}

TEST_CASE("integer helpers") {
    CHECK(floor_int(make_rat(7, 2)) == 3);
    CHECK(floor_int(make_rat(-7, 2)) == -4);
    CHECK(ceil_int(make_rat(7, 2)) == 4);
    CHECK(ceil_int(make_rat(-7, 2)) == -3);
    CHECK(mod_one(make_rat(7, 3)) == make_rat(1, 3));
    CHECK(mod_one(make_rat(-1, 4)) == make_rat(3, 4));
    CHECK(mod_one(Rat(2)) == 0);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 2) == 15);
    CHECK(is_integer(Rat(-3)));
    CHECK(!is_integer(make_rat(1, 2)));
}
