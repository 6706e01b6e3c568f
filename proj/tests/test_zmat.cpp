#include <catch2/catch_amalgamated.hpp>

#include "descent/zmat.hpp"
#include "descent/rng.hpp"

using namespace descent;

namespace {

// independent oracle: gcd of all entries and gcd of all 2x2 minors
Int gcd_of_entries(const Mat& m) {
    Int g = 0;
    for (const Int& x : m.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}
Int gcd_of_2x2_minors(const Mat& m) {
    Int g = 0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.rows; ++j)
            for (int k = 0; k < m.cols; ++k)
                for (int l = k + 1; l < m.cols; ++l) {
                    Int minor = m(i, k) * m(j, l) - m(i, l) * m(j, k);
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
                }
    return g;
}

void check_snf_contract(const Mat& m) {
    SmithResult s = smith(m);
    REQUIRE(mul(mul(s.U, m), s.V) == s.D);
    REQUIRE(mul(s.U, s.Uinv) == Mat::identity(m.rows));
    REQUIRE(mul(s.V, s.Vinv) == Mat::identity(m.cols));
    Int du = det_bareiss(s.U), dv = det_bareiss(s.V);
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    auto d = s.diagonal();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        REQUIRE(sgn(d[i]) >= 0);
        if (sgn(d[i]) == 0) REQUIRE(sgn(d[i + 1]) == 0);
        if (sgn(d[i]) != 0) REQUIRE(sgn(d[i + 1] % d[i]) == 0);
    }
    // off-diagonal zero
    for (int i = 0; i < s.D.rows; ++i)
        for (int j = 0; j < s.D.cols; ++j)
            if (i != j) REQUIRE(sgn(s.D(i, j)) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the worked examples") {
    SECTION("identity case") {
        Mat m = Mat::from_rows({{1}});
        REQUIRE(smith(m).D == Mat::from_rows({{1}}));
    }
    SECTION("already diagonal") {
        Mat m = Mat::from_rows({{2, 0}, {0, 4}});
        REQUIRE(smith(m).D == m);
    }
    SECTION("hand-reduced 2x2") {
        // row/column reduction oracle gives diag(2,4); cross-check d1 = gcd of
        // entries, d1*d2 = gcd of 2x2 minors
        Mat m = Mat::from_rows({{2, 4}, {6, 8}});
        SmithResult s = smith(m);
        REQUIRE(s.D == Mat::from_rows({{2, 0}, {0, 4}}));
        REQUIRE(gcd_of_entries(m) == s.D(0, 0));
        REQUIRE(gcd_of_2x2_minors(m) == s.D(0, 0) * s.D(1, 1));
        check_snf_contract(m);
    }
    SECTION("zero and empty matrices") {
        check_snf_contract(Mat(3, 2));
        check_snf_contract(Mat(0, 4));
        check_snf_contract(Mat(4, 0));
    }
}

TEST_CASE("smith normal form contract on seeded random matrices") {
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        int r = rng.uniform(1, 5), c = rng.uniform(1, 5);
        Mat m(r, c);
        for (Int& x : m.a) x = rng.uniform(-9, 9);
        check_snf_contract(m);
    }
}

TEST_CASE("smith normal form is deterministic") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int r = rng.uniform(1, 5), c = rng.uniform(1, 5);
        Mat m(r, c);
        for (Int& x : m.a) x = rng.uniform(-9, 9);
        SmithResult a = smith(m), b = smith(m);
        REQUIRE(a.U == b.U);
        REQUIRE(a.D == b.D);
        REQUIRE(a.V == b.V);
    }
}

TEST_CASE("column echelon, kernels and solves") {
    SECTION("kernel of (1 1)") {
        Mat m = Mat::from_rows({{1, 1}});
        Mat k = kernel_basis(m);
        REQUIRE(k.cols == 1);
        REQUIRE(mul(m, k).is_zero());
    }
    SECTION("solve with divisibility") {
        Mat m = Mat::from_rows({{2, 0}, {0, 3}});
        auto x = solve_one(m, {Int(4), Int(9)});
        REQUIRE(x.has_value());
        REQUIRE((*x)[0] == 2);
        REQUIRE((*x)[1] == 3);
        REQUIRE_FALSE(solve_one(m, {Int(1), Int(0)}).has_value());
    }
    SECTION("random solve round trips") {
        Rng rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            int r = rng.uniform(1, 4), c = rng.uniform(1, 4);
            Mat m(r, c);
            for (Int& v : m.a) v = rng.uniform(-5, 5);
            std::vector<Int> x(static_cast<size_t>(c));
            for (Int& v : x) v = rng.uniform(-4, 4);
            auto sol = solve_one(m, mul_vec(m, x));
            REQUIRE(sol.has_value());
            REQUIRE(mul_vec(m, *sol) == mul_vec(m, x));
        }
    }
    SECTION("lattice basis spans the same lattice") {
        Rng rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            int r = rng.uniform(1, 4), c = rng.uniform(1, 5);
            Mat m(r, c);
            for (Int& v : m.a) v = rng.uniform(-5, 5);
            Mat b = lattice_basis(m);
            // every original column solvable in the basis and vice versa
            for (int j = 0; j < m.cols; ++j) REQUIRE(solve_one(b, m.col(j)).has_value());
            for (int j = 0; j < b.cols; ++j) REQUIRE(solve_one(m, b.col(j)).has_value());
        }
    }
}

TEST_CASE("bareiss determinant matches cofactor expansion on small cases") {
    Mat m = Mat::from_rows({{2, 4}, {6, 8}});
    REQUIRE(det_bareiss(m) == -8);
    Mat id = Mat::identity(4);
    REQUIRE(det_bareiss(id) == 1);
    Mat sing = Mat::from_rows({{1, 2}, {2, 4}});
    REQUIRE(det_bareiss(sing) == 0);
}
