#include <catch2/catch_amalgamated.hpp>

#include "descent/abelian.hpp"
#include "descent/rng.hpp"

using namespace descent;

TEST_CASE("invariant factors and formatting") {
    FgAbelianGroup z = FgAbelianGroup::free_group(1);
    REQUIRE(z.invariant_factors().str() == "Z");
    FgAbelianGroup z2(1, Mat::from_rows({{2}}));
    REQUIRE(z2.invariant_factors().str() == "Z/2");
    FgAbelianGroup zero = FgAbelianGroup::zero();
    REQUIRE(zero.invariant_factors().str() == "0");
    // Z^2 + Z/2
    FgAbelianGroup m(3, Mat::from_rows({{2}, {0}, {0}}));
    REQUIRE(m.invariant_factors().str() == "Z^2 + Z/2");
    // ordering normalized to the divisibility chain
    FgAbelianGroup t(2, Mat::from_rows({{4, 0}, {0, 2}}));
    REQUIRE(t.invariant_factors().str() == "Z/2 + Z/4");
    // a presentation of Z/1 is the zero group
    FgAbelianGroup one(1, Mat::from_rows({{1}}));
    REQUIRE(one.is_zero_group());
}

TEST_CASE("cokernel of multiplication by 2 on Z is Z/2") {
    FgAbelianGroup z = FgAbelianGroup::free_group(1);
    GroupMap times2(z, z, Mat::from_rows({{2}}));
    CokernelResult c = cokernel(times2);
    REQUIRE(c.object.invariant_factors().str() == "Z/2");
    // projection coequalizes: proj o f = 0
    REQUIRE(compose(c.projection, times2).is_zero_map());
}

TEST_CASE("kernel of (1 1): Z^2 -> Z is Z") {
    FgAbelianGroup z = FgAbelianGroup::free_group(1);
    FgAbelianGroup z2 = FgAbelianGroup::free_group(2);
    GroupMap sum(z2, z, Mat::from_rows({{1, 1}}));
    KernelResult k = kernel(sum);
    REQUIRE(k.object.invariant_factors().str() == "Z");
    REQUIRE(compose(sum, k.inclusion).is_zero_map());
}

TEST_CASE("kernel respects torsion targets") {
    // kernel of Z -> Z/2 (reduction) is 2Z, i.e. Z
    FgAbelianGroup z = FgAbelianGroup::free_group(1);
    FgAbelianGroup z2(1, Mat::from_rows({{2}}));
    GroupMap red(z, z2, Mat::from_rows({{1}}));
    KernelResult k = kernel(red);
    REQUIRE(k.object.invariant_factors().str() == "Z");
    REQUIRE(compose(red, k.inclusion).is_zero_map());
    // the inclusion is multiplication by 2 up to sign
    REQUIRE(k.inclusion.matrix()(0, 0) * k.inclusion.matrix()(0, 0) == 4);
}

TEST_CASE("invariant factors are independent of generator ordering") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int g = rng.uniform(1, 4), r = rng.uniform(0, 4);
        Mat rel(g, r);
        for (Int& x : rel.a) x = rng.uniform(-6, 6);
        FgAbelianGroup a(g, rel);
        // permute the generators (rows) by a random transposition chain
        std::vector<int> perm(static_cast<size_t>(g));
        for (int i = 0; i < g; ++i) perm[i] = i;
        for (int i = 0; i < g; ++i) std::swap(perm[i], perm[rng.uniform(0, g - 1)]);
        Mat prel(g, r);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < r; ++j) prel(perm[i], j) = rel(i, j);
        FgAbelianGroup b(g, prel);
        REQUIRE(a.invariant_factors() == b.invariant_factors());
    }
}

TEST_CASE("normalization produces the invariant-factor presentation with inverse maps") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int g = rng.uniform(1, 4), r = rng.uniform(0, 4);
        Mat rel(g, r);
        for (Int& x : rel.a) x = rng.uniform(-6, 6);
        FgAbelianGroup a(g, rel);
        NormalizedGroup n = normalize(a);
        REQUIRE(n.object.invariant_factors() == a.invariant_factors());
        REQUIRE(compose(n.forward, n.backward).equals(GroupMap::identity(n.object)));
        REQUIRE(compose(n.backward, n.forward).equals(GroupMap::identity(a)));
    }
}

TEST_CASE("iso detection via kernel and cokernel") {
    FgAbelianGroup z4(1, Mat::from_rows({{4}}));
    FgAbelianGroup z2xz2(2, Mat::from_rows({{2, 0}, {0, 2}}));
    // no isomorphism Z/4 ~ Z/2+Z/2: any map has nontrivial kernel or cokernel
    GroupMap f(z4, z2xz2, Mat::from_rows({{1}, {1}}));
    REQUIRE_FALSE(is_isomorphism(f));
    // a unimodular change of basis is an isomorphism
    FgAbelianGroup z2free = FgAbelianGroup::free_group(2);
    GroupMap u(z2free, z2free, Mat::from_rows({{1, 1}, {0, 1}}));
    REQUIRE(is_isomorphism(u));
    auto inv = inverse_of(u);
    REQUIRE(inv.has_value());
    REQUIRE(compose(*inv, u).equals(GroupMap::identity(z2free)));
}

TEST_CASE("group map validation rejects ill-defined matrices") {
    FgAbelianGroup z2(1, Mat::from_rows({{2}}));
    FgAbelianGroup z = FgAbelianGroup::free_group(1);
    // Z/2 -> Z by 1 is not well defined (2 must map into 0)
    REQUIRE_THROWS_AS(GroupMap(z2, z, Mat::from_rows({{1}})), error);
    // Z/2 -> Z/4 by 1 is not well defined; by 2 it is
    FgAbelianGroup z4(1, Mat::from_rows({{4}}));
    REQUIRE_THROWS_AS(GroupMap(z2, z4, Mat::from_rows({{1}})), error);
    REQUIRE_NOTHROW(GroupMap(z2, z4, Mat::from_rows({{2}})));
}
