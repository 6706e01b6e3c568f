#include <catch2/catch_amalgamated.hpp>

#include "descent/catalog.hpp"

using namespace descent;

namespace {

// enumeration oracle for Hom(Z/a, Z/b): count residues k mod b with a*k = 0
long hom_cyclic_order_oracle(long a, long b) {
    long count = 0;
    for (long k = 0; k < b; ++k)
        if ((a * k) % b == 0) ++count;
    return count;
}

long group_order(const FgAbelianGroup& g) {
    auto f = g.invariant_factors();
    if (f.free_rank > 0) return -1;  // infinite
    long o = 1;
    for (const Int& d : f.torsion) o *= d.get_si();
    return o;
}

}  // namespace

TEST_CASE("hom groups on the worked examples") {
    SECTION("free rank-1 source gives the target back") {
        ModuleOverRing z = as_Z_module(FgAbelianGroup::free_group(1));
        ModuleOverRing m = as_Z_module(FgAbelianGroup(2, Mat::from_rows({{0}, {6}})));
        HomGroup h(z, m);
        REQUIRE(h.group().invariant_factors() == m.underlying().invariant_factors());
    }
    SECTION("Hom(Z/2, Z/4) = Z/2, frozen from the enumeration oracle") {
        REQUIRE(hom_cyclic_order_oracle(2, 4) == 2);
        ModuleOverRing z2 = as_Z_module(FgAbelianGroup(1, Mat::from_rows({{2}})));
        ModuleOverRing z4 = as_Z_module(FgAbelianGroup(1, Mat::from_rows({{4}})));
        HomGroup h(z2, z4);
        REQUIRE(h.group().invariant_factors().str() == "Z/2");
        REQUIRE(group_order(h.group()) == 2);
    }
    SECTION("A-linear endomorphisms of A = Z x Z form Z^2") {
        RingSpec zz = ring_Zn_product(2);
        ModuleOverRing a = ring_as_module(zz);
        HomGroup h(a, a);
        REQUIRE(h.group().invariant_factors().str() == "Z^2");
        // representatives commute with the idempotent actions: diagonal matrices
        for (int i = 0; i < h.rank(); ++i) {
            const Mat& rep = h.basis_rep(i);
            REQUIRE(sgn(rep(0, 1)) == 0);
            REQUIRE(sgn(rep(1, 0)) == 0);
        }
    }
    SECTION("ring mismatch is rejected") {
        ModuleOverRing z = as_Z_module(FgAbelianGroup::free_group(1));
        ModuleOverRing a = ring_as_module(ring_Zn_product(2));
        REQUIRE_THROWS_AS(HomGroup(z, a), error);
    }
}

TEST_CASE("coordinates and representatives round trip") {
    ModuleOverRing m = as_Z_module(FgAbelianGroup(2, Mat::from_rows({{2, 0}, {0, 0}})));
    ModuleOverRing n = as_Z_module(FgAbelianGroup(2, Mat::from_rows({{4, 0}, {0, 0}})));
    HomGroup h(m, n);
    for (int a = 0; a < h.rank(); ++a) {
        auto coords = h.coordinates(h.basis_rep(a));
        REQUIRE(coords.has_value());
        ModuleMap back = h.rep_from_coordinates(*coords);
        REQUIRE(back.as_group_map().equals(ModuleMap(m, n, h.basis_rep(a)).as_group_map()));
    }
}

TEST_CASE("induced maps are functorial") {
    ModuleOverRing z = as_Z_module(FgAbelianGroup::free_group(1));
    ModuleOverRing z2 = as_Z_module(FgAbelianGroup(1, Mat::from_rows({{2}})));
    HomGroup hz(z, z), h2(z, z2);
    ModuleMap red(z, z2, Mat::from_rows({{1}}));
    GroupMap induced = hom_induced_post(hz, h2, red);
    REQUIRE(induced.source().same_presentation(hz.group()));
    REQUIRE(induced.target().same_presentation(h2.group()));
    REQUIRE(is_surjective(induced));
}

TEST_CASE("adjunction cardinality: hom(M smash A, N) = hom(M, restrict N)") {
    for (auto& entry : ring_map_catalog()) {
        const RingMap& phi = entry.phi;
        ModuleOverRing a_mod = ring_as_module(phi.target());
        for (auto& [name, m] : probe_modules(phi)) {
            ModuleOverRing up = base_change(m, phi);
            HomGroup lhs(up, a_mod);
            HomGroup rhs(m, restrict_scalars(a_mod, phi));
            REQUIRE(lhs.group().invariant_factors() == rhs.group().invariant_factors());

            // canonical comparison f |-> f o eta is a bijection on representatives
            MonadHandle<ModCat> t = monad_T_phi(phi);
            ModuleMap eta = t.unit(m);
            Mat cmp(rhs.rank(), lhs.rank());
            for (int i = 0; i < lhs.rank(); ++i) {
                Mat composed = mul(lhs.basis_rep(i), eta.matrix());
                auto coords = rhs.coordinates(composed);
                REQUIRE(coords.has_value());
                for (int r = 0; r < rhs.rank(); ++r) cmp(r, i) = (*coords)[r];
            }
            GroupMap canonical(lhs.group(), rhs.group(), std::move(cmp));
            REQUIRE(is_isomorphism(canonical));
        }
    }
}
