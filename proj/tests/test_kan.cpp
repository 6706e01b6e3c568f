#include <catch2/catch_amalgamated.hpp>

#include "descent/fixtures.hpp"

using namespace descent;

TEST_CASE("comma categories") {
    SECTION("identity functor: one object per arrow into d, with a terminal identity") {
        FinCat d = arrow_category();
        CatFunctor id = CatFunctor::identity(d);
        CommaCategory comma = simp_phi(id, d.object_index("d1"));
        // objects: (d0, d0<d1) and (d1, id_d1)
        REQUIRE(comma.objects.size() == 2);
        REQUIRE(comma.category.morphisms.size() >= 3);  // two identities and the connecting map
    }
    SECTION("one-object source with the far target") {
        FinCat d = arrow_category();
        CatFunctor phi = full_subcategory_inclusion(d, {0});  // picks d0
        CommaCategory comma = simp_phi(phi, d.object_index("d1"));
        REQUIRE(comma.objects.size() == 1);
        REQUIRE(comma.category.morphisms.size() == 1);  // just the identity
    }
    SECTION("empty source gives the empty category") {
        FinCat d = arrow_category();
        FinCat empty({}, {}, {}, {});
        CatFunctor phi(empty, d, {}, {});
        CommaCategory comma = simp_phi(phi, 0);
        REQUIRE(comma.objects.empty());
    }
}

TEST_CASE("left Kan extension on the worked examples") {
    FinCat d = arrow_category();
    SECTION("identity functor returns the diagram") {
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        LeftKanDiagram<SetCat> lan = left_kan(CatFunctor::identity(d), x);
        for (size_t o = 0; o < d.objects.size(); ++o)
            REQUIRE(lan.diagram.value_of[o].size() == x.value_of[o].size());
    }
    SECTION("point into the arrow, set values") {
        CatFunctor phi = full_subcategory_inclusion(d, {0});
        Diagram<SetCat> x = constant_set_diagram(phi.source, FinSet({"p", "q"}));
        LeftKanDiagram<SetCat> lan = left_kan(phi, x);
        REQUIRE(lan.diagram.value_of[0].size() == 2);
        REQUIRE(lan.diagram.value_of[1].size() == 2);
    }
    SECTION("point into the arrow, group values") {
        CatFunctor phi = full_subcategory_inclusion(d, {0});
        Diagram<SetCat> xs = constant_set_diagram(phi.source, FinSet({"p"}));
        Diagram<AbCat> x = linearize(xs);
        LeftKanDiagram<AbCat> lan = left_kan(phi, x);
        REQUIRE(lan.diagram.value_of[1].invariant_factors().str() == "Z");
    }
}

TEST_CASE("kan comonad laws") {
    SECTION("identity functor gives the identity comonad") {
        FinCat d = arrow_category();
        auto k = kan_comonad<SetCat>(CatFunctor::identity(d));
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        REQUIRE(check_comonad_laws(k, {x}).all_passed());
    }
    SECTION("arrow example, both value kinds") {
        FinCat d = arrow_category();
        CatFunctor phi = full_subcategory_inclusion(d, {0});
        auto ks = kan_comonad<SetCat>(phi);
        Diagram<SetCat> xs = representable_set_diagram(d, 0);
        REQUIRE(check_comonad_laws(ks, {xs}).all_passed());
        auto ka = kan_comonad<AbCat>(phi);
        Diagram<AbCat> xa = linearize(xs);
        REQUIRE(check_comonad_laws(ka, {xa}).all_passed());
    }
    SECTION("constant diagrams over the z2 monoid") {
        FinCat d = z2_monoid_category();
        CatFunctor phi = CatFunctor::identity(d);
        auto k = kan_comonad<SetCat>(phi);
        Diagram<SetCat> x = constant_set_diagram(d, FinSet({"u", "v"}));
        REQUIRE(check_comonad_laws(k, {x}).all_passed());
    }
}

TEST_CASE("fullness identity") {
    FinCat d = arrow_category();
    SECTION("identity functor") {
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        auto r = fullness_identity_check(CatFunctor::identity(d), x, 0);
        REQUIRE(r.applicable);
        REQUIRE(r.report.all_passed());
    }
    SECTION("full inclusion of a one-object subcategory") {
        CatFunctor phi = full_subcategory_inclusion(d, {0});
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        auto r = fullness_identity_check(phi, x, 0);
        REQUIRE(r.applicable);
        REQUIRE(r.report.all_passed());
        auto ra = fullness_identity_check(phi, linearize(x), 0);
        REQUIRE(ra.report.all_passed());
    }
    SECTION("non-full functor is skipped with a verdict") {
        FinCat disc = discrete_category({"a", "b"});
        CatFunctor phi(disc, d, {0, 1}, {d.identity_of[0], d.identity_of[1]});
        REQUIRE_FALSE(phi.is_full());
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        auto r = fullness_identity_check(phi, x, 0);
        REQUIRE_FALSE(r.applicable);
        REQUIRE_FALSE(r.report.unchecked.empty());
    }
}

TEST_CASE("assembly pi_0 comparison") {
    FinCat d = arrow_category();
    SECTION("identity functor holds") {
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        REQUIRE(assembly_pi0_check(CatFunctor::identity(d), x, 1).holds);
    }
    SECTION("cofree diagrams hold") {
        CatFunctor phi = full_subcategory_inclusion(d, {0});
        auto k = kan_comonad<SetCat>(phi);
        Diagram<SetCat> y = representable_set_diagram(d, 0);
        Diagram<SetCat> cofree = k.apply(y);
        for (size_t o = 0; o < d.objects.size(); ++o)
            REQUIRE(assembly_pi0_check(phi, cofree, static_cast<int>(o)).holds);
        auto ka = kan_comonad<AbCat>(phi);
        Diagram<AbCat> ya = linearize(y);
        Diagram<AbCat> cofree_a = ka.apply(ya);
        for (size_t o = 0; o < d.objects.size(); ++o)
            REQUIRE(assembly_pi0_check(phi, cofree_a, static_cast<int>(o)).holds);
    }
    SECTION("an object receiving nothing from the image fails with empty coequalizer") {
        CatFunctor phi = full_subcategory_inclusion(d, {1});
        Diagram<SetCat> x = representable_set_diagram(d, 0);
        auto r = assembly_pi0_check(phi, x, 0);
        REQUIRE_FALSE(r.holds);
        REQUIRE(r.coequalizer.size() == 0);
    }
}

TEST_CASE("kan bar construction") {
    FinCat d = arrow_category();
    CatFunctor phi = full_subcategory_inclusion(d, {0});
    SECTION("identities hold on the bar of a constant diagram") {
        Diagram<SetCat> x = constant_set_diagram(d, FinSet({"u"}));
        auto nerve = kan_bar(phi, x, 3);
        REQUIRE(check_simplicial_identities(nerve.object).all_passed());
        REQUIRE(augmentation_coequalized(nerve));
    }
    SECTION("cofree diagrams certify contractibility") {
        Diagram<SetCat> y = representable_set_diagram(d, 0);
        auto cert = kan_bar_cofree_certificate(phi, y, 3);
        REQUIRE(cert.certified);
        auto cert_a = kan_bar_cofree_certificate<AbCat>(phi, linearize(y), 3);
        REQUIRE(cert_a.certified);
    }
}

TEST_CASE("set and free-abelian left Kan extensions match in size") {
    // linearization is a left adjoint, so it commutes with the colimit:
    // the group value is free of rank the cardinality of the set value
    for (auto& cs : kan_suite_functors()) {
        const CatFunctor& phi = cs.phi;
        for (auto& xs : kan_suite_set_diagrams(phi.target)) {
            Diagram<SetCat> cx = precompose(phi, xs);
            LeftKanDiagram<SetCat> lan_s = left_kan(phi, cx);
            LeftKanDiagram<AbCat> lan_a = left_kan(phi, linearize(cx));
            for (size_t o = 0; o < phi.target.objects.size(); ++o) {
                auto f = lan_a.diagram.value_of[o].invariant_factors();
                REQUIRE(f.torsion.empty());
                REQUIRE(f.free_rank == lan_s.diagram.value_of[o].size());
            }
        }
    }
}
