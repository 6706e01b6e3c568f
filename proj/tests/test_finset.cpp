#include <catch2/catch_amalgamated.hpp>

#include "descent/codescent.hpp"
#include "descent/rng.hpp"

using namespace descent;

namespace {

FinSet fs(std::vector<std::string> v) { return FinSet(std::move(v)); }

FinSetMap map_by_labels(const FinSet& s, const FinSet& t, const std::vector<std::string>& images) {
    std::vector<int> img;
    for (const auto& l : images) img.push_back(t.index_of(l));
    return FinSetMap(s, t, std::move(img));
}

// fibers of size 2 and 1: phi: {0,1,2} -> {a,b} with 0,1 over a and 2 over b
FinSetMap phi_21() {
    return map_by_labels(fs({"0", "1", "2"}), fs({"a", "b"}), {"a", "a", "b"});
}

long pow_long(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

FinSetMap random_map(Rng& rng, int max_src, int max_tgt, const std::string& prefix) {
    int ns = static_cast<int>(rng.uniform(1, max_src));
    int nt = static_cast<int>(rng.uniform(1, max_tgt));
    std::vector<std::string> se, te;
    for (int i = 0; i < ns; ++i) se.push_back(prefix + "s" + std::to_string(i));
    for (int i = 0; i < nt; ++i) te.push_back(prefix + "t" + std::to_string(i));
    std::vector<int> img;
    for (int i = 0; i < ns; ++i) img.push_back(static_cast<int>(rng.uniform(0, nt - 1)));
    return FinSetMap(fs(se), fs(te), std::move(img));
}

Bundle random_bundle(Rng& rng, const FinSet& base, int max_total) {
    int nx = static_cast<int>(rng.uniform(0, max_total));
    std::vector<std::string> xe;
    for (int i = 0; i < nx; ++i) xe.push_back("x" + std::to_string(i));
    std::vector<int> img;
    for (int i = 0; i < nx; ++i) img.push_back(static_cast<int>(rng.uniform(0, base.size() - 1)));
    FinSet tot(xe);
    return Bundle(tot, base, FinSetMap(tot, base, std::move(img)));
}

}  // namespace

TEST_CASE("pullbacks of finite sets") {
    SECTION("over a point the pullback is the product") {
        FinSet pt = fs({"*"});
        FinSetMap f = map_by_labels(fs({"x", "y"}), pt, {"*", "*"});
        FinSetMap g = map_by_labels(fs({"u", "v", "w"}), pt, {"*", "*", "*"});
        REQUIRE(pullback(f, g).object.size() == 6);
    }
    SECTION("fiberwise count") {
        FinSetMap phi = phi_21();
        PullbackResult pb = pullback(FinSetMap::identity(phi.target), phi);
        REQUIRE(pb.object.size() == 3);  // 2 + 1
    }
    SECTION("empty fiber gives the empty pullback") {
        FinSet b = fs({"a", "b"});
        FinSetMap f = map_by_labels(fs({"x"}), b, {"a"});
        FinSetMap g = map_by_labels(fs({"e"}), b, {"b"});
        REQUIRE(pullback(f, g).object.size() == 0);
    }
}

TEST_CASE("pullback comonad laws") {
    SECTION("identity map gives the identity comonad") {
        FinSet b = fs({"a", "b"});
        auto k = comonad_K_phi_sets(FinSetMap::identity(b));
        Bundle d = Bundle::over_self(b);
        REQUIRE(k.apply(d).total.size() == 2);
        REQUIRE(check_comonad_laws(k, {d}).all_passed());
    }
    SECTION("fiber sizes drive K") {
        FinSetMap phi = phi_21();
        auto k = comonad_K_phi_sets(phi);
        Bundle f(fs({"x"}), phi.target, map_by_labels(fs({"x"}), phi.target, {"a"}));
        REQUIRE(k.apply(f).total.size() == 2);
        REQUIRE(check_comonad_laws(k, {f}).all_passed());
    }
    SECTION("empty E collapses everything") {
        FinSet b = fs({"a"});
        FinSetMap phi(fs({}), b, {});
        auto k = comonad_K_phi_sets(phi);
        Bundle d = Bundle::over_self(b);
        REQUIRE(k.apply(d).total.size() == 0);
        REQUIRE(check_comonad_laws(k, {d}).all_passed());
    }
}

TEST_CASE("cech nerve cardinalities") {
    FinSetMap phi = phi_21();
    Bundle f = Bundle::over_self(phi.target);
    auto nerve = cech_nerve(phi, f, 3);
    REQUIRE(check_simplicial_identities(nerve.object).all_passed());
    REQUIRE(augmentation_coequalized(nerve));
    REQUIRE(nerve.object.level[0].total.size() == 3);  // 2^1 + 1^1
    REQUIRE(nerve.object.level[1].total.size() == 5);  // 2^2 + 1^2
    REQUIRE(nerve.object.level[2].total.size() == 9);  // 2^3 + 1^3

    SECTION("constant nerve for the identity") {
        FinSet b = fs({"a", "b"});
        auto cn = cech_nerve(FinSetMap::identity(b), Bundle::over_self(b), 3);
        for (int n = 0; n <= 3; ++n) REQUIRE(cn.object.level[n].total.size() == 2);
    }
    SECTION("empty total stays empty") {
        Bundle empty(fs({}), phi.target, FinSetMap(fs({}), phi.target, {}));
        auto en = cech_nerve(phi, empty, 2);
        for (int n = 0; n <= 2; ++n) REQUIRE(en.object.level[n].total.size() == 0);
    }
}

TEST_CASE("cardinality law on 200 seeded random instances") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        FinSetMap phi = random_map(rng, 5, 3, "e");
        Bundle f = random_bundle(rng, phi.target, 4);
        auto nerve = cech_nerve(phi, f, 4);
        std::vector<long> fiber(static_cast<size_t>(phi.target.size()));
        for (int e = 0; e < phi.source.size(); ++e) ++fiber[phi(e)];
        for (int n = 0; n <= 4; ++n) {
            long expect = 0;
            for (int x = 0; x < f.total.size(); ++x) expect += pow_long(fiber[f.projection(x)], n + 1);
            REQUIRE(nerve.object.level[n].total.size() == expect);
        }
    }
}

TEST_CASE("coalgebras are sections") {
    FinSetMap phi = phi_21();
    SECTION("bijective phi has the unique section") {
        FinSet b = fs({"a"});
        FinSetMap bij(fs({"e"}), b, {0});
        CoalgebraResult r = detect_coalgebra(bij, Bundle::over_self(b));
        REQUIRE(r.found);
        REQUIRE(r.verification.all_passed());
    }
    SECTION("empty fiber refutes with a witness") {
        FinSetMap small(fs({"0"}), fs({"a", "b"}), {0});
        Bundle f(fs({"x"}), small.target, map_by_labels(fs({"x"}), small.target, {"b"}));
        CoalgebraResult r = detect_coalgebra(small, f);
        REQUIRE_FALSE(r.found);
        REQUIRE(r.witness.find("x") != std::string::npos);
    }
    SECTION("global section induces a coalgebra on any bundle") {
        Bundle f(fs({"x", "y"}), phi.target, map_by_labels(fs({"x", "y"}), phi.target, {"a", "b"}));
        CoalgebraResult r = detect_coalgebra(phi, f);
        REQUIRE(r.found);
        REQUIRE(r.verification.all_passed());
    }
    SECTION("success iff the image of f lies in the image of phi") {
        Rng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            FinSetMap phi2 = random_map(rng, 4, 3, "p");
            Bundle f = random_bundle(rng, phi2.target, 3);
            bool image_contained = true;
            for (int x = 0; x < f.total.size(); ++x) {
                bool hit = false;
                for (int e = 0; e < phi2.source.size(); ++e)
                    if (phi2(e) == f.projection(x)) hit = true;
                if (!hit) image_contained = false;
            }
            REQUIRE(detect_coalgebra(phi2, f).found == image_contained);
        }
    }
}

TEST_CASE("codescent data") {
    FinSetMap phi = phi_21();
    Bundle f = Bundle::over_self(phi.target);
    SECTION("canonical datum validates") {
        CodescentDatum d = can_upper_phi(phi, f);
        REQUIRE(validate_codescent_datum(d).all_passed());
    }
    SECTION("altering one action value names the failed square") {
        CodescentDatum d = can_upper_phi(phi, f);
        std::vector<int> theta = d.action.image;
        REQUIRE(!theta.empty());
        theta[0] = (theta[0] + 1) % d.bundle.total.size();
        CodescentDatum broken{d.phi, d.bundle, FinSetMap(d.domain.object, d.bundle.total, theta), d.domain};
        CheckReport rep = validate_codescent_datum(broken);
        REQUIRE_FALSE(rep.all_passed());
        REQUIRE(rep.failures() > 0);
    }
    SECTION("phi = id forces the identity action") {
        FinSet b = fs({"a", "b"});
        CodescentDatum d = can_upper_phi(FinSetMap::identity(b), Bundle::over_self(b));
        REQUIRE(validate_codescent_datum(d).all_passed());
        for (size_t i = 0; i < d.domain.pairs.size(); ++i)
            REQUIRE(d.action(static_cast<int>(i)) == d.domain.pairs[i].first);
    }
}

TEST_CASE("indecomposables against the canonical datum") {
    SECTION("q(can(f)) recovers f for surjective phi") {
        FinSetMap phi = phi_21();
        Bundle f(fs({"x", "y", "z"}), phi.target,
                 map_by_labels(fs({"x", "y", "z"}), phi.target, {"a", "a", "b"}));
        IndecomposablesResult q = q_indecomposables(can_upper_phi(phi, f));
        REQUIRE(q.object.total.size() == f.total.size());
        // base points survive
        for (int c = 0; c < q.object.total.size(); ++c)
            REQUIRE(q.object.projection(c) >= 0);
    }
    SECTION("phi = id gives q o can = id") {
        FinSet b = fs({"a", "b"});
        IndecomposablesResult q =
            q_indecomposables(can_upper_phi(FinSetMap::identity(b), Bundle::over_self(b)));
        REQUIRE(q.object.total.size() == 2);
    }
    SECTION("base points outside the image of phi are forgotten") {
        FinSetMap phi(fs({"0"}), fs({"a", "b"}), {0});
        Bundle f = Bundle::over_self(phi.target);
        IndecomposablesResult q = q_indecomposables(can_upper_phi(phi, f));
        REQUIRE(q.object.total.size() < f.total.size());
    }
}

TEST_CASE("Beck codescent criterion") {
    SECTION("identity holds") {
        FinSet b = fs({"a", "b"});
        REQUIRE(beck_codescent_check(FinSetMap::identity(b), Bundle::over_self(b)).holds);
    }
    SECTION("surjective phi holds for any bundle") {
        FinSetMap onto(fs({"0", "1"}), fs({"a"}), {0, 0});
        Bundle d(fs({"x", "y"}), onto.target, map_by_labels(fs({"x", "y"}), onto.target, {"a", "a"}));
        REQUIRE(beck_codescent_check(onto, d).holds);
    }
    SECTION("non-surjective phi is refuted with a witness") {
        FinSetMap phi(fs({"0"}), fs({"a", "b"}), {0});
        auto r = beck_codescent_check(phi, Bundle::over_self(phi.target));
        REQUIRE_FALSE(r.holds);
        REQUIRE(r.witness.find("b") != std::string::npos);
    }
    SECTION("generated suite: holds iff every hit base point is in the image") {
        Rng rng(53);
        for (int trial = 0; trial < 120; ++trial) {
            FinSetMap phi = random_map(rng, 5, 3, "q");
            Bundle d = random_bundle(rng, phi.target, 4);
            auto r = beck_codescent_check(phi, d);
            bool expect = true;
            for (int x = 0; x < d.total.size(); ++x) {
                bool hit = false;
                for (int e = 0; e < phi.source.size(); ++e)
                    if (phi(e) == d.projection(x)) hit = true;
                if (!hit) expect = false;
            }
            REQUIRE(r.holds == expect);
            if (!r.holds) REQUIRE_FALSE(r.witness.empty());
        }
    }
}

TEST_CASE("pi0 of the cech nerve collapses onto the total set") {
    FinSetMap phi = phi_21();
    Bundle f = Bundle::over_self(phi.target);
    auto nerve = cech_nerve(phi, f, 2);
    auto [p0, proj] = pi0_simplicial(nerve.object);
    REQUIRE(p0.total.size() == f.total.size());
}

TEST_CASE("Barr contractibility from a section") {
    SECTION("identity with identity section") {
        FinSet b = fs({"a", "b"});
        FinSetMap id = FinSetMap::identity(b);
        auto cert = barr_contractibility_from_section(id, id, Bundle::over_self(b), 3);
        REQUIRE(cert.certified);
    }
    SECTION("trivialized double cover with the unit section") {
        // E = B x G for |G| = 2, phi the projection, sigma(b) = (b, 1)
        FinSet b = fs({"p", "q"});
        FinSet e = fs({"p.1", "p.g", "q.1", "q.g"});
        FinSetMap phi = map_by_labels(e, b, {"p", "p", "q", "q"});
        FinSetMap sigma = map_by_labels(b, e, {"p.1", "q.1"});
        Bundle f(fs({"x", "y", "z"}), b, map_by_labels(fs({"x", "y", "z"}), b, {"p", "q", "q"}));
        auto cert = barr_contractibility_from_section(phi, sigma, f, 3);
        REQUIRE(cert.certified);
    }
    SECTION("a non-section is rejected at the precondition") {
        FinSet b = fs({"p", "q"});
        FinSet e = fs({"u", "v"});
        FinSetMap phi = map_by_labels(e, b, {"p", "p"});
        FinSetMap not_section = map_by_labels(b, e, {"u", "u"});
        REQUIRE_THROWS_AS(
            barr_contractibility_from_section(phi, not_section, Bundle::over_self(b), 2), error);
    }
}

TEST_CASE("latching object of the cech nerve") {
    FinSetMap phi = phi_21();
    auto nerve = cech_nerve(phi, Bundle::over_self(phi.target), 3);
    auto l1 = latching_object(nerve.object, 1);
    REQUIRE(l1.object.total.size() == nerve.object.level[0].total.size());
    REQUIRE(l1.injective);
}

TEST_CASE("higher latching maps of the cech nerve stay injective") {
    FinSetMap phi = phi_21();
    auto nerve = cech_nerve(phi, Bundle::over_self(phi.target), 3);
    for (int n = 1; n <= 3; ++n) {
        auto l = latching_object(nerve.object, n);
        INFO("latching index " << n);
        REQUIRE(l.injective);  // degenerate simplices embed
    }
}

TEST_CASE("simplicial identities hold on random cech nerves") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        FinSetMap phi = random_map(rng, 4, 3, "r");
        Bundle f = random_bundle(rng, phi.target, 3);
        auto nerve = cech_nerve(phi, f, 3);
        REQUIRE(check_simplicial_identities(nerve.object).all_passed());
        REQUIRE(augmentation_coequalized(nerve));
    }
}

TEST_CASE("the counit of the indecomposables adjunction") {
    SECTION("bijective for surjective phi") {
        FinSetMap phi = phi_21();
        Bundle f(fs({"x", "y", "z"}), phi.target,
                 map_by_labels(fs({"x", "y", "z"}), phi.target, {"a", "a", "b"}));
        auto cmp = q_can_comparison(phi, f);
        REQUIRE(cmp.isomorphism);
    }
    SECTION("misses base points outside the image of phi") {
        FinSetMap phi(fs({"0"}), fs({"a", "b"}), {0});
        auto cmp = q_can_comparison(phi, Bundle::over_self(phi.target));
        REQUIRE_FALSE(cmp.isomorphism);
        REQUIRE_FALSE(cmp.counit.map.surjective());
    }
}
