#pragma once

// The seeded property suites behind `descent selftest` and the acceptance
// runner: one function per claim, each returning a verdict with a short
// detail string.  Bounds and tolerances are pinned here; every comparison is
// exact.

#include "descent/codescent.hpp"
#include "descent/doldkan.hpp"
#include "descent/fixtures.hpp"
#include "descent/workspace.hpp"

#include <chrono>
#include <sstream>

namespace descent {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

template <typename F>
SuiteResult run_suite(const std::string& name, F body) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    r.name = name;
    try {
        std::ostringstream detail;
        r.passed = body(detail);
        r.detail = detail.str();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// 1. Faithfully flat Amitsur vanishing: H^0 = M and H^1..H^3 = 0 for the
// diagonals into Z^2 and Z^3 at M = Z and M = Z^2, truncation 4.
inline SuiteResult suite_amitsur_vanishing() {
    return run_suite("amitsur-vanishing", [](std::ostringstream& out) {
        bool ok = true;
        for (auto& name : {"zz2", "zz3"}) {
            RingMap phi = catalog_map(name);
            ModuleOverRing unit = ring_as_module(phi.source());
            for (int rank : {1, 2}) {
                ModuleOverRing m = as_Z_module(FgAbelianGroup::free_group(rank));
                auto omega = amitsur_complex(phi, m, 4);
                // the cosimplicial module itself, probed through the unit module
                CosimplicialGroup hom = hom_cosimplicial(unit, omega.object);
                auto h0 = cohomotopy(hom, 0).invariant_factors();
                bool cell = h0 == m.underlying().invariant_factors();
                for (int s = 1; s <= 3; ++s) cell = cell && cohomotopy(hom, s).is_zero_group();
                out << name << " M=Z^" << rank << ": H0=" << h0.str() << (cell ? " H1..H3=0; " : " WRONG; ");
                ok = ok && cell;
            }
        }
        return ok;
    });
}

// 2. Restricted-module contractibility certificate for every catalog map at
// N = A, truncation 4, zero tolerance.
inline SuiteResult suite_restricted_sdr() {
    return run_suite("restricted-module-sdr", [](std::ostringstream& out) {
        bool ok = true;
        for (auto& e : ring_map_catalog()) {
            auto cert = restricted_module_sdr(e.phi, ring_as_module(e.phi.target()), 4);
            out << e.name << (cert.certified ? " certified; " : " FAILED; ");
            ok = ok && cert.certified;
        }
        return ok;
    });
}

// 3. Beck descent: holds on (id, probes) and the diagonals; refuted at
// (Z -> Z/2, Z) with equalizer Z/2.
inline SuiteResult suite_beck() {
    return run_suite("beck-descent", [](std::ostringstream& out) {
        bool ok = true;
        for (auto& e : ring_map_catalog()) {
            if (!e.faithfully_flat) continue;
            for (auto& [pname, m] : probe_modules(e.phi)) {
                auto r = beck_descent_check(e.phi, m);
                if (!r.holds) out << e.name << "@" << pname << " unexpectedly refuted; ";
                ok = ok && r.holds;
            }
        }
        auto refuted = beck_descent_check(catalog_map("zmod2"),
                                          as_Z_module(FgAbelianGroup::free_group(1)));
        bool refutation = !refuted.holds && refuted.equalizer_factors == "Z/2";
        out << "zmod2@Z refuted with equalizer " << refuted.equalizer_factors;
        return ok && refutation;
    });
}

// 4. Normalized vs unnormalized cohomotopy on 100 seeded random truncated
// cosimplicial abelian groups, truncation 3, exact invariant factors.
inline SuiteResult suite_normalized_oracle(uint64_t seed) {
    return run_suite("normalized-vs-unnormalized", [seed](std::ostringstream& out) {
        Rng rng(seed + 2024);
        int cells = 0;
        for (int trial = 0; trial < 100; ++trial) {
            gen::CochainComplexSpec c = gen::random_cochain_spec(rng, 3);
            CosimplicialGroup x = gen::dold_kan_cosimplicial(c, 3);
            if (rng.chance(70)) x = gen::shuffle_presentation(rng, x);
            if (!check_cosimplicial_identities(x).all_passed()) {
                out << "generated object invalid at trial " << trial;
                return false;
            }
            for (int s = 0; s + 1 <= x.truncation; ++s) {
                if (!(cohomotopy(x, s).invariant_factors() ==
                      cohomology_unnormalized(x, s).invariant_factors())) {
                    out << "mismatch at trial " << trial << " s=" << s;
                    return false;
                }
                ++cells;
            }
        }
        out << cells << " exact comparisons over 100 objects";
        return true;
    });
}

// 5. Cech cardinality law on 200 seeded random instances, levels through 4.
inline SuiteResult suite_cech_cardinality(uint64_t seed) {
    return run_suite("cech-cardinality", [seed](std::ostringstream& out) {
        Rng rng(seed + 77);
        for (int trial = 0; trial < 200; ++trial) {
            int ne = static_cast<int>(rng.uniform(1, 5)), nb = static_cast<int>(rng.uniform(1, 3));
            std::vector<std::string> ee, be;
            for (int i = 0; i < ne; ++i) ee.push_back("e" + std::to_string(i));
            for (int i = 0; i < nb; ++i) be.push_back("b" + std::to_string(i));
            std::vector<int> pimg;
            for (int i = 0; i < ne; ++i) pimg.push_back(static_cast<int>(rng.uniform(0, nb - 1)));
            FinSetMap phi(FinSet(ee), FinSet(be), std::move(pimg));
            int nx = static_cast<int>(rng.uniform(0, 4));
            std::vector<std::string> xe;
            for (int i = 0; i < nx; ++i) xe.push_back("x" + std::to_string(i));
            std::vector<int> fimg;
            for (int i = 0; i < nx; ++i) fimg.push_back(static_cast<int>(rng.uniform(0, nb - 1)));
            Bundle f(FinSet(xe), phi.target, FinSetMap(FinSet(xe), phi.target, std::move(fimg)));
            auto nerve = cech_nerve(phi, f, 4);
            std::vector<long> fiber(static_cast<size_t>(nb));
            for (int e = 0; e < ne; ++e) ++fiber[phi(e)];
            for (int n = 0; n <= 4; ++n) {
                long expect = 0;
                for (int x = 0; x < f.total.size(); ++x) {
                    long p = 1;
                    for (int i = 0; i <= n; ++i) p *= fiber[f.projection(x)];
                    expect += p;
                }
                if (nerve.object.level[n].total.size() != expect) {
                    out << "cardinality broken at trial " << trial << " level " << n;
                    return false;
                }
            }
            // pi_0 collapses onto the total set when phi covers the image of f
            bool covered = true;
            for (int x = 0; x < f.total.size(); ++x)
                if (fiber[f.projection(x)] == 0) covered = false;
            if (covered) {
                auto [p0, proj] = pi0_simplicial(nerve.object);
                if (p0.total.size() != f.total.size()) {
                    out << "pi_0 collapse broken at trial " << trial;
                    return false;
                }
            }
        }
        out << "200 instances, levels 0..4 exact, pi_0 collapse on covered instances";
        return true;
    });
}

// 6. Codescent Beck: holds for every surjective phi in the generated suite;
// plus one constructed refutation with an explicit witness.
inline SuiteResult suite_codescent_beck(uint64_t seed) {
    return run_suite("codescent-beck", [seed](std::ostringstream& out) {
        Rng rng(seed + 53);
        int surjective_cells = 0;
        for (int trial = 0; trial < 150; ++trial) {
            int ne = static_cast<int>(rng.uniform(1, 5)), nb = static_cast<int>(rng.uniform(1, 3));
            std::vector<std::string> ee, be;
            for (int i = 0; i < ne; ++i) ee.push_back("e" + std::to_string(i));
            for (int i = 0; i < nb; ++i) be.push_back("b" + std::to_string(i));
            std::vector<int> pimg;
            for (int i = 0; i < ne; ++i) pimg.push_back(static_cast<int>(rng.uniform(0, nb - 1)));
            FinSetMap phi(FinSet(ee), FinSet(be), std::move(pimg));
            bool surjective = phi.surjective();
            int nx = static_cast<int>(rng.uniform(0, 4));
            std::vector<std::string> xe;
            for (int i = 0; i < nx; ++i) xe.push_back("x" + std::to_string(i));
            std::vector<int> fimg;
            for (int i = 0; i < nx; ++i) fimg.push_back(static_cast<int>(rng.uniform(0, nb - 1)));
            Bundle d(FinSet(xe), phi.target, FinSetMap(FinSet(xe), phi.target, std::move(fimg)));
            auto r = beck_codescent_check(phi, d);
            if (surjective) {
                ++surjective_cells;
                if (!r.holds) {
                    out << "surjective refuted at trial " << trial;
                    return false;
                }
            } else if (!r.holds) {
                if (r.witness.empty()) {
                    out << "refutation without witness at trial " << trial;
                    return false;
                }
            }
        }
        FinSetMap missing(FinSet({"0"}), FinSet({"a", "b"}), {0});
        auto refuted = beck_codescent_check(missing, Bundle::over_self(missing.target));
        bool constructed = !refuted.holds && !refuted.witness.empty();
        out << surjective_cells << " surjective cells hold; constructed refutation witness: "
            << refuted.witness;
        return constructed;
    });
}

// 7. Kan suite: comonad laws, fullness identity with the counit identity at
// Phi(C), on every generated full functor, both value kinds.
inline SuiteResult suite_kan() {
    return run_suite("kan-suite", [](std::ostringstream& out) {
        int functors = 0, diagrams = 0;
        for (auto& cs : kan_suite_functors()) {
            const CatFunctor& phi = cs.phi;
            if (!phi.is_full()) {
                out << cs.name << " generated non-full; ";
                return false;
            }
            ++functors;
            auto ks = kan_comonad<SetCat>(phi);
            auto ka = kan_comonad<AbCat>(phi);
            for (auto& xs : kan_suite_set_diagrams(phi.target)) {
                Diagram<AbCat> xa = linearize(xs);
                ++diagrams;
                if (!check_comonad_laws(ks, {xs}).all_passed() ||
                    !check_comonad_laws(ka, {xa}).all_passed()) {
                    out << "comonad laws fail for " << cs.name;
                    return false;
                }
                for (size_t c = 0; c < phi.source.objects.size(); ++c) {
                    auto rs = fullness_identity_check(phi, xs, static_cast<int>(c));
                    auto ra = fullness_identity_check(phi, xa, static_cast<int>(c));
                    if (!rs.applicable || !rs.report.all_passed() || !ra.report.all_passed()) {
                        out << "fullness identity fails for " << cs.name << " at object " << c;
                        return false;
                    }
                }
                // cofree diagrams satisfy the assembly comparison
                Diagram<SetCat> cofree = ks.apply(xs);
                for (size_t d = 0; d < phi.target.objects.size(); ++d)
                    if (!assembly_pi0_check(phi, cofree, static_cast<int>(d)).holds) {
                        out << "cofree assembly fails for " << cs.name << " at " << d;
                        return false;
                    }
            }
        }
        out << functors << " full functors, " << diagrams << " diagram pairs";
        return true;
    });
}

// 8. Adjunction isomorphism on the full catalog x probe grid.
inline SuiteResult suite_adjunction_grid() {
    return run_suite("adjunction-iso-grid", [](std::ostringstream& out) {
        int cells = 0;
        for (auto& e : ring_map_catalog()) {
            auto probes = probe_modules(e.phi);
            for (auto& [xn, x] : probes)
                for (auto& [yn, y] : probes) {
                    auto r = adjunction_iso_check(e.phi, x, y);
                    ++cells;
                    if (!r.bijective) {
                        out << "not bijective at " << e.name << "(" << xn << "," << yn << ")";
                        return false;
                    }
                }
        }
        out << cells << " grid cells bijective";
        return true;
    });
}

// 9. Two-path E2 consistency: descent_e2 at t = 0 equals amitsur_cohomology,
// all catalog maps, diagonal and mixed probe pairs, s <= 3.
inline SuiteResult suite_e2_consistency() {
    return run_suite("e2-two-path", [](std::ostringstream& out) {
        int cells = 0;
        for (auto& e : ring_map_catalog()) {
            auto probes = probe_modules(e.phi);
            std::vector<std::pair<ModuleOverRing, ModuleOverRing>> pairs;
            for (auto& [n, m] : probes) pairs.emplace_back(m, m);
            pairs.emplace_back(probes[0].second, probes[1].second);
            for (auto& [m, n] : pairs) {
                ChainComplex mc = ChainComplex::concentrated(m, 0);
                ChainComplex nc = ChainComplex::concentrated(n, 0);
                auto via_e2 = descent_e2_range(e.phi, mc, nc, 0, 4);
                auto direct = amitsur_cohomology_range(e.phi, m, n, 4);
                for (int s = 0; s <= 3; ++s) {
                    ++cells;
                    if (!(via_e2[s].invariant_factors() == direct[s].invariant_factors())) {
                        out << "mismatch at " << e.name << " s=" << s;
                        return false;
                    }
                }
            }
        }
        out << cells << " cells agree";
        return true;
    });
}

// 10. SNF contract on 500 seeded random matrices, byte-identical across runs.
inline SuiteResult suite_snf_contract(uint64_t seed) {
    return run_suite("snf-contract", [seed](std::ostringstream& out) {
        auto render = [&](uint64_t s) {
            std::string bytes;
            Rng rng(s + 1);
            for (int trial = 0; trial < 500; ++trial) {
                int r = static_cast<int>(rng.uniform(1, 5)), c = static_cast<int>(rng.uniform(1, 5));
                Mat m(r, c);
                for (Int& x : m.a) x = rng.uniform(-9, 9);
                SmithResult sm = smith(m);
                if (!(mul(mul(sm.U, m), sm.V) == sm.D)) return std::string("FACTORIZATION BROKEN");
                Int du = det_bareiss(sm.U), dv = det_bareiss(sm.V);
                if (!((du == 1 || du == -1) && (dv == 1 || dv == -1)))
                    return std::string("NOT UNIMODULAR");
                auto d = sm.diagonal();
                for (size_t i = 0; i + 1 < d.size(); ++i) {
                    if (sgn(d[i]) < 0) return std::string("NEGATIVE DIAGONAL");
                    if (sgn(d[i]) != 0 && sgn(d[i + 1] % d[i]) != 0) return std::string("DIVISIBILITY BROKEN");
                    if (sgn(d[i]) == 0 && sgn(d[i + 1]) != 0) return std::string("ZERO ORDER BROKEN");
                }
                bytes += sm.D.str();
            }
            return bytes;
        };
        std::string first = render(seed), second = render(seed);
        if (first.rfind("FACTOR", 0) == 0 || first.rfind("NOT", 0) == 0 ||
            first.rfind("NEG", 0) == 0 || first.rfind("DIV", 0) == 0 || first.rfind("ZERO", 0) == 0) {
            out << first;
            return false;
        }
        if (first != second) {
            out << "two runs differ";
            return false;
        }
        out << "500 matrices, contract exact, two runs byte-identical";
        return true;
    });
}

// further module invariants run by selftest on top of the numbered criteria
inline SuiteResult suite_cobar_validity() {
    return run_suite("cobar-validity", [](std::ostringstream& out) {
        for (auto& e : ring_map_catalog()) {
            auto t = monad_T_phi(e.phi);
            std::vector<ModuleOverRing> probes;
            for (auto& [n, m] : probe_modules(e.phi)) probes.push_back(m);
            if (!check_monad_laws(t, probes).all_passed()) {
                out << "monad laws fail for " << e.name;
                return false;
            }
            auto omega = cobar(t, probes[0], 3);
            if (!check_cosimplicial_identities(omega.object).all_passed() ||
                !coaugmentation_equalized(omega)) {
                out << "cobar identities fail for " << e.name;
                return false;
            }
        }
        out << "all catalog maps";
        return true;
    });
}

inline SuiteResult suite_prim_can_units() {
    return run_suite("prim-can-units", [](std::ostringstream& out) {
        for (auto& e : ring_map_catalog()) {
            if (!e.faithfully_flat) continue;
            for (auto& [n, m] : probe_modules(e.phi)) {
                PrimResult p = prim_phi(can_phi(e.phi, m));
                if (!is_isomorphism(prim_can_unit(e.phi, m, p).as_group_map())) {
                    out << "unit not invertible at " << e.name << "@" << n;
                    return false;
                }
            }
        }
        ModuleOverRing z = as_Z_module(FgAbelianGroup::free_group(1));
        PrimResult p = prim_phi(can_phi(catalog_map("zmod2"), z));
        bool fails = !is_injective(prim_can_unit(catalog_map("zmod2"), z, p).as_group_map());
        out << "split/free subcatalog invertible; zmod2@Z fails as expected";
        return fails;
    });
}

inline std::vector<SuiteResult> run_all_suites(uint64_t seed) {
    return {
        suite_amitsur_vanishing(), suite_restricted_sdr(),    suite_beck(),
        suite_normalized_oracle(seed), suite_cech_cardinality(seed), suite_codescent_beck(seed),
        suite_kan(),               suite_adjunction_grid(),   suite_e2_consistency(),
        suite_snf_contract(seed),  suite_cobar_validity(),    suite_prim_can_units(),
    };
}

}  // namespace descent
