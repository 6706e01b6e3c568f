#pragma once

// Truncated (co)simplicial objects over an ambient category trait, identity
// checking, matching/latching objects, H^0 / pi_0, and the contractibility
// certificates coming from an extra (co)degeneracy family.

#include "descent/report.hpp"
#include "descent/zmat.hpp"

#include <functional>
#include <vector>

namespace descent {

// levels 0..N; coface[n][i]: X^n -> X^{n+1} (0 <= i <= n+1, n < N);
// codegeneracy[n][j]: X^{n+1} -> X^n (0 <= j <= n, n < N).
template <typename Cat>
struct TruncatedCosimplicial {
    int truncation = 0;
    std::vector<typename Cat::Object> level;
    std::vector<std::vector<typename Cat::Morphism>> coface;
    std::vector<std::vector<typename Cat::Morphism>> codegeneracy;
};

template <typename Cat>
struct CoaugmentedCosimplicial {
    typename Cat::Object base;
    typename Cat::Morphism coaugmentation;  // base -> X^0
    TruncatedCosimplicial<Cat> object;
};

// levels 0..N; face[n][i]: X_n -> X_{n-1} (0 <= i <= n, 1 <= n <= N);
// degeneracy[n][j]: X_n -> X_{n+1} (0 <= j <= n, n < N).
template <typename Cat>
struct TruncatedSimplicial {
    int truncation = 0;
    std::vector<typename Cat::Object> level;
    std::vector<std::vector<typename Cat::Morphism>> face;  // face[n] defined for n >= 1
    std::vector<std::vector<typename Cat::Morphism>> degeneracy;
};

template <typename Cat>
struct AugmentedSimplicial {
    typename Cat::Object base;
    typename Cat::Morphism augmentation;  // X_0 -> base
    TruncatedSimplicial<Cat> object;
};

// ---------------------------------------------------------------------------
// Cosimplicial / simplicial identity checks.  Every identity whose composites
// stay within the truncation is verified exactly; nothing else is assumed.

template <typename Cat>
CheckReport check_cosimplicial_identities(const TruncatedCosimplicial<Cat>& x) {
    CheckReport report("cosimplicial identities");
    const int N = x.truncation;
    for (int n = 0; n + 2 <= N; ++n) {
        // d^j d^i = d^i d^{j-1}, i < j, both X^n -> X^{n+2}
        for (int i = 0; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 2; ++j) {
                auto lhs = Cat::compose(x.coface[n + 1][j], x.coface[n][i]);
                auto rhs = Cat::compose(x.coface[n + 1][i], x.coface[n][j - 1]);
                report.check("(d,d) n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             Cat::equal(lhs, rhs));
            }
    }
    for (int n = 0; n + 1 <= N; ++n) {
        // s^j d^i on X^n -> X^n, 0 <= i <= n+1, 0 <= j <= n
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = Cat::compose(x.codegeneracy[n][j], x.coface[n][i]);
                std::string name = "(s,d) n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j);
                if (i == j || i == j + 1) {
                    report.check(name + " =id", Cat::equal(lhs, Cat::identity(x.level[n])));
                } else if (i < j) {
                    auto rhs = Cat::compose(x.coface[n - 1][i], x.codegeneracy[n - 1][j - 1]);
                    report.check(name, Cat::equal(lhs, rhs));
                } else {
                    auto rhs = Cat::compose(x.coface[n - 1][i - 1], x.codegeneracy[n - 1][j]);
                    report.check(name, Cat::equal(lhs, rhs));
                }
            }
    }
    for (int n = 0; n + 2 <= N; ++n) {
        // s^j s^i = s^i s^{j+1}, i <= j, both X^{n+2} -> X^n
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                auto lhs = Cat::compose(x.codegeneracy[n][j], x.codegeneracy[n + 1][i]);
                auto rhs = Cat::compose(x.codegeneracy[n][i], x.codegeneracy[n + 1][j + 1]);
                report.check("(s,s) n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             Cat::equal(lhs, rhs));
            }
    }
    return report;
}

template <typename Cat>
CheckReport check_simplicial_identities(const TruncatedSimplicial<Cat>& x) {
    CheckReport report("simplicial identities");
    const int N = x.truncation;
    for (int n = 2; n <= N; ++n) {
        // d_i d_j = d_{j-1} d_i, i < j, both X_n -> X_{n-2}
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                auto lhs = Cat::compose(x.face[n - 1][i], x.face[n][j]);
                auto rhs = Cat::compose(x.face[n - 1][j - 1], x.face[n][i]);
                report.check("(d,d) n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             Cat::equal(lhs, rhs));
            }
    }
    for (int n = 1; n <= N; ++n) {
        // d_i s_j on X_{n-1} -> X_{n-1}: faces out of X_n after degeneracies into X_n
        for (int j = 0; j <= n - 1; ++j)
            for (int i = 0; i <= n; ++i) {
                auto lhs = Cat::compose(x.face[n][i], x.degeneracy[n - 1][j]);
                std::string name = "(d,s) n=" + std::to_string(n - 1) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j);
                if (i == j || i == j + 1) {
                    report.check(name + " =id", Cat::equal(lhs, Cat::identity(x.level[n - 1])));
                } else if (i < j) {
                    auto rhs = Cat::compose(x.degeneracy[n - 2][j - 1], x.face[n - 1][i]);
                    report.check(name, Cat::equal(lhs, rhs));
                } else {
                    auto rhs = Cat::compose(x.degeneracy[n - 2][j], x.face[n - 1][i - 1]);
                    report.check(name, Cat::equal(lhs, rhs));
                }
            }
    }
    for (int n = 0; n + 2 <= N; ++n) {
        // s_i s_j = s_{j+1} s_i, i <= j, both X_n -> X_{n+2}
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                auto lhs = Cat::compose(x.degeneracy[n + 1][i], x.degeneracy[n][j]);
                auto rhs = Cat::compose(x.degeneracy[n + 1][j + 1], x.degeneracy[n][i]);
                report.check("(s,s) n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             Cat::equal(lhs, rhs));
            }
    }
    return report;
}

// constant (co)simplicial objects
template <typename Cat>
TruncatedCosimplicial<Cat> constant_cosimplicial(const typename Cat::Object& x, int N) {
    TruncatedCosimplicial<Cat> c;
    c.truncation = N;
    for (int n = 0; n <= N; ++n) c.level.push_back(x);
    for (int n = 0; n < N; ++n) {
        c.coface.emplace_back(static_cast<size_t>(n) + 2, Cat::identity(x));
        c.codegeneracy.emplace_back(static_cast<size_t>(n) + 1, Cat::identity(x));
    }
    return c;
}

template <typename Cat>
TruncatedSimplicial<Cat> constant_simplicial(const typename Cat::Object& x, int N) {
    TruncatedSimplicial<Cat> c;
    c.truncation = N;
    for (int n = 0; n <= N; ++n) c.level.push_back(x);
    c.face.emplace_back();  // no faces out of level 0
    for (int n = 1; n <= N; ++n) c.face.emplace_back(static_cast<size_t>(n) + 1, Cat::identity(x));
    for (int n = 0; n < N; ++n) c.degeneracy.emplace_back(static_cast<size_t>(n) + 1, Cat::identity(x));
    return c;
}

// ---------------------------------------------------------------------------
// Matching and latching objects.
//   M_n X = equal( prod_{0<=i<=n-1} X^{n-1}  =>  prod_{0<=i<j<=n-2} X^{n-2} )
// with psi_1 = s^i p_j, psi_2 = s^{j-1} p_i; sigma_n: X^n -> M_n induced by
// the codegeneracies.  The latching object is the formal dual.

template <typename Cat>
struct MatchingResult {
    typename Cat::Object object;
    typename Cat::Morphism canonical;  // sigma_n: X^n -> M_n
    bool surjective = false;
    bool injective = false;
    std::string description;
};

template <typename Cat>
MatchingResult<Cat> matching_object(const TruncatedCosimplicial<Cat>& x, int n) {
    require(n >= 1 && n <= x.truncation, "matching index out of range");
    std::vector<typename Cat::Object> factors(static_cast<size_t>(n), x.level[n - 1]);
    auto prod = Cat::product(factors);

    std::vector<typename Cat::Morphism> sigma_comps;
    for (int j = 0; j < n; ++j) sigma_comps.push_back(x.codegeneracy[n - 1][j]);
    auto tuple = Cat::into_product(prod, sigma_comps);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) pairs.emplace_back(i, j);

    if (pairs.empty()) {
        MatchingResult<Cat> r{prod.object, tuple, false, false, Cat::describe(prod.object)};
        r.surjective = Cat::surjective(r.canonical);
        r.injective = Cat::injective(r.canonical);
        return r;
    }

    std::vector<typename Cat::Object> small(pairs.size(), x.level[n - 2]);
    auto prod2 = Cat::product(small);
    std::vector<typename Cat::Morphism> psi1_comps, psi2_comps;
    for (auto [i, j] : pairs) {
        psi1_comps.push_back(Cat::compose(x.codegeneracy[n - 2][i], prod.projections[j]));
        psi2_comps.push_back(Cat::compose(x.codegeneracy[n - 2][j - 1], prod.projections[i]));
    }
    auto psi1 = Cat::into_product(prod2, psi1_comps);
    auto psi2 = Cat::into_product(prod2, psi2_comps);
    auto eq = Cat::equalizer_pair(psi1, psi2);
    auto sigma = Cat::corestrict(eq, tuple);
    MatchingResult<Cat> r{eq.object, sigma, false, false, Cat::describe(eq.object)};
    r.surjective = Cat::surjective(r.canonical);
    r.injective = Cat::injective(r.canonical);
    return r;
}

template <typename Cat>
struct LatchingResult {
    typename Cat::Object object;
    typename Cat::Morphism canonical;  // sigma^n: L^n -> X_n
    bool surjective = false;
    bool injective = false;
    std::string description;
};

template <typename Cat>
LatchingResult<Cat> latching_object(const TruncatedSimplicial<Cat>& x, int n) {
    require(n >= 1 && n <= x.truncation, "latching index out of range");
    std::vector<typename Cat::Object> summands(static_cast<size_t>(n), x.level[n - 1]);
    auto cop = Cat::coproduct(summands);

    std::vector<typename Cat::Morphism> sigma_comps;
    for (int j = 0; j < n; ++j) sigma_comps.push_back(x.degeneracy[n - 1][j]);
    auto cotuple = Cat::from_coproduct(cop, sigma_comps);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) pairs.emplace_back(i, j);

    if (pairs.empty()) {
        LatchingResult<Cat> r{cop.object, cotuple, false, false, Cat::describe(cop.object)};
        r.surjective = Cat::surjective(r.canonical);
        r.injective = Cat::injective(r.canonical);
        return r;
    }

    std::vector<typename Cat::Object> small(pairs.size(), x.level[n - 2]);
    auto cop2 = Cat::coproduct(small);
    std::vector<typename Cat::Morphism> psi1_comps, psi2_comps;
    for (auto [i, j] : pairs) {
        psi1_comps.push_back(Cat::compose(cop.injections[j], x.degeneracy[n - 2][i]));
        psi2_comps.push_back(Cat::compose(cop.injections[i], x.degeneracy[n - 2][j - 1]));
    }
    auto psi1 = Cat::from_coproduct(cop2, psi1_comps);
    auto psi2 = Cat::from_coproduct(cop2, psi2_comps);
    auto coeq = Cat::coequalizer_pair(psi1, psi2);
    // the cotuple coequalizes psi1, psi2, so it descends to L^n -> X_n
    auto sigma = Cat::descend(coeq, cotuple);
    LatchingResult<Cat> r{coeq.object, sigma, false, false, Cat::describe(coeq.object)};
    r.surjective = Cat::surjective(r.canonical);
    r.injective = Cat::injective(r.canonical);
    return r;
}

// H^0 = equal(d^0, d^1) and pi_0 = coequal(d_0, d_1).
template <typename Cat>
std::pair<typename Cat::Object, typename Cat::Morphism> h0_cosimplicial(const TruncatedCosimplicial<Cat>& x) {
    require(x.truncation >= 1, "H^0 needs truncation >= 1");
    auto eq = Cat::equalizer_pair(x.coface[0][0], x.coface[0][1]);
    return {eq.object, eq.inclusion};
}

template <typename Cat>
std::pair<typename Cat::Object, typename Cat::Morphism> pi0_simplicial(const TruncatedSimplicial<Cat>& x) {
    require(x.truncation >= 1, "pi_0 needs truncation >= 1");
    auto coeq = Cat::coequalizer_pair(x.face[1][0], x.face[1][1]);
    return {coeq.object, coeq.projection};
}

// ---------------------------------------------------------------------------
// Contractibility: an extra (co)degeneracy family satisfying the full
// identity list certifies an external SDR onto the (co)augmentation.

template <typename Cat>
struct SdrCertificate {
    typename Cat::Object base;
    std::vector<typename Cat::Morphism> extra;       // extra (co)degeneracies per level
    std::vector<typename Cat::Morphism> retraction;  // level n -> base (resp. base -> level n)
    std::vector<typename Cat::Morphism> section;     // base -> level n (resp. level n -> base)
    CheckReport identities{"contractibility identities"};
    bool certified = false;
};

// extra[k]: X^k -> X^{k-1} for k = 1..N and extra[0]: X^0 -> base.
template <typename Cat>
SdrCertificate<Cat> check_contractible_cosimplicial(const CoaugmentedCosimplicial<Cat>& cx,
                                                    const std::vector<typename Cat::Morphism>& extra) {
    const auto& x = cx.object;
    const int N = x.truncation;
    require(static_cast<int>(extra.size()) == N + 1, "missing extra codegeneracy: need one per level 0..N");
    SdrCertificate<Cat> cert{cx.base, extra, {}, {}, CheckReport("contractibility identities"), false};
    CheckReport& rep = cert.identities;

    if (N >= 1)
        rep.check("d^0 eta = d^1 eta",
                  Cat::equal(Cat::compose(x.coface[0][0], cx.coaugmentation),
                             Cat::compose(x.coface[0][1], cx.coaugmentation)));
    rep.check("s^0 eta = id", Cat::equal(Cat::compose(extra[0], cx.coaugmentation), Cat::identity(cx.base)));
    for (int n = 1; n <= N; ++n)
        rep.check("s^" + std::to_string(n) + " d^" + std::to_string(n) + " = id",
                  Cat::equal(Cat::compose(extra[n], x.coface[n - 1][n]), Cat::identity(x.level[n - 1])));
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            auto lhs = Cat::compose(extra[n], x.coface[n - 1][i]);
            auto rhs = (n >= 2) ? Cat::compose(x.coface[n - 2][i], extra[n - 1])
                                : Cat::compose(cx.coaugmentation, extra[0]);
            rep.check("s^" + std::to_string(n) + " d^" + std::to_string(i) + " = d^" + std::to_string(i) +
                          " s^" + std::to_string(n - 1),
                      Cat::equal(lhs, rhs));
        }
    for (int n = 0; n + 1 <= N; ++n)
        for (int i = 0; i <= n; ++i) {
            auto lhs = Cat::compose(extra[n], x.codegeneracy[n][i]);
            auto rhs = (i <= n - 1) ? Cat::compose(x.codegeneracy[n - 1][i], extra[n + 1])
                                    : Cat::compose(extra[n], extra[n + 1]);
            rep.check("s^" + std::to_string(n) + " s^" + std::to_string(i) + " = s^" + std::to_string(i) +
                          " s^" + std::to_string(n + 1),
                      Cat::equal(lhs, rhs));
        }

    // derived retractions and sections; retraction o coaugmentation = id levelwise
    auto rho = extra[0];
    auto eta = cx.coaugmentation;
    cert.retraction.push_back(rho);
    cert.section.push_back(eta);
    rep.check("rho^0 eta^0 = id", Cat::equal(Cat::compose(rho, eta), Cat::identity(cx.base)));
    for (int n = 1; n <= N; ++n) {
        rho = Cat::compose(rho, extra[n]);
        eta = Cat::compose(x.coface[n - 1][0], eta);
        cert.retraction.push_back(rho);
        cert.section.push_back(eta);
        rep.check("rho^" + std::to_string(n) + " eta^" + std::to_string(n) + " = id",
                  Cat::equal(Cat::compose(rho, eta), Cat::identity(cx.base)));
    }
    cert.certified = rep.all_passed();
    return cert;
}

// extra[k]: X_{k-1} -> X_k for k = 1..N and extra[0]: base -> X_0.
template <typename Cat>
SdrCertificate<Cat> check_contractible_simplicial(const AugmentedSimplicial<Cat>& ax,
                                                  const std::vector<typename Cat::Morphism>& extra) {
    const auto& x = ax.object;
    const int N = x.truncation;
    require(static_cast<int>(extra.size()) == N + 1, "missing extra degeneracy: need one per level 0..N");
    SdrCertificate<Cat> cert{ax.base, extra, {}, {}, CheckReport("contractibility identities"), false};
    CheckReport& rep = cert.identities;

    if (N >= 1)
        rep.check("eps d_0 = eps d_1",
                  Cat::equal(Cat::compose(ax.augmentation, x.face[1][0]),
                             Cat::compose(ax.augmentation, x.face[1][1])));
    rep.check("eps s_0 = id", Cat::equal(Cat::compose(ax.augmentation, extra[0]), Cat::identity(ax.base)));
    for (int n = 1; n <= N; ++n)
        rep.check("d_" + std::to_string(n) + " s_" + std::to_string(n) + " = id",
                  Cat::equal(Cat::compose(x.face[n][n], extra[n]), Cat::identity(x.level[n - 1])));
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            auto lhs = Cat::compose(x.face[n][i], extra[n]);
            auto rhs = (n >= 2) ? Cat::compose(extra[n - 1], x.face[n - 1][i])
                                : Cat::compose(extra[0], ax.augmentation);
            rep.check("d_" + std::to_string(i) + " s_" + std::to_string(n) + " = s_" + std::to_string(n - 1) +
                          " d_" + std::to_string(i),
                      Cat::equal(lhs, rhs));
        }
    for (int n = 0; n + 1 <= N; ++n)
        for (int i = 0; i <= n; ++i) {
            auto lhs = Cat::compose(x.degeneracy[n][i], extra[n]);
            auto rhs = (i <= n - 1) ? Cat::compose(extra[n + 1], x.degeneracy[n - 1][i])
                                    : Cat::compose(extra[n + 1], extra[n]);
            rep.check("s_" + std::to_string(i) + " s_" + std::to_string(n) + " = s_" + std::to_string(n + 1) +
                          " s_" + std::to_string(i),
                      Cat::equal(lhs, rhs));
        }

    auto sec = extra[0];
    auto eps = ax.augmentation;
    cert.section.push_back(sec);
    cert.retraction.push_back(eps);
    rep.check("eps_0 sigma_0 = id", Cat::equal(Cat::compose(eps, sec), Cat::identity(ax.base)));
    for (int n = 1; n <= N; ++n) {
        sec = Cat::compose(extra[n], sec);
        eps = Cat::compose(eps, x.face[n][0]);
        cert.section.push_back(sec);
        cert.retraction.push_back(eps);
        rep.check("eps_" + std::to_string(n) + " sigma_" + std::to_string(n) + " = id",
                  Cat::equal(Cat::compose(eps, sec), Cat::identity(ax.base)));
    }
    cert.certified = rep.all_passed();
    return cert;
}

}  // namespace descent
