#pragma once

// Cartesian codescent over finite sets: the pullback comonad of phi: E -> B
// on bundles over B, the Cech nerve, coalgebras as sections, codescent data
// with their cocycle condition, the indecomposables functor, the Beck
// coequalizer criterion, and Barr contractibility from a section of phi.

#include "descent/finset.hpp"
#include "descent/monad.hpp"

namespace descent {

// K_phi(f: X -> B) = X x_B E, projected back to B through phi.
inline ComonadHandle<BundleCat> comonad_K_phi_sets(const FinSetMap& phi) {
    ComonadHandle<BundleCat> k;
    k.name = "K_phi[" + std::to_string(phi.source.size()) + "->" + std::to_string(phi.target.size()) + "]";
    FinSetMap p = phi;
    auto cache = k.object_cache;

    auto object_for = [p, cache](const Bundle& f) -> Bundle {
        std::string key = BundleCat::key(f);
        auto it = cache->find(key);
        if (it != cache->end()) return it->second;
        PullbackResult pb = pullback(f.projection, p);
        std::vector<int> proj;
        for (auto& [x, e] : pb.pairs) proj.push_back(p(e));
        Bundle kf(pb.object, f.base, FinSetMap(pb.object, f.base, std::move(proj)));
        cache->emplace(std::move(key), kf);
        return kf;
    };
    k.on_object = object_for;

    auto pairs_of = [p](const Bundle& f) {
        return pullback(f.projection, p).pairs;  // deterministic enumeration
    };

    k.on_morphism = [object_for, pairs_of](const BundleMap& h) -> BundleMap {
        Bundle ks = object_for(h.source), kt = object_for(h.target);
        auto sp = pairs_of(h.source);
        auto tp = pairs_of(h.target);
        std::vector<int> img;
        for (auto& [x, e] : sp) {
            int hx = h.map(x);
            int found = -1;
            for (size_t j = 0; j < tp.size() && found < 0; ++j)
                if (tp[j].first == hx && tp[j].second == e) found = static_cast<int>(j);
            require(found >= 0, "pullback image not found");
            img.push_back(found);
        }
        return BundleMap(ks, kt, FinSetMap(ks.total, kt.total, std::move(img)));
    };

    k.counit = [object_for, pairs_of](const Bundle& f) -> BundleMap {
        Bundle kf = object_for(f);
        auto pp = pairs_of(f);
        std::vector<int> img;
        for (auto& [x, e] : pp) img.push_back(x);
        return BundleMap(kf, f, FinSetMap(kf.total, f.total, std::move(img)));
    };

    k.comult = [object_for, pairs_of](const Bundle& f) -> BundleMap {
        Bundle kf = object_for(f), kkf = object_for(kf);
        auto pp = pairs_of(f);
        auto qq = pairs_of(kf);
        std::vector<int> img;
        for (size_t i = 0; i < pp.size(); ++i) {
            int e = pp[i].second;
            int found = -1;
            for (size_t j = 0; j < qq.size() && found < 0; ++j)
                if (qq[j].first == static_cast<int>(i) && qq[j].second == e) found = static_cast<int>(j);
            require(found >= 0, "diagonal image not found");
            img.push_back(found);
        }
        return BundleMap(kf, kkf, FinSetMap(kf.total, kkf.total, std::move(img)));
    };
    return k;
}

inline AugmentedSimplicial<BundleCat> cech_nerve(const FinSetMap& phi, const Bundle& f, int N) {
    require(f.base == phi.target, "bundle must live over the target of phi");
    return bar(comonad_K_phi_sets(phi), f, N);
}

// A K_phi-coalgebra structure on f is exactly a section e: X -> E of phi over f.
struct CoalgebraResult {
    bool found = false;
    std::vector<int> section;          // e: X -> E with phi(e(x)) = f(x)
    std::string witness;               // on refutation: the element with empty fiber
    CheckReport verification{"coalgebra laws"};
};

inline CoalgebraResult detect_coalgebra(const FinSetMap& phi, const Bundle& f) {
    require(f.base == phi.target, "bundle must live over the target of phi");
    CoalgebraResult out;
    for (int x = 0; x < f.total.size(); ++x) {
        int pick = -1;
        for (int e = 0; e < phi.source.size() && pick < 0; ++e)
            if (phi(e) == f.projection(x)) pick = e;
        if (pick < 0) {
            out.found = false;
            out.witness = f.total.elems[x] + " sits over " + f.base.elems[f.projection(x)] +
                          ", which has empty fiber";
            return out;
        }
        out.section.push_back(pick);
    }
    out.found = true;
    // the induced structure map delta: x -> (x, e(x)) satisfies the coalgebra
    // laws automatically; recheck them anyway
    ComonadHandle<BundleCat> k = comonad_K_phi_sets(phi);
    Bundle kf = k.apply(f);
    PullbackResult pb = pullback(f.projection, phi);
    std::vector<int> img;
    for (int x = 0; x < f.total.size(); ++x) {
        int found = -1;
        for (size_t j = 0; j < pb.pairs.size() && found < 0; ++j)
            if (pb.pairs[j].first == x && pb.pairs[j].second == out.section[x]) found = static_cast<int>(j);
        img.push_back(found);
    }
    BundleMap delta(f, kf, FinSetMap(f.total, kf.total, std::move(img)));
    out.verification.check("counit law", BundleCat::equal(compose(k.counit(f), delta), BundleCat::identity(f)));
    out.verification.check("coassociativity",
                           BundleCat::equal(compose(k.lift(delta), delta), compose(k.comult(f), delta)));
    return out;
}

// ---------------------------------------------------------------------------
// Codescent data: a bundle over E with an action X x_B E -> X satisfying the
// cocycle and unit conditions, with theta over E.

struct CodescentDatum {
    FinSetMap phi;  // E -> B
    Bundle bundle;  // f: X -> E
    FinSetMap action;  // theta: X x_B E -> X, where X x_B E pairs (x, e) with phi(f(x)) = phi(e)
    PullbackResult domain;  // the pullback defining the action's source
};

inline CodescentDatum make_codescent_datum(const FinSetMap& phi, const Bundle& f, std::vector<int> theta) {
    require(f.base == phi.source, "codescent bundle lives over E");
    PullbackResult pb = pullback(compose(phi, f.projection), phi);
    require(static_cast<int>(theta.size()) == pb.object.size(), "action arity mismatch");
    FinSetMap act(pb.object, f.total, std::move(theta));
    return CodescentDatum{phi, f, act, pb};
}

inline CheckReport validate_codescent_datum(const CodescentDatum& d) {
    CheckReport rep("codescent datum");
    const auto& pairs = d.domain.pairs;
    const Bundle& f = d.bundle;
    const FinSetMap& phi = d.phi;
    // theta over E: f(theta(x,e)) = e
    bool over = true;
    std::string over_witness;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (f.projection(d.action(static_cast<int>(i))) != pairs[i].second) {
            over = false;
            over_witness = d.domain.object.elems[i];
            break;
        }
    rep.check(std::string("action is over E") + (over ? "" : " [fails at " + over_witness + "]"), over);
    // unit: theta(x, f(x)) = x
    bool unit = true;
    std::string unit_witness;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [x, e] = pairs[i];
        if (e == f.projection(x) && d.action(static_cast<int>(i)) != x) {
            unit = false;
            unit_witness = d.domain.object.elems[i];
            break;
        }
    }
    rep.check(std::string("unit square") + (unit ? "" : " [fails at " + unit_witness + "]"), unit);
    // cocycle: theta(theta(x,e), e') = theta(x,e') whenever all three sit over one base point
    bool cocycle = true;
    std::string cocycle_witness;
    auto pair_index = [&pairs](int x, int e) {
        for (size_t j = 0; j < pairs.size(); ++j)
            if (pairs[j].first == x && pairs[j].second == e) return static_cast<int>(j);
        return -1;
    };
    for (size_t i = 0; i < pairs.size() && cocycle; ++i) {
        auto [x, e] = pairs[i];
        for (int e2 = 0; e2 < phi.source.size() && cocycle; ++e2) {
            if (phi(e2) != phi(e)) continue;
            int xe = d.action(static_cast<int>(i));
            int left = pair_index(xe, e2);   // (theta(x,e), e')
            int right = pair_index(x, e2);   // (x, e')
            if (left < 0 || right < 0) continue;
            if (d.action(left) != d.action(right)) {
                cocycle = false;
                cocycle_witness = "(" + f.total.elems[x] + "|" + phi.source.elems[e] + "|" +
                                  phi.source.elems[e2] + ")";
            }
        }
    }
    rep.check(std::string("cocycle square") + (cocycle ? "" : " [fails at " + cocycle_witness + "]"), cocycle);
    return rep;
}

// can^phi(f: X -> B) = (X x_B E over E, ((x,e),e') -> (x,e')).
inline CodescentDatum can_upper_phi(const FinSetMap& phi, const Bundle& f) {
    require(f.base == phi.target, "bundle must live over B");
    PullbackResult pb = pullback(f.projection, phi);
    std::vector<int> proj;
    for (auto& [x, e] : pb.pairs) proj.push_back(e);
    Bundle over_e(pb.object, phi.source, FinSetMap(pb.object, phi.source, std::move(proj)));
    PullbackResult dom = pullback(compose(phi, over_e.projection), phi);
    std::vector<int> theta;
    for (auto& [xe, e2] : dom.pairs) {
        int x = pb.pairs[xe].first;
        int found = -1;
        for (size_t j = 0; j < pb.pairs.size() && found < 0; ++j)
            if (pb.pairs[j].first == x && pb.pairs[j].second == e2) found = static_cast<int>(j);
        require(found >= 0, "pullback element not found");
        theta.push_back(found);
    }
    CodescentDatum d{phi, over_e, FinSetMap(dom.object, over_e.total, std::move(theta)), dom};
    return d;
}

// Q^phi(N, theta) = coequal(theta, projection), a bundle over B.
struct IndecomposablesResult {
    Bundle object;                 // over B
    FinSetMap projection;          // X -> classes
};

struct QCanComparison {
    IndecomposablesResult q;
    BundleMap counit;  // Q(can(f)) -> f
    bool isomorphism = false;
};

inline IndecomposablesResult q_indecomposables(const CodescentDatum& d) {
    UnionFind uf(d.bundle.total.size());
    for (size_t i = 0; i < d.domain.pairs.size(); ++i) uf.unite(d.domain.pairs[i].first, d.action(static_cast<int>(i)));
    std::vector<int> rep_to_class(static_cast<size_t>(d.bundle.total.size()), -1);
    std::vector<std::string> labels;
    std::vector<int> proj(static_cast<size_t>(d.bundle.total.size()));
    std::vector<int> base_point;
    for (int i = 0; i < d.bundle.total.size(); ++i) {
        int r = uf.find(i);
        if (rep_to_class[r] < 0) {
            rep_to_class[r] = static_cast<int>(labels.size());
            labels.push_back(d.bundle.total.elems[r]);
            base_point.push_back(d.phi(d.bundle.projection(r)));
        }
        proj[i] = rep_to_class[r];
    }
    FinSet cls(labels);
    Bundle obj(cls, d.phi.target, FinSetMap(cls, d.phi.target, std::move(base_point)));
    return {obj, FinSetMap(d.bundle.total, cls, std::move(proj))};
}

// the counit of the (Q, can) adjunction at a bundle over B: the class of
// (x, e) goes to x; a bijection exactly when descent data reassemble
inline QCanComparison q_can_comparison(const FinSetMap& phi, const Bundle& f) {
    CodescentDatum d = can_upper_phi(phi, f);
    IndecomposablesResult q = q_indecomposables(d);
    // elements of Q are classes of pullback pairs (x, e); send a class to x
    PullbackResult pb = pullback(f.projection, phi);
    std::vector<int> img(static_cast<size_t>(q.object.total.size()), -1);
    for (int i = 0; i < d.bundle.total.size(); ++i) img[q.projection(i)] = pb.pairs[i].first;
    BundleMap counit(q.object, f, FinSetMap(q.object.total, f.total, std::move(img)));
    bool iso = counit.map.injective() && counit.map.surjective();
    return {std::move(q), std::move(counit), iso};
}

// ---------------------------------------------------------------------------
// Beck's coequalizer criterion for codescent.

struct CodescentBeckResult {
    bool holds = false;
    Bundle coequalizer_object;
    BundleMap comparison;  // coequalizer -> d
    std::string witness;   // on failure: a base point outside im(phi) hit by d
    CheckReport report{"Beck codescent"};
};

inline CodescentBeckResult beck_codescent_check(const FinSetMap& phi, const Bundle& d) {
    require(d.base == phi.target, "bundle must live over B");
    ComonadHandle<BundleCat> k = comonad_K_phi_sets(phi);
    Bundle kd = k.apply(d);
    BundleMap keps = k.lift(k.counit(d));   // K eps_d: K^2 d -> K d
    BundleMap epsk = k.counit(kd);          // eps_{K d}
    auto coeq = BundleCat::coequalizer_pair(keps, epsk);
    BundleMap cmp = BundleCat::descend(coeq, k.counit(d));

    CodescentBeckResult out{false, coeq.object, cmp, "", CheckReport("Beck codescent")};
    bool inj = cmp.map.injective(), surj = cmp.map.surjective();
    out.report.check("comparison injective", inj);
    out.report.check("comparison surjective", surj);
    out.holds = inj && surj;
    if (!surj) {
        std::vector<int> hit(static_cast<size_t>(d.total.size()));
        for (int i = 0; i < cmp.map.source.size(); ++i) hit[cmp.map(i)] = 1;
        for (int x = 0; x < d.total.size(); ++x)
            if (!hit[x]) {
                out.witness = d.total.elems[x] + " over " + d.base.elems[d.projection(x)];
                break;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// A section of phi makes every Cech nerve contractible (extra degeneracies).

inline SdrCertificate<BundleCat> barr_contractibility_from_section(const FinSetMap& phi,
                                                                   const FinSetMap& sigma,
                                                                   const Bundle& f, int N) {
    require(sigma.source == phi.target && sigma.target == phi.source, "sigma must map B -> E");
    require(compose(phi, sigma).equals(FinSetMap::identity(phi.target)), "sigma is not a section of phi");
    require(f.base == phi.target, "bundle must live over B");
    ComonadHandle<BundleCat> k = comonad_K_phi_sets(phi);
    auto nerve = bar(k, f, N);
    // h: x -> (x, sigma(f(x))), the coalgebra structure induced by the section
    Bundle kf = k.apply(f);
    PullbackResult pb = pullback(f.projection, phi);
    std::vector<int> img;
    for (int x = 0; x < f.total.size(); ++x) {
        int e = sigma(f.projection(x));
        int found = -1;
        for (size_t j = 0; j < pb.pairs.size() && found < 0; ++j)
            if (pb.pairs[j].first == x && pb.pairs[j].second == e) found = static_cast<int>(j);
        require(found >= 0, "section image not found in the pullback");
        img.push_back(found);
    }
    BundleMap h(f, kf, FinSetMap(f.total, kf.total, std::move(img)));
    std::vector<BundleMap> extra;
    for (int n = 0; n <= N; ++n) extra.push_back(k.lift(h, n));
    return check_contractible_simplicial(nerve, extra);
}

}  // namespace descent
