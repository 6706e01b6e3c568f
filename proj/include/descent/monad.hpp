#pragma once

// Monad and comonad handles over an ambient category trait, law checking on
// probe objects, and the cobar / bar constructions.  Handles are evaluated
// lazily; object images are memoized by presentation key because the towers
// T^{n+1} X grow quickly and sharing is essential.

#include "descent/simplicial.hpp"

#include <map>
#include <memory>

namespace descent {

template <typename Cat>
struct MonadHandle {
    using Object = typename Cat::Object;
    using Morphism = typename Cat::Morphism;

    std::string name;
    std::function<Object(const Object&)> on_object;
    std::function<Morphism(const Morphism&)> on_morphism;
    std::function<Morphism(const Object&)> unit;  // eta_X: X -> T X
    std::function<Morphism(const Object&)> mult;  // mu_X: T^2 X -> T X

    std::shared_ptr<std::map<std::string, Object>> object_cache =
        std::make_shared<std::map<std::string, Object>>();

    Object apply(const Object& x) const {
        std::string k = Cat::key(x);
        auto it = object_cache->find(k);
        if (it != object_cache->end()) return it->second;
        Object tx = on_object(x);
        object_cache->emplace(std::move(k), tx);
        return tx;
    }
    Object iterate(const Object& x, int n) const {
        Object out = x;
        for (int i = 0; i < n; ++i) out = apply(out);
        return out;
    }
    Morphism lift(const Morphism& f, int times = 1) const {
        Morphism out = f;
        for (int i = 0; i < times; ++i) out = on_morphism(out);
        return out;
    }
};

template <typename Cat>
struct ComonadHandle {
    using Object = typename Cat::Object;
    using Morphism = typename Cat::Morphism;

    std::string name;
    std::function<Object(const Object&)> on_object;
    std::function<Morphism(const Morphism&)> on_morphism;
    std::function<Morphism(const Object&)> counit;   // eps_X: K X -> X
    std::function<Morphism(const Object&)> comult;   // delta_X: K X -> K^2 X

    std::shared_ptr<std::map<std::string, Object>> object_cache =
        std::make_shared<std::map<std::string, Object>>();

    Object apply(const Object& x) const {
        std::string k = Cat::key(x);
        auto it = object_cache->find(k);
        if (it != object_cache->end()) return it->second;
        Object kx = on_object(x);
        object_cache->emplace(std::move(k), kx);
        return kx;
    }
    Object iterate(const Object& x, int n) const {
        Object out = x;
        for (int i = 0; i < n; ++i) out = apply(out);
        return out;
    }
    Morphism lift(const Morphism& f, int times = 1) const {
        Morphism out = f;
        for (int i = 0; i < times; ++i) out = on_morphism(out);
        return out;
    }
};

template <typename Cat>
MonadHandle<Cat> identity_monad() {
    MonadHandle<Cat> t;
    t.name = "identity";
    t.on_object = [](const typename Cat::Object& x) { return x; };
    t.on_morphism = [](const typename Cat::Morphism& f) { return f; };
    t.unit = [](const typename Cat::Object& x) { return Cat::identity(x); };
    t.mult = [](const typename Cat::Object& x) { return Cat::identity(x); };
    return t;
}

template <typename Cat>
ComonadHandle<Cat> identity_comonad() {
    ComonadHandle<Cat> k;
    k.name = "identity";
    k.on_object = [](const typename Cat::Object& x) { return x; };
    k.on_morphism = [](const typename Cat::Morphism& f) { return f; };
    k.counit = [](const typename Cat::Object& x) { return Cat::identity(x); };
    k.comult = [](const typename Cat::Object& x) { return Cat::identity(x); };
    return k;
}

// Monad laws at each probe: mu o T eta = id = mu o eta T and
// mu o T mu = mu o mu T.  Exact morphism equality in the ambient category.
template <typename Cat>
CheckReport check_monad_laws(const MonadHandle<Cat>& t, const std::vector<typename Cat::Object>& probes) {
    CheckReport rep("monad laws [" + t.name + "]");
    int p = 0;
    for (const auto& x : probes) {
        std::string tag = " @probe" + std::to_string(p++);
        auto tx = t.apply(x);
        auto mu = t.mult(x);
        rep.check("unit.left" + tag, Cat::equal(Cat::compose(mu, t.lift(t.unit(x))), Cat::identity(tx)));
        rep.check("unit.right" + tag, Cat::equal(Cat::compose(mu, t.unit(tx)), Cat::identity(tx)));
        auto lhs = Cat::compose(mu, t.lift(t.mult(x)));
        auto rhs = Cat::compose(mu, t.mult(tx));
        rep.check("associativity" + tag, Cat::equal(lhs, rhs));
    }
    return rep;
}

template <typename Cat>
CheckReport check_comonad_laws(const ComonadHandle<Cat>& k, const std::vector<typename Cat::Object>& probes) {
    CheckReport rep("comonad laws [" + k.name + "]");
    int p = 0;
    for (const auto& x : probes) {
        std::string tag = " @probe" + std::to_string(p++);
        auto kx = k.apply(x);
        auto delta = k.comult(x);
        rep.check("counit.left" + tag, Cat::equal(Cat::compose(k.lift(k.counit(x)), delta), Cat::identity(kx)));
        rep.check("counit.right" + tag, Cat::equal(Cat::compose(k.counit(kx), delta), Cat::identity(kx)));
        auto lhs = Cat::compose(k.lift(k.comult(x)), delta);
        auto rhs = Cat::compose(k.comult(kx), delta);
        rep.check("coassociativity" + tag, Cat::equal(lhs, rhs));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cobar: level n is T^{n+1} C, cofaces insert the unit, codegeneracies apply
// the multiplication, coaugmented by eta_C.

template <typename Cat>
CoaugmentedCosimplicial<Cat> cobar(const MonadHandle<Cat>& t, const typename Cat::Object& c, int N) {
    require(N >= 1, "cobar needs truncation >= 1");
    std::vector<typename Cat::Object> power;  // power[k] = T^k c, k = 0..N+1
    power.push_back(c);
    for (int k = 1; k <= N + 1; ++k) power.push_back(t.apply(power[k - 1]));

    TruncatedCosimplicial<Cat> x;
    x.truncation = N;
    for (int n = 0; n <= N; ++n) x.level.push_back(power[n + 1]);
    for (int n = 0; n < N; ++n) {
        std::vector<typename Cat::Morphism> d;
        for (int i = 0; i <= n + 1; ++i) d.push_back(t.lift(t.unit(power[n + 1 - i]), i));
        std::vector<typename Cat::Morphism> s;
        for (int j = 0; j <= n; ++j) s.push_back(t.lift(t.mult(power[n - j]), j));
        x.coface.push_back(std::move(d));
        x.codegeneracy.push_back(std::move(s));
    }
    return CoaugmentedCosimplicial<Cat>{c, t.unit(c), std::move(x)};
}

// Bar: level n is K^{n+1} D, faces apply the counit, degeneracies insert the
// comultiplication, augmented by eps_D.
template <typename Cat>
AugmentedSimplicial<Cat> bar(const ComonadHandle<Cat>& k, const typename Cat::Object& d, int N) {
    require(N >= 1, "bar needs truncation >= 1");
    std::vector<typename Cat::Object> power;  // power[m] = K^m d, m = 0..N+1
    power.push_back(d);
    for (int m = 1; m <= N + 1; ++m) power.push_back(k.apply(power[m - 1]));

    TruncatedSimplicial<Cat> x;
    x.truncation = N;
    for (int n = 0; n <= N; ++n) x.level.push_back(power[n + 1]);
    x.face.emplace_back();
    for (int n = 1; n <= N; ++n) {
        std::vector<typename Cat::Morphism> d_n;
        for (int i = 0; i <= n; ++i) d_n.push_back(k.lift(k.counit(power[n - i]), i));
        x.face.push_back(std::move(d_n));
    }
    for (int n = 0; n < N; ++n) {
        std::vector<typename Cat::Morphism> s_n;
        for (int j = 0; j <= n; ++j) s_n.push_back(k.lift(k.comult(power[n - j]), j));
        x.degeneracy.push_back(std::move(s_n));
    }
    return AugmentedSimplicial<Cat>{d, k.counit(d), std::move(x)};
}

// Coaugmentation compatibility: d^0 eta = d^1 eta.
template <typename Cat>
bool coaugmentation_equalized(const CoaugmentedCosimplicial<Cat>& cx) {
    if (cx.object.truncation < 1) return true;
    return Cat::equal(Cat::compose(cx.object.coface[0][0], cx.coaugmentation),
                      Cat::compose(cx.object.coface[0][1], cx.coaugmentation));
}

template <typename Cat>
bool augmentation_coequalized(const AugmentedSimplicial<Cat>& ax) {
    if (ax.object.truncation < 1) return true;
    return Cat::equal(Cat::compose(ax.augmentation, ax.object.face[1][0]),
                      Cat::compose(ax.augmentation, ax.object.face[1][1]));
}

}  // namespace descent
