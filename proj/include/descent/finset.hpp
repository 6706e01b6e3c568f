#pragma once

// Finite sets with labeled elements, total maps between them, pullbacks, and
// bundles (objects of the slice over a fixed base).  Coequalizers use
// union-find with the least label as the canonical representative.

#include "descent/report.hpp"
#include "descent/zmat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace descent {

struct FinSet {
    std::vector<std::string> elems;

    FinSet() = default;
    explicit FinSet(std::vector<std::string> e) : elems(std::move(e)) {
        std::map<std::string, int> seen;
        for (const auto& x : elems)
            require(seen.emplace(x, 1).second, "duplicate element label: " + x);
    }

    int size() const { return static_cast<int>(elems.size()); }
    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (elems[i] == label) return i;
        throw error("no element labeled " + label);
    }
    bool operator==(const FinSet& o) const { return elems == o.elems; }

    std::string key() const {
        std::string k = "S{";
        for (const auto& e : elems) k += e + ";";
        return k + "}";
    }
};

struct FinSetMap {
    FinSet source, target;
    std::vector<int> image;  // image[i] = target index of source element i

    FinSetMap() = default;
    FinSetMap(FinSet s, FinSet t, std::vector<int> img)
        : source(std::move(s)), target(std::move(t)), image(std::move(img)) {
        require(static_cast<int>(image.size()) == source.size(), "map must be total");
        for (int v : image)
            require(v >= 0 && v < target.size(), "map value out of range");
    }

    static FinSetMap identity(const FinSet& s) {
        std::vector<int> img(static_cast<size_t>(s.size()));
        std::iota(img.begin(), img.end(), 0);
        return FinSetMap(s, s, std::move(img));
    }

    int operator()(int i) const { return image[i]; }

    bool equals(const FinSetMap& o) const {
        return source == o.source && target == o.target && image == o.image;
    }

    bool injective() const {
        std::vector<int> hit(static_cast<size_t>(target.size()));
        for (int v : image)
            if (++hit[v] > 1) return false;
        return true;
    }
    bool surjective() const {
        std::vector<int> hit(static_cast<size_t>(target.size()));
        for (int v : image) hit[v] = 1;
        for (int h : hit)
            if (!h) return false;
        return true;
    }

    std::string key() const {
        std::string k = "f{" + source.key() + "->" + target.key() + ":";
        for (int v : image) k += std::to_string(v) + ",";
        return k + "}";
    }
};

inline FinSetMap compose(const FinSetMap& g, const FinSetMap& f) {
    require(f.target == g.source, "composition endpoint mismatch");
    std::vector<int> img(f.image.size());
    for (size_t i = 0; i < f.image.size(); ++i) img[i] = g.image[f.image[i]];
    return FinSetMap(f.source, g.target, std::move(img));
}

// Pullback of f: X -> B and g: Y -> B: pairs agreeing in B, with projections.
struct PullbackResult {
    FinSet object;
    FinSetMap to_first;
    FinSetMap to_second;
    std::vector<std::pair<int, int>> pairs;
};

inline PullbackResult pullback(const FinSetMap& f, const FinSetMap& g) {
    require(f.target == g.target, "pullback needs a common target");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> p1, p2;
    for (int x = 0; x < f.source.size(); ++x)
        for (int y = 0; y < g.source.size(); ++y)
            if (f(x) == g(y)) {
                labels.push_back("(" + f.source.elems[x] + "|" + g.source.elems[y] + ")");
                pairs.emplace_back(x, y);
                p1.push_back(x);
                p2.push_back(y);
            }
    FinSet obj(labels);
    return {obj, FinSetMap(obj, f.source, std::move(p1)), FinSetMap(obj, g.source, std::move(p2)),
            std::move(pairs)};
}

// plain finite sets as an ambient category (values of set diagrams)
struct SetCat {
    using Object = FinSet;
    using Morphism = FinSetMap;
    static const Object& source(const Morphism& f) { return f.source; }
    static const Object& target(const Morphism& f) { return f.target; }
    static Morphism compose(const Morphism& g, const Morphism& f) { return descent::compose(g, f); }
    static Morphism identity(const Object& x) { return FinSetMap::identity(x); }
    static bool equal(const Morphism& f, const Morphism& g) { return f.equals(g); }
    static std::string key(const Object& x) { return x.key(); }
    static std::string morphism_key(const Morphism& f) { return f.key(); }
    static std::string describe(const Object& x) { return "set of size " + std::to_string(x.size()); }
    static bool injective(const Morphism& f) { return f.injective(); }
    static bool surjective(const Morphism& f) { return f.surjective(); }

    struct CoequalizerData {
        Object object;
        Morphism projection;
    };
    static CoequalizerData coequalizer_pair(const Morphism& f, const Morphism& g);
    static Morphism descend(const CoequalizerData& c, const Morphism& h);

    struct EqualizerData {
        Object object;
        Morphism inclusion;
    };
    static EqualizerData equalizer_pair(const Morphism& f, const Morphism& g) {
        require(f.source == g.source && f.target == g.target, "equalizer needs a parallel pair");
        std::vector<std::string> labels;
        std::vector<int> incl;
        for (int i = 0; i < f.source.size(); ++i)
            if (f(i) == g(i)) {
                labels.push_back(f.source.elems[i]);
                incl.push_back(i);
            }
        FinSet obj(labels);
        return {obj, Morphism(obj, f.source, std::move(incl))};
    }
};

// union-find with least-index representative
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;  // keep the least index
        else parent[a] = b;
    }
};

inline SetCat::CoequalizerData SetCat::coequalizer_pair(const Morphism& f, const Morphism& g) {
    require(f.source == g.source && f.target == g.target, "coequalizer needs a parallel pair");
    UnionFind uf(f.target.size());
    for (int i = 0; i < f.source.size(); ++i) uf.unite(f(i), g(i));
    std::vector<int> rep_to_class(static_cast<size_t>(f.target.size()), -1);
    std::vector<std::string> labels;
    std::vector<int> proj(static_cast<size_t>(f.target.size()));
    for (int i = 0; i < f.target.size(); ++i) {
        int r = uf.find(i);
        if (rep_to_class[r] < 0) {
            rep_to_class[r] = static_cast<int>(labels.size());
            labels.push_back(f.target.elems[r]);
        }
        proj[i] = rep_to_class[r];
    }
    FinSet obj(labels);
    return {obj, Morphism(f.target, obj, std::move(proj))};
}

inline SetCat::Morphism SetCat::descend(const CoequalizerData& c, const Morphism& h) {
    // h coequalizes, so it is constant on classes; map each class via any member
    std::vector<int> img(static_cast<size_t>(c.object.size()), -1);
    for (int i = 0; i < h.source.size(); ++i) {
        int cls = c.projection(i);
        if (img[cls] >= 0) require(img[cls] == h(i), "map does not descend to the quotient");
        img[cls] = h(i);
    }
    return Morphism(c.object, h.target, std::move(img));
}

// ---------------------------------------------------------------------------
// Bundles: the slice over a fixed finite base.

struct Bundle {
    FinSet total;
    FinSet base;
    FinSetMap projection;

    Bundle() = default;
    Bundle(FinSet t, FinSet b, FinSetMap p)
        : total(std::move(t)), base(std::move(b)), projection(std::move(p)) {
        require(projection.source == total && projection.target == base,
                "projection endpoints must match the bundle");
    }
    static Bundle over_self(const FinSet& b) { return Bundle(b, b, FinSetMap::identity(b)); }

    std::string key() const { return "B{" + projection.key() + "}"; }
    bool operator==(const Bundle& o) const {
        return total == o.total && base == o.base && projection.image == o.projection.image;
    }
};

struct BundleMap {
    Bundle source, target;
    FinSetMap map;  // on totals, over the base

    BundleMap() = default;
    BundleMap(Bundle s, Bundle t, FinSetMap m)
        : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
        require(source.base == target.base, "bundle map requires a common base");
        require(map.source == source.total && map.target == target.total,
                "bundle map endpoints mismatch");
        for (int i = 0; i < source.total.size(); ++i)
            require(target.projection(map(i)) == source.projection(i), "bundle map is not over the base");
    }

    bool equals(const BundleMap& o) const { return map.equals(o.map); }
    std::string key() const { return map.key(); }
};

inline BundleMap compose(const BundleMap& g, const BundleMap& f) {
    return BundleMap(f.source, g.target, compose(g.map, f.map));
}

struct BundleCat {
    using Object = Bundle;
    using Morphism = BundleMap;
    static const Object& source(const Morphism& f) { return f.source; }
    static const Object& target(const Morphism& f) { return f.target; }
    static Morphism compose(const Morphism& g, const Morphism& f) { return descent::compose(g, f); }
    static Morphism identity(const Object& x) { return Morphism(x, x, FinSetMap::identity(x.total)); }
    static bool equal(const Morphism& f, const Morphism& g) { return f.equals(g); }
    static std::string key(const Object& x) { return x.key(); }
    static std::string morphism_key(const Morphism& f) { return f.key(); }
    static std::string describe(const Object& x) {
        return "bundle with " + std::to_string(x.total.size()) + " elements over " +
               std::to_string(x.base.size());
    }
    static bool injective(const Morphism& f) { return f.map.injective(); }
    static bool surjective(const Morphism& f) { return f.map.surjective(); }

    // categorical product in the slice: fiber product over the base
    struct Product {
        Object object;
        std::vector<Morphism> projections;
    };
    static Product product(const std::vector<Object>& xs) {
        require(!xs.empty(), "product of no bundles is the base itself; unsupported");
        Object acc = xs[0];
        // iterated fiber product, flattened labels
        std::vector<std::vector<int>> coords;  // per element of acc.total: indices into xs[k].total
        for (int i = 0; i < acc.total.size(); ++i) coords.push_back({i});
        for (size_t k = 1; k < xs.size(); ++k) {
            std::vector<std::string> labels;
            std::vector<int> proj_base;
            std::vector<std::vector<int>> newcoords;
            for (int i = 0; i < acc.total.size(); ++i)
                for (int j = 0; j < xs[k].total.size(); ++j)
                    if (acc.projection(i) == xs[k].projection(j)) {
                        labels.push_back("(" + acc.total.elems[i] + "|" + xs[k].total.elems[j] + ")");
                        proj_base.push_back(acc.projection(i));
                        auto c = coords[i];
                        c.push_back(j);
                        newcoords.push_back(std::move(c));
                    }
            FinSet tot(labels);
            acc = Object(tot, acc.base, FinSetMap(tot, acc.base, std::move(proj_base)));
            coords = std::move(newcoords);
        }
        Product out{acc, {}};
        for (size_t k = 0; k < xs.size(); ++k) {
            std::vector<int> img;
            for (auto& c : coords) img.push_back(c[k]);
            out.projections.emplace_back(acc, xs[k], FinSetMap(acc.total, xs[k].total, std::move(img)));
        }
        return out;
    }
    static Morphism into_product(const Product& p, const std::vector<Morphism>& comps) {
        require(!comps.empty(), "into_product needs at least one component");
        const Object& src = comps[0].source;
        // locate the tuple element matching all component images
        std::vector<int> img;
        for (int i = 0; i < src.total.size(); ++i) {
            int found = -1;
            for (int t = 0; t < p.object.total.size() && found < 0; ++t) {
                bool all = true;
                for (size_t k = 0; k < comps.size(); ++k)
                    if (p.projections[k].map(t) != comps[k].map(i)) {
                        all = false;
                        break;
                    }
                if (all) found = t;
            }
            require(found >= 0, "no tuple matches the component images");
            img.push_back(found);
        }
        return Morphism(src, p.object, FinSetMap(src.total, p.object.total, std::move(img)));
    }

    struct Coproduct {
        Object object;
        std::vector<Morphism> injections;
    };
    static Coproduct coproduct(const std::vector<Object>& xs) {
        require(!xs.empty(), "coproduct of no bundles is empty; unsupported");
        std::vector<std::string> labels;
        std::vector<int> proj;
        for (size_t k = 0; k < xs.size(); ++k)
            for (int i = 0; i < xs[k].total.size(); ++i) {
                labels.push_back(std::to_string(k) + ":" + xs[k].total.elems[i]);
                proj.push_back(xs[k].projection(i));
            }
        FinSet tot(labels);
        Object obj(tot, xs[0].base, FinSetMap(tot, xs[0].base, std::move(proj)));
        Coproduct out{obj, {}};
        int off = 0;
        for (const auto& x : xs) {
            std::vector<int> img;
            for (int i = 0; i < x.total.size(); ++i) img.push_back(off + i);
            out.injections.emplace_back(x, obj, FinSetMap(x.total, obj.total, std::move(img)));
            off += x.total.size();
        }
        return out;
    }
    static Morphism from_coproduct(const Coproduct& p, const std::vector<Morphism>& comps) {
        require(!comps.empty(), "from_coproduct needs at least one component");
        std::vector<int> img;
        for (const auto& c : comps)
            for (int i = 0; i < c.source.total.size(); ++i) img.push_back(c.map(i));
        return Morphism(p.object, comps[0].target, FinSetMap(p.object.total, comps[0].target.total, std::move(img)));
    }

    struct EqualizerData {
        Object object;
        Morphism inclusion;
    };
    static EqualizerData equalizer_pair(const Morphism& f, const Morphism& g) {
        auto eq = SetCat::equalizer_pair(f.map, g.map);
        std::vector<int> proj;
        for (int i = 0; i < eq.object.size(); ++i) proj.push_back(f.source.projection(eq.inclusion(i)));
        Object obj(eq.object, f.source.base, FinSetMap(eq.object, f.source.base, std::move(proj)));
        return {obj, Morphism(obj, f.source, eq.inclusion)};
    }
    static Morphism corestrict(const EqualizerData& e, const Morphism& h) {
        std::vector<int> img;
        for (int i = 0; i < h.source.total.size(); ++i) {
            int v = h.map(i);
            int found = -1;
            for (int j = 0; j < e.object.total.size() && found < 0; ++j)
                if (e.inclusion.map(j) == v) found = j;
            require(found >= 0, "map does not land in the equalizer");
            img.push_back(found);
        }
        return Morphism(h.source, e.object, FinSetMap(h.source.total, e.object.total, std::move(img)));
    }

    struct CoequalizerData {
        Object object;
        Morphism projection;
    };
    static CoequalizerData coequalizer_pair(const Morphism& f, const Morphism& g) {
        auto coeq = SetCat::coequalizer_pair(f.map, g.map);
        // base point of a class: image of any member (all agree, maps are over B)
        std::vector<int> proj(static_cast<size_t>(coeq.object.size()));
        for (int i = 0; i < f.target.total.size(); ++i) proj[coeq.projection(i)] = f.target.projection(i);
        Object obj(coeq.object, f.target.base, FinSetMap(coeq.object, f.target.base, std::move(proj)));
        return {obj, Morphism(f.target, obj, coeq.projection)};
    }
    static Morphism descend(const CoequalizerData& c, const Morphism& h) {
        SetCat::CoequalizerData sc{c.object.total, c.projection.map};
        return Morphism(c.object, h.target, SetCat::descend(sc, h.map));
    }
};

}  // namespace descent
