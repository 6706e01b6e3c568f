#pragma once

// Finite categories, functors between them, and diagrams valued in finite
// sets or finitely presented abelian groups.  Everything is validated on
// construction: composition closure, associativity, units, functoriality.

#include "descent/finset.hpp"
#include "descent/module.hpp"

#include <map>

namespace descent {

struct FinCat {
    struct Mor {
        std::string name;
        int src = 0, tgt = 0;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<int> identity_of;            // per object
    std::vector<std::vector<int>> comp;      // comp[g][f] = index of g o f, -1 if not composable

    FinCat() = default;
    FinCat(std::vector<std::string> obs, std::vector<Mor> mors, std::vector<int> ids,
           std::vector<std::vector<int>> table)
        : objects(std::move(obs)), morphisms(std::move(mors)), identity_of(std::move(ids)),
          comp(std::move(table)) {
        validate();
    }

    int object_index(const std::string& name) const {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == name) return static_cast<int>(i);
        throw error("no object named " + name);
    }
    int morphism_index(const std::string& name) const {
        for (size_t i = 0; i < morphisms.size(); ++i)
            if (morphisms[i].name == name) return static_cast<int>(i);
        throw error("no morphism named " + name);
    }
    int compose_indices(int g, int f) const {
        require(morphisms[f].tgt == morphisms[g].src, "morphisms not composable");
        int c = comp[g][f];
        require(c >= 0, "composition table incomplete at (" + morphisms[g].name + "," +
                            morphisms[f].name + ")");
        return c;
    }

    std::string key() const {
        std::string k = "C{";
        for (auto& o : objects) k += o + ";";
        for (auto& m : morphisms) k += m.name + ":" + std::to_string(m.src) + ">" + std::to_string(m.tgt) + ";";
        return k + "}";
    }

private:
    void validate() const {
        require(identity_of.size() == objects.size(), "one identity per object expected");
        {
            std::map<std::string, int> seen;
            for (auto& o : objects) require(seen.emplace(o, 1).second, "duplicate object name: " + o);
            seen.clear();
            for (auto& m : morphisms)
                require(seen.emplace(m.name, 1).second, "duplicate morphism name: " + m.name);
        }
        for (size_t o = 0; o < objects.size(); ++o) {
            int id = identity_of[o];
            require(id >= 0 && id < static_cast<int>(morphisms.size()), "identity index out of range");
            require(morphisms[id].src == static_cast<int>(o) && morphisms[id].tgt == static_cast<int>(o),
                    "identity of " + objects[o] + " must be an endomorphism");
        }
        require(comp.size() == morphisms.size(), "composition table must be square");
        for (auto& row : comp) require(row.size() == morphisms.size(), "composition table must be square");
        for (size_t g = 0; g < morphisms.size(); ++g)
            for (size_t f = 0; f < morphisms.size(); ++f) {
                bool composable = morphisms[f].tgt == morphisms[g].src;
                int c = comp[g][f];
                if (!composable) {
                    require(c < 0, "table entry for non-composable pair (" + morphisms[g].name + "," +
                                       morphisms[f].name + ")");
                    continue;
                }
                require(c >= 0 && c < static_cast<int>(morphisms.size()),
                        "not closed under composition at (" + morphisms[g].name + "," + morphisms[f].name + ")");
                require(morphisms[c].src == morphisms[f].src && morphisms[c].tgt == morphisms[g].tgt,
                        "composite endpoints wrong at (" + morphisms[g].name + "," + morphisms[f].name + ")");
            }
        // unit laws
        for (size_t f = 0; f < morphisms.size(); ++f) {
            require(comp[f][identity_of[morphisms[f].src]] == static_cast<int>(f), "right unit law fails at " + morphisms[f].name);
            require(comp[identity_of[morphisms[f].tgt]][f] == static_cast<int>(f), "left unit law fails at " + morphisms[f].name);
        }
        // associativity
        for (size_t h = 0; h < morphisms.size(); ++h)
            for (size_t g = 0; g < morphisms.size(); ++g) {
                if (morphisms[g].tgt != morphisms[h].src) continue;
                for (size_t f = 0; f < morphisms.size(); ++f) {
                    if (morphisms[f].tgt != morphisms[g].src) continue;
                    int hg = comp[h][g];
                    int gf = comp[g][f];
                    require(comp[hg][f] == comp[h][gf], "associativity fails at (" + morphisms[h].name +
                                                            "," + morphisms[g].name + "," + morphisms[f].name + ")");
                }
            }
    }
};

// small builders used by fixtures and the generated suites
inline FinCat discrete_category(const std::vector<std::string>& obs) {
    std::vector<FinCat::Mor> mors;
    std::vector<int> ids;
    for (size_t o = 0; o < obs.size(); ++o) {
        mors.push_back({"id_" + obs[o], static_cast<int>(o), static_cast<int>(o)});
        ids.push_back(static_cast<int>(o));
    }
    std::vector<std::vector<int>> table(mors.size(), std::vector<int>(mors.size(), -1));
    for (size_t m = 0; m < mors.size(); ++m) table[m][m] = static_cast<int>(m);
    return FinCat(obs, mors, ids, table);
}

// thin category of a partial order given by its strict covering pairs
inline FinCat poset_category(const std::vector<std::string>& obs,
                             const std::vector<std::pair<int, int>>& less_than) {
    size_t n = obs.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) le[i][i] = true;
    for (auto& [a, b] : less_than) le[a][b] = true;
    // transitive closure
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    std::vector<FinCat::Mor> mors;
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    std::vector<int> ids(n, -1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (le[i][j]) {
                idx[i][j] = static_cast<int>(mors.size());
                mors.push_back({i == j ? "id_" + obs[i] : obs[i] + "<" + obs[j], static_cast<int>(i),
                                static_cast<int>(j)});
                if (i == j) ids[i] = idx[i][j];
            }
    std::vector<std::vector<int>> table(mors.size(), std::vector<int>(mors.size(), -1));
    for (size_t g = 0; g < mors.size(); ++g)
        for (size_t f = 0; f < mors.size(); ++f)
            if (mors[f].tgt == mors[g].src) table[g][f] = idx[mors[f].src][mors[g].tgt];
    return FinCat(obs, mors, ids, table);
}

// one-object category of a finite monoid given by its multiplication table;
// element 0 is the unit; table[a][b] = a o b
inline FinCat monoid_category(const std::string& obname, const std::vector<std::string>& elems,
                              const std::vector<std::vector<int>>& table) {
    std::vector<FinCat::Mor> mors;
    for (auto& e : elems) mors.push_back({e, 0, 0});
    std::vector<std::vector<int>> comp(elems.size(), std::vector<int>(elems.size(), -1));
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) comp[a][b] = table[a][b];
    return FinCat({obname}, mors, {0}, comp);
}

struct CatFunctor {
    FinCat source, target;
    std::vector<int> object_map;
    std::vector<int> morphism_map;

    CatFunctor() = default;
    CatFunctor(FinCat s, FinCat t, std::vector<int> omap, std::vector<int> mmap)
        : source(std::move(s)), target(std::move(t)), object_map(std::move(omap)),
          morphism_map(std::move(mmap)) {
        require(object_map.size() == source.objects.size(), "object map arity");
        require(morphism_map.size() == source.morphisms.size(), "morphism map arity");
        for (size_t m = 0; m < source.morphisms.size(); ++m) {
            const auto& mor = source.morphisms[m];
            const auto& img = target.morphisms[morphism_map[m]];
            require(img.src == object_map[mor.src] && img.tgt == object_map[mor.tgt],
                    "functor breaks endpoints at " + mor.name);
        }
        for (size_t o = 0; o < source.objects.size(); ++o)
            require(morphism_map[source.identity_of[o]] == target.identity_of[object_map[o]],
                    "functor does not preserve the identity of " + source.objects[o]);
        for (size_t g = 0; g < source.morphisms.size(); ++g)
            for (size_t f = 0; f < source.morphisms.size(); ++f) {
                if (source.morphisms[f].tgt != source.morphisms[g].src) continue;
                int c = source.comp[g][f];
                require(morphism_map[c] == target.comp[morphism_map[g]][morphism_map[f]],
                        "functor breaks composition at (" + source.morphisms[g].name + "," +
                            source.morphisms[f].name + ")");
            }
    }

    static CatFunctor identity(const FinCat& c) {
        std::vector<int> omap(c.objects.size()), mmap(c.morphisms.size());
        std::iota(omap.begin(), omap.end(), 0);
        std::iota(mmap.begin(), mmap.end(), 0);
        return CatFunctor(c, c, std::move(omap), std::move(mmap));
    }

    // computed, never declared
    bool is_full() const {
        for (size_t c = 0; c < source.objects.size(); ++c)
            for (size_t c2 = 0; c2 < source.objects.size(); ++c2)
                for (size_t h = 0; h < target.morphisms.size(); ++h) {
                    const auto& mor = target.morphisms[h];
                    if (mor.src != object_map[c] || mor.tgt != object_map[c2]) continue;
                    bool hit = false;
                    for (size_t g = 0; g < source.morphisms.size(); ++g)
                        if (source.morphisms[g].src == static_cast<int>(c) &&
                            source.morphisms[g].tgt == static_cast<int>(c2) &&
                            morphism_map[g] == static_cast<int>(h))
                            hit = true;
                    if (!hit) return false;
                }
        return true;
    }
};

// ---------------------------------------------------------------------------
// Diagrams: functors from a finite category into SetCat or AbCat.

template <typename V>
struct Diagram {
    FinCat base;
    std::vector<typename V::Object> value_of;      // per object
    std::vector<typename V::Morphism> map_of;      // per morphism

    Diagram() = default;
    Diagram(FinCat b, std::vector<typename V::Object> vals, std::vector<typename V::Morphism> maps)
        : base(std::move(b)), value_of(std::move(vals)), map_of(std::move(maps)) {
        require(value_of.size() == base.objects.size(), "one value per object expected");
        require(map_of.size() == base.morphisms.size(), "one map per morphism expected");
        for (size_t m = 0; m < base.morphisms.size(); ++m) {
            require(V::key(V::source(map_of[m])) == V::key(value_of[base.morphisms[m].src]) &&
                        V::key(V::target(map_of[m])) == V::key(value_of[base.morphisms[m].tgt]),
                    "diagram map endpoints mismatch at " + base.morphisms[m].name);
        }
        for (size_t o = 0; o < base.objects.size(); ++o)
            require(V::equal(map_of[base.identity_of[o]], V::identity(value_of[o])),
                    "diagram does not send the identity of " + base.objects[o] + " to the identity");
        for (size_t g = 0; g < base.morphisms.size(); ++g)
            for (size_t f = 0; f < base.morphisms.size(); ++f) {
                if (base.morphisms[f].tgt != base.morphisms[g].src) continue;
                int c = base.comp[g][f];
                require(V::equal(map_of[c], V::compose(map_of[g], map_of[f])),
                        "diagram breaks functoriality at (" + base.morphisms[g].name + "," +
                            base.morphisms[f].name + ")");
            }
    }

    std::string key() const {
        std::string k = "D{" + base.key();
        for (auto& v : value_of) k += V::key(v) + ";";
        for (auto& m : map_of) k += V::morphism_key(m) + ";";
        return k + "}";
    }
};

template <typename V>
struct NatTrans {
    Diagram<V> source, target;
    std::vector<typename V::Morphism> component;  // per object of the base

    NatTrans() = default;
    NatTrans(Diagram<V> s, Diagram<V> t, std::vector<typename V::Morphism> comps)
        : source(std::move(s)), target(std::move(t)), component(std::move(comps)) {
        require(source.base.key() == target.base.key(), "natural transformation needs one base category");
        require(component.size() == source.base.objects.size(), "one component per object expected");
        for (size_t m = 0; m < source.base.morphisms.size(); ++m) {
            const auto& mor = source.base.morphisms[m];
            auto lhs = V::compose(component[mor.tgt], source.map_of[m]);
            auto rhs = V::compose(target.map_of[m], component[mor.src]);
            require(V::equal(lhs, rhs), "naturality fails at " + mor.name);
        }
    }

    std::string key() const {
        std::string k = "N{";
        for (auto& c : component) k += V::morphism_key(c) + ";";
        return k + "}";
    }
};

template <typename V>
struct DiagCat {
    using Object = Diagram<V>;
    using Morphism = NatTrans<V>;
    static const Object& source(const Morphism& f) { return f.source; }
    static const Object& target(const Morphism& f) { return f.target; }
    static Morphism compose(const Morphism& g, const Morphism& f) {
        std::vector<typename V::Morphism> comps;
        for (size_t o = 0; o < f.component.size(); ++o)
            comps.push_back(V::compose(g.component[o], f.component[o]));
        return Morphism(f.source, g.target, std::move(comps));
    }
    static Morphism identity(const Object& x) {
        std::vector<typename V::Morphism> comps;
        for (auto& v : x.value_of) comps.push_back(V::identity(v));
        return Morphism(x, x, std::move(comps));
    }
    static bool equal(const Morphism& f, const Morphism& g) {
        for (size_t o = 0; o < f.component.size(); ++o)
            if (!V::equal(f.component[o], g.component[o])) return false;
        return true;
    }
    static std::string key(const Object& x) { return x.key(); }
    static std::string morphism_key(const Morphism& f) { return f.key(); }
    static std::string describe(const Object& x) {
        return "diagram over " + std::to_string(x.base.objects.size()) + " objects";
    }
};

}  // namespace descent
