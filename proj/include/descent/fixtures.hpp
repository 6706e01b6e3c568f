#pragma once

// Finite-category and diagram fixtures: the small categories, full functors
// and diagrams used by the generated Kan suite, the CLI workspace and tests.

#include "descent/kan.hpp"

namespace descent {

inline FinCat terminal_category() { return discrete_category({"pt"}); }

inline FinCat arrow_category() { return poset_category({"d0", "d1"}, {{0, 1}}); }

inline FinCat chain3_category() { return poset_category({"c0", "c1", "c2"}, {{0, 1}, {1, 2}}); }

inline FinCat span_category() { return poset_category({"a", "b", "m"}, {{2, 0}, {2, 1}}); }

inline FinCat cospan_category() { return poset_category({"a", "b", "m"}, {{0, 2}, {1, 2}}); }

inline FinCat z2_monoid_category() {
    return monoid_category("pt", {"1", "g"}, {{0, 1}, {1, 0}});
}

inline FinCat idempotent_monoid_category() {
    // one object, morphisms {1, e} with e o e = e
    return monoid_category("pt", {"1", "e"}, {{0, 1}, {1, 1}});
}

// full subcategory inclusion on a subset of objects
inline CatFunctor full_subcategory_inclusion(const FinCat& c, const std::vector<int>& objects) {
    std::vector<std::string> obs;
    for (int o : objects) obs.push_back(c.objects[o]);
    std::vector<FinCat::Mor> mors;
    std::vector<int> mor_of;  // index in c
    auto sub_object = [&objects](int o) {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == o) return static_cast<int>(i);
        return -1;
    };
    for (size_t m = 0; m < c.morphisms.size(); ++m) {
        int s = sub_object(c.morphisms[m].src), t = sub_object(c.morphisms[m].tgt);
        if (s >= 0 && t >= 0) {
            mors.push_back({c.morphisms[m].name, s, t});
            mor_of.push_back(static_cast<int>(m));
        }
    }
    auto sub_morphism = [&mor_of](int m) {
        for (size_t i = 0; i < mor_of.size(); ++i)
            if (mor_of[i] == m) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> ids;
    for (int o : objects) ids.push_back(sub_morphism(c.identity_of[o]));
    std::vector<std::vector<int>> table(mors.size(), std::vector<int>(mors.size(), -1));
    for (size_t g = 0; g < mors.size(); ++g)
        for (size_t f = 0; f < mors.size(); ++f)
            if (mors[f].tgt == mors[g].src)
                table[g][f] = sub_morphism(c.comp[mor_of[g]][mor_of[f]]);
    FinCat sub(obs, mors, ids, table);
    std::vector<int> omap = objects;
    return CatFunctor(sub, c, std::move(omap), std::move(mor_of));
}

// collapse to the terminal category; full iff every hom set of c is inhabited
inline CatFunctor collapse_to_terminal(const FinCat& c) {
    FinCat t = terminal_category();
    std::vector<int> omap(c.objects.size(), 0);
    std::vector<int> mmap(c.morphisms.size(), 0);
    return CatFunctor(c, t, std::move(omap), std::move(mmap));
}

// set diagram d |-> Hom_D(d0, d)
inline Diagram<SetCat> representable_set_diagram(const FinCat& d, int d0) {
    std::vector<FinSet> values;
    std::vector<std::vector<int>> homs;  // morphism indices per object
    for (size_t o = 0; o < d.objects.size(); ++o) {
        std::vector<std::string> labels;
        std::vector<int> idx;
        for (size_t m = 0; m < d.morphisms.size(); ++m)
            if (d.morphisms[m].src == d0 && d.morphisms[m].tgt == static_cast<int>(o)) {
                labels.push_back(d.morphisms[m].name);
                idx.push_back(static_cast<int>(m));
            }
        values.push_back(FinSet(labels));
        homs.push_back(idx);
    }
    std::vector<FinSetMap> maps;
    for (size_t h = 0; h < d.morphisms.size(); ++h) {
        const auto& mor = d.morphisms[h];
        std::vector<int> img;
        for (int f : homs[mor.src]) {
            int hf = d.comp[h][f];
            int found = -1;
            for (size_t j = 0; j < homs[mor.tgt].size() && found < 0; ++j)
                if (homs[mor.tgt][j] == hf) found = static_cast<int>(j);
            img.push_back(found);
        }
        maps.emplace_back(values[mor.src], values[mor.tgt], std::move(img));
    }
    return Diagram<SetCat>(d, std::move(values), std::move(maps));
}

inline Diagram<SetCat> constant_set_diagram(const FinCat& d, const FinSet& s) {
    std::vector<FinSet> values(d.objects.size(), s);
    std::vector<FinSetMap> maps(d.morphisms.size(), FinSetMap::identity(s));
    return Diagram<SetCat>(d, std::move(values), std::move(maps));
}

// free abelian group on a set diagram
inline Diagram<AbCat> linearize(const Diagram<SetCat>& x) {
    std::vector<FgAbelianGroup> values;
    for (auto& v : x.value_of) values.push_back(FgAbelianGroup::free_group(v.size()));
    std::vector<GroupMap> maps;
    for (size_t m = 0; m < x.map_of.size(); ++m) {
        const FinSetMap& f = x.map_of[m];
        Mat mm(f.target.size(), f.source.size());
        for (int i = 0; i < f.source.size(); ++i) mm(f(i), i) += 1;
        maps.emplace_back(values[x.base.morphisms[m].src], values[x.base.morphisms[m].tgt], std::move(mm));
    }
    return Diagram<AbCat>(x.base, std::move(values), std::move(maps));
}

// the categories and full functors of the generated Kan suite
struct KanSuiteCase {
    std::string name;
    CatFunctor phi;
};

inline std::vector<KanSuiteCase> kan_suite_functors() {
    std::vector<KanSuiteCase> out;
    std::vector<std::pair<std::string, FinCat>> cats = {
        {"terminal", terminal_category()},   {"arrow", arrow_category()},
        {"chain3", chain3_category()},       {"span", span_category()},
        {"cospan", cospan_category()},       {"z2monoid", z2_monoid_category()},
        {"idempotent", idempotent_monoid_category()}, {"disc2", discrete_category({"a", "b"})}};
    for (auto& [name, c] : cats) {
        out.push_back({name + ":id", CatFunctor::identity(c)});
        // all nonempty full subcategory inclusions
        int n = static_cast<int>(c.objects.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (mask == (1 << n) - 1) continue;  // identity handled above
            std::vector<int> objs;
            for (int o = 0; o < n; ++o)
                if (mask & (1 << o)) objs.push_back(o);
            out.push_back({name + ":full-sub" + std::to_string(mask), full_subcategory_inclusion(c, objs)});
        }
    }
    // monoid collapses are full (single inhabited hom set)
    out.push_back({"z2monoid:collapse", collapse_to_terminal(z2_monoid_category())});
    out.push_back({"idempotent:collapse", collapse_to_terminal(idempotent_monoid_category())});
    return out;
}

// diagrams over the target of phi, both value kinds
inline std::vector<Diagram<SetCat>> kan_suite_set_diagrams(const FinCat& d) {
    std::vector<Diagram<SetCat>> out;
    out.push_back(constant_set_diagram(d, FinSet({"u", "v"})));
    for (size_t o = 0; o < d.objects.size() && o < 2; ++o)
        out.push_back(representable_set_diagram(d, static_cast<int>(o)));
    return out;
}

}  // namespace descent
