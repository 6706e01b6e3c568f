#pragma once

// Workspace loading and emission: a single JSON document naming groups,
// rings, ring maps, modules, finite sets and maps, bundles, categories,
// functors, diagrams and complexes.  Everything is validated at load; every
// reference must resolve.

#include "descent/catalog.hpp"
#include "descent/fixtures.hpp"

#include <json.hpp>

#include <optional>

namespace descent {

using json = nlohmann::json;

struct Workspace {
    int truncation = 4;
    std::vector<std::pair<std::string, FgAbelianGroup>> groups;
    std::vector<std::pair<std::string, RingSpec>> rings;
    std::vector<std::pair<std::string, RingMap>> ring_maps;
    std::vector<std::pair<std::string, ModuleOverRing>> modules;
    std::vector<std::pair<std::string, ModuleMap>> module_maps;
    std::vector<std::pair<std::string, FinSet>> finsets;
    std::vector<std::pair<std::string, FinSetMap>> finset_maps;
    std::vector<std::pair<std::string, Bundle>> bundles;
    std::vector<std::pair<std::string, FinCat>> categories;
    std::vector<std::pair<std::string, CatFunctor>> cat_functors;
    std::vector<std::pair<std::string, Diagram<SetCat>>> set_diagrams;
    std::vector<std::pair<std::string, Diagram<AbCat>>> ab_diagrams;
    std::vector<std::pair<std::string, ChainComplex>> complexes;

    template <typename T>
    static const T& named(const std::vector<std::pair<std::string, T>>& table, const std::string& name,
                          const std::string& kind) {
        for (auto& [n, v] : table)
            if (n == name) return v;
        throw error("dangling " + kind + " reference: '" + name + "'");
    }

    const FgAbelianGroup& group(const std::string& n) const { return named(groups, n, "group"); }
    const RingSpec& ring(const std::string& n) const { return named(rings, n, "ring"); }
    const RingMap& ring_map(const std::string& n) const { return named(ring_maps, n, "ring map"); }
    const ModuleOverRing& module(const std::string& n) const { return named(modules, n, "module"); }
    const ModuleMap& module_map(const std::string& n) const { return named(module_maps, n, "module map"); }
    const FinSet& finset(const std::string& n) const { return named(finsets, n, "finite set"); }
    const FinSetMap& finset_map(const std::string& n) const { return named(finset_maps, n, "finite set map"); }
    const Bundle& bundle(const std::string& n) const { return named(bundles, n, "bundle"); }
    const FinCat& category(const std::string& n) const { return named(categories, n, "category"); }
    const CatFunctor& cat_functor(const std::string& n) const { return named(cat_functors, n, "functor"); }
    const ChainComplex& complex(const std::string& n) const { return named(complexes, n, "complex"); }
};

namespace wsio {

inline Mat mat_from_json(const json& j) {
    require(j.is_array(), "matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == cols, "ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(i, c) = Int(j[i][c].get<long>());
    }
    return m;
}

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m(i, c).get_si());
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<Int> vec_from_json(const json& j) {
    std::vector<Int> v;
    for (auto& x : j) v.push_back(Int(x.get<long>()));
    return v;
}

inline json vec_to_json(const std::vector<Int>& v) {
    json out = json::array();
    for (auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace wsio

template <typename T>
inline void sort_table(std::vector<std::pair<std::string, T>>& table) {
    std::stable_sort(table.begin(), table.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
}

inline void canonicalize(Workspace& ws) {
    sort_table(ws.groups);
    sort_table(ws.rings);
    sort_table(ws.ring_maps);
    sort_table(ws.modules);
    sort_table(ws.module_maps);
    sort_table(ws.finsets);
    sort_table(ws.finset_maps);
    sort_table(ws.bundles);
    sort_table(ws.categories);
    sort_table(ws.cat_functors);
    sort_table(ws.set_diagrams);
    sort_table(ws.ab_diagrams);
    sort_table(ws.complexes);
}

inline Workspace load_workspace(const json& doc) {
    using namespace wsio;
    Workspace ws;
    if (doc.contains("truncation")) ws.truncation = doc["truncation"].get<int>();
    require(ws.truncation >= 1, "truncation must be at least 1");

    if (doc.contains("groups"))
        for (auto& [name, g] : doc["groups"].items()) {
            int gens = g["generators"].get<int>();
            Mat rel = g.contains("relations") ? mat_from_json(g["relations"]) : Mat(gens, 0);
            if (rel.rows == 0 && gens > 0 && rel.cols == 0) rel = Mat(gens, 0);
            ws.groups.emplace_back(name, FgAbelianGroup(gens, rel));
        }

    if (doc.contains("rings"))
        for (auto& [name, r] : doc["rings"].items()) {
            const FgAbelianGroup& g = ws.group(r["group"].get<std::string>());
            int n = g.generators();
            std::vector<std::vector<std::vector<Int>>> c(
                static_cast<size_t>(n),
                std::vector<std::vector<Int>>(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n))));
            const json& mul = r["mul"];
            require(static_cast<int>(mul.size()) == n, "mul table must be g x g");
            for (int i = 0; i < n; ++i) {
                require(static_cast<int>(mul[i].size()) == n, "mul table must be g x g");
                for (int j = 0; j < n; ++j) c[i][j] = vec_from_json(mul[i][j]);
            }
            ws.rings.emplace_back(name, RingSpec(name, g, c, vec_from_json(r["unit"])));
        }

    if (doc.contains("ring_maps"))
        for (auto& [name, m] : doc["ring_maps"].items())
            ws.ring_maps.emplace_back(name, RingMap(ws.ring(m["source"].get<std::string>()),
                                                    ws.ring(m["target"].get<std::string>()),
                                                    mat_from_json(m["matrix"])));

    if (doc.contains("modules"))
        for (auto& [name, m] : doc["modules"].items()) {
            const RingSpec& r = ws.ring(m["ring"].get<std::string>());
            const FgAbelianGroup& g = ws.group(m["group"].get<std::string>());
            std::vector<Mat> acts;
            for (auto& a : m["actions"]) acts.push_back(mat_from_json(a));
            ws.modules.emplace_back(name, ModuleOverRing(r, g, std::move(acts)));
        }

    if (doc.contains("module_maps"))
        for (auto& [name, m] : doc["module_maps"].items())
            ws.module_maps.emplace_back(name, ModuleMap(ws.module(m["source"].get<std::string>()),
                                                        ws.module(m["target"].get<std::string>()),
                                                        mat_from_json(m["matrix"])));

    if (doc.contains("finsets"))
        for (auto& [name, s] : doc["finsets"].items())
            ws.finsets.emplace_back(name, FinSet(s.get<std::vector<std::string>>()));

    if (doc.contains("finset_maps"))
        for (auto& [name, m] : doc["finset_maps"].items()) {
            const FinSet& s = ws.finset(m["source"].get<std::string>());
            const FinSet& t = ws.finset(m["target"].get<std::string>());
            std::vector<int> img;
            for (auto& lbl : m["map"]) img.push_back(t.index_of(lbl.get<std::string>()));
            ws.finset_maps.emplace_back(name, FinSetMap(s, t, std::move(img)));
        }

    if (doc.contains("bundles"))
        for (auto& [name, b] : doc["bundles"].items()) {
            const FinSetMap& p = ws.finset_map(b["projection"].get<std::string>());
            ws.bundles.emplace_back(name, Bundle(p.source, p.target, p));
        }

    if (doc.contains("categories"))
        for (auto& [name, c] : doc["categories"].items()) {
            std::vector<std::string> obs = c["objects"].get<std::vector<std::string>>();
            std::vector<FinCat::Mor> mors;
            for (auto& m : c["morphisms"]) {
                int src = -1, tgt = -1;
                for (size_t o = 0; o < obs.size(); ++o) {
                    if (obs[o] == m["src"].get<std::string>()) src = static_cast<int>(o);
                    if (obs[o] == m["tgt"].get<std::string>()) tgt = static_cast<int>(o);
                }
                require(src >= 0 && tgt >= 0, "morphism endpoints not among the objects");
                mors.push_back({m["name"].get<std::string>(), src, tgt});
            }
            auto mor_index = [&mors](const std::string& n) {
                for (size_t i = 0; i < mors.size(); ++i)
                    if (mors[i].name == n) return static_cast<int>(i);
                throw error("unknown morphism name: " + n);
            };
            std::vector<int> ids;
            for (auto& o : obs) ids.push_back(mor_index(c["identities"][o].get<std::string>()));
            std::vector<std::vector<int>> table(mors.size(), std::vector<int>(mors.size(), -1));
            for (auto& entry : c["composition"]) {
                int g = mor_index(entry[0].get<std::string>());
                int f = mor_index(entry[1].get<std::string>());
                table[g][f] = mor_index(entry[2].get<std::string>());
            }
            // identities compose implicitly
            for (size_t f = 0; f < mors.size(); ++f) {
                table[f][ids[mors[f].src]] = static_cast<int>(f);
                table[ids[mors[f].tgt]][f] = static_cast<int>(f);
            }
            ws.categories.emplace_back(name, FinCat(obs, mors, ids, table));
        }

    if (doc.contains("cat_functors"))
        for (auto& [name, f] : doc["cat_functors"].items()) {
            const FinCat& s = ws.category(f["source"].get<std::string>());
            const FinCat& t = ws.category(f["target"].get<std::string>());
            std::vector<int> omap, mmap;
            for (auto& o : s.objects) omap.push_back(t.object_index(f["objects"][o].get<std::string>()));
            for (auto& m : s.morphisms) mmap.push_back(t.morphism_index(f["morphisms"][m.name].get<std::string>()));
            ws.cat_functors.emplace_back(name, CatFunctor(s, t, std::move(omap), std::move(mmap)));
        }

    if (doc.contains("set_diagrams"))
        for (auto& [name, d] : doc["set_diagrams"].items()) {
            const FinCat& base = ws.category(d["category"].get<std::string>());
            std::vector<FinSet> vals;
            for (auto& o : base.objects) vals.push_back(ws.finset(d["objects"][o].get<std::string>()));
            std::vector<FinSetMap> maps;
            for (auto& m : base.morphisms) maps.push_back(ws.finset_map(d["morphisms"][m.name].get<std::string>()));
            ws.set_diagrams.emplace_back(name, Diagram<SetCat>(base, std::move(vals), std::move(maps)));
        }

    if (doc.contains("complexes"))
        for (auto& [name, c] : doc["complexes"].items()) {
            int lo = c["lo"].get<int>();
            std::vector<ModuleOverRing> objs;
            for (auto& o : c["objects"]) objs.push_back(ws.module(o.get<std::string>()));
            std::vector<ModuleMap> bnds;
            for (auto& b : c["boundaries"]) bnds.push_back(ws.module_map(b.get<std::string>()));
            require(!objs.empty(), "complex needs at least one object");
            RingSpec ring = objs[0].ring();
            ws.complexes.emplace_back(name, ChainComplex(std::move(ring), lo, std::move(objs), std::move(bnds)));
        }

    canonicalize(ws);
    return ws;
}

inline Workspace load_workspace_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw error("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return load_workspace(doc);
}

// canonical emission; load(emit(ws)) reproduces the validated content
inline json emit_workspace(const Workspace& ws) {
    using namespace wsio;
    json doc;
    doc["truncation"] = ws.truncation;
    json groups = json::object();
    for (auto& [name, g] : ws.groups)
        groups[name] = {{"generators", g.generators()}, {"relations", mat_to_json(g.relations())}};
    doc["groups"] = groups;
    json rings = json::object();
    for (auto& [name, r] : ws.rings) {
        json mul = json::array();
        for (int i = 0; i < r.generators(); ++i) {
            json row = json::array();
            for (int j = 0; j < r.generators(); ++j) row.push_back(vec_to_json(r.product_of_generators(i, j)));
            mul.push_back(row);
        }
        std::string gname;
        for (auto& [gn, g] : ws.groups)
            if (g.same_presentation(r.underlying())) {
                gname = gn;
                break;
            }
        rings[name] = {{"group", gname}, {"mul", mul}, {"unit", vec_to_json(r.unit())}};
    }
    doc["rings"] = rings;
    json maps = json::object();
    for (auto& [name, m] : ws.ring_maps) {
        std::string sname, tname;
        for (auto& [rn, r] : ws.rings) {
            if (sname.empty() && r.same_presentation(m.source())) sname = rn;
            if (tname.empty() && r.same_presentation(m.target())) tname = rn;
        }
        maps[name] = {{"source", sname}, {"target", tname}, {"matrix", mat_to_json(m.matrix())}};
    }
    doc["ring_maps"] = maps;
    json modules = json::object();
    for (auto& [name, m] : ws.modules) {
        std::string rname, gname;
        for (auto& [rn, r] : ws.rings)
            if (r.same_presentation(m.ring())) {
                rname = rn;
                break;
            }
        for (auto& [gn, g] : ws.groups)
            if (g.same_presentation(m.underlying())) {
                gname = gn;
                break;
            }
        json acts = json::array();
        for (int i = 0; i < m.ring().generators(); ++i) acts.push_back(mat_to_json(m.action(i).matrix()));
        modules[name] = {{"ring", rname}, {"group", gname}, {"actions", acts}};
    }
    doc["modules"] = modules;
    json finsets = json::object();
    for (auto& [name, s] : ws.finsets) finsets[name] = s.elems;
    doc["finsets"] = finsets;
    json fmaps = json::object();
    for (auto& [name, m] : ws.finset_maps) {
        std::string sname, tname;
        for (auto& [fn, s] : ws.finsets) {
            if (sname.empty() && s == m.source) sname = fn;
            if (tname.empty() && s == m.target) tname = fn;
        }
        json img = json::array();
        for (int i = 0; i < m.source.size(); ++i) img.push_back(m.target.elems[m(i)]);
        fmaps[name] = {{"source", sname}, {"target", tname}, {"map", img}};
    }
    doc["finset_maps"] = fmaps;
    json bundles = json::object();
    for (auto& [name, b] : ws.bundles) {
        std::string pname;
        for (auto& [fn, m] : ws.finset_maps)
            if (m.equals(b.projection)) {
                pname = fn;
                break;
            }
        bundles[name] = {{"projection", pname}};
    }
    doc["bundles"] = bundles;
    json mmaps = json::object();
    for (auto& [name, m] : ws.module_maps) {
        std::string sname, tname;
        for (auto& [mn, mod] : ws.modules) {
            if (sname.empty() && mod.same_presentation(m.source())) sname = mn;
            if (tname.empty() && mod.same_presentation(m.target())) tname = mn;
        }
        mmaps[name] = {{"source", sname}, {"target", tname}, {"matrix", mat_to_json(m.matrix())}};
    }
    doc["module_maps"] = mmaps;
    json cats = json::object();
    for (auto& [name, c] : ws.categories) {
        json mors = json::array();
        for (auto& m : c.morphisms)
            mors.push_back({{"name", m.name}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
        json ids = json::object();
        for (size_t o = 0; o < c.objects.size(); ++o)
            ids[c.objects[o]] = c.morphisms[c.identity_of[o]].name;
        json comp = json::array();
        for (size_t g = 0; g < c.morphisms.size(); ++g)
            for (size_t f = 0; f < c.morphisms.size(); ++f)
                if (c.comp[g][f] >= 0)
                    comp.push_back({c.morphisms[g].name, c.morphisms[f].name, c.morphisms[c.comp[g][f]].name});
        cats[name] = {{"objects", c.objects}, {"morphisms", mors}, {"identities", ids}, {"composition", comp}};
    }
    doc["categories"] = cats;
    json functors = json::object();
    for (auto& [name, f] : ws.cat_functors) {
        std::string sname, tname;
        for (auto& [cn, c] : ws.categories) {
            if (sname.empty() && c.key() == f.source.key()) sname = cn;
            if (tname.empty() && c.key() == f.target.key()) tname = cn;
        }
        json omap = json::object(), mmap = json::object();
        for (size_t o = 0; o < f.source.objects.size(); ++o)
            omap[f.source.objects[o]] = f.target.objects[f.object_map[o]];
        for (size_t m = 0; m < f.source.morphisms.size(); ++m)
            mmap[f.source.morphisms[m].name] = f.target.morphisms[f.morphism_map[m]].name;
        functors[name] = {{"source", sname}, {"target", tname}, {"objects", omap}, {"morphisms", mmap}};
    }
    doc["cat_functors"] = functors;
    json sdiags = json::object();
    for (auto& [name, d] : ws.set_diagrams) {
        std::string cname;
        for (auto& [cn, c] : ws.categories)
            if (c.key() == d.base.key()) {
                cname = cn;
                break;
            }
        json objs = json::object(), mors = json::object();
        for (size_t o = 0; o < d.base.objects.size(); ++o) {
            std::string fn;
            for (auto& [sn, s] : ws.finsets)
                if (s == d.value_of[o]) {
                    fn = sn;
                    break;
                }
            objs[d.base.objects[o]] = fn;
        }
        for (size_t m = 0; m < d.base.morphisms.size(); ++m) {
            std::string fn;
            for (auto& [sn, s] : ws.finset_maps)
                if (s.equals(d.map_of[m])) {
                    fn = sn;
                    break;
                }
            mors[d.base.morphisms[m].name] = fn;
        }
        sdiags[name] = {{"category", cname}, {"objects", objs}, {"morphisms", mors}};
    }
    doc["set_diagrams"] = sdiags;
    json cpx = json::object();
    for (auto& [name, c] : ws.complexes) {
        json objs = json::array(), bnds = json::array();
        for (int t = c.lo(); t <= c.hi(); ++t) {
            std::string mn;
            for (auto& [n2, m] : ws.modules)
                if (m.same_presentation(c.object(t))) {
                    mn = n2;
                    break;
                }
            objs.push_back(mn);
        }
        for (int t = c.lo() + 1; t <= c.hi(); ++t) {
            std::string mn;
            for (auto& [n2, m] : ws.module_maps)
                if (m.source().same_presentation(c.object(t)) && m.target().same_presentation(c.object(t - 1)) &&
                    m.matrix() == c.boundary(t).matrix()) {
                    mn = n2;
                    break;
                }
            bnds.push_back(mn);
        }
        cpx[name] = {{"lo", c.lo()}, {"objects", objs}, {"boundaries", bnds}};
    }
    doc["complexes"] = cpx;
    return doc;
}

// the built-in catalog workspace: the seven ring maps, the probe modules,
// finite-set fixtures and the small categories with diagrams
inline Workspace builtin_workspace() {
    Workspace ws;
    ws.truncation = 4;
    ws.groups.emplace_back("Z", FgAbelianGroup::free_group(1));
    ws.groups.emplace_back("Z2", FgAbelianGroup::free_group(2));
    ws.groups.emplace_back("Z3", FgAbelianGroup::free_group(3));
    ws.groups.emplace_back("Zmod2", FgAbelianGroup(1, Mat::from_rows({{2}})));
    ws.groups.emplace_back("Zmod4", FgAbelianGroup(1, Mat::from_rows({{4}})));
    ws.groups.emplace_back("Zmod6", FgAbelianGroup(1, Mat::from_rows({{6}})));
    ws.groups.emplace_back("ZplusZmod4", FgAbelianGroup(2, Mat::from_rows({{0}, {4}})));
    ws.groups.emplace_back("Zmod2sq", FgAbelianGroup(2, Mat::from_rows({{2, 0}, {0, 2}})));

    for (auto& e : ring_map_catalog()) {
        std::string sname = e.phi.source().name(), tname = e.phi.target().name();
        bool have_s = false, have_t = false;
        for (auto& [rn, r] : ws.rings) {
            if (r.same_presentation(e.phi.source())) have_s = true;
            if (r.same_presentation(e.phi.target())) have_t = true;
        }
        if (!have_s) ws.rings.emplace_back(sname, e.phi.source());
        if (!have_t) ws.rings.emplace_back(tname, e.phi.target());
        ws.ring_maps.emplace_back(e.name, e.phi);
    }

    RingMap id = catalog_map("id");
    for (auto& [name, m] : probe_modules(id)) ws.modules.emplace_back(name, m);
    RingMap z2 = catalog_map("z2xz2");
    for (auto& [name, m] : probe_modules(z2)) ws.modules.emplace_back("mod2:" + name, m);
    for (auto& e : ring_map_catalog())
        ws.modules.emplace_back("A[" + e.name + "]", ring_as_module(e.phi.target()));

    // finite-set fixtures: fibers of size 2 and 1, plus a section-ready cover
    FinSet b({"a", "b"});
    FinSet e3({"0", "1", "2"});
    ws.finsets.emplace_back("B", b);
    ws.finsets.emplace_back("E", e3);
    FinSetMap phi(e3, b, {0, 0, 1});
    ws.finset_maps.emplace_back("phi21", phi);
    ws.finset_maps.emplace_back("idB", FinSetMap::identity(b));
    FinSet cover({"a.1", "a.g", "b.1", "b.g"});
    ws.finsets.emplace_back("BxG", cover);
    ws.finset_maps.emplace_back("proj", FinSetMap(cover, b, {0, 0, 1, 1}));
    ws.finset_maps.emplace_back("unit_section", FinSetMap(b, cover, {0, 2}));
    FinSet x({"x", "y", "z"});
    ws.finsets.emplace_back("X", x);
    FinSetMap fx(x, b, {0, 0, 1});
    ws.finset_maps.emplace_back("fX", fx);
    ws.bundles.emplace_back("idB_bundle", Bundle::over_self(b));
    ws.bundles.emplace_back("fX_bundle", Bundle(x, b, fx));

    ws.categories.emplace_back("arrow", arrow_category());
    ws.categories.emplace_back("chain3", chain3_category());
    ws.categories.emplace_back("span", span_category());
    ws.categories.emplace_back("z2monoid", z2_monoid_category());
    ws.cat_functors.emplace_back("arrow_id", CatFunctor::identity(arrow_category()));
    ws.cat_functors.emplace_back("pick_d0", full_subcategory_inclusion(arrow_category(), {0}));
    ws.cat_functors.emplace_back("pick_d1", full_subcategory_inclusion(arrow_category(), {1}));
    ws.cat_functors.emplace_back("chain_front", full_subcategory_inclusion(chain3_category(), {0, 1}));
    ws.set_diagrams.emplace_back("repr_d0", representable_set_diagram(arrow_category(), 0));
    ws.set_diagrams.emplace_back("repr_d1", representable_set_diagram(arrow_category(), 1));
    ws.set_diagrams.emplace_back("const_uv", constant_set_diagram(arrow_category(), FinSet({"u", "v"})));

    // a small complex fixture: Z -x2-> Z in degrees 1 -> 0
    ModuleOverRing zf = as_Z_module(FgAbelianGroup::free_group(1));
    ws.module_maps.emplace_back("times2", ModuleMap(zf, zf, Mat::from_rows({{2}})));
    ws.complexes.emplace_back("Zx2", ChainComplex(ring_Z(), 0, {zf, zf},
                                                  {ModuleMap(zf, zf, Mat::from_rows({{2}}))}));

    // name every category a functor refers to, so emission round-trips
    for (auto& [fname, f] : ws.cat_functors) {
        for (const FinCat* c : {&f.source, &f.target}) {
            bool found = false;
            for (auto& [cn, cat] : ws.categories)
                if (cat.key() == c->key()) found = true;
            if (!found) ws.categories.emplace_back("cat." + fname + (c == &f.source ? ".src" : ".tgt"), *c);
        }
    }
    // name every set and map a diagram refers to, so emission round-trips
    for (auto& [dname, d] : ws.set_diagrams) {
        for (size_t o = 0; o < d.base.objects.size(); ++o) {
            bool found = false;
            for (auto& [sn, s] : ws.finsets)
                if (s == d.value_of[o]) found = true;
            if (!found) ws.finsets.emplace_back("ds." + dname + "." + d.base.objects[o], d.value_of[o]);
        }
        for (size_t m = 0; m < d.base.morphisms.size(); ++m) {
            bool found = false;
            for (auto& [sn, s] : ws.finset_maps)
                if (s.equals(d.map_of[m])) found = true;
            if (!found)
                ws.finset_maps.emplace_back("dm." + dname + "." + d.base.morphisms[m].name, d.map_of[m]);
        }
    }
    canonicalize(ws);
    return ws;
}

}  // namespace descent
