#pragma once

// Built-in fixture catalog: the ring-map family spanning flat, faithful and
// degenerate behavior, together with the probe modules used by the suites.
//   id    : Z -> Z
//   zz2   : Z -> Z x Z          (diagonal)
//   zz3   : Z -> Z x Z x Z      (diagonal)
//   zmod2 : Z -> Z/2
//   zmod6 : Z -> Z/6
//   zgauss: Z -> Z[x]/(x^2+1)
//   z2xz2 : Z/2 -> Z/2 x Z/2    (diagonal, as Z-algebras)

#include "descent/grothendieck.hpp"

namespace descent {

inline RingSpec ring_Zn_product(int n) {
    FgAbelianGroup g = FgAbelianGroup::free_group(n);
    std::vector<std::vector<std::vector<Int>>> c(
        static_cast<size_t>(n),
        std::vector<std::vector<Int>>(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n))));
    for (int i = 0; i < n; ++i) c[i][i][i] = 1;
    std::vector<Int> unit(static_cast<size_t>(n), Int(1));
    return RingSpec("Z^" + std::to_string(n), g, c, unit);
}

inline RingSpec ring_Zmod(long n) {
    FgAbelianGroup g(1, Mat::from_rows({{n}}));
    return RingSpec("Z/" + std::to_string(n), g, {{{Int(1)}}}, {Int(1)});
}

inline RingSpec ring_gaussian() {
    FgAbelianGroup g = FgAbelianGroup::free_group(2);
    // generators 1, x with x^2 = -1
    std::vector<std::vector<std::vector<Int>>> c(2, std::vector<std::vector<Int>>(2, std::vector<Int>(2)));
    c[0][0] = {Int(1), Int(0)};
    c[0][1] = {Int(0), Int(1)};
    c[1][0] = {Int(0), Int(1)};
    c[1][1] = {Int(-1), Int(0)};
    return RingSpec("Z[x]/(x^2+1)", g, c, {Int(1), Int(0)});
}

inline RingSpec ring_Zmod2_square() {
    FgAbelianGroup g(2, Mat::from_rows({{2, 0}, {0, 2}}));
    std::vector<std::vector<std::vector<Int>>> c(2, std::vector<std::vector<Int>>(2, std::vector<Int>(2)));
    c[0][0][0] = 1;
    c[1][1][1] = 1;
    return RingSpec("Z/2 x Z/2", g, c, {Int(1), Int(1)});
}

struct CatalogEntry {
    std::string name;
    RingMap phi;
    bool faithfully_flat;  // free or split over the source
};

inline std::vector<CatalogEntry> ring_map_catalog() {
    std::vector<CatalogEntry> out;
    RingSpec z = ring_Z();
    out.push_back({"id", RingMap::identity(z), true});
    out.push_back({"zz2", RingMap(z, ring_Zn_product(2), Mat::from_rows({{1}, {1}})), true});
    out.push_back({"zz3", RingMap(z, ring_Zn_product(3), Mat::from_rows({{1}, {1}, {1}})), true});
    out.push_back({"zmod2", RingMap(z, ring_Zmod(2), Mat::from_rows({{1}})), false});
    out.push_back({"zmod6", RingMap(z, ring_Zmod(6), Mat::from_rows({{1}})), false});
    out.push_back({"zgauss", RingMap(z, ring_gaussian(), Mat::from_rows({{1}, {0}})), true});
    out.push_back({"z2xz2", RingMap(ring_Zmod(2), ring_Zmod2_square(), Mat::from_rows({{1}, {1}})), true});
    return out;
}

inline RingMap catalog_map(const std::string& name) {
    for (auto& e : ring_map_catalog())
        if (e.name == name) return e.phi;
    throw error("unknown catalog ring map: " + name);
}

// probe modules over the source ring of phi
inline std::vector<std::pair<std::string, ModuleOverRing>> probe_modules(const RingMap& phi) {
    std::vector<std::pair<std::string, ModuleOverRing>> out;
    RingSpec z = ring_Z();
    if (phi.source().same_presentation(z)) {
        out.emplace_back("Z", as_Z_module(FgAbelianGroup::free_group(1)));
        out.emplace_back("Z/2", as_Z_module(FgAbelianGroup(1, Mat::from_rows({{2}}))));
        out.emplace_back("Z^2", as_Z_module(FgAbelianGroup::free_group(2)));
        out.emplace_back("Z+Z/4", as_Z_module(FgAbelianGroup(2, Mat::from_rows({{0}, {4}}))));
        return out;
    }
    // modules over the source presented like the source itself
    out.emplace_back("B", ring_as_module(phi.source()));
    ModuleOverRing b = ring_as_module(phi.source());
    ModuleSum b2 = module_sum({b, b});
    out.emplace_back("B^2", b2.object);
    return out;
}

}  // namespace descent
