#pragma once

// Bounded chain complexes of modules, homology with cycle representatives,
// and the hom complex Hom(X, Y) with its total differential.

#include "descent/hom.hpp"

namespace descent {

class ChainComplex {
public:
    // objects[k] sits in degree lo + k; boundaries[k]: degree lo+k+1 -> lo+k
    ChainComplex(RingSpec ring, int lo, std::vector<ModuleOverRing> objects, std::vector<ModuleMap> boundaries)
        : ring_(std::move(ring)), lo_(lo), objects_(std::move(objects)), boundaries_(std::move(boundaries)) {
        require(!objects_.empty(), "empty degree range");
        require(boundaries_.size() + 1 == objects_.size(), "boundary count must be object count - 1");
        for (const auto& o : objects_)
            require(o.ring().same_presentation(ring_), "ring mismatch in chain complex");
        for (size_t k = 0; k < boundaries_.size(); ++k) {
            require(boundaries_[k].source().same_presentation(objects_[k + 1]) &&
                        boundaries_[k].target().same_presentation(objects_[k]),
                    "boundary endpoints mismatch at degree " + std::to_string(lo_ + static_cast<int>(k) + 1));
            if (k > 0)
                require(compose(boundaries_[k - 1], boundaries_[k]).is_zero_map(),
                        "boundary composite is not zero at degree " + std::to_string(lo_ + static_cast<int>(k) + 1));
        }
    }

    static ChainComplex concentrated(const ModuleOverRing& m, int degree) {
        return ChainComplex(m.ring(), degree, {m}, {});
    }

    const RingSpec& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }
    bool in_range(int t) const { return t >= lo() && t <= hi(); }

    const ModuleOverRing& object(int t) const {
        require(in_range(t), "degree out of range");
        return objects_[t - lo_];
    }
    // boundary out of degree t (t -> t-1); only defined for lo < t <= hi
    const ModuleMap& boundary(int t) const {
        require(t > lo() && t <= hi(), "no boundary at degree " + std::to_string(t));
        return boundaries_[t - lo_ - 1];
    }

    ModuleOverRing zero_module() const {
        return ModuleOverRing(ring_, FgAbelianGroup::zero(), std::vector<Mat>(ring_.generators(), Mat(0, 0)));
    }

    std::string key() const {
        std::string k = "C[" + ring_.key() + ";" + std::to_string(lo_);
        for (const auto& o : objects_) k += ";" + o.key();
        for (const auto& b : boundaries_) k += ";" + b.matrix().str();
        return k + "]";
    }

    bool same_presentation(const ChainComplex& o) const { return key() == o.key(); }

private:
    RingSpec ring_;
    int lo_;
    std::vector<ModuleOverRing> objects_;
    std::vector<ModuleMap> boundaries_;
};

class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components)
        : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
        require(source_.lo() == target_.lo() && source_.hi() == target_.hi(),
                "chain map requires matching degree ranges");
        require(static_cast<int>(components_.size()) == source_.hi() - source_.lo() + 1,
                "one component per degree expected");
        for (int t = source_.lo(); t <= source_.hi(); ++t) {
            const ModuleMap& c = component(t);
            require(c.source().same_presentation(source_.object(t)) &&
                        c.target().same_presentation(target_.object(t)),
                    "component endpoints mismatch at degree " + std::to_string(t));
            if (t > source_.lo())
                require(compose(component(t - 1), source_.boundary(t))
                            .equals(compose(target_.boundary(t), component(t))),
                        "chain map does not commute with boundaries at degree " + std::to_string(t));
        }
    }

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    const ModuleMap& component(int t) const { return components_[t - source_.lo()]; }

    std::string key() const {
        std::string k = "cm[" + source_.key() + "->" + target_.key();
        for (const auto& c : components_) k += ";" + c.matrix().str();
        return k + "]";
    }

    bool equals(const ChainMap& o) const {
        for (int t = source_.lo(); t <= source_.hi(); ++t)
            if (!component(t).equals(o.component(t))) return false;
        return true;
    }

private:
    ChainComplex source_, target_;
    std::vector<ModuleMap> components_;
};

inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::vector<ModuleMap> comps;
    for (int t = f.source().lo(); t <= f.source().hi(); ++t)
        comps.push_back(compose(g.component(t), f.component(t)));
    return ChainMap(f.source(), g.target(), std::move(comps));
}

inline ChainMap chain_identity(const ChainComplex& c) {
    std::vector<ModuleMap> comps;
    for (int t = c.lo(); t <= c.hi(); ++t) comps.push_back(ModuleMap::identity(c.object(t)));
    return ChainMap(c, c, std::move(comps));
}

struct ComplexCat {
    using Object = ChainComplex;
    using Morphism = ChainMap;
    static const Object& source(const Morphism& f) { return f.source(); }
    static const Object& target(const Morphism& f) { return f.target(); }
    static Morphism compose(const Morphism& g, const Morphism& f) { return descent::compose(g, f); }
    static Morphism identity(const Object& x) { return chain_identity(x); }
    static bool equal(const Morphism& f, const Morphism& g) { return f.equals(g); }
    static std::string key(const Object& x) { return x.key(); }
    static std::string morphism_key(const Morphism& f) { return f.key(); }
    static std::string describe(const Object& x) {
        std::string s = "complex[";
        for (int t = x.lo(); t <= x.hi(); ++t) {
            if (t > x.lo()) s += ", ";
            s += std::to_string(t) + ": " + x.object(t).underlying().invariant_factors().str();
        }
        return s + "]";
    }
};

// ---------------------------------------------------------------------------
// Homology with cycle representatives.  H_t = Z_t / B_t where
//   Z_t = { v : boundary(t) v = 0 in degree t-1 }   (all of C_t at the edge)
//   B_t = image of boundary(t+1) plus the relation lattice of C_t.

struct HomologyData {
    FgAbelianGroup group;
    Mat cycle_basis;      // columns: cycles in the ambient coordinates of C_t
    Mat boundary_span;    // columns: boundaries + relations (the divided-out subgroup)
    Echelon class_solver; // solves [cycle_basis | boundary_span] x = v

    // coordinates of a cycle's homology class
    std::optional<std::vector<Int>> class_of(const std::vector<Int>& cycle) const {
        auto sol = solve_echelon(class_solver, cycle);
        if (!sol) return std::nullopt;
        std::vector<Int> coords(static_cast<size_t>(group.generators()));
        for (int i = 0; i < group.generators(); ++i) coords[i] = (*sol)[i];
        return coords;
    }
};

inline HomologyData chain_homology_data(const ChainComplex& c, int t) {
    require(c.in_range(t), "unbounded range: degree " + std::to_string(t) + " outside complex");
    const FgAbelianGroup& ct = c.object(t).underlying();
    Mat cycles;
    if (t > c.lo()) {
        cycles = preimage_lattice(c.boundary(t).matrix(), c.object(t - 1).underlying().relations());
    } else {
        cycles = Mat::identity(ct.generators());
    }
    Mat bnd = ct.relations();
    if (t < c.hi()) bnd = hcat(c.boundary(t + 1).matrix(), bnd);
    HomologyData h;
    h.cycle_basis = cycles;
    h.boundary_span = bnd;
    h.group = quotient_presentation(cycles, bnd);
    h.class_solver = col_echelon(hcat(cycles, bnd));
    return h;
}

inline FgAbelianGroup chain_homology(const ChainComplex& c, int t) {
    return chain_homology_data(c, t).group;
}

// H_t applied to a chain map.
inline GroupMap homology_induced(const HomologyData& hs, const HomologyData& ht, const ChainMap& f, int t) {
    Mat m(ht.group.generators(), hs.group.generators());
    for (int a = 0; a < hs.cycle_basis.cols; ++a) {
        std::vector<Int> image = mul_vec(f.component(t).matrix(), hs.cycle_basis.col(a));
        auto cls = ht.class_of(image);
        require(cls.has_value(), "image of a cycle is not a cycle");
        for (int i = 0; i < ht.group.generators(); ++i) m(i, a) = (*cls)[i];
    }
    return GroupMap(hs.group, ht.group, std::move(m));
}

// ---------------------------------------------------------------------------
// Hom complex.  Degree t part is the product over i of Hom(x_i, y_{i+t}),
// with differential (Df)_i = d_Y f_i - (-1)^t f_{i-1} d_X.

struct HomComplexData {
    ChainComplex complex;                         // complex of abelian groups (Z-modules)
    int lo = 0;                                   // degree offset of `complex`
    std::vector<std::vector<int>> summand_index;  // per degree: source degrees i contributing
    std::vector<std::vector<HomGroup>> summands;  // per degree: Hom(x_i, y_{i+t})
    std::vector<DirectSum> sums;                  // per degree: direct-sum data over the summands
};

inline HomComplexData hom_complex_data(const ChainComplex& x, const ChainComplex& y) {
    require(x.ring().same_presentation(y.ring()), "ring mismatch in hom complex");
    RingSpec z = ring_Z();
    int tlo = y.lo() - x.hi(), thi = y.hi() - x.lo();
    std::vector<std::vector<int>> summand_index;
    std::vector<std::vector<HomGroup>> summands;
    std::vector<DirectSum> sums;

    std::vector<ModuleOverRing> objects;
    for (int t = tlo; t <= thi; ++t) {
        std::vector<int> idx;
        std::vector<HomGroup> hs;
        for (int i = x.lo(); i <= x.hi(); ++i)
            if (y.in_range(i + t)) {
                idx.push_back(i);
                hs.emplace_back(x.object(i), y.object(i + t));
            }
        std::vector<FgAbelianGroup> parts;
        for (const auto& h : hs) parts.push_back(h.group());
        DirectSum ds = direct_sum(parts);
        summand_index.push_back(idx);
        summands.push_back(std::move(hs));
        sums.push_back(ds);
        objects.push_back(as_Z_module(ds.object));
    }

    std::vector<ModuleMap> boundaries;
    for (int t = tlo + 1; t <= thi; ++t) {
        const auto& src_idx = summand_index[t - tlo];
        const auto& tgt_idx = summand_index[t - 1 - tlo];
        const auto& src = summands[t - tlo];
        const auto& tgt = summands[t - 1 - tlo];
        const DirectSum& sds = sums[t - tlo];
        const DirectSum& tds = sums[t - 1 - tlo];
        Mat m(tds.object.generators(), sds.object.generators());
        int sign = (t % 2 == 0) ? -1 : 1;  // -(-1)^t
        for (size_t a = 0; a < src_idx.size(); ++a) {
            int i = src_idx[a];
            // post-composition with d_Y: lands at summand i of degree t-1
            if (y.in_range(i + t) && i + t > y.lo()) {
                auto b = std::find(tgt_idx.begin(), tgt_idx.end(), i);
                if (b != tgt_idx.end()) {
                    size_t bi = static_cast<size_t>(b - tgt_idx.begin());
                    GroupMap post = hom_induced_post(src[a], tgt[bi], y.boundary(i + t));
                    // place block (bi, a)
                    const Mat& inj = tds.injections[bi].matrix();
                    const Mat& prj = sds.projections[a].matrix();
                    m = add(m, mul(inj, mul(post.matrix(), prj)));
                }
            }
            // pre-composition with d_X: lands at summand i+1 of degree t-1
            if (x.in_range(i + 1)) {
                auto b = std::find(tgt_idx.begin(), tgt_idx.end(), i + 1);
                if (b != tgt_idx.end()) {
                    size_t bi = static_cast<size_t>(b - tgt_idx.begin());
                    GroupMap pre = hom_induced_pre(src[a], tgt[bi], x.boundary(i + 1));
                    const Mat& inj = tds.injections[bi].matrix();
                    const Mat& prj = sds.projections[a].matrix();
                    m = add(m, scale(mul(inj, mul(pre.matrix(), prj)), sign));
                }
            }
        }
        boundaries.push_back(ModuleMap(objects[t - tlo], objects[t - 1 - tlo], std::move(m)));
    }
    return HomComplexData{ChainComplex(z, tlo, std::move(objects), std::move(boundaries)), tlo,
                          std::move(summand_index), std::move(summands), std::move(sums)};
}

inline ChainComplex hom_complex(const ChainComplex& x, const ChainComplex& y) {
    return hom_complex_data(x, y).complex;
}

}  // namespace descent
