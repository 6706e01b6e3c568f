#pragma once

// Modules over finitely presented commutative Z-algebras: one action
// endomorphism per ring generator, validated against the ring presentation.
// Equalizers, coequalizers, base change and restriction live here, together
// with the ambient-category traits used by the generic simplicial machinery.

#include "descent/ring.hpp"

#include <map>

namespace descent {

class ModuleOverRing {
public:
    ModuleOverRing(RingSpec ring, FgAbelianGroup underlying, std::vector<Mat> actions)
        : ring_(std::move(ring)), underlying_(std::move(underlying)) {
        require(static_cast<int>(actions.size()) == ring_.generators(),
                "one action matrix per ring generator expected");
        actions_.reserve(actions.size());
        for (Mat& m : actions) actions_.emplace_back(underlying_, underlying_, std::move(m));
        validate();
    }

    const RingSpec& ring() const { return ring_; }
    const FgAbelianGroup& underlying() const { return underlying_; }
    int generators() const { return underlying_.generators(); }
    const GroupMap& action(int ring_generator) const { return actions_[ring_generator]; }

    // action of an arbitrary ring element (coefficient vector)
    GroupMap action_of(const std::vector<Int>& x) const {
        Mat m(generators(), generators());
        for (int i = 0; i < ring_.generators(); ++i)
            if (sgn(x[i]) != 0) m = add(m, scale(actions_[i].matrix(), x[i]));
        return GroupMap(underlying_, underlying_, m);
    }

    std::string key() const {
        std::string k = "M[" + ring_.key() + ";" + underlying_.key();
        for (const auto& a : actions_) k += ";" + a.matrix().str();
        return k + "]";
    }

    bool same_presentation(const ModuleOverRing& o) const {
        if (!ring_.same_presentation(o.ring_) || !underlying_.same_presentation(o.underlying_)) return false;
        for (size_t i = 0; i < actions_.size(); ++i)
            if (actions_[i].matrix() != o.actions_[i].matrix()) return false;
        return true;
    }

private:
    void validate() const {
        const int g = ring_.generators();
        // ring relators act as zero
        const Mat& rel = ring_.underlying().relations();
        for (int c = 0; c < rel.cols; ++c)
            require(action_of(rel.col(c)).is_zero_map(),
                    "ring relator " + std::to_string(c) + " does not act as zero");
        // action respects the structure constants: act(e_i) act(e_j) = act(e_i e_j)
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                GroupMap lhs = descent::compose(actions_[i], actions_[j]);
                GroupMap rhs = action_of(ring_.product_of_generators(i, j));
                if (!lhs.equals(rhs))
                    throw error("module action violates structure constants at (i,j)=(" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        // unit acts as identity
        require(action_of(ring_.unit()).equals(GroupMap::identity(underlying_)),
                "ring unit does not act as identity");
        // pairwise commuting actions (commutative ring)
        for (int i = 0; i < g; ++i)
            for (int j = i + 1; j < g; ++j)
                require(descent::compose(actions_[i], actions_[j]).equals(descent::compose(actions_[j], actions_[i])),
                        "module actions do not commute at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

    RingSpec ring_;
    FgAbelianGroup underlying_;
    std::vector<GroupMap> actions_;
};

class ModuleMap {
public:
    ModuleMap(ModuleOverRing source, ModuleOverRing target, Mat matrix)
        : source_(std::move(source)),
          target_(std::move(target)),
          map_(source_.underlying(), target_.underlying(), std::move(matrix)) {
        require(source_.ring().same_presentation(target_.ring()), "ring mismatch in module map");
        for (int i = 0; i < source_.ring().generators(); ++i) {
            GroupMap lhs = descent::compose(target_.action(i), map_);
            GroupMap rhs = descent::compose(map_, source_.action(i));
            if (!lhs.equals(rhs))
                throw error("map does not commute with the action of ring generator " + std::to_string(i));
        }
    }

    static ModuleMap identity(const ModuleOverRing& m) {
        return ModuleMap(m, m, Mat::identity(m.generators()));
    }
    static ModuleMap zero(const ModuleOverRing& s, const ModuleOverRing& t) {
        return ModuleMap(s, t, Mat(t.generators(), s.generators()));
    }

    const ModuleOverRing& source() const { return source_; }
    const ModuleOverRing& target() const { return target_; }
    const GroupMap& as_group_map() const { return map_; }
    const Mat& matrix() const { return map_.matrix(); }

    bool equals(const ModuleMap& o) const { return map_.equals(o.map_); }
    bool is_zero_map() const { return map_.is_zero_map(); }

    std::string key() const {
        return "mf[" + source_.key() + "->" + target_.key() + ";" + matrix().str() + "]";
    }

private:
    ModuleOverRing source_, target_;
    GroupMap map_;
};

inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    require(f.target().underlying().same_presentation(g.source().underlying()),
            "composition endpoint mismatch");
    return ModuleMap(f.source(), g.target(), mul(g.matrix(), f.matrix()));
}

inline ModuleMap mm_sub(const ModuleMap& f, const ModuleMap& g) {
    return ModuleMap(f.source(), f.target(), sub(f.matrix(), g.matrix()));
}
inline ModuleMap mm_add(const ModuleMap& f, const ModuleMap& g) {
    return ModuleMap(f.source(), f.target(), add(f.matrix(), g.matrix()));
}

// Z as a ring; Z-modules are plain abelian groups with the identity action.
inline RingSpec ring_Z() {
    return RingSpec("Z", FgAbelianGroup::free_group(1), {{{Int(1)}}}, {Int(1)});
}

inline ModuleOverRing as_Z_module(const FgAbelianGroup& g) {
    return ModuleOverRing(ring_Z(), g, {Mat::identity(g.generators())});
}

// A ring as a module over itself (actions = left multiplication).
inline ModuleOverRing ring_as_module(const RingSpec& r) {
    std::vector<Mat> acts;
    for (int i = 0; i < r.generators(); ++i) {
        std::vector<Int> ei(static_cast<size_t>(r.generators()));
        ei[i] = 1;
        acts.push_back(r.left_multiplication(ei));
    }
    return ModuleOverRing(r, r.underlying(), std::move(acts));
}

// ---------------------------------------------------------------------------
// Equalizers and coequalizers of parallel module maps, via kernel/cokernel of
// the difference.  Actions are induced and re-validated.

struct ModuleEqualizer {
    ModuleOverRing object;
    ModuleMap inclusion;
};

inline ModuleEqualizer equalizer(const ModuleMap& f, const ModuleMap& g) {
    require(f.source().same_presentation(g.source()) && f.target().same_presentation(g.target()),
            "dimension mismatch: equalizer needs a parallel pair");
    KernelResult k = kernel(gm_sub(f.as_group_map(), g.as_group_map()));
    const ModuleOverRing& m = f.source();
    std::vector<Mat> acts;
    for (int i = 0; i < m.ring().generators(); ++i) {
        GroupMap moved(k.object, m.underlying(), mul(m.action(i).matrix(), k.inclusion.matrix()));
        auto induced = factor_through_inclusion(k.inclusion, moved);
        require(induced.has_value(), "action does not restrict to the equalizer");
        acts.push_back(induced->matrix());
    }
    ModuleOverRing obj(m.ring(), k.object, std::move(acts));
    ModuleMap incl(obj, m, k.inclusion.matrix());
    return {std::move(obj), std::move(incl)};
}

struct ModuleCoequalizer {
    ModuleOverRing object;
    ModuleMap projection;
};

inline ModuleCoequalizer coequalizer(const ModuleMap& f, const ModuleMap& g) {
    require(f.source().same_presentation(g.source()) && f.target().same_presentation(g.target()),
            "dimension mismatch: coequalizer needs a parallel pair");
    CokernelResult c = cokernel(gm_sub(f.as_group_map(), g.as_group_map()));
    const ModuleOverRing& n = f.target();
    std::vector<Mat> acts;
    for (int i = 0; i < n.ring().generators(); ++i) acts.push_back(n.action(i).matrix());
    ModuleOverRing obj(n.ring(), c.object, std::move(acts));
    ModuleMap proj(n, obj, c.projection.matrix());
    return {std::move(obj), std::move(proj)};
}

inline ModuleEqualizer module_kernel(const ModuleMap& f) {
    return equalizer(f, ModuleMap::zero(f.source(), f.target()));
}
inline ModuleCoequalizer module_cokernel(const ModuleMap& f) {
    return coequalizer(f, ModuleMap::zero(f.source(), f.target()));
}

// Direct sum of modules, with injections/projections as module maps.
struct ModuleSum {
    ModuleOverRing object;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};

inline ModuleSum module_sum(const std::vector<ModuleOverRing>& parts) {
    require(!parts.empty(), "module_sum of empty list needs a ring");
    std::vector<FgAbelianGroup> groups;
    for (const auto& p : parts) groups.push_back(p.underlying());
    DirectSum ds = direct_sum(groups);
    const RingSpec& ring = parts[0].ring();
    std::vector<Mat> acts;
    for (int i = 0; i < ring.generators(); ++i) {
        Mat a(ds.object.generators(), ds.object.generators());
        int off = 0;
        for (const auto& p : parts) {
            require(p.ring().same_presentation(ring), "ring mismatch in module sum");
            const Mat& pm = p.action(i).matrix();
            for (int r = 0; r < pm.rows; ++r)
                for (int c = 0; c < pm.cols; ++c) a(off + r, off + c) = pm(r, c);
            off += p.generators();
        }
        acts.push_back(std::move(a));
    }
    ModuleOverRing sum(ring, ds.object, std::move(acts));
    ModuleSum out{sum, {}, {}};
    for (size_t i = 0; i < parts.size(); ++i) {
        out.injections.emplace_back(parts[i], sum, ds.injections[i].matrix());
        out.projections.emplace_back(sum, parts[i], ds.projections[i].matrix());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Base change M (x)_B A along phi: B -> A, and restriction of scalars.

// index of generator m_i (x) a_j in the flattened presentation
inline int tensor_index(int i, int j, int ga) { return i * ga + j; }

inline ModuleOverRing base_change(const ModuleOverRing& m, const RingMap& phi) {
    require(m.ring().same_presentation(phi.source()), "ring mismatch: module is not over the map's source");
    const RingSpec& A = phi.target();
    const RingSpec& B = phi.source();
    const int gm = m.generators(), ga = A.generators(), gb = B.generators();
    const Mat& rm = m.underlying().relations();
    const Mat& ra = A.underlying().relations();

    // relations: R_M (x) e_j,  e_i (x) R_A,  and B-bilinearity columns
    Mat rel(gm * ga, rm.cols * ga + gm * ra.cols + gb * gm * ga);
    int col = 0;
    for (int c = 0; c < rm.cols; ++c)
        for (int j = 0; j < ga; ++j) {
            for (int i = 0; i < gm; ++i) rel(tensor_index(i, j, ga), col) = rm(i, c);
            ++col;
        }
    for (int i = 0; i < gm; ++i)
        for (int c = 0; c < ra.cols; ++c) {
            for (int j = 0; j < ga; ++j) rel(tensor_index(i, j, ga), col) = ra(j, c);
            ++col;
        }
    // (b_k m_i) (x) a_j  -  m_i (x) phi(b_k) a_j
    std::vector<Mat> phimult(gb, Mat(0, 0));
    for (int k = 0; k < gb; ++k) {
        std::vector<Int> ek(static_cast<size_t>(gb));
        ek[k] = 1;
        phimult[k] = A.left_multiplication(phi.apply(ek));
    }
    for (int k = 0; k < gb; ++k) {
        const Mat& actk = m.action(k).matrix();
        for (int i = 0; i < gm; ++i)
            for (int j = 0; j < ga; ++j) {
                for (int r = 0; r < gm; ++r)
                    if (sgn(actk(r, i)) != 0) rel(tensor_index(r, j, ga), col) += actk(r, i);
                for (int r = 0; r < ga; ++r)
                    if (sgn(phimult[k](r, j)) != 0) rel(tensor_index(i, r, ga), col) -= phimult[k](r, j);
                ++col;
            }
    }

    FgAbelianGroup tg(gm * ga, rel);
    // A acts on the right tensor factor
    std::vector<Mat> acts;
    for (int l = 0; l < ga; ++l) {
        std::vector<Int> el(static_cast<size_t>(ga));
        el[l] = 1;
        Mat mult = A.left_multiplication(el);
        Mat a(gm * ga, gm * ga);
        for (int i = 0; i < gm; ++i)
            for (int j = 0; j < ga; ++j)
                for (int r = 0; r < ga; ++r)
                    if (sgn(mult(r, j)) != 0) a(tensor_index(i, r, ga), tensor_index(i, j, ga)) = mult(r, j);
        acts.push_back(std::move(a));
    }
    return ModuleOverRing(A, tg, std::move(acts));
}

// Restriction of scalars along phi: B -> A applied to an A-module.
inline ModuleOverRing restrict_scalars(const ModuleOverRing& n, const RingMap& phi) {
    require(n.ring().same_presentation(phi.target()), "ring mismatch: module is not over the map's target");
    std::vector<Mat> acts;
    for (int k = 0; k < phi.source().generators(); ++k) {
        std::vector<Int> ek(static_cast<size_t>(phi.source().generators()));
        ek[k] = 1;
        acts.push_back(n.action_of(phi.apply(ek)).matrix());
    }
    return ModuleOverRing(phi.source(), n.underlying(), std::move(acts));
}

// ---------------------------------------------------------------------------
// Ambient-category traits.

struct AbCat {
    using Object = FgAbelianGroup;
    using Morphism = GroupMap;

    static const Object& source(const Morphism& f) { return f.source(); }
    static const Object& target(const Morphism& f) { return f.target(); }
    static Morphism compose(const Morphism& g, const Morphism& f) { return descent::compose(g, f); }
    static Morphism identity(const Object& x) { return GroupMap::identity(x); }
    static bool equal(const Morphism& f, const Morphism& g) { return f.equals(g); }
    static std::string key(const Object& x) { return x.key(); }
    static std::string morphism_key(const Morphism& f) { return f.key(); }
    static std::string describe(const Object& x) { return x.invariant_factors().str(); }
    static bool injective(const Morphism& f) { return is_injective(f); }
    static bool surjective(const Morphism& f) { return is_surjective(f); }

    struct Product {
        Object object;
        std::vector<Morphism> projections;
    };
    static Product product(const std::vector<Object>& xs) {
        DirectSum ds = direct_sum(xs);
        return {ds.object, ds.projections};
    }
    static Morphism into_product(const Product& p, const std::vector<Morphism>& comps) {
        require(!comps.empty(), "into_product needs at least one component");
        Mat m(p.object.generators(), comps[0].source().generators());
        int off = 0;
        for (const auto& c : comps) {
            for (int i = 0; i < c.matrix().rows; ++i)
                for (int j = 0; j < c.matrix().cols; ++j) m(off + i, j) = c.matrix()(i, j);
            off += c.matrix().rows;
        }
        return Morphism(comps[0].source(), p.object, std::move(m));
    }

    struct Coproduct {
        Object object;
        std::vector<Morphism> injections;
    };
    static Coproduct coproduct(const std::vector<Object>& xs) {
        DirectSum ds = direct_sum(xs);
        return {ds.object, ds.injections};
    }
    static Morphism from_coproduct(const Coproduct& p, const std::vector<Morphism>& comps) {
        require(!comps.empty(), "from_coproduct needs at least one component");
        Mat m(comps[0].target().generators(), p.object.generators());
        int off = 0;
        for (const auto& c : comps) {
            for (int i = 0; i < c.matrix().rows; ++i)
                for (int j = 0; j < c.matrix().cols; ++j) m(i, off + j) = c.matrix()(i, j);
            off += c.matrix().cols;
        }
        return Morphism(p.object, comps[0].target(), std::move(m));
    }

    struct EqualizerData {
        Object object;
        Morphism inclusion;
    };
    static EqualizerData equalizer_pair(const Morphism& f, const Morphism& g) {
        KernelResult k = kernel(gm_sub(f, g));
        return {k.object, k.inclusion};
    }
    static Morphism corestrict(const EqualizerData& e, const Morphism& h) {
        auto u = factor_through_inclusion(e.inclusion, h);
        require(u.has_value(), "map does not factor through the equalizer");
        return *u;
    }

    struct CoequalizerData {
        Object object;
        Morphism projection;
    };
    static CoequalizerData coequalizer_pair(const Morphism& f, const Morphism& g) {
        CokernelResult c = cokernel(gm_sub(f, g));
        return {c.object, c.projection};
    }
    static Morphism descend(const CoequalizerData& c, const Morphism& h) {
        // h: target(pair) -> W coequalizing; the quotient presentation shares generators
        return Morphism(c.object, h.target(), h.matrix());
    }
};

struct ModCat {
    using Object = ModuleOverRing;
    using Morphism = ModuleMap;

    static const Object& source(const Morphism& f) { return f.source(); }
    static const Object& target(const Morphism& f) { return f.target(); }
    static Morphism compose(const Morphism& g, const Morphism& f) { return descent::compose(g, f); }
    static Morphism identity(const Object& x) { return ModuleMap::identity(x); }
    static bool equal(const Morphism& f, const Morphism& g) { return f.equals(g); }
    static std::string key(const Object& x) { return x.key(); }
    static std::string morphism_key(const Morphism& f) { return f.key(); }
    static std::string describe(const Object& x) { return x.underlying().invariant_factors().str(); }
    static bool injective(const Morphism& f) { return is_injective(f.as_group_map()); }
    static bool surjective(const Morphism& f) { return is_surjective(f.as_group_map()); }

    struct Product {
        Object object;
        std::vector<Morphism> projections;
    };
    static Product product(const std::vector<Object>& xs) {
        ModuleSum s = module_sum(xs);
        return {s.object, s.projections};
    }
    static Morphism into_product(const Product& p, const std::vector<Morphism>& comps) {
        require(!comps.empty(), "into_product needs at least one component");
        Mat m(p.object.generators(), comps[0].source().generators());
        int off = 0;
        for (const auto& c : comps) {
            for (int i = 0; i < c.matrix().rows; ++i)
                for (int j = 0; j < c.matrix().cols; ++j) m(off + i, j) = c.matrix()(i, j);
            off += c.matrix().rows;
        }
        return Morphism(comps[0].source(), p.object, std::move(m));
    }

    struct Coproduct {
        Object object;
        std::vector<Morphism> injections;
    };
    static Coproduct coproduct(const std::vector<Object>& xs) {
        ModuleSum s = module_sum(xs);
        return {s.object, s.injections};
    }
    static Morphism from_coproduct(const Coproduct& p, const std::vector<Morphism>& comps) {
        require(!comps.empty(), "from_coproduct needs at least one component");
        Mat m(comps[0].target().generators(), p.object.generators());
        int off = 0;
        for (const auto& c : comps) {
            for (int i = 0; i < c.matrix().rows; ++i)
                for (int j = 0; j < c.matrix().cols; ++j) m(i, off + j) = c.matrix()(i, j);
            off += c.matrix().cols;
        }
        return Morphism(p.object, comps[0].target(), std::move(m));
    }

    struct EqualizerData {
        Object object;
        Morphism inclusion;
    };
    static EqualizerData equalizer_pair(const Morphism& f, const Morphism& g) {
        ModuleEqualizer e = descent::equalizer(f, g);
        return {e.object, e.inclusion};
    }
    static Morphism corestrict(const EqualizerData& e, const Morphism& h) {
        auto u = factor_through_inclusion(e.inclusion.as_group_map(), h.as_group_map());
        require(u.has_value(), "map does not factor through the equalizer");
        return Morphism(h.source(), e.object, u->matrix());
    }

    struct CoequalizerData {
        Object object;
        Morphism projection;
    };
    static CoequalizerData coequalizer_pair(const Morphism& f, const Morphism& g) {
        ModuleCoequalizer c = descent::coequalizer(f, g);
        return {c.object, c.projection};
    }
    static Morphism descend(const CoequalizerData& c, const Morphism& h) {
        return Morphism(c.object, h.target(), h.matrix());
    }
};

}  // namespace descent
