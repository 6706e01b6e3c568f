#pragma once

// Finitely presented abelian groups Z^g / colspan(relations) and their maps.
// Relation matrices have g rows; columns are relators.  Maps are matrices on
// generators, compared modulo the target's relation lattice.

#include "descent/zmat.hpp"

#include <memory>
#include <numeric>

namespace descent {

class FgAbelianGroup {
public:
    FgAbelianGroup() : FgAbelianGroup(0, Mat(0, 0)) {}
    FgAbelianGroup(int generators, Mat relations)
        : generators_(generators), relations_(drop_zero_cols(std::move(relations))) {
        require(generators_ >= 0, "generator count must be nonnegative");
        require(relations_.rows == generators_, "relation matrix must have one row per generator");
    }

    static FgAbelianGroup free_group(int rank) { return FgAbelianGroup(rank, Mat(rank, 0)); }
    static FgAbelianGroup cyclic(const Int& n) {
        Mat r(1, 1);
        r(0, 0) = n;
        return FgAbelianGroup(1, r);
    }
    static FgAbelianGroup zero() { return FgAbelianGroup(0, Mat(0, 0)); }

    int generators() const { return generators_; }
    const Mat& relations() const { return relations_; }

    // v lies in the relation lattice?
    bool in_relation_lattice(const std::vector<Int>& v) const {
        require(static_cast<int>(v.size()) == generators_, "vector length mismatch");
        if (relations_.cols == 0) {
            for (const Int& x : v)
                if (sgn(x) != 0) return false;
            return true;
        }
        return solve_echelon(relation_echelon(), v).has_value();
    }

    bool cols_in_relation_lattice(const Mat& m) const {
        require(m.rows == generators_, "row count mismatch");
        for (int j = 0; j < m.cols; ++j)
            if (!in_relation_lattice(m.col(j))) return false;
        return true;
    }

    // Invariant factors d1 | d2 | ... (entries > 1), plus free rank.
    struct InvariantFactors {
        std::vector<Int> torsion;
        int free_rank = 0;
        bool operator==(const InvariantFactors& o) const {
            return torsion == o.torsion && free_rank == o.free_rank;
        }
        bool is_zero() const { return torsion.empty() && free_rank == 0; }
        std::string str() const {
            if (is_zero()) return "0";
            std::string s;
            auto append = [&s](const std::string& part) {
                if (!s.empty()) s += " + ";
                s += part;
            };
            if (free_rank == 1) append("Z");
            else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
            for (const Int& d : torsion) append("Z/" + d.get_str());
            return s;
        }
    };

    InvariantFactors invariant_factors() const {
        SmithResult s = smith(relations_);
        InvariantFactors f;
        int rank = 0;
        for (int i = 0; i < std::min(relations_.rows, relations_.cols); ++i) {
            const Int& d = s.D(i, i);
            if (sgn(d) == 0) break;
            ++rank;
            if (d != 1) f.torsion.push_back(d);
        }
        f.free_rank = generators_ - rank;
        return f;
    }

    bool is_zero_group() const { return invariant_factors().is_zero(); }

    const Echelon& relation_echelon() const {
        if (!echelon_) echelon_ = std::make_shared<Echelon>(col_echelon(relations_));
        return *echelon_;
    }

    std::string key() const {
        return "G[" + std::to_string(generators_) + ";" + relations_.str() + "]";
    }

    bool same_presentation(const FgAbelianGroup& o) const {
        return generators_ == o.generators_ && relations_ == o.relations_;
    }

private:
    int generators_;
    Mat relations_;
    mutable std::shared_ptr<Echelon> echelon_;
};

class GroupMap {
public:
    GroupMap() = default;
    GroupMap(FgAbelianGroup source, FgAbelianGroup target, Mat matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        require(matrix_.rows == target_.generators() && matrix_.cols == source_.generators(),
                "map matrix must be target.generators x source.generators");
        // well-definedness: relations of the source land in the target lattice
        if (source_.relations().cols > 0)
            require(target_.cols_in_relation_lattice(mul(matrix_, source_.relations())),
                    "matrix does not carry source relations into target relations");
    }

    static GroupMap identity(const FgAbelianGroup& g) {
        return GroupMap(g, g, Mat::identity(g.generators()));
    }
    static GroupMap zero(const FgAbelianGroup& s, const FgAbelianGroup& t) {
        return GroupMap(s, t, Mat(t.generators(), s.generators()));
    }

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const Mat& matrix() const { return matrix_; }

    bool is_identity_presentation() const {
        return source_.same_presentation(target_) && equals(identity(source_));
    }

    // equality as maps of presented groups (difference lands in target lattice)
    bool equals(const GroupMap& o) const {
        require(source_.same_presentation(o.source_) && target_.same_presentation(o.target_),
                "comparing maps with different endpoints");
        if (target_.relations().cols == 0) return matrix_.a == o.matrix_.a;
        return target_.cols_in_relation_lattice(sub(matrix_, o.matrix_));
    }

    bool is_zero_map() const {
        if (target_.relations().cols == 0) return matrix_.is_zero();
        return target_.cols_in_relation_lattice(matrix_);
    }

    std::string key() const {
        return "f[" + source_.key() + "->" + target_.key() + ";" + matrix_.str() + "]";
    }

private:
    FgAbelianGroup source_, target_;
    Mat matrix_;
};

inline GroupMap compose(const GroupMap& g, const GroupMap& f) {
    require(f.target().same_presentation(g.source()), "composition endpoint mismatch");
    return GroupMap(f.source(), g.target(), mul(g.matrix(), f.matrix()));
}

inline GroupMap gm_add(const GroupMap& f, const GroupMap& g) {
    return GroupMap(f.source(), f.target(), add(f.matrix(), g.matrix()));
}
inline GroupMap gm_sub(const GroupMap& f, const GroupMap& g) {
    return GroupMap(f.source(), f.target(), sub(f.matrix(), g.matrix()));
}

// ---------------------------------------------------------------------------
// Kernels and cokernels, with their universal maps.

struct SubLattice {
    // lattice of ambient vectors (columns), guaranteed to contain `inside`
    Mat basis;
};

// Lattice { v : f(v) = 0 in target } = preimage of the target relations.
inline Mat preimage_lattice(const Mat& f, const Mat& target_relations) {
    // kernel of [ f | R_N ], first block of coordinates
    Mat stacked = hcat(f, target_relations);
    Mat k = kernel_basis(stacked);
    Mat proj(f.cols, k.cols);
    for (int i = 0; i < f.cols; ++i)
        for (int j = 0; j < k.cols; ++j) proj(i, j) = k(i, j);
    return lattice_basis(proj);
}

struct KernelResult {
    FgAbelianGroup object;
    GroupMap inclusion;
};

// Present basis(L)/colspan(S) where S's columns lie in L = colspan(basis).
inline FgAbelianGroup quotient_presentation(const Mat& basis, const Mat& sub) {
    if (basis.cols == 0) return FgAbelianGroup::zero();
    auto w = solve_many(basis, sub);
    require(w.has_value(), "subgroup does not lie inside the given lattice");
    return FgAbelianGroup(basis.cols, *w);
}

inline KernelResult kernel(const GroupMap& f) {
    Mat L = preimage_lattice(f.matrix(), f.target().relations());
    // relations: source relations expressed in the L-basis
    FgAbelianGroup k = quotient_presentation(L, f.source().relations());
    GroupMap incl(k, f.source(), L);
    return {std::move(k), std::move(incl)};
}

struct CokernelResult {
    FgAbelianGroup object;
    GroupMap projection;
};

inline CokernelResult cokernel(const GroupMap& f) {
    FgAbelianGroup q(f.target().generators(), hcat(f.target().relations(), f.matrix()));
    GroupMap proj(f.target(), q, Mat::identity(f.target().generators()));
    return {std::move(q), std::move(proj)};
}

// Express a map through an inclusion: find u with incl∘u = f (exact, not mod
// relations in the ambient: the inclusion lattice is saturated against them).
inline std::optional<GroupMap> factor_through_inclusion(const GroupMap& incl, const GroupMap& f) {
    require(incl.target().same_presentation(f.target()), "inclusion target mismatch");
    // solve incl.matrix * U = f.matrix modulo ambient relations:
    // [ incl | R_ambient ] * [U; C] = f
    Mat stacked = hcat(incl.matrix(), f.target().relations());
    auto sol = solve_many(stacked, f.matrix());
    if (!sol) return std::nullopt;
    Mat u(incl.matrix().cols, f.matrix().cols);
    for (int i = 0; i < u.rows; ++i)
        for (int j = 0; j < u.cols; ++j) u(i, j) = (*sol)(i, j);
    return GroupMap(f.source(), incl.source(), u);
}

// Injectivity / surjectivity of the underlying map of presented groups.
inline bool is_injective(const GroupMap& f) {
    return kernel(f).object.is_zero_group();
}
inline bool is_surjective(const GroupMap& f) {
    return cokernel(f).object.is_zero_group();
}
inline bool is_isomorphism(const GroupMap& f) { return is_injective(f) && is_surjective(f); }

// Explicit inverse when f is an isomorphism.
inline std::optional<GroupMap> inverse_of(const GroupMap& f) {
    if (!is_isomorphism(f)) return std::nullopt;
    Mat stacked = hcat(f.matrix(), f.target().relations());
    auto sol = solve_many(stacked, Mat::identity(f.target().generators()));
    if (!sol) return std::nullopt;
    Mat g(f.matrix().cols, f.target().generators());
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) g(i, j) = (*sol)(i, j);
    return GroupMap(f.target(), f.source(), g);
}

// Normalization to invariant-factor form, with the isomorphisms both ways.
struct NormalizedGroup {
    FgAbelianGroup object;
    GroupMap forward;   // original -> normalized
    GroupMap backward;  // normalized -> original
};

inline NormalizedGroup normalize(const FgAbelianGroup& g) {
    SmithResult s = smith(g.relations());
    int n = g.generators();
    std::vector<int> keep;  // rows whose diagonal entry is not 1
    for (int i = 0; i < n; ++i) {
        Int d = i < std::min(s.D.rows, s.D.cols) ? s.D(i, i) : Int(0);
        if (d != 1) keep.push_back(i);
    }
    Mat rel(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        Int d = keep[i] < std::min(s.D.rows, s.D.cols) ? s.D(keep[i], keep[i]) : Int(0);
        rel(static_cast<int>(i), static_cast<int>(i)) = d;
    }
    FgAbelianGroup normal(static_cast<int>(keep.size()), rel);
    Mat fwd(static_cast<int>(keep.size()), n);
    for (size_t i = 0; i < keep.size(); ++i)
        for (int j = 0; j < n; ++j) fwd(static_cast<int>(i), j) = s.U(keep[i], j);
    Mat bwd(n, static_cast<int>(keep.size()));
    for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < keep.size(); ++j) bwd(i, static_cast<int>(j)) = s.Uinv(i, keep[j]);
    return {normal, GroupMap(g, normal, fwd), GroupMap(normal, g, bwd)};
}

// Direct sum with injections and projections.
struct DirectSum {
    FgAbelianGroup object;
    std::vector<GroupMap> injections;
    std::vector<GroupMap> projections;
};

inline DirectSum direct_sum(const std::vector<FgAbelianGroup>& parts) {
    int gens = 0, rels = 0;
    for (const auto& p : parts) {
        gens += p.generators();
        rels += p.relations().cols;
    }
    Mat r(gens, rels);
    int go = 0, ro = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.generators(); ++i)
            for (int j = 0; j < p.relations().cols; ++j) r(go + i, ro + j) = p.relations()(i, j);
        go += p.generators();
        ro += p.relations().cols;
    }
    FgAbelianGroup sum(gens, r);
    DirectSum out{sum, {}, {}};
    go = 0;
    for (const auto& p : parts) {
        Mat inj(gens, p.generators());
        Mat prj(p.generators(), gens);
        for (int i = 0; i < p.generators(); ++i) {
            inj(go + i, i) = 1;
            prj(i, go + i) = 1;
        }
        out.injections.emplace_back(p, sum, inj);
        out.projections.emplace_back(sum, p, prj);
        go += p.generators();
    }
    return out;
}

}  // namespace descent
