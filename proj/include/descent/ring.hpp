#pragma once

// Finitely presented commutative Z-algebras, given by structure constants on
// the generators of a finitely presented abelian group, and their maps.

#include "descent/abelian.hpp"

namespace descent {

class RingSpec {
public:
    // structure[i][j] = coefficient vector of e_i * e_j over the generators
    RingSpec(std::string name, FgAbelianGroup underlying, std::vector<std::vector<std::vector<Int>>> structure,
             std::vector<Int> unit)
        : name_(std::move(name)),
          underlying_(std::move(underlying)),
          structure_(std::move(structure)),
          unit_(std::move(unit)) {
        const int g = underlying_.generators();
        require(static_cast<int>(structure_.size()) == g, "structure constants must be g x g x g");
        for (const auto& row : structure_) {
            require(static_cast<int>(row.size()) == g, "structure constants must be g x g x g");
            for (const auto& v : row)
                require(static_cast<int>(v.size()) == g, "structure constants must be g x g x g");
        }
        require(static_cast<int>(unit_.size()) == g, "unit vector length mismatch");
        validate();
    }

    const std::string& name() const { return name_; }
    const FgAbelianGroup& underlying() const { return underlying_; }
    int generators() const { return underlying_.generators(); }
    const std::vector<Int>& unit() const { return unit_; }

    // e_i * e_j as a generator-coefficient vector
    const std::vector<Int>& product_of_generators(int i, int j) const { return structure_[i][j]; }

    // x * y for coefficient vectors
    std::vector<Int> multiply(const std::vector<Int>& x, const std::vector<Int>& y) const {
        const int g = generators();
        std::vector<Int> out(static_cast<size_t>(g));
        for (int i = 0; i < g; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (int j = 0; j < g; ++j) {
                if (sgn(y[j]) == 0) continue;
                Int c = x[i] * y[j];
                for (int k = 0; k < g; ++k)
                    if (sgn(structure_[i][j][k]) != 0) out[k] += c * structure_[i][j][k];
            }
        }
        return out;
    }

    // matrix of left multiplication by the element x (columns: x * e_j)
    Mat left_multiplication(const std::vector<Int>& x) const {
        const int g = generators();
        Mat m(g, g);
        for (int j = 0; j < g; ++j) {
            std::vector<Int> ej(static_cast<size_t>(g));
            ej[j] = 1;
            std::vector<Int> col = multiply(x, ej);
            for (int i = 0; i < g; ++i) m(i, j) = col[i];
        }
        return m;
    }

    GroupMap multiplication_by(const std::vector<Int>& x) const {
        return GroupMap(underlying_, underlying_, left_multiplication(x));
    }

    std::string key() const { return "R[" + name_ + ";" + underlying_.key() + "]"; }

    bool same_presentation(const RingSpec& o) const {
        return underlying_.same_presentation(o.underlying_) && structure_ == o.structure_ &&
               unit_ == o.unit_;
    }

private:
    void validate() const {
        const int g = generators();
        const FgAbelianGroup& G = underlying_;
        // multiplication descends to the quotient: relator * generator in the lattice
        const Mat& rel = G.relations();
        for (int c = 0; c < rel.cols; ++c)
            for (int j = 0; j < g; ++j) {
                std::vector<Int> ej(static_cast<size_t>(g));
                ej[j] = 1;
                if (!G.in_relation_lattice(multiply(rel.col(c), ej)))
                    throw error("ring multiplication does not descend: relator " + std::to_string(c) +
                                " times generator " + std::to_string(j));
                if (!G.in_relation_lattice(multiply(ej, rel.col(c))))
                    throw error("ring multiplication does not descend: generator " + std::to_string(j) +
                                " times relator " + std::to_string(c));
            }
        // commutativity and associativity modulo relations
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                std::vector<Int> diff(static_cast<size_t>(g));
                for (int k = 0; k < g; ++k) diff[k] = structure_[i][j][k] - structure_[j][i][k];
                if (!G.in_relation_lattice(diff))
                    throw error("structure constants not commutative at (i,j)=(" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
            }
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                for (int k = 0; k < g; ++k) {
                    std::vector<Int> ek(static_cast<size_t>(g));
                    ek[k] = 1;
                    std::vector<Int> lhs = multiply(structure_[i][j], ek);
                    std::vector<Int> ei(static_cast<size_t>(g));
                    ei[i] = 1;
                    std::vector<Int> rhs = multiply(ei, structure_[j][k]);
                    std::vector<Int> diff(static_cast<size_t>(g));
                    for (int l = 0; l < g; ++l) diff[l] = lhs[l] - rhs[l];
                    if (!G.in_relation_lattice(diff))
                        throw error("structure constants not associative at (i,j,k)=(" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
        // two-sided unit law
        for (int j = 0; j < g; ++j) {
            std::vector<Int> ej(static_cast<size_t>(g));
            ej[j] = 1;
            std::vector<Int> lhs = multiply(unit_, ej);
            lhs[j] -= 1;
            if (!G.in_relation_lattice(lhs))
                throw error("unit law fails at generator " + std::to_string(j));
        }
    }

    std::string name_;
    FgAbelianGroup underlying_;
    std::vector<std::vector<std::vector<Int>>> structure_;
    std::vector<Int> unit_;
};

class RingMap {
public:
    RingMap(RingSpec source, RingSpec target, Mat matrix)
        : source_(std::move(source)),
          target_(std::move(target)),
          map_(source_.underlying(), target_.underlying(), std::move(matrix)) {
        validate();
    }

    static RingMap identity(const RingSpec& r) {
        return RingMap(r, r, Mat::identity(r.generators()));
    }

    const RingSpec& source() const { return source_; }
    const RingSpec& target() const { return target_; }
    const GroupMap& as_group_map() const { return map_; }
    const Mat& matrix() const { return map_.matrix(); }

    std::vector<Int> apply(const std::vector<Int>& x) const { return mul_vec(map_.matrix(), x); }

    std::string key() const { return "phi[" + source_.key() + "->" + target_.key() + ";" + matrix().str() + "]"; }

private:
    void validate() const {
        const FgAbelianGroup& TA = target_.underlying();
        // preserves unit modulo relations
        std::vector<Int> u = apply(source_.unit());
        for (int i = 0; i < target_.generators(); ++i) u[i] -= target_.unit()[i];
        require(TA.in_relation_lattice(u), "ring map does not preserve the unit");
        // commutes with multiplication modulo relations
        const int g = source_.generators();
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                std::vector<Int> lhs = apply(source_.product_of_generators(i, j));
                std::vector<Int> ei(static_cast<size_t>(g)), ej(static_cast<size_t>(g));
                ei[i] = 1;
                ej[j] = 1;
                std::vector<Int> rhs = target_.multiply(apply(ei), apply(ej));
                for (int k = 0; k < target_.generators(); ++k) lhs[k] -= rhs[k];
                if (!TA.in_relation_lattice(lhs))
                    throw error("ring map does not commute with multiplication at (i,j)=(" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }

    RingSpec source_, target_;
    GroupMap map_;
};

}  // namespace descent
