#pragma once

// Hom groups of module maps: Hom_B(M, N) as a finitely presented abelian
// group together with an indexed basis of representative matrices, plus the
// coordinate and induced-map machinery that makes Hom(M, -) and Hom(-, N)
// functorial.  A map is a gN x gM integer matrix subject to
//   (1) well-definedness: F * R_M lands in the relation lattice of N,
//   (2) B-linearity: F act_M(b) = act_N(b) F modulo relations of N,
// taken modulo matrices whose columns lie in the relation lattice of N.

#include "descent/module.hpp"

namespace descent {

inline std::vector<Int> vec_of(const Mat& m) {
    return m.a;
}
inline Mat mat_of(const std::vector<Int>& v, int rows, int cols) {
    return Mat(rows, cols, v);
}

class HomGroup {
public:
    // extra constraints: pairs (rows over vec(F) unknowns, "modulo" relation
    // matrix absorbed by auxiliary unknowns), used e.g. for coaction
    // compatibility of descent-data maps
    using ExtraConstraint = std::pair<Mat, Mat>;

    HomGroup(ModuleOverRing m, ModuleOverRing n, std::vector<ExtraConstraint> extra = {})
        : m_(std::move(m)), n_(std::move(n)), extra_(std::move(extra)) {
        require(m_.ring().same_presentation(n_.ring()), "ring mismatch in hom group");
        build();
    }

    const FgAbelianGroup& group() const { return group_; }
    const ModuleOverRing& source_module() const { return m_; }
    const ModuleOverRing& target_module() const { return n_; }
    int rank() const { return group_.generators(); }

    // representative of the alpha-th basis element
    const Mat& basis_rep(int alpha) const { return basis_[alpha]; }

    ModuleMap rep_from_coordinates(const std::vector<Int>& coords) const {
        require(static_cast<int>(coords.size()) == rank(), "coordinate length mismatch");
        Mat f(n_.generators(), m_.generators());
        for (int a = 0; a < rank(); ++a)
            if (sgn(coords[a]) != 0) f = add(f, scale(basis_[a], coords[a]));
        return ModuleMap(m_, n_, std::move(f));
    }

    // coordinates of a concrete map, if it is a valid B-linear map M -> N
    std::optional<std::vector<Int>> coordinates(const Mat& f) const {
        auto sol = solve_echelon(coord_solver_, vec_of(f));
        if (!sol) return std::nullopt;
        std::vector<Int> coords(static_cast<size_t>(rank()));
        for (int a = 0; a < rank(); ++a) coords[a] = (*sol)[a];
        return coords;
    }

private:
    void build() {
        const int gm = m_.generators(), gn = n_.generators();
        const int gb = m_.ring().generators();
        const Mat& rm = m_.underlying().relations();
        const Mat& rn = n_.underlying().relations();
        const int unknowns = gn * gm;

        // constraint rows: (1) per source relation column, (2) per ring generator
        // auxiliary unknowns absorb the "modulo target relations" slack
        std::vector<Mat> blocks;  // each: rows x (unknowns + aux)
        int aux_total = 0;
        std::vector<Mat> aux_blocks;

        auto vec_index = [gm](int i, int j) { return i * gm + j; };  // entry F(i,j)

        // (1) F * R_M = R_N * Y
        for (int c = 0; c < rm.cols; ++c) {
            Mat rows(gn, unknowns);
            for (int i = 0; i < gn; ++i)
                for (int j = 0; j < gm; ++j)
                    if (sgn(rm(j, c)) != 0) rows(i, vec_index(i, j)) = rm(j, c);
            blocks.push_back(std::move(rows));
            aux_blocks.push_back(rn);
            aux_total += rn.cols;
        }
        // (2) act_N(b) F - F act_M(b) = R_N * Z, unless the actions are trivially equal
        for (int b = 0; b < gb; ++b) {
            const Mat& am = m_.action(b).matrix();
            const Mat& an = n_.action(b).matrix();
            bool both_identity = am == Mat::identity(gm) && an == Mat::identity(gn);
            if (both_identity) continue;
            for (int j = 0; j < gm; ++j) {
                Mat rows(gn, unknowns);
                for (int i = 0; i < gn; ++i) {
                    for (int k = 0; k < gn; ++k)
                        if (sgn(an(i, k)) != 0) rows(i, vec_index(k, j)) += an(i, k);
                    for (int k = 0; k < gm; ++k)
                        if (sgn(am(k, j)) != 0) rows(i, vec_index(i, k)) -= am(k, j);
                }
                blocks.push_back(std::move(rows));
                aux_blocks.push_back(rn);
                aux_total += rn.cols;
            }
        }
        for (const auto& [rows, modulo] : extra_) {
            require(rows.cols == unknowns, "extra constraint has wrong unknown count");
            blocks.push_back(rows);
            aux_blocks.push_back(Mat(rows.rows, 0));
            if (modulo.cols > 0) {
                // absorb "modulo" by block-repeating the relation columns per row group
                require(rows.rows % modulo.rows == 0, "extra constraint rows must stack over the modulo group");
                int copies = rows.rows / modulo.rows;
                Mat big(rows.rows, modulo.cols * copies);
                for (int c = 0; c < copies; ++c)
                    for (int i = 0; i < modulo.rows; ++i)
                        for (int j = 0; j < modulo.cols; ++j)
                            big(c * modulo.rows + i, c * modulo.cols + j) = modulo(i, j);
                aux_blocks.back() = std::move(big);
                aux_total += modulo.cols * copies;
            }
        }

        // assemble E = [ constraints | -aux relations (block diagonal) ]
        int total_rows = 0;
        for (const auto& blk : blocks) total_rows += blk.rows;
        Mat E(total_rows, unknowns + aux_total);
        int row_off = 0, aux_off = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            const Mat& blk = blocks[b];
            for (int i = 0; i < blk.rows; ++i)
                for (int j = 0; j < blk.cols; ++j)
                    if (sgn(blk(i, j)) != 0) E(row_off + i, j) = blk(i, j);
            const Mat& ab = aux_blocks[b];
            for (int i = 0; i < ab.rows; ++i)
                for (int j = 0; j < ab.cols; ++j)
                    if (sgn(ab(i, j)) != 0) E(row_off + i, unknowns + aux_off + j) = -ab(i, j);
            row_off += blk.rows;
            aux_off += ab.cols;
        }

        // solution lattice, projected to the F block
        Mat solutions;
        if (total_rows == 0) {
            solutions = Mat::identity(unknowns);
        } else {
            Mat k = kernel_basis(E);
            Mat proj(unknowns, k.cols);
            for (int i = 0; i < unknowns; ++i)
                for (int j = 0; j < k.cols; ++j) proj(i, j) = k(i, j);
            solutions = lattice_basis(proj);
        }

        // trivial maps: each column of R_N placed in each matrix column
        Mat trivial(unknowns, rn.cols * gm);
        int col = 0;
        for (int c = 0; c < rn.cols; ++c)
            for (int j = 0; j < gm; ++j) {
                for (int i = 0; i < gn; ++i)
                    if (sgn(rn(i, c)) != 0) trivial(vec_index(i, j), col) = rn(i, c);
                ++col;
            }

        group_ = quotient_presentation(solutions, trivial);
        basis_.clear();
        for (int a = 0; a < solutions.cols; ++a) basis_.push_back(mat_of(solutions.col(a), gn, gm));
        coord_solver_ = col_echelon(hcat(solutions, trivial));
    }

    ModuleOverRing m_, n_;
    std::vector<ExtraConstraint> extra_;
    FgAbelianGroup group_;
    std::vector<Mat> basis_;
    Echelon coord_solver_;
};

// Hom(M, -) applied to g: X -> Y, as a map of hom groups.
inline GroupMap hom_induced_post(const HomGroup& hx, const HomGroup& hy, const ModuleMap& g) {
    require(hx.source_module().same_presentation(hy.source_module()), "hom source mismatch");
    require(g.source().same_presentation(hx.target_module()), "map source mismatch");
    require(g.target().same_presentation(hy.target_module()), "map target mismatch");
    Mat m(hy.rank(), hx.rank());
    for (int a = 0; a < hx.rank(); ++a) {
        Mat image = mul(g.matrix(), hx.basis_rep(a));
        auto coords = hy.coordinates(image);
        require(coords.has_value(), "composite map does not lie in the target hom group");
        for (int i = 0; i < hy.rank(); ++i) m(i, a) = (*coords)[i];
    }
    return GroupMap(hx.group(), hy.group(), std::move(m));
}

// Hom(-, X) applied to f: M' -> M, as a map Hom(M, X) -> Hom(M', X).
inline GroupMap hom_induced_pre(const HomGroup& hm, const HomGroup& hm2, const ModuleMap& f) {
    require(hm.target_module().same_presentation(hm2.target_module()), "hom target mismatch");
    require(f.target().same_presentation(hm.source_module()), "map target mismatch");
    require(f.source().same_presentation(hm2.source_module()), "map source mismatch");
    Mat m(hm2.rank(), hm.rank());
    for (int a = 0; a < hm.rank(); ++a) {
        Mat image = mul(hm.basis_rep(a), f.matrix());
        auto coords = hm2.coordinates(image);
        require(coords.has_value(), "composite map does not lie in the target hom group");
        for (int i = 0; i < hm2.rank(); ++i) m(i, a) = (*coords)[i];
    }
    return GroupMap(hm.group(), hm2.group(), std::move(m));
}

}  // namespace descent
