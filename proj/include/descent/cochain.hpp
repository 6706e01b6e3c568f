#pragma once

// Normalized cochains and cohomotopy of a truncated cosimplicial abelian
// group: N^s is the intersection of the kernels of the codegeneracies out of
// level s, the differential is the alternating coface sum, and pi^s is the
// cohomology.  The unnormalized alternating-sum cohomology is kept alongside
// as an independent oracle.

#include "descent/complex.hpp"
#include "descent/monad.hpp"

namespace descent {

using CosimplicialGroup = TruncatedCosimplicial<AbCat>;

// alternating sum of the cofaces out of level s
inline Mat alternating_coboundary(const CosimplicialGroup& a, int s) {
    require(s >= 0 && s + 1 <= a.truncation, "coboundary out of computable range");
    Mat m(a.level[s + 1].generators(), a.level[s].generators());
    for (int i = 0; i <= s + 1; ++i) {
        const Mat& d = a.coface[s][i].matrix();
        m = (i % 2 == 0) ? add(m, d) : sub(m, d);
    }
    return m;
}

// lattice basis of N^s = { v : s^j v = 0 for all j < s } inside Z^{g_s}
inline Mat normalized_lattice(const CosimplicialGroup& a, int s) {
    require(s >= 0 && s <= a.truncation, "level out of range");
    if (s == 0) return Mat::identity(a.level[0].generators());
    Mat stacked(0, 0);
    Mat rel_block(0, 0);
    std::vector<FgAbelianGroup> targets;
    for (int j = 0; j <= s - 1; ++j) {
        stacked = vcat(stacked, a.codegeneracy[s - 1][j].matrix());
        targets.push_back(a.level[s - 1]);
    }
    DirectSum ds = direct_sum(targets);
    return preimage_lattice(stacked, ds.object.relations());
}

// pi^s of the cosimplicial abelian group (normalized path)
inline FgAbelianGroup cohomotopy(const CosimplicialGroup& a, int s) {
    require(s >= 0 && s + 1 <= a.truncation,
            "cohomotopy out of computable range: need s + 1 <= truncation");
    Mat nlat = normalized_lattice(a, s);
    Mat delta = alternating_coboundary(a, s);
    // cycles: elements of N^s whose coboundary vanishes in level s+1
    Mat w = preimage_lattice(mul(delta, nlat), a.level[s + 1].relations());
    Mat cycles = lattice_basis(mul(nlat, w));
    // boundaries: delta(N^{s-1}) plus relations of level s
    Mat bnd = a.level[s].relations();
    if (s >= 1) {
        Mat prev = normalized_lattice(a, s - 1);
        bnd = hcat(mul(alternating_coboundary(a, s - 1), prev), bnd);
    }
    return quotient_presentation(cycles, bnd);
}

// unnormalized alternating-sum cohomology (oracle)
inline FgAbelianGroup cohomology_unnormalized(const CosimplicialGroup& a, int s) {
    require(s >= 0 && s + 1 <= a.truncation,
            "cohomology out of computable range: need s + 1 <= truncation");
    Mat delta = alternating_coboundary(a, s);
    Mat cycles = preimage_lattice(delta, a.level[s + 1].relations());
    Mat bnd = a.level[s].relations();
    if (s >= 1) bnd = hcat(alternating_coboundary(a, s - 1), bnd);
    return quotient_presentation(cycles, bnd);
}

// The normalized cochain complex as a chain complex of Z-modules in
// nonpositive degrees: degree -s holds N^s, boundary -s -> -s-1 is delta^s.
inline ChainComplex normalized_cochain(const CosimplicialGroup& a) {
    const int N = a.truncation;
    RingSpec z = ring_Z();
    std::vector<Mat> bases;
    std::vector<ModuleOverRing> objects;
    for (int s = N; s >= 0; --s) {
        Mat b = normalized_lattice(a, s);
        FgAbelianGroup g = quotient_presentation(b, a.level[s].relations());
        bases.push_back(b);
        objects.push_back(as_Z_module(g));
    }
    // objects[k] holds N^{N-k} at degree -(N-k) = lo + k with lo = -N
    std::vector<ModuleMap> boundaries;
    for (int s = N - 1; s >= 0; --s) {
        // boundary from degree -s into degree -s-1: delta^s restricted to N^s
        int src = N - s, tgt = N - s - 1;
        Mat image = mul(alternating_coboundary(a, s), bases[src]);
        GroupMap incl(objects[tgt].underlying(), a.level[s + 1], bases[tgt]);
        GroupMap moved(objects[src].underlying(), a.level[s + 1], image);
        auto fact = factor_through_inclusion(incl, moved);
        require(fact.has_value(), "normalized differential does not preserve the normalized subgroups");
        boundaries.push_back(ModuleMap(objects[src], objects[tgt], fact->matrix()));
    }
    // assemble with degrees -N..0: objects currently listed s=N..0, i.e. lo=-N upward
    return ChainComplex(z, -N, std::move(objects), std::move(boundaries));
}

}  // namespace descent
