#pragma once

// Instance generator: the cosimplicial Dold-Kan functor.  Given a bounded
// cochain complex C^0 -> C^1 -> ... it produces a valid truncated cosimplicial
// abelian group whose level n is the sum of copies of C^k over the monotone
// surjections [n] ->> [k].  Every cosimplicial abelian group is isomorphic to
// one of this form, so seeding random complexes (plus a random change of
// basis per level) generates the general case while keeping H^s(C) as an
// independently known answer.

#include "descent/cochain.hpp"
#include "descent/rng.hpp"

#include <map>

namespace descent::gen {

struct CochainComplexSpec {
    std::vector<FgAbelianGroup> groups;  // C^0..C^K
    std::vector<Mat> diffs;              // C^k -> C^{k+1}
};

// all monotone surjections [n] ->> [k], as value vectors of length n+1
inline std::vector<std::vector<int>> monotone_surjections(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n) + 1);
    std::function<void(int, int)> rec = [&](int pos, int val) {
        if (pos == n + 1) {
            if (val == k) out.push_back(cur);
            return;
        }
        // next value stays or increments
        cur[pos] = val;
        rec(pos + 1, val);
        if (val + 1 <= k) {
            cur[pos] = val + 1;
            rec(pos + 1, val + 1);
        }
    };
    if (n < 0 || k < 0 || k > n) return out;
    cur[0] = 0;
    rec(1, 0);
    return out;
}

struct DoldKanLevel {
    std::vector<std::pair<int, std::vector<int>>> summands;  // (k, surjection)
    std::vector<int> offset;                                 // generator offset per summand
    FgAbelianGroup group;
};

inline DoldKanLevel dold_kan_level(const CochainComplexSpec& c, int n) {
    DoldKanLevel lvl;
    int gens = 0;
    std::vector<Mat> rels;
    for (int k = 0; k < static_cast<int>(c.groups.size()); ++k)
        for (auto& s : monotone_surjections(n, k)) {
            lvl.summands.emplace_back(k, s);
            lvl.offset.push_back(gens);
            gens += c.groups[k].generators();
        }
    Mat rel(gens, 0);
    int relcols = 0;
    for (auto& [k, s] : lvl.summands) relcols += c.groups[k].relations().cols;
    rel = Mat(gens, relcols);
    int col = 0;
    for (size_t a = 0; a < lvl.summands.size(); ++a) {
        const Mat& r = c.groups[lvl.summands[a].first].relations();
        for (int j = 0; j < r.cols; ++j) {
            for (int i = 0; i < r.rows; ++i) rel(lvl.offset[a] + i, col) = r(i, j);
            ++col;
        }
    }
    lvl.group = FgAbelianGroup(gens, rel);
    return lvl;
}

// epi-mono factorization bookkeeping for sigma_target o theta
struct Factored {
    std::vector<int> epi;  // the epi part as a value vector
    int image_top;         // largest value attained
    bool misses_only_top;  // image is exactly {0..k-1} inside [k]
    bool onto;             // image is all of [k]
};

inline Factored factor_composite(const std::vector<int>& composite, int k) {
    Factored f;
    std::vector<int> values;
    for (int v : composite)
        if (values.empty() || values.back() != v) values.push_back(v);
    // image values are increasing; relabel to 0..|values|-1
    std::map<int, int> relabel;
    for (size_t i = 0; i < values.size(); ++i) relabel[values[i]] = static_cast<int>(i);
    f.epi.reserve(composite.size());
    for (int v : composite) f.epi.push_back(relabel[v]);
    f.image_top = values.back();
    f.onto = static_cast<int>(values.size()) == k + 1;
    f.misses_only_top = static_cast<int>(values.size()) == k && values.back() == k - 1 &&
                        relabel.begin()->first == 0;
    // misses_only_top additionally requires the image to be an initial segment
    if (f.misses_only_top) {
        for (size_t i = 0; i < values.size(); ++i)
            if (values[i] != static_cast<int>(i)) f.misses_only_top = false;
    }
    return f;
}

// structure map X(theta) for theta: [n] -> [m] given by its value vector
inline Mat dold_kan_structure_map(const CochainComplexSpec& c, const DoldKanLevel& src,
                                  const DoldKanLevel& tgt, const std::vector<int>& theta) {
    Mat m(tgt.group.generators(), src.group.generators());
    for (size_t b = 0; b < tgt.summands.size(); ++b) {
        auto& [k, sigma_t] = tgt.summands[b];
        // composite sigma_t o theta on [n]
        std::vector<int> composite;
        composite.reserve(theta.size());
        for (int v : theta) composite.push_back(sigma_t[v]);
        Factored f = factor_composite(composite, k);
        for (size_t a = 0; a < src.summands.size(); ++a) {
            auto& [j, sigma_s] = src.summands[a];
            if (f.onto && j == k && f.epi == sigma_s) {
                for (int i = 0; i < c.groups[k].generators(); ++i)
                    m(tgt.offset[b] + i, src.offset[a] + i) += 1;
            } else if (f.misses_only_top && j == k - 1 && f.epi == sigma_s) {
                const Mat& d = c.diffs[j];  // C^j -> C^{j+1} = C^k
                for (int r = 0; r < d.rows; ++r)
                    for (int cc2 = 0; cc2 < d.cols; ++cc2)
                        if (sgn(d(r, cc2)) != 0) m(tgt.offset[b] + r, src.offset[a] + cc2) += d(r, cc2);
            }
        }
    }
    return m;
}

inline CosimplicialGroup dold_kan_cosimplicial(const CochainComplexSpec& c, int truncation) {
    std::vector<DoldKanLevel> levels;
    for (int n = 0; n <= truncation; ++n) levels.push_back(dold_kan_level(c, n));
    CosimplicialGroup x;
    x.truncation = truncation;
    for (auto& l : levels) x.level.push_back(l.group);
    for (int n = 0; n < truncation; ++n) {
        std::vector<GroupMap> d, s;
        for (int i = 0; i <= n + 1; ++i) {
            // coface delta^i: [n] -> [n+1] skips value i
            std::vector<int> theta;
            for (int v = 0; v <= n; ++v) theta.push_back(v < i ? v : v + 1);
            d.emplace_back(levels[n].group, levels[n + 1].group,
                           dold_kan_structure_map(c, levels[n], levels[n + 1], theta));
        }
        for (int j = 0; j <= n; ++j) {
            // codegeneracy sigma^j: [n+1] -> [n] repeats value j
            std::vector<int> theta;
            for (int v = 0; v <= n + 1; ++v) theta.push_back(v <= j ? v : v - 1);
            s.emplace_back(levels[n + 1].group, levels[n].group,
                           dold_kan_structure_map(c, levels[n + 1], levels[n], theta));
        }
        x.coface.push_back(std::move(d));
        x.codegeneracy.push_back(std::move(s));
    }
    return x;
}

// random unimodular matrix with small entries, with its inverse
inline std::pair<Mat, Mat> random_unimodular(Rng& rng, int n) {
    Mat u = Mat::identity(n), uinv = Mat::identity(n);
    int ops = n + static_cast<int>(rng.uniform(0, 2 * n));
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 1));
        if (n < 2) break;
        if (i == j) continue;
        Int f(rng.uniform(-2, 2));
        // u: row i += f row j  =>  uinv: col j -= f col i
        detail::row_add(u, i, j, f);
        detail::col_add(uinv, j, i, -f);
    }
    return {u, uinv};
}

// conjugate every level by a random change of generators
inline CosimplicialGroup shuffle_presentation(Rng& rng, const CosimplicialGroup& x) {
    const int N = x.truncation;
    std::vector<Mat> u, uinv;
    std::vector<FgAbelianGroup> lvl;
    for (int n = 0; n <= N; ++n) {
        auto [a, b] = random_unimodular(rng, x.level[n].generators());
        u.push_back(a);
        uinv.push_back(b);
        lvl.emplace_back(x.level[n].generators(), mul(a, x.level[n].relations()));
    }
    CosimplicialGroup y;
    y.truncation = N;
    y.level = lvl;
    for (int n = 0; n < N; ++n) {
        std::vector<GroupMap> d, s;
        for (size_t i = 0; i < x.coface[n].size(); ++i)
            d.emplace_back(lvl[n], lvl[n + 1], mul(u[n + 1], mul(x.coface[n][i].matrix(), uinv[n])));
        for (size_t j = 0; j < x.codegeneracy[n].size(); ++j)
            s.emplace_back(lvl[n + 1], lvl[n], mul(u[n], mul(x.codegeneracy[n][j].matrix(), uinv[n + 1])));
        y.coface.push_back(std::move(d));
        y.codegeneracy.push_back(std::move(s));
    }
    return y;
}

// random bounded cochain complex with at most two adjacent nonzero degrees
// (plus torsion), keeping the Dold-Kan levels small
inline CochainComplexSpec random_cochain_spec(Rng& rng, int max_degree) {
    CochainComplexSpec c;
    int support = static_cast<int>(rng.uniform(0, max_degree));
    int width = rng.chance(60) ? 2 : 1;
    for (int k = 0; k <= max_degree; ++k) {
        bool live = k >= support && k < support + width;
        if (!live) {
            c.groups.push_back(FgAbelianGroup::zero());
            continue;
        }
        int g = static_cast<int>(rng.uniform(1, 2));
        Mat rel(g, 1);
        if (rng.chance(50)) {
            int which = static_cast<int>(rng.uniform(0, g - 1));
            rel(which, 0) = rng.uniform(2, 4);
        }
        c.groups.push_back(FgAbelianGroup(g, rel));
    }
    for (int k = 0; k + 1 <= max_degree; ++k) {
        Mat d(c.groups[k + 1].generators(), c.groups[k].generators());
        if (c.groups[k].generators() > 0 && c.groups[k + 1].generators() > 0) {
            for (Int& v : d.a) v = rng.uniform(-3, 3);
            // keep the map well defined: clear entries that break relations
            for (int attempt = 0; attempt < 8; ++attempt) {
                try {
                    GroupMap test(c.groups[k], c.groups[k + 1], d);
                    break;
                } catch (const error&) {
                    for (Int& v : d.a) v *= 2;  // scaling into the relation lattice eventually works
                }
            }
            try {
                GroupMap test(c.groups[k], c.groups[k + 1], d);
            } catch (const error&) {
                d = Mat(c.groups[k + 1].generators(), c.groups[k].generators());
            }
        }
        c.diffs.push_back(d);
    }
    return c;
}

}  // namespace descent::gen
