#pragma once

// Exact integer matrices over GMP integers: Smith normal form, column
// echelon form, kernels, linear solves and lattice arithmetic.  Everything
// downstream (groups, modules, homology) reduces to the routines here.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace descent {

using Int = mpz_class;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw error(what);
}

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;  // row-major, rows*cols entries

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {
        require(r >= 0 && c >= 0, "matrix dimensions must be nonnegative");
    }
    Mat(int r, int c, std::vector<Int> entries) : rows(r), cols(c), a(std::move(entries)) {
        require(a.size() == static_cast<size_t>(r) * c, "entry count must equal rows*cols");
    }
    static Mat from_rows(const std::vector<std::vector<long>>& rr) {
        Mat m(static_cast<int>(rr.size()), rr.empty() ? 0 : static_cast<int>(rr[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            require(static_cast<int>(rr[i].size()) == m.cols, "ragged row list");
            for (int j = 0; j < m.cols; ++j) m(i, j) = rr[i][j];
        }
        return m;
    }

    Int& operator()(int i, int j) {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return a[static_cast<size_t>(i) * cols + j];
    }
    const Int& operator()(int i, int j) const {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return a[static_cast<size_t>(i) * cols + j];
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : a)
            if (sgn(x) != 0) return false;
        return true;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat zero(int r, int c) { return Mat(r, c); }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (sgn((*this)(i, j)) != 0) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(int j, const std::vector<Int>& v) {
        require(static_cast<int>(v.size()) == rows, "column length mismatch");
        for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < cols; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        }
        os << "]";
        return os.str();
    }
};

inline Mat mul(const Mat& x, const Mat& y) {
    require(x.cols == y.rows, "dimension mismatch in matrix product");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xi = x(i, k);
            if (sgn(xi) == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Int& yk = y(k, j);
                if (sgn(yk) != 0) z(i, j) += xi * yk;
            }
        }
    return z;
}

inline Mat add(const Mat& x, const Mat& y) {
    require(x.rows == y.rows && x.cols == y.cols, "dimension mismatch in matrix sum");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

inline Mat sub(const Mat& x, const Mat& y) {
    require(x.rows == y.rows && x.cols == y.cols, "dimension mismatch in matrix difference");
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

inline Mat scale(const Mat& x, const Int& c) {
    Mat z = x;
    for (Int& v : z.a) v *= c;
    return z;
}

inline std::vector<Int> mul_vec(const Mat& x, const std::vector<Int>& v) {
    require(x.cols == static_cast<int>(v.size()), "dimension mismatch in matrix-vector product");
    std::vector<Int> w(x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (sgn(x(i, j)) != 0 && sgn(v[j]) != 0) w[i] += x(i, j) * v[j];
    return w;
}

// Horizontal concatenation [ x | y ].
inline Mat hcat(const Mat& x, const Mat& y) {
    if (x.cols == 0 && x.rows == 0) return y;
    if (y.cols == 0 && y.rows == 0) return x;
    require(x.rows == y.rows, "row count mismatch in hcat");
    Mat z(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
        for (int j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
    }
    return z;
}

inline Mat vcat(const Mat& x, const Mat& y) {
    if (x.rows == 0 && x.cols == 0) return y;
    if (y.rows == 0 && y.cols == 0) return x;
    require(x.cols == y.cols, "column count mismatch in vcat");
    Mat z(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z(x.rows + i, j) = y(i, j);
    return z;
}

// Drop columns that are identically zero (canonical tidy-up for relation lists).
inline Mat drop_zero_cols(const Mat& x) {
    std::vector<int> keep;
    for (int j = 0; j < x.cols; ++j) {
        bool nz = false;
        for (int i = 0; i < x.rows && !nz; ++i) nz = sgn(x(i, j)) != 0;
        if (nz) keep.push_back(j);
    }
    Mat z(x.rows, static_cast<int>(keep.size()));
    for (int i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < keep.size(); ++j) z(i, static_cast<int>(j)) = x(i, keep[j]);
    return z;
}

// ---------------------------------------------------------------------------
// Smith normal form.  Deterministic: pivot is the smallest nonzero absolute
// value in the working submatrix, ties broken by lowest (row, col); the
// diagonal is normalized nonnegative and divisibility d1 | d2 | ... enforced.
// Returns U, D, V with U*m*V = D, plus the inverses of U and V.

struct SmithResult {
    Mat U, Uinv, D, V, Vinv;
    std::vector<Int> diagonal() const {
        int n = std::min(D.rows, D.cols);
        std::vector<Int> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[i] = D(i, i);
        return d;
    }
    int rank() const {
        int r = 0;
        for (int i = 0; i < std::min(D.rows, D.cols); ++i)
            if (sgn(D(i, i)) != 0) ++r;
        return r;
    }
};

namespace detail {

inline void row_swap(Mat& m, int i, int j) {
    for (int k = 0; k < m.cols; ++k) std::swap(m(i, k), m(j, k));
}
inline void col_swap(Mat& m, int i, int j) {
    for (int k = 0; k < m.rows; ++k) std::swap(m(k, i), m(k, j));
}
// row i += f * row j
inline void row_add(Mat& m, int i, int j, const Int& f) {
    if (sgn(f) == 0) return;
    for (int k = 0; k < m.cols; ++k)
        if (sgn(m(j, k)) != 0) m(i, k) += f * m(j, k);
}
inline void col_add(Mat& m, int i, int j, const Int& f) {
    if (sgn(f) == 0) return;
    for (int k = 0; k < m.rows; ++k)
        if (sgn(m(k, j)) != 0) m(k, i) += f * m(k, j);
}
inline void row_neg(Mat& m, int i) {
    for (int k = 0; k < m.cols; ++k) m(i, k) = -m(i, k);
}

}  // namespace detail

inline SmithResult smith(const Mat& input) {
    using namespace detail;
    const int r = input.rows, c = input.cols;
    SmithResult s;
    s.D = input;
    s.U = Mat::identity(r);
    s.Uinv = Mat::identity(r);
    s.V = Mat::identity(c);
    s.Vinv = Mat::identity(c);
    Mat& D = s.D;

    const int n = std::min(r, c);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // locate smallest nonzero |entry| in D[t.., t..]
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (sgn(D(i, j)) == 0) continue;
                    if (pi < 0 || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { pi = pj = t; }
            if (sgn(D(pi, pj)) == 0) break;  // submatrix exhausted

            if (pi != t) {
                row_swap(D, t, pi);
                row_swap(s.U, t, pi);
                col_swap(s.Uinv, t, pi);
            }
            if (pj != t) {
                col_swap(D, t, pj);
                col_swap(s.V, t, pj);
                row_swap(s.Vinv, t, pj);
            }

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (sgn(D(i, t)) == 0) continue;
                Int q = D(i, t) / D(t, t);
                row_add(D, i, t, -q);
                row_add(s.U, i, t, -q);
                col_add(s.Uinv, t, i, q);
                if (sgn(D(i, t)) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (sgn(D(t, j)) == 0) continue;
                Int q = D(t, j) / D(t, t);
                col_add(D, j, t, -q);
                col_add(s.V, j, t, -q);
                row_add(s.Vinv, t, j, q);
                if (sgn(D(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: D(t,t) must divide the rest of the submatrix
            int bi = -1;
            for (int i = t + 1; i < r && bi < 0; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (sgn(D(i, j) % D(t, t)) != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                row_add(D, t, bi, 1);
                row_add(s.U, t, bi, 1);
                col_add(s.Uinv, bi, t, -1);
                continue;
            }
            break;
        }
        if (sgn(D(t, t)) < 0) {
            row_neg(D, t);
            row_neg(s.U, t);
            for (int k = 0; k < r; ++k) s.Uinv(k, t) = -s.Uinv(k, t);
        }
        if (sgn(D(t, t)) == 0) break;  // remaining diagonal stays zero
    }
    return s;
}

// ---------------------------------------------------------------------------
// Column echelon form: A * V = E with V unimodular and E in column staircase
// form (each pivot column has zeros in all earlier rows, pivot entries
// positive).  Deterministic pivot choice as in smith().

struct Echelon {
    Mat E, V;
    std::vector<std::pair<int, int>> pivots;  // (row, col of E), in row order
};

inline Echelon col_echelon(const Mat& input) {
    using namespace detail;
    Echelon e;
    e.E = input;
    e.V = Mat::identity(input.cols);
    Mat& E = e.E;
    std::vector<int> active;
    for (int j = 0; j < input.cols; ++j) active.push_back(j);

    for (int row = 0; row < input.rows && !active.empty(); ++row) {
        for (;;) {
            int pivot = -1;
            for (int j : active) {
                if (sgn(E(row, j)) == 0) continue;
                if (pivot < 0 || mpz_cmpabs(E(row, j).get_mpz_t(), E(row, pivot).get_mpz_t()) < 0)
                    pivot = j;
            }
            if (pivot < 0) break;
            bool clean = true;
            for (int j : active) {
                if (j == pivot || sgn(E(row, j)) == 0) continue;
                Int q = E(row, j) / E(row, pivot);
                col_add(E, j, pivot, -q);
                col_add(e.V, j, pivot, -q);
                if (sgn(E(row, j)) != 0) clean = false;
            }
            if (clean) {
                if (sgn(E(row, pivot)) < 0) {
                    for (int k = 0; k < E.rows; ++k) E(k, pivot) = -E(k, pivot);
                    for (int k = 0; k < e.V.rows; ++k) e.V(k, pivot) = -e.V(k, pivot);
                }
                e.pivots.emplace_back(row, pivot);
                active.erase(std::find(active.begin(), active.end(), pivot));
                break;
            }
        }
    }
    return e;
}

// Basis of { x : A x = 0 }, returned as matrix columns.
inline Mat kernel_basis(const Mat& a) {
    Echelon e = col_echelon(a);
    std::vector<int> zero_cols;
    for (int j = 0; j < e.E.cols; ++j) {
        bool nz = false;
        for (int i = 0; i < e.E.rows && !nz; ++i) nz = sgn(e.E(i, j)) != 0;
        if (!nz) zero_cols.push_back(j);
    }
    Mat k(a.cols, static_cast<int>(zero_cols.size()));
    for (size_t j = 0; j < zero_cols.size(); ++j)
        for (int i = 0; i < a.cols; ++i) k(i, static_cast<int>(j)) = e.V(i, zero_cols[j]);
    return k;
}

// Solve A x = b against a precomputed echelon form; nullopt if no integer solution.
inline std::optional<std::vector<Int>> solve_echelon(const Echelon& e, const std::vector<Int>& b) {
    require(static_cast<int>(b.size()) == e.E.rows, "dimension mismatch in solve");
    std::vector<Int> residual = b;
    std::vector<Int> w(static_cast<size_t>(e.E.cols));
    for (auto [row, col] : e.pivots) {
        if (sgn(residual[row]) == 0) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[row].get_mpz_t(), e.E(row, col).get_mpz_t());
        if (sgn(rem) != 0) return std::nullopt;
        w[col] = q;
        for (int i = row; i < e.E.rows; ++i)
            if (sgn(e.E(i, col)) != 0) residual[i] -= q * e.E(i, col);
    }
    for (const Int& v : residual)
        if (sgn(v) != 0) return std::nullopt;
    std::vector<Int> x(static_cast<size_t>(e.V.rows));
    for (int j = 0; j < e.V.cols; ++j) {
        if (sgn(w[j]) == 0) continue;
        for (int i = 0; i < e.V.rows; ++i)
            if (sgn(e.V(i, j)) != 0) x[i] += e.V(i, j) * w[j];
    }
    return x;
}

inline std::optional<std::vector<Int>> solve_one(const Mat& a, const std::vector<Int>& b) {
    return solve_echelon(col_echelon(a), b);
}

// Solve A X = B columnwise; nullopt if any column has no integer solution.
inline std::optional<Mat> solve_many(const Mat& a, const Mat& b) {
    require(a.rows == b.rows, "dimension mismatch in solve");
    Echelon e = col_echelon(a);
    Mat x(a.cols, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        auto xj = solve_echelon(e, b.col(j));
        if (!xj) return std::nullopt;
        x.set_col(j, *xj);
    }
    return x;
}

// Independent basis of the column span of S (columns of the result).
inline Mat lattice_basis(const Mat& s) {
    Echelon e = col_echelon(s);
    Mat b(s.rows, static_cast<int>(e.pivots.size()));
    int j = 0;
    for (auto [row, col] : e.pivots) {
        (void)row;
        for (int i = 0; i < s.rows; ++i) b(i, j) = e.E(i, col);
        ++j;
    }
    return b;
}

// Exact determinant by fraction-free (Bareiss) elimination; used as an
// independent oracle on the unimodularity of SNF transforms.
inline Int det_bareiss(const Mat& input) {
    require(input.rows == input.cols, "determinant of non-square matrix");
    int n = input.rows;
    if (n == 0) return 1;
    Mat m = input;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m(k, k)) == 0) {
            int p = -1;
            for (int i = k + 1; i < n && p < 0; ++i)
                if (sgn(m(i, k)) != 0) p = i;
            if (p < 0) return 0;
            detail::row_swap(m, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num / prev;  // exact by Bareiss
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace descent
