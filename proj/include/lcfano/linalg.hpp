// linalg.hpp
// Dense exact linear algebra: Gaussian elimination over the rationals
// (determinant, rank, solve, nullspace) and unimodular column reduction over
// the integers (integer kernel, saturated sublattice bases). Sizes here are
// tiny (d <= 10ish), so O(n^3) with big scalars is the right tool.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "lcfano/errors.hpp"
#include "lcfano/rational.hpp"

namespace lcfano {

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionFailed("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionFailed("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw PreconditionFailed("vec_sub: size mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw PreconditionFailed("vec_sub: size mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Determinant of a square rational matrix by fraction-free-enough Gaussian
// elimination (mpq keeps everything exact; pivots are the first nonzero in
// each column for determinism).
inline Rat determinant(RatMat a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw PreconditionFailed("determinant: not square");
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

inline Int determinant(const IntMat& a) {
    Rat d = determinant(to_rat_mat(a));
    if (rat_den(d) != 1) throw Error("integer determinant came out fractional");
    return rat_num(d);
}

inline std::size_t rank(RatMat a) {
    if (a.empty()) return 0;
    const std::size_t m = a.size(), n = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Solves a x = b for square a; nullopt when a is singular.
inline std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw PreconditionFailed("solve_square: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw PreconditionFailed("solve_square: not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Unique solution of a (possibly overdetermined) consistent system a x = b;
// nullopt when the system is inconsistent or underdetermined.
inline std::optional<RatVec> solve_unique(RatMat a, RatVec b) {
    if (a.empty()) throw PreconditionFailed("solve_unique: empty system");
    const std::size_t m = a.size(), n = a[0].size();
    if (b.size() != m) throw PreconditionFailed("solve_unique: size mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (pivot_col.size() < n) return std::nullopt;
    for (std::size_t i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(n);
    for (std::size_t k = 0; k < n; ++k) x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
    return x;
}

// Basis of {x : a x = 0} via reduced row echelon form; one vector per free
// column, in ascending free-column order.
inline std::vector<RatVec> nullspace(RatMat a) {
    if (a.empty()) return {};
    const std::size_t m = a.size(), n = a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[r]);
        Rat p = a[r][col];
        for (std::size_t j = 0; j < n; ++j) a[r][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(n, Rat(0));
        x[f] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -a[k][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Scales a nonzero rational direction to the coprime integer vector whose
// first nonzero entry is positive.
inline IntVec primitive_vector(const RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v) lcm = int_lcm(lcm, rat_den(x));
    IntVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(lcm);
        w[i] = rat_num(s);
        g = int_gcd(g, w[i]);
    }
    if (g == 0) throw PreconditionFailed("primitive_vector: zero vector");
    int sign = 0;
    for (const auto& x : w) {
        if (x != 0) {
            sign = (x > 0) ? 1 : -1;
            break;
        }
    }
    if (sign < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

inline bool is_primitive(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = int_gcd(g, x);
    return g == 1;
}

// Z-basis of {x in Z^n : a x = 0} by unimodular column reduction. The basis
// spans the kernel saturatedly: any integer kernel element is an integer
// combination of the returned vectors.
inline IntMat integer_kernel(const IntMat& a) {
    if (a.empty()) throw PreconditionFailed("integer_kernel: empty matrix");
    const std::size_t m = a.size(), n = a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw PreconditionFailed("integer_kernel: ragged matrix");
    // Column-major working copies of a and of the accumulated unimodular u.
    std::vector<IntVec> acol(n, IntVec(m)), ucol(n, IntVec(n, Int(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) acol[j][i] = a[i][j];
        ucol[j][j] = 1;
    }
    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        for (;;) {
            std::vector<std::size_t> nz;
            for (std::size_t j = c; j < n; ++j)
                if (acol[j][r] != 0) nz.push_back(j);
            if (nz.empty()) break;
            if (nz.size() == 1) {
                std::swap(acol[nz[0]], acol[c]);
                std::swap(ucol[nz[0]], ucol[c]);
                ++c;
                break;
            }
            std::size_t best = nz[0];
            for (auto j : nz)
                if (cmp(abs(acol[j][r]), abs(acol[best][r])) < 0) best = j;
            for (auto j : nz) {
                if (j == best) continue;
                Int t = acol[j][r] / acol[best][r];  // truncated division
                if (t == 0) continue;
                for (std::size_t i = 0; i < m; ++i) acol[j][i] -= t * acol[best][i];
                for (std::size_t i = 0; i < n; ++i) ucol[j][i] -= t * ucol[best][i];
            }
        }
    }
    IntMat kernel;
    for (std::size_t j = c; j < n; ++j) kernel.push_back(ucol[j]);
    return kernel;
}

// Basis of span(gens) intersected with Z^d, saturated. Computed as the
// integer kernel of an
// integer matrix whose rows span the orthogonal complement of span(gens);
// full-dimensional spans get the standard basis.
inline IntMat sublattice_basis(const std::vector<IntVec>& gens, std::size_t d) {
    if (gens.empty()) throw PreconditionFailed("sublattice_basis: no generators");
    RatMat g;
    for (const auto& v : gens) {
        if (v.size() != d) throw PreconditionFailed("sublattice_basis: bad generator size");
        g.push_back(to_rat_vec(v));
    }
    std::vector<RatVec> comp = nullspace(std::move(g));
    if (comp.empty()) {
        IntMat basis(d, IntVec(d, Int(0)));
        for (std::size_t i = 0; i < d; ++i) basis[i][i] = 1;
        return basis;
    }
    IntMat comp_int;
    for (const auto& w : comp) comp_int.push_back(primitive_vector(w));
    return integer_kernel(comp_int);
}

inline IntMat int_identity(std::size_t n) {
    IntMat id(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) throw PreconditionFailed("mat_mul: empty factor");
    const std::size_t m = a.size(), k = b.size(), n = b[0].size();
    for (const auto& row : a)
        if (row.size() != k) throw PreconditionFailed("mat_mul: shape mismatch");
    IntMat c(m, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline IntVec mat_vec(const IntMat& a, const IntVec& x) {
    IntVec y(a.size(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

inline RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec y(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

// Rank of {p_i - p_0}; the dimension of the affine hull of the points.
inline std::size_t affine_rank(const RatMat& points) {
    if (points.empty()) throw PreconditionFailed("affine_rank: no points");
    RatMat diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(vec_sub(points[i], points[0]));
    if (diffs.empty()) return 0;
    return rank(std::move(diffs));
}

}  // namespace lcfano
