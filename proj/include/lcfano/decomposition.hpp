// decomposition.hpp
// Splitting a minimal non-simplex polytope into lower-dimensional simplices
// that each keep 0 in their relative interior, the counting relations such a
// splitting satisfies, the multinomial volume bound per shape, the full
// shape sweep confirming the bound stays strictly below the target, and the
// sharpened two-simplex estimate.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "lcfano/barycentric.hpp"
#include "lcfano/errors.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/linalg.hpp"
#include "lcfano/rational.hpp"
#include "lcfano/sylvester.hpp"

namespace lcfano {

// A sub-simplex spanned by a subset of the parent's vertices, carried in a
// saturated basis of its own lattice so lc checks run intrinsically.
struct SubSimplex {
    std::vector<std::size_t> vertex_indices;  // into the parent's vertex list
    std::size_t dim = 0;                      // affine dimension (= indices - 1)
    IntMat basis;                             // rows: Z-basis of span cap Z^d
    std::vector<IntVec> coords;               // vertices in basis coordinates
    RatVec beta;                              // barycentric tuple of 0, index order
};

struct Decomposition {
    std::size_t d = 0;
    long q = 0;
    std::vector<IntVec> parent_vertices;
    std::vector<SubSimplex> simplices;
    std::vector<std::size_t> d_list;
    std::vector<std::size_t> r_list;
};

namespace detail {

// Unique affine combination of the selected vertices giving 0; accepts only
// affinely independent subsets with strictly positive coefficients.
inline std::optional<RatVec> relint_zero_coeffs(const std::vector<IntVec>& verts,
                                                const std::vector<std::size_t>& subset) {
    const std::size_t s = subset.size();
    const std::size_t d = verts[0].size();
    RatMat sys(d + 1, RatVec(s));
    RatVec rhs(d + 1, Rat(0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < d; ++j) sys[j][i] = Rat(verts[subset[i]][j]);
    for (std::size_t i = 0; i < s; ++i) sys[d][i] = 1;
    rhs[d] = 1;
    auto lam = solve_unique(std::move(sys), std::move(rhs));
    if (!lam) return std::nullopt;
    for (const auto& l : *lam)
        if (l <= 0) return std::nullopt;
    return lam;
}

// Builds and validates the intrinsic model of one sub-simplex: saturated
// lattice basis, integral vertex coordinates, 0 in the relative interior,
// primitive vertices, and the lc condition inside the sublattice.
inline SubSimplex build_sub_simplex(const std::vector<IntVec>& verts,
                                    const std::vector<std::size_t>& subset, long q,
                                    unsigned long cap) {
    SubSimplex sub;
    sub.vertex_indices = subset;
    sub.dim = subset.size() - 1;
    std::vector<IntVec> gens;
    for (const auto i : subset) gens.push_back(verts[i]);
    const std::size_t d = verts[0].size();

    const auto lam = relint_zero_coeffs(verts, subset);
    if (!lam)
        throw InvalidDecomposition(
            "sub-simplex is affinely dependent or lacks 0 in its relative interior");
    sub.beta = *lam;

    sub.basis = sublattice_basis(gens, d);
    if (sub.basis.size() != sub.dim)
        throw InvalidDecomposition("sub-simplex span has unexpected lattice rank");
    RatMat basis_t(d, RatVec(sub.dim));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < sub.dim; ++i) basis_t[r][i] = Rat(sub.basis[i][r]);
    for (const auto& g : gens) {
        auto coeff = solve_unique(basis_t, to_rat_vec(g));
        if (!coeff) throw InvalidDecomposition("sub-simplex vertex left its own span");
        IntVec c(sub.dim);
        for (std::size_t i = 0; i < sub.dim; ++i) {
            if (rat_den((*coeff)[i]) != 1)
                throw InvalidDecomposition("sub-simplex vertex is fractional in the sublattice");
            c[i] = rat_num((*coeff)[i]);
        }
        sub.coords.push_back(std::move(c));
    }
    for (const auto& c : sub.coords)
        if (!is_primitive(c))
            throw InvalidDecomposition("sub-simplex vertex is imprimitive in the sublattice");
    const RatMat pts = to_rat_mat(sub.coords);
    const HalfspaceRep rep = facets_of_points(pts, sub.dim);
    const auto inside = scan_lattice_points(pts, rep, make_rat(1, q), true, cap);
    if (inside.size() != 1 || !is_zero(inside[0]))
        throw InvalidDecomposition("sub-simplex is not lc in its sublattice");
    return sub;
}

}  // namespace detail

// The three counting relations a valid splitting satisfies, plus structural
// integrity: the stored d_list and r_list match the index sets, the
// simplices cover every vertex, t >= 2, and with t the number of pieces
//   sum d_i = d + sum r_i,   r_i < d_i <= d - t + 1,   #vertices = d + t.
inline bool check_decomp_relations(const Decomposition& dec) {
    const std::size_t t = dec.simplices.size();
    if (t < 2) return false;
    if (dec.d_list.size() != t || dec.r_list.size() != t) return false;
    std::vector<bool> seen(dec.parent_vertices.size(), false);
    std::size_t sum_d = 0, sum_r = 0;
    for (std::size_t i = 0; i < t; ++i) {
        const auto& sub = dec.simplices[i];
        if (sub.vertex_indices.empty()) return false;
        if (sub.dim != sub.vertex_indices.size() - 1) return false;
        if (dec.d_list[i] != sub.dim) return false;
        std::size_t overlap = 0;
        for (const auto vi : sub.vertex_indices) {
            if (vi >= dec.parent_vertices.size()) return false;
            if (seen[vi]) ++overlap;
        }
        if (dec.r_list[i] != overlap) return false;
        for (const auto vi : sub.vertex_indices) seen[vi] = true;
        if (!(dec.r_list[i] < dec.d_list[i])) return false;
        if (dec.d_list[i] > dec.d - t + 1) return false;
        sum_d += dec.d_list[i];
        sum_r += dec.r_list[i];
    }
    if (dec.r_list[0] != 0) return false;
    for (const auto s : seen)
        if (!s) return false;
    if (sum_d != dec.d + sum_r) return false;
    if (dec.parent_vertices.size() != dec.d + t) return false;
    return true;
}

// Splits a minimal non-simplex lc Fano polytope greedily: the first piece is
// the smallest vertex subset holding 0 in its relative interior, later
// pieces the smallest such subset through the least uncovered vertex (ties
// lexicographic in index tuples). Every piece is validated intrinsically and
// the counting relations are checked before returning.
inline Decomposition decompose_minimal(const LatticePolytope& p, long q,
                                       unsigned long cap = kDefaultEnumCap) {
    const std::size_t d = p.dim();
    const std::size_t n = p.vertices().size();
    if (n == d + 1) throw IsASimplex("decompose_minimal: input is a simplex");
    if (n > 2 * d)
        throw NotMinimal("decompose_minimal: more than 2d vertices, so not minimal");
    if (!is_fano(p) || !is_lc(p, q, cap))
        throw PreconditionFailed("decompose_minimal: input is not an lc Fano polytope for this q");
    if (!is_minimal(p, q, cap))
        throw NotMinimal("decompose_minimal: some vertex can be dropped");

    const auto& verts = p.vertices();
    Decomposition dec;
    dec.d = d;
    dec.q = q;
    dec.parent_vertices = verts;
    std::vector<bool> covered(n, false);
    std::size_t covered_count = 0;
    while (covered_count < n) {
        std::size_t anchor = n;  // none for the first piece
        if (covered_count > 0) {
            for (std::size_t i = 0; i < n; ++i)
                if (!covered[i]) {
                    anchor = i;
                    break;
                }
        }
        std::optional<std::vector<std::size_t>> chosen;
        for (std::size_t s = 2; s <= d + 1 && !chosen; ++s) {
            std::vector<std::size_t> idx(s);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            for (;;) {
                const bool has_anchor =
                    anchor == n || std::find(idx.begin(), idx.end(), anchor) != idx.end();
                if (has_anchor && detail::relint_zero_coeffs(verts, idx)) {
                    chosen = idx;
                    break;
                }
                std::size_t k = s;
                while (k > 0 && idx[k - 1] == n - s + (k - 1)) --k;
                if (k == 0) break;
                ++idx[k - 1];
                for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        if (!chosen)
            throw SearchExhausted(
                "decompose_minimal: no vertex subset holds 0 in its relative interior");
        std::size_t overlap = 0;
        for (const auto i : *chosen)
            if (covered[i]) ++overlap;
        dec.simplices.push_back(detail::build_sub_simplex(verts, *chosen, q, cap));
        dec.d_list.push_back(chosen->size() - 1);
        dec.r_list.push_back(overlap);
        for (const auto i : *chosen)
            if (!covered[i]) {
                covered[i] = true;
                ++covered_count;
            }
    }
    if (!check_decomp_relations(dec))
        throw SearchExhausted("decompose_minimal: construction violates the counting relations");
    return dec;
}

// D! / prod(d_i!) * prod(factor(d_i)) with factor(k) = 2 u_k^2 / q^(k+1)
// except factor(2) = 9 when q = 1; the per-dimension optimum feeding the
// product bound over a decomposition shape.
inline Rat multinomial_bound(const std::vector<std::size_t>& d_list, long q) {
    if (d_list.empty()) throw PreconditionFailed("multinomial_bound: empty dimension list");
    if (q < 1) throw PreconditionFailed("multinomial_bound: q must be >= 1");
    std::size_t total = 0;
    Rat product = 1;
    Int denom = 1;
    for (const auto di : d_list) {
        if (di < 1) throw PreconditionFailed("multinomial_bound: dimensions must be >= 1");
        total += di;
        if (di == 2 && q == 1) {
            product *= 9;
        } else {
            const Int ui = u(di, q);
            product *= make_rat(2 * ui * ui, int_pow(Int(q), static_cast<unsigned long>(di + 1)));
        }
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(di));
        denom *= f;
    }
    Int num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(total));
    return make_rat(num, denom) * product;
}

struct ShapeRecord {
    std::size_t d = 0;
    long q = 0;
    std::size_t t = 0;
    std::vector<std::size_t> d_list;
    Rat bound_value;  // multinomial bound for the shape
    Rat target;       // 2 u_d^2 / q^(d+1)
    bool strict = false;  // bound_value < target
};

namespace detail {

// Weakly decreasing lists with t parts in [1, d - t + 1] that admit overlap
// numbers r_i (r_1 = 0, 0 <= r_i < d_i) with sum d_i = d + sum r_i. With
// s = sum d_i - d, feasibility is 0 <= s <= sum(d_i - 1) - (min d_i - 1).
inline void enumerate_shapes(std::size_t d, long q, std::vector<ShapeRecord>& out) {
    for (std::size_t t = 2; t <= d; ++t) {
        const std::size_t part_max = d - t + 1;
        std::vector<std::size_t> parts(t);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t prev_max) -> void {
            if (pos == t) {
                std::size_t sum = 0, slack = 0, mn = parts[0];
                for (const auto pi : parts) {
                    sum += pi;
                    slack += pi - 1;
                    mn = std::min(mn, pi);
                }
                if (sum < d) return;
                const std::size_t s = sum - d;
                if (s > slack - (mn - 1)) return;
                if (t == 2 && parts[0] == d - 1 && parts[1] == d - 1) return;
                ShapeRecord r;
                r.d = d;
                r.q = q;
                r.t = t;
                r.d_list = parts;
                r.bound_value = multinomial_bound(parts, q);
                r.target = volume_bound(d, q);
                r.strict = r.bound_value < r.target;
                out.push_back(std::move(r));
                return;
            }
            for (std::size_t v = prev_max; v >= 1; --v) {
                parts[pos] = v;
                self(self, pos + 1, v);
            }
        };
        rec(rec, 0, part_max);
    }
}

// Largest admissible shape per (d, q, t); by monotonicity of the bound in
// every part, these decide the all-strict verdict on their own.
inline void enumerate_max_shapes(std::size_t d, long q, std::vector<ShapeRecord>& out) {
    for (std::size_t t = 2; t <= d; ++t) {
        std::vector<std::size_t> parts(t, d - t + 1);
        if (t == 2) {
            if (d < 3) continue;
            parts = {d - 1, d - 2};
        }
        ShapeRecord r;
        r.d = d;
        r.q = q;
        r.t = t;
        r.d_list = parts;
        r.bound_value = multinomial_bound(parts, q);
        r.target = volume_bound(d, q);
        r.strict = r.bound_value < r.target;
        out.push_back(std::move(r));
    }
}

}  // namespace detail

// Every admissible decomposition shape for 3 <= d <= d_max, 2 <= q <= q_max,
// with its multinomial bound and the strictness verdict against the volume
// bound. The full enumeration's verdict is cross-checked against the
// maximal-shape shortcut; disagreement would mean a monotonicity bug.
inline std::vector<ShapeRecord> section5_sweep(std::size_t d_max, long q_max, unsigned jobs = 1) {
    if (d_max < 3) throw PreconditionFailed("section5_sweep: d_max must be >= 3");
    if (q_max < 2) throw PreconditionFailed("section5_sweep: q_max must be >= 2");
    std::vector<std::pair<std::size_t, long>> cells;
    for (std::size_t d = 3; d <= d_max; ++d)
        for (long q = 2; q <= q_max; ++q) cells.emplace_back(d, q);
    std::vector<std::vector<ShapeRecord>> full(cells.size()), maxonly(cells.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            detail::enumerate_shapes(cells[i].first, cells[i].second, full[i]);
            detail::enumerate_max_shapes(cells[i].first, cells[i].second, maxonly[i]);
        }
    };
    const unsigned shards = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
    if (shards == 1) {
        work(0, cells.size());
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < shards; ++s)
            pool.emplace_back(work, cells.size() * s / shards, cells.size() * (s + 1) / shards);
        for (auto& t : pool) t.join();
    }
    std::vector<ShapeRecord> out;
    bool full_all_strict = true, max_all_strict = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (const auto& r : full[i]) full_all_strict = full_all_strict && r.strict;
        for (const auto& r : maxonly[i]) max_all_strict = max_all_strict && r.strict;
        out.insert(out.end(), full[i].begin(), full[i].end());
    }
    if (full_all_strict != max_all_strict)
        throw Error("section5_sweep: full enumeration and maximal-shape shortcut disagree");
    return out;
}

struct TwoSimplexCheck {
    Rat dual_vol;       // Vol(P^*), exact
    Rat rhs;            // 1/prod(beta of piece 1) + 1/prod(beta of piece 2)
    bool holds = false; // dual_vol <= rhs
    Rat bound_target;   // 9 at (d, q) = (2, 1), else 2 u_d^2 / q^(d+1)
    bool below_target = false;  // dual_vol < bound_target
};

// Sharpened estimate for a splitting into exactly two pieces: the dual
// volume is at most the sum of the two reciprocal barycentric products.
// Both index sets are validated as genuine pieces before anything is
// computed.
inline TwoSimplexCheck two_simplex_bound_check(const LatticePolytope& p,
                                               const std::vector<std::size_t>& first,
                                               const std::vector<std::size_t>& second, long q,
                                               unsigned long cap = kDefaultEnumCap) {
    const std::size_t d = p.dim();
    const std::size_t n = p.vertices().size();
    for (const auto i : first)
        if (i >= n) throw InvalidDecomposition("two_simplex_bound_check: index out of range");
    for (const auto i : second)
        if (i >= n) throw InvalidDecomposition("two_simplex_bound_check: index out of range");
    if (!is_fano(p) || !is_lc(p, q, cap))
        throw PreconditionFailed(
            "two_simplex_bound_check: input is not an lc Fano polytope for this q");

    Decomposition dec;
    dec.d = d;
    dec.q = q;
    dec.parent_vertices = p.vertices();
    dec.simplices.push_back(detail::build_sub_simplex(p.vertices(), first, q, cap));
    dec.simplices.push_back(detail::build_sub_simplex(p.vertices(), second, q, cap));
    dec.d_list = {first.size() - 1, second.size() - 1};
    std::vector<bool> seen(n, false);
    for (const auto i : first) seen[i] = true;
    std::size_t overlap = 0;
    for (const auto i : second)
        if (seen[i]) ++overlap;
    dec.r_list = {0, overlap};
    if (!check_decomp_relations(dec))
        throw InvalidDecomposition("two_simplex_bound_check: not a valid two-piece splitting");

    TwoSimplexCheck out;
    out.dual_vol = normalized_volume(dual_vertices(p.facets()), d);
    out.rhs = 0;
    for (const auto& sub : dec.simplices) {
        Rat prod = 1;
        for (const auto& b : sub.beta) prod *= b;
        out.rhs += 1 / prod;
    }
    out.holds = out.dual_vol <= out.rhs;
    out.bound_target = (d == 2 && q == 1) ? Rat(9) : volume_bound(d, q);
    out.below_target = out.dual_vol < out.bound_target;
    return out;
}

}  // namespace lcfano
