// geometry.hpp
// Exact polytope geometry on small instances: facet enumeration by d-subset
// scan, gauge and dual computations, fan triangulation for normalized volume,
// and capped box scans for lattice points. Everything is rational arithmetic;
// no floating point enters any predicate.
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "lcfano/errors.hpp"
#include "lcfano/linalg.hpp"
#include "lcfano/rational.hpp"

namespace lcfano {

inline constexpr std::size_t kDefaultVertexCap = 64;
inline constexpr unsigned long kDefaultEnumCap = 100000000UL;

// Outer description <normal, x> <= offset. When the origin is strictly
// interior every offset is positive and the description is rescaled to
// offset == 1, so the normals are exactly the vertices of the dual.
struct Halfspace {
    RatVec normal;
    Rat offset;
};

struct HalfspaceRep {
    std::size_t dim = 0;
    bool origin_interior = false;
    std::vector<Halfspace> facets;
};

namespace detail {

// Positive rescaling to a coprime integer vector; the inequality direction
// is preserved, so no sign normalization happens here.
inline void primitivize_halfspace(RatVec& normal, Rat& offset) {
    Int lcm = 1;
    for (const auto& x : normal) lcm = int_lcm(lcm, rat_den(x));
    Int g = 0;
    IntVec w(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) {
        w[i] = rat_num(normal[i] * Rat(lcm));
        g = int_gcd(g, w[i]);
    }
    if (g == 0) throw Error("primitivize_halfspace: zero normal");
    for (std::size_t i = 0; i < normal.size(); ++i) normal[i] = make_rat(w[i], g);
    offset = offset * make_rat(lcm, g);
}

inline bool ratvec_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::size_t lex_min_index(const RatMat& pts) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (ratvec_less(pts[i], pts[best])) best = i;
    return best;
}

}  // namespace detail

// Facets of conv(points) in R^d by scanning all d-subsets for supporting
// hyperplanes. Points need not all be vertices; the hull must be
// d-dimensional. Deterministic: facets are deduplicated and sorted
// lexicographically by (normal, offset).
inline HalfspaceRep facets_of_points(const RatMat& points, std::size_t d,
                                     std::size_t vertex_cap = kDefaultVertexCap) {
    if (d < 1) throw PreconditionFailed("facets_of_points: dimension must be >= 1");
    if (points.size() > vertex_cap)
        throw TooManyVertices("facets_of_points: " + std::to_string(points.size()) +
                              " points exceed cap " + std::to_string(vertex_cap));
    for (const auto& p : points)
        if (p.size() != d) throw PreconditionFailed("facets_of_points: point size mismatch");
    if (points.size() < d + 1 || affine_rank(points) != d)
        throw DegenerateInput("facets_of_points: points do not span dimension " +
                              std::to_string(d));

    std::vector<Halfspace> found;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    const std::size_t n = points.size();
    for (;;) {
        RatMat diffs;
        for (std::size_t i = 1; i < d; ++i)
            diffs.push_back(vec_sub(points[idx[i]], points[idx[0]]));
        std::vector<RatVec> normals;
        if (d == 1) {
            normals.push_back(RatVec{Rat(1)});
        } else {
            normals = nullspace(std::move(diffs));
        }
        if (normals.size() == 1) {
            RatVec normal = normals[0];
            Rat offset = dot(normal, points[idx[0]]);
            bool above = false, below = false;
            for (const auto& p : points) {
                const int c = cmp(dot(normal, p), offset);
                if (c > 0) above = true;
                if (c < 0) below = true;
                if (above && below) break;
            }
            if (!(above && below)) {
                if (above) {
                    for (auto& x : normal) x = -x;
                    offset = -offset;
                }
                detail::primitivize_halfspace(normal, offset);
                found.push_back({std::move(normal), std::move(offset)});
            }
        }
        // Next d-combination of {0..n-1}.
        std::size_t k = d;
        while (k > 0 && idx[k - 1] == n - d + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }

    auto less = [](const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return detail::ratvec_less(a.normal, b.normal);
        return a.offset < b.offset;
    };
    auto eq = [](const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    };
    std::sort(found.begin(), found.end(), less);
    found.erase(std::unique(found.begin(), found.end(), eq), found.end());

    HalfspaceRep rep;
    rep.dim = d;
    rep.origin_interior = true;
    for (const auto& f : found)
        if (f.offset <= 0) rep.origin_interior = false;
    if (rep.origin_interior) {
        for (auto& f : found) {
            const Rat b = f.offset;
            for (auto& x : f.normal) x /= b;
            f.offset = 1;
        }
        std::sort(found.begin(), found.end(), less);
    }
    rep.facets = std::move(found);
    return rep;
}

namespace detail {

// Indices of points lying on the facet hyperplane.
inline std::vector<std::size_t> points_on_facet(const RatMat& points, const Halfspace& f) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (dot(f.normal, points[i]) == f.offset) on.push_back(i);
    return on;
}

// True when the active facet normals at points[i] span R^d, i.e. the point
// is a vertex of the hull.
inline bool is_hull_vertex(const RatMat& points, std::size_t i, const HalfspaceRep& rep) {
    RatMat active;
    for (const auto& f : rep.facets)
        if (dot(f.normal, points[i]) == f.offset) active.push_back(f.normal);
    if (active.size() < rep.dim) return false;
    return rank(std::move(active)) == rep.dim;
}

}  // namespace detail

// Gauge function of a polytope with 0 strictly interior: the smallest t >= 0
// with z in t * P, equal to max over facets of <normal, z> / offset.
inline Rat gauge(const HalfspaceRep& rep, const RatVec& z) {
    if (rep.facets.empty()) throw PreconditionFailed("gauge: empty facet list");
    for (const auto& f : rep.facets)
        if (f.offset <= 0) throw OriginNotInterior("gauge: origin is not strictly interior");
    Rat best = 0;
    for (const auto& f : rep.facets) {
        Rat v = dot(f.normal, z) / f.offset;
        if (v > best) best = v;
    }
    return best;
}

// Dual polytope vertices (one per facet) for a polytope with 0 interior.
inline RatMat dual_vertices(const HalfspaceRep& rep) {
    RatMat out;
    for (const auto& f : rep.facets) {
        if (f.offset <= 0) throw OriginNotInterior("dual_vertices: origin is not strictly interior");
        RatVec v(f.normal.size());
        for (std::size_t i = 0; i < f.normal.size(); ++i) v[i] = f.normal[i] / f.offset;
        out.push_back(std::move(v));
    }
    return out;
}

namespace detail {

// Triangulates a full-dimensional polytope in R^k into k-simplices by coning
// the lex-least vertex (or a caller-chosen one) over the triangulated facets
// not containing it. Returns index tuples into `points`.
inline std::vector<std::vector<std::size_t>> triangulate_rec(const RatMat& points, std::size_t k,
                                                             std::size_t apex_choice) {
    const std::size_t n = points.size();
    if (k == 0) {
        if (n != 1) throw Error("triangulate: zero-dimensional polytope with several points");
        return {{0}};
    }
    if (n == k + 1) {
        RatMat diffs;
        for (std::size_t i = 1; i <= k; ++i) diffs.push_back(vec_sub(points[i], points[0]));
        if (determinant(std::move(diffs)) == 0)
            throw Error("triangulate: degenerate base simplex");
        std::vector<std::size_t> all(k + 1);
        for (std::size_t i = 0; i <= k; ++i) all[i] = i;
        return {all};
    }
    const HalfspaceRep rep = facets_of_points(points, k);
    const std::size_t apex = (apex_choice < n) ? apex_choice : lex_min_index(points);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : rep.facets) {
        if (dot(f.normal, points[apex]) == f.offset) continue;
        const std::vector<std::size_t> on = points_on_facet(points, f);
        // Chart for the facet's affine hull: base point, then greedily
        // accepted difference vectors as a basis; coordinates come from the
        // square system on the basis pivot columns.
        std::size_t base_local = 0;
        for (std::size_t i = 1; i < on.size(); ++i)
            if (ratvec_less(points[on[i]], points[on[base_local]])) base_local = i;
        const RatVec& base = points[on[base_local]];
        RatMat basis;
        RatMat reduced;
        for (std::size_t i = 0; i < on.size() && basis.size() < k - 1; ++i) {
            if (i == base_local) continue;
            RatVec diff = vec_sub(points[on[i]], base);
            RatVec rem = diff;
            for (const auto& row : reduced) {
                std::size_t lead = 0;
                while (lead < row.size() && row[lead] == 0) ++lead;
                if (lead < row.size() && rem[lead] != 0) {
                    Rat fct = rem[lead] / row[lead];
                    for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= fct * row[j];
                }
            }
            if (!is_zero(rem)) {
                basis.push_back(std::move(diff));
                reduced.push_back(std::move(rem));
            }
        }
        if (basis.size() != k - 1) throw Error("triangulate: facet chart basis incomplete");
        std::vector<std::size_t> pivot_cols;
        for (const auto& row : reduced) {
            std::size_t lead = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            pivot_cols.push_back(lead);
        }
        RatMat sys(k - 1, RatVec(k - 1));
        for (std::size_t r = 0; r < k - 1; ++r)
            for (std::size_t i = 0; i < k - 1; ++i) sys[r][i] = basis[i][pivot_cols[r]];
        RatMat chart;
        for (const auto li : on) {
            RatVec rhs(k - 1);
            const RatVec diff = vec_sub(points[li], base);
            for (std::size_t r = 0; r < k - 1; ++r) rhs[r] = diff[pivot_cols[r]];
            auto coords = solve_square(sys, std::move(rhs));
            if (!coords) throw Error("triangulate: facet chart solve failed");
            chart.push_back(std::move(*coords));
        }
        const auto sub = triangulate_rec(chart, k - 1, std::numeric_limits<std::size_t>::max());
        for (const auto& s : sub) {
            std::vector<std::size_t> simplex;
            simplex.push_back(apex);
            for (const auto j : s) simplex.push_back(on[j]);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

}  // namespace detail

// Fan triangulation of conv(points) into d-simplices, as index tuples. The
// apex defaults to the lexicographically least point; any other choice gives
// a different triangulation of the same total volume.
inline std::vector<std::vector<std::size_t>> triangulate(
    const RatMat& points, std::size_t d,
    std::size_t apex_choice = std::numeric_limits<std::size_t>::max()) {
    return detail::triangulate_rec(points, d, apex_choice);
}

// Normalized volume d! * vol_d(conv(points)), exact.
inline Rat normalized_volume(const RatMat& points, std::size_t d,
                             std::size_t apex_choice = std::numeric_limits<std::size_t>::max()) {
    const auto simplices = triangulate(points, d, apex_choice);
    Rat total = 0;
    for (const auto& s : simplices) {
        RatMat diffs;
        for (std::size_t i = 1; i <= d; ++i)
            diffs.push_back(vec_sub(points[s[i]], points[s[0]]));
        total += abs(determinant(std::move(diffs)));
    }
    return total;
}

// Lattice polytope given by its vertices. The constructor deduplicates,
// sorts lexicographically, verifies full dimension, and rejects any stored
// point that is not a vertex of the hull.
class LatticePolytope {
  public:
    LatticePolytope(std::size_t dim, std::vector<IntVec> vertices,
                    std::size_t vertex_cap = kDefaultVertexCap)
        : dim_(dim), verts_(std::move(vertices)) {
        if (dim_ < 1) throw PreconditionFailed("LatticePolytope: dimension must be >= 1");
        for (const auto& v : verts_)
            if (v.size() != dim_)
                throw PreconditionFailed("LatticePolytope: vertex size mismatch");
        std::sort(verts_.begin(), verts_.end());
        verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
        if (verts_.size() < dim_ + 1)
            throw DegenerateInput("LatticePolytope: too few distinct vertices");
        rep_ = facets_of_points(to_rat_mat(verts_), dim_, vertex_cap);
        const RatMat pts = to_rat_mat(verts_);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (!detail::is_hull_vertex(pts, i, rep_))
                throw DegenerateInput("LatticePolytope: point is not a vertex of the hull: " +
                                      to_string(verts_[i]));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return verts_; }
    const HalfspaceRep& facets() const { return rep_; }
    RatMat rational_vertices() const { return to_rat_mat(verts_); }

  private:
    std::size_t dim_;
    std::vector<IntVec> verts_;
    HalfspaceRep rep_;
};

// Simplex with rational vertices in fixed (input) order; the order carries
// the facet/dual-vertex correspondence.
struct RationalSimplex {
    std::size_t dim = 0;
    RatMat vertices;

    RationalSimplex(std::size_t d, RatMat verts) : dim(d), vertices(std::move(verts)) {
        if (dim < 1) throw PreconditionFailed("RationalSimplex: dimension must be >= 1");
        if (vertices.size() != dim + 1)
            throw PreconditionFailed("RationalSimplex: need exactly dim + 1 vertices");
        for (const auto& v : vertices)
            if (v.size() != dim) throw PreconditionFailed("RationalSimplex: vertex size mismatch");
        RatMat diffs;
        for (std::size_t i = 1; i <= dim; ++i)
            diffs.push_back(vec_sub(vertices[i], vertices[0]));
        if (determinant(std::move(diffs)) == 0)
            throw DegenerateSimplex("RationalSimplex: vertices are affinely dependent");
    }
};

inline Rat normalized_volume(const RationalSimplex& s) {
    RatMat diffs;
    for (std::size_t i = 1; i <= s.dim; ++i)
        diffs.push_back(vec_sub(s.vertices[i], s.vertices[0]));
    return abs(determinant(std::move(diffs)));
}

inline Rat normalized_volume(const LatticePolytope& p) {
    return normalized_volume(p.rational_vertices(), p.dim());
}

// Barycentric coordinates of x in the simplex: the unique lambda with
// sum lambda_i = 1 and sum lambda_i v_i = x. Entries can be <= 0 when x is
// outside; callers interpret.
inline RatVec barycentric_raw(const RatMat& simplex_vertices, const RatVec& x) {
    const std::size_t d = x.size();
    if (simplex_vertices.size() != d + 1)
        throw PreconditionFailed("barycentric_raw: need d + 1 vertices");
    RatMat sys(d + 1, RatVec(d + 1));
    RatVec rhs(d + 1);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i <= d; ++i) sys[r][i] = simplex_vertices[i][r];
        rhs[r] = x[r];
    }
    for (std::size_t i = 0; i <= d; ++i) sys[d][i] = 1;
    rhs[d] = 1;
    auto sol = solve_square(std::move(sys), std::move(rhs));
    if (!sol) throw DegenerateSimplex("barycentric_raw: vertices are affinely dependent");
    return *sol;
}

// Dual simplex: vertex j of the dual pairs to -1 with every v_i, i != j.
// Requires 0 strictly interior.
inline RationalSimplex dual_simplex(const RationalSimplex& s) {
    const std::size_t d = s.dim;
    const RatVec zero(d, Rat(0));
    const RatVec lambda = barycentric_raw(s.vertices, zero);
    for (const auto& l : lambda)
        if (l <= 0) throw OriginNotInterior("dual_simplex: origin is not strictly interior");
    RatMat dual;
    for (std::size_t j = 0; j <= d; ++j) {
        RatMat sys;
        RatVec rhs(d, Rat(-1));
        for (std::size_t i = 0; i <= d; ++i)
            if (i != j) sys.push_back(s.vertices[i]);
        auto y = solve_square(std::move(sys), std::move(rhs));
        if (!y) throw DegenerateSimplex("dual_simplex: facet system is singular");
        dual.push_back(std::move(*y));
    }
    return RationalSimplex(d, std::move(dual));
}

inline RationalSimplex dual_simplex(const LatticePolytope& p) {
    if (p.vertices().size() != p.dim() + 1)
        throw PreconditionFailed("dual_simplex: polytope is not a simplex");
    return dual_simplex(RationalSimplex(p.dim(), p.rational_vertices()));
}

namespace detail {

struct BoxScan {
    std::vector<Int> lo, hi;
    std::vector<RatVec> normals;
    std::vector<Rat> rhs;
    // suffix_min[i][t] = min possible contribution of coordinates t.. to
    // facet i within the box; used to prune the scan.
    std::vector<std::vector<Rat>> suffix_min;
    bool strict = false;
    std::vector<IntVec> out;

    void run(std::size_t t, IntVec& z, std::vector<Rat>& partial) {
        const std::size_t d = lo.size();
        if (t == d) {
            for (std::size_t i = 0; i < normals.size(); ++i) {
                const int c = cmp(partial[i], rhs[i]);
                if (strict ? (c >= 0) : (c > 0)) return;
            }
            out.push_back(z);
            return;
        }
        for (Int v = lo[t]; v <= hi[t]; ++v) {
            z[t] = v;
            bool pruned = false;
            std::vector<Rat> next(partial);
            for (std::size_t i = 0; i < normals.size(); ++i) {
                next[i] += normals[i][t] * Rat(v);
                const int c = cmp(next[i] + suffix_min[i][t + 1], rhs[i]);
                if (strict ? (c >= 0) : (c > 0)) {
                    pruned = true;
                    break;
                }
            }
            if (!pruned) run(t + 1, z, next);
        }
    }
};

inline std::vector<IntVec> scan_lattice_points(const RatMat& points, const HalfspaceRep& rep,
                                               const Rat& scale, bool strict, unsigned long cap) {
    if (scale <= 0) throw PreconditionFailed("lattice scan: scale must be positive");
    const std::size_t d = rep.dim;
    BoxScan scan;
    scan.strict = strict;
    scan.lo.resize(d);
    scan.hi.resize(d);
    Int box_size = 1;
    for (std::size_t j = 0; j < d; ++j) {
        Rat mn = points[0][j], mx = points[0][j];
        for (const auto& p : points) {
            if (p[j] < mn) mn = p[j];
            if (p[j] > mx) mx = p[j];
        }
        scan.lo[j] = rat_ceil(mn * scale);
        scan.hi[j] = rat_floor(mx * scale);
        Int width = scan.hi[j] - scan.lo[j] + 1;
        if (width < 0) width = 0;
        box_size *= width;
    }
    if (box_size > static_cast<long>(cap))
        throw EnumerationTooLarge("lattice scan: box of " + to_string(box_size) +
                                  " points exceeds cap " + std::to_string(cap));
    for (const auto& f : rep.facets) {
        scan.normals.push_back(f.normal);
        scan.rhs.push_back(f.offset * scale);
    }
    scan.suffix_min.assign(scan.normals.size(), std::vector<Rat>(d + 1, Rat(0)));
    for (std::size_t i = 0; i < scan.normals.size(); ++i)
        for (std::size_t t = d; t-- > 0;) {
            const Rat a = scan.normals[i][t] * Rat(scan.lo[t]);
            const Rat b = scan.normals[i][t] * Rat(scan.hi[t]);
            scan.suffix_min[i][t] = scan.suffix_min[i][t + 1] + std::min(a, b);
        }
    if (box_size > 0) {
        IntVec z(d, Int(0));
        std::vector<Rat> partial(scan.normals.size(), Rat(0));
        scan.run(0, z, partial);
    }
    return scan.out;  // lex order by construction
}

}  // namespace detail

// Lattice points strictly inside scale * P, in lexicographic order.
inline std::vector<IntVec> interior_lattice_points(const LatticePolytope& p, const Rat& scale,
                                                   unsigned long cap = kDefaultEnumCap) {
    return detail::scan_lattice_points(p.rational_vertices(), p.facets(), scale, true, cap);
}

inline std::vector<IntVec> interior_lattice_points(const RationalSimplex& s, const Rat& scale,
                                                   unsigned long cap = kDefaultEnumCap) {
    const HalfspaceRep rep = facets_of_points(s.vertices, s.dim);
    return detail::scan_lattice_points(s.vertices, rep, scale, true, cap);
}

// Lattice points of the closed polytope scale * P, in lexicographic order.
inline std::vector<IntVec> lattice_points(const LatticePolytope& p, const Rat& scale,
                                          unsigned long cap = kDefaultEnumCap) {
    return detail::scan_lattice_points(p.rational_vertices(), p.facets(), scale, false, cap);
}

// Minimal gauge value over nonzero lattice points of P; requires 0 interior.
inline Rat mld(const LatticePolytope& p, unsigned long cap = kDefaultEnumCap) {
    const auto pts = lattice_points(p, Rat(1), cap);
    std::optional<Rat> best;
    for (const auto& z : pts) {
        if (is_zero(z)) continue;
        const Rat g = gauge(p.facets(), to_rat_vec(z));
        if (!best || g < *best) best = g;
    }
    if (!best) throw Error("mld: no nonzero lattice point found");
    return *best;
}

// True when the only lattice point strictly inside (1/q) * P is 0.
inline bool is_lc(const LatticePolytope& p, long q, unsigned long cap = kDefaultEnumCap) {
    if (q < 1) throw PreconditionFailed("is_lc: q must be >= 1");
    const auto pts = interior_lattice_points(p, make_rat(1, q), cap);
    return pts.size() == 1 && is_zero(pts[0]);
}

// Fano: full-dimensional (guaranteed by construction), 0 strictly interior,
// and every vertex primitive.
inline bool is_fano(const LatticePolytope& p) {
    if (!p.facets().origin_interior) return false;
    for (const auto& v : p.vertices())
        if (!is_primitive(v)) return false;
    return true;
}

namespace detail {

// Whether conv(points) is a full-dimensional lc Fano polytope; points are
// arbitrary lattice points (hull vertices are extracted here).
inline bool hull_is_lc_fano(const std::vector<IntVec>& points, std::size_t d, long q,
                            unsigned long cap) {
    if (points.size() < d + 1) return false;
    const RatMat pts = to_rat_mat(points);
    if (affine_rank(pts) != d) return false;
    const HalfspaceRep rep = facets_of_points(pts, d);
    if (!rep.origin_interior) return false;
    std::vector<IntVec> hull_vertices;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (is_hull_vertex(pts, i, rep)) hull_vertices.push_back(points[i]);
    for (const auto& v : hull_vertices)
        if (!is_primitive(v)) return false;
    const auto inside = scan_lattice_points(pts, rep, make_rat(1, q), true, cap);
    return inside.size() == 1 && is_zero(inside[0]);
}

}  // namespace detail

// Minimality: dropping any single vertex and rehulling the remaining lattice
// points of P never yields a d-dimensional lc Fano polytope for the same q.
// Returns the index of a droppable vertex, or nullopt when P is minimal.
inline std::optional<std::size_t> minimality_counterexample(const LatticePolytope& p, long q,
                                                            unsigned long cap = kDefaultEnumCap) {
    if (!is_fano(p) || !is_lc(p, q, cap))
        throw PreconditionFailed("is_minimal: input is not an lc Fano polytope for this q");
    const auto all = lattice_points(p, Rat(1), cap);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        const IntVec& v = p.vertices()[i];
        std::vector<IntVec> rest;
        for (const auto& z : all)
            if (z != v) rest.push_back(z);
        if (detail::hull_is_lc_fano(rest, p.dim(), q, cap)) return i;
    }
    return std::nullopt;
}

inline bool is_minimal(const LatticePolytope& p, long q, unsigned long cap = kDefaultEnumCap) {
    return !minimality_counterexample(p, q, cap).has_value();
}

}  // namespace lcfano
