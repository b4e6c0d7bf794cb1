// barycentric.hpp
// Barycentric coordinates with a canonical descending view, the family of
// product-sum inequalities
//     PS_t : prod_{i<=t} b_i <= q^t * sum_{j>t} b_j   (on the sorted tuple)
// that cut out the feasible set X(d, q), and a two-stage search for an
// integral witness point certifying that a simplex whose coordinates violate
// some PS_t cannot be lc at level 1/q.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "lcfano/errors.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/linalg.hpp"
#include "lcfano/rational.hpp"

namespace lcfano {

struct BarycentricTuple {
    std::size_t d = 0;
    RatVec beta;              // in vertex order
    std::vector<std::size_t> order;  // order[k] = vertex index of k-th largest entry
    bool interior = false;    // all entries strictly positive

    const Rat& sorted(std::size_t k) const { return beta[order[k]]; }
    RatVec sorted_view() const {
        RatVec v;
        v.reserve(order.size());
        for (const auto i : order) v.push_back(beta[i]);
        return v;
    }
};

// Barycentric coordinates of x with respect to the simplex, plus the sorting
// permutation (descending, ties broken by lower vertex index).
inline BarycentricTuple barycentric_coords(const RatMat& simplex_vertices, const RatVec& x) {
    BarycentricTuple t;
    t.d = x.size();
    t.beta = barycentric_raw(simplex_vertices, x);
    t.order.resize(t.beta.size());
    std::iota(t.order.begin(), t.order.end(), std::size_t{0});
    std::stable_sort(t.order.begin(), t.order.end(),
                     [&](std::size_t a, std::size_t b) { return t.beta[a] > t.beta[b]; });
    t.interior = true;
    for (const auto& b : t.beta)
        if (b <= 0) t.interior = false;
    return t;
}

inline BarycentricTuple barycentric_coords(const RationalSimplex& s, const RatVec& x) {
    return barycentric_coords(s.vertices, x);
}

struct PSRow {
    std::size_t t = 0;  // 1-based inequality index
    Rat lhs;            // prod_{i<=t} b_i
    Rat rhs;            // q^t * sum_{j>t} b_j
    bool holds = false;
    bool tight = false;
};

struct PSReport {
    long q = 0;
    std::vector<PSRow> rows;  // t = 1..d

    bool all_hold() const {
        for (const auto& r : rows)
            if (!r.holds) return false;
        return true;
    }
    // Smallest failing t, or 0 when everything holds.
    std::size_t first_failure() const {
        for (const auto& r : rows)
            if (!r.holds) return r.t;
        return 0;
    }
};

namespace detail {

// PS rows for a tuple taken in the given order (no sorting, no sign checks).
inline std::vector<PSRow> ps_rows(const RatVec& b, long q) {
    const std::size_t d = b.size() - 1;
    std::vector<PSRow> rows;
    Rat lhs = 1;
    Rat tail = 0;
    for (const auto& x : b) tail += x;
    Rat qpow = 1;
    for (std::size_t t = 1; t <= d; ++t) {
        lhs *= b[t - 1];
        tail -= b[t - 1];
        qpow *= q;
        PSRow row;
        row.t = t;
        row.lhs = lhs;
        row.rhs = qpow * tail;
        row.holds = row.lhs <= row.rhs;
        row.tight = row.lhs == row.rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

// Evaluates every PS_t on the descending rearrangement of the tuple.
// The input must be a strictly positive tuple summing to 1.
inline PSReport ps_check(RatVec beta, long q) {
    if (q < 1) throw PreconditionFailed("ps_check: q must be >= 1");
    if (beta.size() < 2) throw PreconditionFailed("ps_check: need at least two entries");
    Rat sum = 0;
    for (const auto& b : beta) {
        if (b <= 0) throw NotAProbabilityVector("ps_check: entries must be positive");
        sum += b;
    }
    if (sum != 1) throw NotAProbabilityVector("ps_check: entries must sum to 1");
    std::sort(beta.begin(), beta.end(), [](const Rat& a, const Rat& b) { return a > b; });
    PSReport rep;
    rep.q = q;
    rep.rows = detail::ps_rows(beta, q);
    return rep;
}

inline PSReport ps_check(const BarycentricTuple& t, long q) {
    if (!t.interior)
        throw NotAProbabilityVector("ps_check: tuple has nonpositive entries");
    return ps_check(t.beta, q);
}

// Membership in X(d, q): x is weakly decreasing, nonnegative, sums to 1, and
// satisfies every PS_t. Zero entries are allowed here.
inline bool in_X(const RatVec& x, std::size_t d, long q) {
    if (q < 1) throw PreconditionFailed("in_X: q must be >= 1");
    if (x.size() != d + 1) throw PreconditionFailed("in_X: need d + 1 entries");
    Rat sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0) return false;
        if (i + 1 < x.size() && x[i] < x[i + 1]) return false;
        sum += x[i];
    }
    if (sum != 1) return false;
    for (const auto& row : detail::ps_rows(x, q))
        if (!row.holds) return false;
    return true;
}

// Witness search for a simplex S (lattice vertices, 0 strictly interior)
// whose sorted barycentric tuple violates some PS_t: returns a nonzero
// lattice point strictly inside (1/q) S, disproving the lc property.
//
// Stage one follows the constructive proof: for the failing index t and each
// total weight m in 1..radius, integer weights m_i are drawn from the open
// intervals (b_i (mq - 1) / q, b_i (mq + 1) / q) for the t largest
// coordinates, constrained to sum to m; the candidate is
// w = -(m_1 v_(1) + ... + m_t v_(t)) over the sorted vertex order. Stage two
// falls back to a direct box scan. Every candidate is verified exactly
// before being returned.
inline IntVec ps_witness(const LatticePolytope& simplex, long q, long radius,
                         unsigned long cap = kDefaultEnumCap) {
    if (q < 1) throw PreconditionFailed("ps_witness: q must be >= 1");
    if (radius < 1) throw PreconditionFailed("ps_witness: radius must be >= 1");
    const std::size_t d = simplex.dim();
    if (simplex.vertices().size() != d + 1)
        throw PreconditionFailed("ps_witness: polytope is not a simplex");
    const RatMat verts = simplex.rational_vertices();
    const RatVec zero(d, Rat(0));
    const BarycentricTuple bc = barycentric_coords(verts, zero);
    if (!bc.interior) throw OriginNotInterior("ps_witness: origin is not strictly interior");
    const PSReport rep = ps_check(bc, q);
    if (rep.all_hold())
        throw PreconditionFailed("ps_witness: every PS inequality holds, no witness exists");

    auto verify = [&](const IntVec& w) -> bool {
        if (is_zero(w)) return false;
        RatVec scaled(d);
        for (std::size_t i = 0; i < d; ++i) scaled[i] = Rat(w[i]) * q;
        const RatVec lam = barycentric_raw(verts, scaled);
        for (const auto& l : lam)
            if (l <= 0) return false;
        return true;
    };

    const std::size_t t = rep.first_failure();
    for (long m = 1; m <= radius; ++m) {
        // Open interval bounds for each of the t largest coordinates.
        std::vector<Int> lo(t), hi(t);
        bool empty = false;
        for (std::size_t i = 0; i < t; ++i) {
            const Rat& bi = bc.sorted(i);
            lo[i] = int_above(bi * make_rat(m * q - 1, q));
            hi[i] = int_below(bi * make_rat(m * q + 1, q));
            if (lo[i] > hi[i]) empty = true;
        }
        if (empty) continue;
        std::vector<Int> pick(t);
        // Depth-first product over the (tiny) integer ranges.
        auto search = [&](auto&& self, std::size_t i, Int partial) -> std::optional<IntVec> {
            if (i == t) {
                if (partial != m) return std::nullopt;
                IntVec w(d, Int(0));
                for (std::size_t k = 0; k < t; ++k) {
                    const IntVec& v = simplex.vertices()[bc.order[k]];
                    for (std::size_t j = 0; j < d; ++j) w[j] -= pick[k] * v[j];
                }
                if (verify(w)) return w;
                return std::nullopt;
            }
            for (Int c = lo[i]; c <= hi[i]; ++c) {
                pick[i] = c;
                if (auto r = self(self, i + 1, partial + c)) return r;
            }
            return std::nullopt;
        };
        if (auto w = search(search, 0, Int(0))) return *w;
    }

    // Fallback: exhaustive interior scan of (1/q) S.
    for (const auto& z : interior_lattice_points(simplex, make_rat(1, q), cap))
        if (!is_zero(z)) return z;
    throw NotFound("ps_witness: no witness within radius " + std::to_string(radius) +
                   " or the interior scan");
}

}  // namespace lcfano
