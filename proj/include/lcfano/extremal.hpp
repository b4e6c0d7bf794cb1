// extremal.hpp
// The three optimal simplex families, their weight vectors, an arithmetic
// certificate that pins the log-canonical threshold of the lattice families
// at exactly 1/q without any enumeration, and the unimodular change of
// coordinates carrying the dual of the first family onto its axis-aligned
// normal form.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lcfano/barycentric.hpp"
#include "lcfano/errors.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/linalg.hpp"
#include "lcfano/rational.hpp"
#include "lcfano/sylvester.hpp"

namespace lcfano {

enum class SimplexFamily {
    dual_extremal,     // lattice simplex whose dual attains the volume bound
    volume_extremal,   // lattice simplex attaining the primal bound 2 u_d^2 / q
    dual_normal_form,  // axis-aligned rational model of the optimal dual
};

// Serialization vocabulary, fixed by the CLI contract.
inline std::string kind_label(SimplexFamily k) {
    switch (k) {
        case SimplexFamily::dual_extremal: return "example43";
        case SimplexFamily::volume_extremal: return "thm13";
        case SimplexFamily::dual_normal_form: return "dual_normal_form";
    }
    throw Error("kind_label: unknown family");
}

struct ExtremalSimplex {
    SimplexFamily kind = SimplexFamily::dual_extremal;
    std::size_t d = 0;
    long q = 0;
    // Lattice coordinates; empty for the rational normal form.
    std::vector<IntVec> lattice_vertices;
    // Rational view, always populated, in construction order.
    RatMat vertices;
    // Barycentric tuple of the distinguished interior point (the origin for
    // the lattice families, (1, ..., 1, 0) for the normal form), in vertex
    // order; weakly decreasing.
    RatVec expected_beta;
    Rat expected_vol;
    Rat expected_dual_vol;

    RationalSimplex simplex() const { return RationalSimplex(d, vertices); }
    LatticePolytope polytope(std::size_t vertex_cap = kDefaultVertexCap) const {
        if (lattice_vertices.empty())
            throw PreconditionFailed("ExtremalSimplex: no lattice model for this family");
        return LatticePolytope(d, lattice_vertices, vertex_cap);
    }
};

namespace detail {

// Shared lattice construction: v_i = (1 + u_i) e_i - q e for i < d with
// e = e_1 + ... + e_(d-1), plus the pole pair (+/- a) e_d - q e. The apex
// coefficient a is 1 for the dual-extremal family and u_d for the
// volume-extremal one.
inline ExtremalSimplex build_lattice_family(SimplexFamily kind, std::size_t d, long q,
                                            const Int& apex) {
    const std::vector<Int> us = u_list(q, d);
    ExtremalSimplex s;
    s.kind = kind;
    s.d = d;
    s.q = q;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        IntVec v(d, Int(-q));
        v[d - 1] = 0;
        v[i] += us[i] + 1;
        s.lattice_vertices.push_back(std::move(v));
    }
    IntVec minus(d, Int(-q)), plus(d, Int(-q));
    minus[d - 1] = -apex;
    plus[d - 1] = apex;
    s.lattice_vertices.push_back(std::move(minus));
    s.lattice_vertices.push_back(std::move(plus));
    s.vertices = to_rat_mat(s.lattice_vertices);
    for (std::size_t i = 0; i + 1 < d; ++i) s.expected_beta.push_back(make_rat(q, us[i] + 1));
    s.expected_beta.push_back(make_rat(q, 2 * us[d - 1]));
    s.expected_beta.push_back(make_rat(q, 2 * us[d - 1]));
    return s;
}

}  // namespace detail

// Lattice simplex whose dual attains the optimal volume 2 u_d^2 / q^(d+1).
inline ExtremalSimplex example43_simplex(std::size_t d, long q) {
    if (d < 3) throw PreconditionFailed("example43_simplex: d must be >= 3");
    if (q < 1) throw PreconditionFailed("example43_simplex: q must be >= 1");
    ExtremalSimplex s = detail::build_lattice_family(SimplexFamily::dual_extremal, d, q, Int(1));
    const Int ud = u(d, q);
    s.expected_vol = make_rat(2 * ud, q);
    s.expected_dual_vol = volume_bound(d, q);
    return s;
}

// Lattice simplex attaining the primal volume bound 2 u_d^2 / q.
inline ExtremalSimplex thm13_simplex(std::size_t d, long q) {
    if (d < 2) throw PreconditionFailed("thm13_simplex: d must be >= 2");
    if (q < 1) throw PreconditionFailed("thm13_simplex: q must be >= 1");
    const Int ud = u(d, q);
    ExtremalSimplex s = detail::build_lattice_family(SimplexFamily::volume_extremal, d, q, ud);
    s.expected_vol = make_rat(2 * ud * ud, q);
    s.expected_dual_vol = make_rat(2 * ud, int_pow(Int(q), static_cast<unsigned long>(d + 1)));
    return s;
}

// Axis-aligned rational model of the optimal dual:
// conv((1+u_i)/q e_i, +/- u_d/q e_d). Unimodularly equivalent, up to an
// integer translation, to the dual of the first family.
inline ExtremalSimplex dual_normal_form(std::size_t d, long q) {
    if (d < 3) throw PreconditionFailed("dual_normal_form: d must be >= 3");
    if (q < 2) throw PreconditionFailed("dual_normal_form: q must be >= 2");
    const std::vector<Int> us = u_list(q, d);
    ExtremalSimplex s;
    s.kind = SimplexFamily::dual_normal_form;
    s.d = d;
    s.q = q;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        RatVec v(d, Rat(0));
        v[i] = make_rat(us[i] + 1, q);
        s.vertices.push_back(std::move(v));
    }
    RatVec minus(d, Rat(0)), plus(d, Rat(0));
    minus[d - 1] = make_rat(-us[d - 1], q);
    plus[d - 1] = make_rat(us[d - 1], q);
    s.vertices.push_back(std::move(minus));
    s.vertices.push_back(std::move(plus));
    for (std::size_t i = 0; i + 1 < d; ++i) s.expected_beta.push_back(make_rat(q, us[i] + 1));
    s.expected_beta.push_back(make_rat(q, 2 * us[d - 1]));
    s.expected_beta.push_back(make_rat(q, 2 * us[d - 1]));
    s.expected_vol = volume_bound(d, q);
    s.expected_dual_vol = make_rat(2 * us[d - 1], q);
    return s;
}

struct WeightVector {
    IntVec w;      // positive, one entry per vertex
    bool reduced;  // every d-subset of the weights is coprime
};

// Weight vector of a simplex with 0 strictly interior: w_i is the absolute
// maximal minor omitting vertex i, and sum w_i v_i = 0 holds exactly.
inline WeightVector conrad_weights(const RationalSimplex& s) {
    const std::size_t d = s.dim;
    std::vector<Int> signed_minors;
    RatVec rat_minors;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        RatMat m;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) m.push_back(s.vertices[i]);
        Rat det = determinant(std::move(m));
        if (skip % 2 == 1) det = -det;
        rat_minors.push_back(det);
    }
    int sign = 0;
    for (const auto& m : rat_minors) {
        if (m == 0) throw OriginNotInterior("conrad_weights: a minor vanishes");
        const int s2 = sgn(m);
        if (sign == 0) sign = s2;
        if (s2 != sign)
            throw OriginNotInterior("conrad_weights: origin is not strictly interior");
    }
    // Clear denominators jointly so the integer relation survives.
    Int lcm = 1;
    for (const auto& m : rat_minors) lcm = int_lcm(lcm, rat_den(m));
    WeightVector wv;
    for (const auto& m : rat_minors) {
        Rat scaled = m * Rat(lcm);
        wv.w.push_back(sign > 0 ? rat_num(scaled) : -rat_num(scaled));
    }
    RatVec relation(d, Rat(0));
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j < d; ++j) relation[j] += Rat(wv.w[i]) * s.vertices[i][j];
    if (!is_zero(relation)) throw Error("conrad_weights: weight relation failed");
    wv.reduced = true;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) g = int_gcd(g, wv.w[i]);
        if (g != 1) wv.reduced = false;
    }
    return wv;
}

inline WeightVector conrad_weights(const ExtremalSimplex& s) {
    return conrad_weights(s.simplex());
}

// Arithmetic certificate that the lattice families have log-canonical
// threshold exactly 1/q. No lattice-point enumeration is involved.
//
// Lower bound (no lattice point strictly inside (1/q) S except 0): writing a
// candidate z in barycentric form forces, coordinate by coordinate,
//   mu_i = q (z_i + 1) / (1 + u_i) > 0        => z_i >= 0 for i < d,
//   |z_d| < a / u_d <= 1                      => z_d = 0,
//   sum_i z_i / (1 + u_i) < 1 / u_d           => every z_i = 0,
// where the last step uses u_d >= 1 + u_i. The certificate verifies those
// support facts exactly: the partition identity, the apex coefficient bound
// a <= u_d, the domination u_d >= 1 + u_i, and the vertex coordinate shape
// the derivation reads off.
//
// Upper bound: an explicit lattice witness w sits on the boundary of
// (1/q) S (barycentric entries of q w nonnegative with a zero) and strictly
// inside (1/q'') S for q'' = q - 1 (q'' = 1/2 when q = 1), so the threshold
// is not below 1/q either.
inline bool lc_certificate(const ExtremalSimplex& es) {
    if (es.kind == SimplexFamily::dual_normal_form)
        throw PreconditionFailed("lc_certificate: only the lattice families carry a certificate");
    const std::size_t d = es.d;
    const long q = es.q;
    const std::vector<Int> us = u_list(q, d);
    const Int apex = (es.kind == SimplexFamily::dual_extremal) ? Int(1) : us[d - 1];

    // Vertex shape used by the derivation.
    if (es.lattice_vertices.size() != d + 1) return false;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const IntVec& v = es.lattice_vertices[i];
        for (std::size_t j = 0; j < d; ++j) {
            Int expect = (j + 1 < d) ? Int(-q) : Int(0);
            if (j == i) expect += us[i] + 1;
            if (v[j] != expect) return false;
        }
    }
    for (std::size_t k = 0; k < 2; ++k) {
        const IntVec& v = es.lattice_vertices[d - 1 + k];
        for (std::size_t j = 0; j + 1 < d; ++j)
            if (v[j] != -q) return false;
        if (v[d - 1] != (k == 0 ? -apex : apex)) return false;
    }

    // Partition identity, apex bound, domination.
    Rat ident = make_rat(q, us[d - 1]);
    for (std::size_t i = 0; i + 1 < d; ++i) ident += make_rat(q, us[i] + 1);
    if (ident != 1) return false;
    if (apex > us[d - 1]) return false;
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (us[d - 1] < us[i] + 1) return false;

    // The expected tuple really is the barycentric tuple of the origin.
    const RatVec zero(d, Rat(0));
    const RatVec beta = barycentric_raw(es.vertices, zero);
    if (beta != es.expected_beta) return false;
    for (const auto& b : beta)
        if (b <= 0) return false;

    // Boundary witness at scale 1/q, interior witness at scale 1/q''.
    RatVec w(d, Rat(0));
    if (es.kind == SimplexFamily::dual_extremal) {
        w[d - 2] = -1;
    } else {
        w[d - 1] = 1;
    }
    RatVec qw(d);
    for (std::size_t j = 0; j < d; ++j) qw[j] = w[j] * q;
    const RatVec lam = barycentric_raw(es.vertices, qw);
    bool touches = false;
    for (const auto& l : lam) {
        if (l < 0) return false;
        if (l == 0) touches = true;
    }
    if (!touches) return false;
    const Rat qq = (q >= 2) ? Rat(q - 1) : make_rat(1, 2);
    RatVec qqw(d);
    for (std::size_t j = 0; j < d; ++j) qqw[j] = w[j] * qq;
    for (const auto& l : barycentric_raw(es.vertices, qqw))
        if (l <= 0) return false;
    return true;
}

inline bool lc_certificate(SimplexFamily kind, std::size_t d, long q) {
    if (kind == SimplexFamily::dual_extremal) return lc_certificate(example43_simplex(d, q));
    if (kind == SimplexFamily::volume_extremal) return lc_certificate(thm13_simplex(d, q));
    throw PreconditionFailed("lc_certificate: only the lattice families carry a certificate");
}

struct Prop44Result {
    bool ok = false;
    std::string detail;  // first failed check, empty on success
};

// Verifies the unimodular equivalence between the dual of the first family
// and its axis-aligned normal form: with c_j = prod_{l != j, l <= d-1}
// (1 + u_l) and Psi the integer matrix with columns (1 + u_i) e_i - q e and
// e_d, the map x -> Psi (x + c) carries the dual's vertex set onto the
// normal form's. Also checks the divisibility facts making the inverse
// integral and |det Psi| = 1.
inline Prop44Result verify_prop44(std::size_t d, long q) {
    if (d < 3) return {false, "d must be >= 3"};
    if (q < 2) return {false, "q must be >= 2"};
    const std::vector<Int> us = u_list(q, d);
    const Int ud = us[d - 1];

    for (std::size_t i = 0; i + 1 < d; ++i) {
        if (!mpz_divisible_p(ud.get_mpz_t(), Int(us[i] + 1).get_mpz_t()))
            return {false, "u_d is not divisible by 1 + u_" + std::to_string(i + 1)};
        for (std::size_t j = 0; j + 1 < d; ++j) {
            if (i == j) continue;
            const Int prod = (us[i] + 1) * (us[j] + 1);
            if (!mpz_divisible_p(ud.get_mpz_t(), prod.get_mpz_t()))
                return {false, "u_d is not divisible by (1 + u_i)(1 + u_j) for i = " +
                                   std::to_string(i + 1) + ", j = " + std::to_string(j + 1)};
        }
        Int tail = 1;
        for (std::size_t l = i + 1; l + 1 < d; ++l) tail *= us[l] + 1;
        if (!mpz_divisible_p(Int(1 + us[i] * tail).get_mpz_t(), Int(us[i] + 1).get_mpz_t()))
            return {false, "1 + u_i * prod_(l>i) (1 + u_l) is not divisible by 1 + u_" +
                               std::to_string(i + 1)};
    }

    IntVec c(d, Int(0));
    for (std::size_t j = 0; j + 1 < d; ++j) {
        Int prod = 1;
        for (std::size_t l = 0; l + 1 < d; ++l)
            if (l != j) prod *= us[l] + 1;
        c[j] = prod;
    }

    IntMat psi(d, IntVec(d, Int(0)));  // columns psi[.][i]
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::size_t r = 0; r + 1 < d; ++r) psi[r][i] = -q;
        psi[i][i] += us[i] + 1;
    }
    psi[d - 1][d - 1] = 1;
    const Int det = determinant(psi);
    if (det != 1 && det != -1) return {false, "Psi is not unimodular, det = " + to_string(det)};

    // Integer inverse Phi with Psi Phi = Phi Psi = I.
    RatMat psi_rat = to_rat_mat(psi);
    IntMat phi(d, IntVec(d, Int(0)));
    for (std::size_t col = 0; col < d; ++col) {
        RatVec e(d, Rat(0));
        e[col] = 1;
        auto x = solve_square(psi_rat, std::move(e));
        if (!x) return {false, "Psi is singular"};
        for (std::size_t r = 0; r < d; ++r) {
            if (rat_den((*x)[r]) != 1) return {false, "Phi has a non-integer entry"};
            phi[r][col] = rat_num((*x)[r]);
        }
    }
    if (mat_mul(psi, phi) != int_identity(d) || mat_mul(phi, psi) != int_identity(d))
        return {false, "Psi Phi != I"};

    // Vertex set transport.
    const ExtremalSimplex base = example43_simplex(d, q);
    const RationalSimplex dual = dual_simplex(base.simplex());
    const ExtremalSimplex normal = dual_normal_form(d, q);
    RatMat image;
    for (const auto& y : dual.vertices) {
        RatVec shifted(d);
        for (std::size_t j = 0; j < d; ++j) shifted[j] = y[j] + Rat(c[j]);
        RatVec img(d, Rat(0));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t j = 0; j < d; ++j) img[r] += Rat(psi[r][j]) * shifted[j];
        image.push_back(std::move(img));
    }
    RatMat target = normal.vertices;
    auto less = [](const RatVec& a, const RatVec& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::sort(image.begin(), image.end(), less);
    std::sort(target.begin(), target.end(), less);
    if (image != target) return {false, "Psi (y + c) does not map the dual onto the normal form"};
    return {true, ""};
}

// Vol(S) * Vol(S^*) == 1 / prod beta_i for the barycentric tuple of the
// origin; exact on both sides.
inline bool product_identity_check(const RationalSimplex& s) {
    const RatVec zero(s.dim, Rat(0));
    const RatVec beta = barycentric_raw(s.vertices, zero);
    Rat prod = 1;
    for (const auto& b : beta) {
        if (b <= 0) throw OriginNotInterior("product_identity_check: origin not interior");
        prod *= b;
    }
    const Rat lhs = normalized_volume(s) * normalized_volume(dual_simplex(s));
    return lhs == 1 / prod;
}

struct NormalFormCheck {
    Rat vol;
    bool vol_formula = false;   // vol == 2 h prod (1 + u_i), independent of v
    bool beta_matches = false;  // marker point carries the candidate tuple
    bool attains = false;       // vol == 2 u_d / q, i.e. h == 1
    bool ok = false;
};

// One-parameter normal form conv((1+u_i) e_i, +/-(v, h)) with v in
// {0..h-1}^(d-1): its volume is 2 h prod (1 + u_i) regardless of v, the
// interior marker point (q, ..., q, 0) always carries the optimal tuple, and
// the volume bound is attained exactly when h = 1.
inline NormalFormCheck lemma46_normal_form_check(std::size_t d, long q, const Int& h,
                                                 const IntVec& v) {
    if (d < 3) throw PreconditionFailed("lemma46_normal_form_check: d must be >= 3");
    if (q < 1) throw PreconditionFailed("lemma46_normal_form_check: q must be >= 1");
    if (h < 1) throw PreconditionFailed("lemma46_normal_form_check: h must be >= 1");
    if (v.size() != d - 1)
        throw PreconditionFailed("lemma46_normal_form_check: v must have d - 1 entries");
    for (const auto& x : v)
        if (x < 0 || x >= h)
            throw PreconditionFailed("lemma46_normal_form_check: v entries must lie in [0, h)");
    const std::vector<Int> us = u_list(q, d);
    RatMat verts;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        RatVec w(d, Rat(0));
        w[i] = Rat(us[i] + 1);
        verts.push_back(std::move(w));
    }
    RatVec plus(d), minus(d);
    for (std::size_t j = 0; j + 1 < d; ++j) {
        plus[j] = Rat(v[j]);
        minus[j] = Rat(-v[j]);
    }
    plus[d - 1] = Rat(h);
    minus[d - 1] = Rat(-h);
    verts.push_back(std::move(plus));
    verts.push_back(std::move(minus));
    const RationalSimplex s(d, verts);

    NormalFormCheck out;
    out.vol = normalized_volume(s);
    Int expect = 2 * h;
    for (std::size_t i = 0; i + 1 < d; ++i) expect *= us[i] + 1;
    out.vol_formula = out.vol == expect;

    RatVec marker(d, Rat(q));
    marker[d - 1] = 0;
    const RatVec lam = barycentric_raw(s.vertices, marker);
    RatVec tuple;
    for (std::size_t i = 0; i + 1 < d; ++i) tuple.push_back(make_rat(q, us[i] + 1));
    tuple.push_back(make_rat(q, 2 * us[d - 1]));
    tuple.push_back(make_rat(q, 2 * us[d - 1]));
    out.beta_matches = lam == tuple;
    for (const auto& l : lam)
        if (l <= 0) out.beta_matches = false;

    out.attains = out.vol == make_rat(2 * us[d - 1], q);
    out.ok = out.vol_formula && out.beta_matches && (out.attains == (h == 1));
    return out;
}

}  // namespace lcfano
