// verify.hpp
// End-to-end checks tying every module to frozen expected values and to
// independent recomputations (box scans, grid search, closed forms). Each
// check returns a pass/fail verdict with a one-line detail; the acceptance
// binary runs them at full ranges and the CLI's verify-all at caller ranges.
#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lcfano/barycentric.hpp"
#include "lcfano/decomposition.hpp"
#include "lcfano/errors.hpp"
#include "lcfano/extremal.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/json_io.hpp"
#include "lcfano/optimizer.hpp"
#include "lcfano/rational.hpp"
#include "lcfano/sylvester.hpp"

namespace lcfano {

struct VerifyOptions {
    std::size_t d_max = 10;
    long q_max = 10;
    unsigned jobs = 1;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

struct Failure {
    std::string message;
};

inline void require(bool cond, const std::string& message) {
    if (!cond) throw Failure{message};
}

template <typename Fn>
CheckResult run_check(const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    try {
        fn();
        r.pass = true;
    } catch (const Failure& f) {
        r.pass = false;
        r.detail = f.message;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("unexpected exception: ") + e.what();
    }
    return r;
}

// Deterministic cross-platform integer in [lo, hi] from the raw engine.
inline long rand_in(std::mt19937& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace verify_detail

// Sequence values against hand-computed anchors.
inline CheckResult check_sequence_anchors(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("sequence values", [&] {
        const long anchors1[] = {1, 2, 6, 42, 1806};
        for (std::size_t n = 1; n <= 5; ++n)
            require(u(n, 1) == anchors1[n - 1], "u(" + std::to_string(n) + ", 1) is wrong");
        require(u(4, 2) == 1806, "u(4, 2) != 1806");
        require(u(3, 2) == 42, "u(3, 2) != 42");
        require(u(2, 3) == 12, "u(2, 3) != 12");
        require(u(2, 5) == 30, "u(2, 5) != 30");
        for (long q = 1; q <= std::min<long>(10, opt.q_max); ++q)
            require(u(1, q) == q, "u(1, q) != q at q = " + std::to_string(q));
    });
}

// Both partition identities across the full index/parameter grid.
inline CheckResult check_partition_identities(const VerifyOptions&) {
    using verify_detail::require;
    return verify_detail::run_check("partition identities", [&] {
        for (std::size_t p = 2; p <= 8; ++p)
            for (long q = 1; q <= 10; ++q)
                require(verify_identities(p, q),
                        "identity failed at p = " + std::to_string(p) + ", q = " +
                            std::to_string(q));
    });
}

// The classic weight vector and the dual volume of the first nontrivial
// instance.
inline CheckResult check_weight_vector(const VerifyOptions&) {
    using verify_detail::require;
    return verify_detail::run_check("weight vector", [&] {
        const WeightVector w31 = conrad_weights(example43_simplex(3, 1));
        const IntVec expect31 = {Int(6), Int(4), Int(1), Int(1)};
        require(w31.w == expect31, "weights of the (3, 1) instance are not (6, 4, 1, 1)");
        require(w31.reduced, "(3, 1) weights are not coprime per d-subset");
        const Rat dual_vol = normalized_volume(dual_simplex(example43_simplex(3, 1).simplex()));
        require(dual_vol == 72, "dual volume at (3, 1) is not 72");
        const WeightVector w32 = conrad_weights(example43_simplex(3, 2));
        const IntVec expect32 = {Int(28), Int(12), Int(1), Int(1)};
        require(w32.w == expect32, "weights of the (3, 2) instance are not (28, 12, 1, 1)");
    });
}

// The dual of the first family attains the volume bound exactly, carries the
// expected barycentric tuple, and matches the axis-aligned normal form's
// volume.
inline CheckResult check_dual_volume_family(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("dual volume family", [&] {
        for (std::size_t d = 3; d <= std::min<std::size_t>(6, opt.d_max); ++d) {
            for (long q = 2; q <= std::min<long>(4, opt.q_max); ++q) {
                const ExtremalSimplex es = example43_simplex(d, q);
                const std::string at = " at d = " + std::to_string(d) + ", q = " + std::to_string(q);
                require(normalized_volume(es.simplex()) == es.expected_vol,
                        "primal volume mismatch" + at);
                const Rat dual_vol = normalized_volume(dual_simplex(es.simplex()));
                require(dual_vol == volume_bound(d, q), "dual volume misses the bound" + at);
                require(dual_vol == es.expected_dual_vol, "stored dual volume wrong" + at);
                const RatVec beta = barycentric_raw(es.vertices, RatVec(d, Rat(0)));
                require(beta == es.expected_beta, "barycentric tuple mismatch" + at);
                const ExtremalSimplex nf = dual_normal_form(d, q);
                require(normalized_volume(nf.simplex()) == volume_bound(d, q),
                        "normal form volume misses the bound" + at);
            }
        }
    });
}

// The second family attains the primal bound; both lattice families carry
// the arithmetic lc certificate; small instances are cross-validated against
// direct box scans of the lattice.
inline CheckResult check_primal_family_certificates(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("primal family and lc certificates", [&] {
        for (std::size_t d = 2; d <= std::min<std::size_t>(8, opt.d_max); ++d) {
            for (long q = 1; q <= std::min<long>(5, opt.q_max); ++q) {
                const std::string at = " at d = " + std::to_string(d) + ", q = " + std::to_string(q);
                const ExtremalSimplex ts = thm13_simplex(d, q);
                const Int ud = u(d, q);
                require(normalized_volume(ts.simplex()) == make_rat(2 * ud * ud, q),
                        "primal volume mismatch" + at);
                require(lc_certificate(ts), "certificate failed for the primal family" + at);
                if (d >= 3)
                    require(lc_certificate(example43_simplex(d, q)),
                            "certificate failed for the dual family" + at);
            }
        }
        const std::pair<std::size_t, long> pairs[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
        for (const auto& [d, q] : pairs) {
            const std::string at = " at d = " + std::to_string(d) + ", q = " + std::to_string(q);
            const LatticePolytope tp = thm13_simplex(d, q).polytope();
            // The primal family is a plain lattice simplex: its poles carry a
            // common factor q, so it is Fano exactly when q = 1.
            require(is_fano(tp) == (q == 1), "unexpected primitivity pattern" + at);
            require(is_lc(tp, q), "box scan refutes lc for the primal family" + at);
            require(mld(tp) == make_rat(1, q), "box scan mld != 1/q for the primal family" + at);
            if (d >= 3) {
                const LatticePolytope ep = example43_simplex(d, q).polytope();
                require(is_fano(ep), "dual family instance is not Fano" + at);
                require(is_lc(ep, q), "box scan refutes lc for the dual family" + at);
                require(mld(ep) == make_rat(1, q), "box scan mld != 1/q for the dual family" + at);
            }
        }
    });
}

// Necessity of the PS inequalities: on every small simplex with 0 interior,
// a box-scan lc verdict forces all PS to hold, and any PS failure yields a
// verified witness point.
inline CheckResult check_ps_necessity(const VerifyOptions&) {
    using verify_detail::require;
    return verify_detail::run_check("ps necessity", [&] {
        const long qs[] = {1, 2, 3};
        std::size_t lc_count = 0;
        std::size_t witness_count = 0;
        auto process = [&](const std::vector<IntVec>& verts, std::size_t d) {
            RatVec beta;
            try {
                beta = barycentric_raw(to_rat_mat(verts), RatVec(d, Rat(0)));
            } catch (const DegenerateSimplex&) {
                return;
            }
            for (const auto& b : beta)
                if (b <= 0) return;
            LatticePolytope s(d, verts);
            for (const long q : qs) {
                const bool lc_box = is_lc(s, q);
                const bool ps_ok = ps_check(beta, q).all_hold();
                require(!lc_box || ps_ok, "lc simplex violating a PS inequality: " +
                                              write_polytope_json(s) + " q = " + std::to_string(q));
                if (lc_box) ++lc_count;
                if (!ps_ok) {
                    ++witness_count;
                    const IntVec w = ps_witness(s, q, 16);
                    require(!is_zero(w), "witness is zero");
                    RatVec qw(d);
                    for (std::size_t j = 0; j < d; ++j) qw[j] = Rat(w[j]) * q;
                    for (const auto& l : barycentric_raw(to_rat_mat(verts), qw))
                        require(l > 0, "witness is not strictly interior: " +
                                           write_polytope_json(s));
                    require(!lc_box, "witness found for an lc simplex");
                }
            }
        };

        // Exhaustive: all triangles with vertices in [-4, 4]^2.
        std::vector<IntVec> grid;
        for (long x = -4; x <= 4; ++x)
            for (long y = -4; y <= 4; ++y) grid.push_back({Int(x), Int(y)});
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = i + 1; j < grid.size(); ++j)
                for (std::size_t k = j + 1; k < grid.size(); ++k)
                    process({grid[i], grid[j], grid[k]}, 2);

        // Random: 10^4 nondegenerate tetrahedra with vertices in [-5, 5]^3.
        std::mt19937 rng(20240817u);
        std::size_t produced = 0;
        while (produced < 10000) {
            std::vector<IntVec> verts;
            for (int v = 0; v < 4; ++v) {
                IntVec p(3);
                for (int c = 0; c < 3; ++c) p[c] = verify_detail::rand_in(rng, -5, 5);
                verts.push_back(std::move(p));
            }
            RatMat diffs;
            for (int v = 1; v < 4; ++v) diffs.push_back(vec_sub(to_rat_vec(verts[v]), to_rat_vec(verts[0])));
            if (determinant(std::move(diffs)) == 0) continue;
            ++produced;
            process(verts, 3);
        }
        require(lc_count > 0, "scan never saw an lc simplex");
        require(witness_count > 0, "scan never exercised the witness search");
    });
}

// Candidate minimization: argmin positions, the exceptional pair, the strict
// chains, and a grid oracle confirming the family minimum to within 5%.
inline CheckResult check_candidate_minima(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("candidate minima", [&] {
        for (std::size_t d = 2; d <= std::min<std::size_t>(8, opt.d_max); ++d) {
            for (long q = 1; q <= std::min<long>(6, opt.q_max); ++q) {
                const std::string at = " at d = " + std::to_string(d) + ", q = " + std::to_string(q);
                const MinimizationResult first = minimize_candidates(d, q, Target::first_d);
                std::size_t expect_l = d;
                if ((d == 2 && q == 1) || (d == 2 && q == 2)) expect_l = 1;
                if (d == 3 && q == 1) expect_l = 2;
                require(first.optimal_l == expect_l, "wrong argmin for the first-d product" + at);
                require(first.exception_flag == (d == 2 && q == 1), "exception flag wrong" + at);
                const MinimizationResult all = minimize_candidates(d, q, Target::all_d1);
                require(all.optimal_l == d + 1, "wrong argmin for the full product" + at);
                if (d >= 3)
                    require(verify_strict_chains(d, q), "strict chain broken" + at);
            }
        }
        for (long q = 1; q <= std::min<long>(2, opt.q_max); ++q) {
            for (const Target target : {Target::first_d, Target::all_d1}) {
                const GridResult g = grid_oracle(2, q, target, make_rat(1, 1000), opt.jobs);
                const Rat exact = minimize_candidates(2, q, target).optimal_value;
                require(g.min_value >= exact, "grid found a value below the exact optimum");
                require(g.min_value - exact <= exact * make_rat(1, 20),
                        "grid minimum is more than 5% above the exact optimum (d = 2, q = " +
                            std::to_string(q) + ")");
            }
            const GridResult g3 = grid_oracle(3, q, Target::first_d, make_rat(1, 200), opt.jobs);
            const Rat exact3 = minimize_candidates(3, q, Target::first_d).optimal_value;
            require(g3.min_value >= exact3, "grid found a value below the exact optimum");
            require(g3.min_value - exact3 <= exact3 * make_rat(1, 20),
                    "grid minimum is more than 5% above the exact optimum (d = 3, q = " +
                        std::to_string(q) + ")");
        }
    });
}

// Unimodular transport of the dual family onto the axis-aligned normal form.
inline CheckResult check_normal_form_equivalence(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("normal form equivalence", [&] {
        for (std::size_t d = 3; d <= std::min<std::size_t>(8, opt.d_max); ++d)
            for (long q = 2; q <= std::min<long>(5, opt.q_max); ++q) {
                const Prop44Result r = verify_prop44(d, q);
                require(r.ok, "transport failed at d = " + std::to_string(d) + ", q = " +
                                  std::to_string(q) + ": " + r.detail);
            }
        const NormalFormCheck unit = lemma46_normal_form_check(3, 1, Int(1), IntVec{Int(0), Int(0)});
        require(unit.ok && unit.attains, "h = 1 normal form should attain the bound");
        const NormalFormCheck tall = lemma46_normal_form_check(3, 1, Int(2), IntVec{Int(0), Int(1)});
        require(tall.ok && !tall.attains, "h = 2 normal form should not attain the bound");
    });
}

// Vol(S) Vol(S*) = 1/prod(beta): on the extremal families and on random Fano
// simplices.
inline CheckResult check_product_identity(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("product identity", [&] {
        for (std::size_t d = 3; d <= std::min<std::size_t>(6, opt.d_max); ++d) {
            for (long q = 1; q <= std::min<long>(3, opt.q_max); ++q) {
                require(product_identity_check(example43_simplex(d, q).simplex()),
                        "product identity failed on the dual-extremal family");
                require(product_identity_check(thm13_simplex(d, q).simplex()),
                        "product identity failed on the volume-extremal family");
                if (q >= 2) {
                    // The normal form keeps its interior marker at (1, ..., 1, 0);
                    // recenter it before applying the identity.
                    const ExtremalSimplex nf = dual_normal_form(d, q);
                    RatMat shifted = nf.vertices;
                    for (auto& v : shifted)
                        for (std::size_t j = 0; j + 1 < d; ++j) v[j] -= 1;
                    require(product_identity_check(RationalSimplex(d, shifted)),
                            "product identity failed on the recentered normal form");
                }
            }
        }
        std::mt19937 rng(4242u);
        int found = 0;
        while (found < 100) {
            const std::size_t d = 2 + static_cast<std::size_t>(found % 3);
            std::vector<IntVec> verts;
            for (std::size_t v = 0; v <= d; ++v) {
                IntVec p(d);
                for (std::size_t c = 0; c < d; ++c) p[c] = verify_detail::rand_in(rng, -3, 3);
                verts.push_back(std::move(p));
            }
            RatVec beta;
            try {
                beta = barycentric_raw(to_rat_mat(verts), RatVec(d, Rat(0)));
            } catch (const DegenerateSimplex&) {
                continue;
            }
            bool interior = true;
            for (const auto& b : beta) interior = interior && b > 0;
            if (!interior) continue;
            bool primitive = true;
            for (const auto& v : verts) primitive = primitive && is_primitive(v);
            if (!primitive) continue;
            require(product_identity_check(RationalSimplex(d, to_rat_mat(verts))),
                    "product identity failed on a random Fano simplex: " +
                        write_polytope_json(d, verts));
            ++found;
        }
    });
}

// Certified enclosure of the growth constant and the doubling sandwich.
inline CheckResult check_growth_constant(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("growth constant", [&] {
        for (long q = 2; q <= std::min<long>(10, std::max<long>(2, opt.q_max)); ++q)
            require(verify_sandwich(q, 6), "sandwich failed at q = " + std::to_string(q));
        const ApproxConstant k2 = approx_constant(2, make_rat(1, int_pow(Int(10), 12)));
        require(k2.lower > make_rat(Int("15979102180"), int_pow(Int(10), 10)),
                "enclosure of K(2) sits below the frozen bracket");
        require(k2.upper < make_rat(Int("15979102181"), int_pow(Int(10), 10)),
                "enclosure of K(2) sits above the frozen bracket");
    });
}

// Shape sweep: the multinomial bound stays strictly below the target on
// every admissible shape, with the frozen record count and worst record at
// full range.
inline CheckResult check_shape_sweep(const VerifyOptions& opt) {
    using verify_detail::require;
    return verify_detail::run_check("shape sweep", [&] {
        const std::size_t dm = std::min<std::size_t>(10, opt.d_max);
        const long qm = std::min<long>(6, opt.q_max);
        const auto records = section5_sweep(dm, qm, opt.jobs);
        for (const auto& r : records)
            require(r.strict, "non-strict shape at d = " + std::to_string(r.d) + ", q = " +
                                  std::to_string(r.q));
        if (dm == 10 && qm == 6)
            require(records.size() == 8715,
                    "record count drifted: " + std::to_string(records.size()));
        if (dm >= 4 && qm >= 2) {
            bool seen = false;
            for (const auto& r : records) {
                if (r.d == 4 && r.q == 2 && r.t == 3 &&
                    r.d_list == std::vector<std::size_t>{2, 2, 2}) {
                    require(r.bound_value == 65610, "frozen bound value drifted");
                    require(r.target == make_rat(815409, 4), "frozen target drifted");
                    seen = true;
                }
            }
            require(seen, "expected shape (4, 2, t=3, [2,2,2]) is missing");
        }
    });
}

// Two-simplex estimate: tight on the cross-polytope, and holding with room
// to spare on constructed minimal five-vertex examples.
inline CheckResult check_two_simplex(const VerifyOptions&) {
    using verify_detail::require;
    return verify_detail::run_check("two-simplex estimate", [&] {
        const LatticePolytope cross(
            2, {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(-1)}});
        const Decomposition dc = decompose_minimal(cross, 1);
        require(dc.simplices.size() == 2, "cross-polytope should split into two pieces");
        const TwoSimplexCheck tc = two_simplex_bound_check(
            cross, dc.simplices[0].vertex_indices, dc.simplices[1].vertex_indices, 1);
        require(tc.dual_vol == 8, "dual volume of the cross-polytope is not 8");
        require(tc.rhs == 8, "two-simplex estimate is not tight on the cross-polytope");
        require(tc.holds, "estimate fails on the cross-polytope");
        require(tc.bound_target == 9 && tc.below_target,
                "cross-polytope dual volume should sit below 9");

        // Constructed family: a lattice triangle through 0 in the z = 0
        // plane, joined to a second triangle sharing one vertex.
        const std::vector<std::vector<IntVec>> triangles = {
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}},
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-2)}},
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-2), Int(-1)}},
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-3)}},
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-3), Int(-1)}},
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-2), Int(-3)}},
            {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-3), Int(-2)}},
            {{Int(1), Int(0)}, {Int(-1), Int(2)}, {Int(-1), Int(-2)}},
            {{Int(1), Int(1)}, {Int(0), Int(-1)}, {Int(-1), Int(0)}},
            {{Int(2), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}},
        };
        std::size_t found_q1 = 0, found_q2 = 0;
        for (const long q : {1L, 2L}) {
            for (const auto& tri : triangles) {
                for (std::size_t anchor = 0; anchor < 3; ++anchor) {
                    for (long m = 1; m <= 3; ++m) {
                        std::vector<IntVec> verts;
                        for (const auto& t : tri) verts.push_back({t[0], t[1], Int(0)});
                        verts.push_back({-tri[anchor][0], -tri[anchor][1], Int(m)});
                        verts.push_back({Int(0), Int(0), Int(-1)});
                        try {
                            const LatticePolytope p(3, verts);
                            if (p.vertices().size() != 5) continue;
                            if (!is_fano(p) || !is_lc(p, q)) continue;
                            if (!is_minimal(p, q)) continue;
                            const Decomposition dec = decompose_minimal(p, q);
                            if (dec.simplices.size() != 2) continue;
                            const TwoSimplexCheck c = two_simplex_bound_check(
                                p, dec.simplices[0].vertex_indices,
                                dec.simplices[1].vertex_indices, q);
                            require(c.holds, "two-simplex estimate failed on " +
                                                 write_polytope_json(p) + " q = " +
                                                 std::to_string(q));
                            require(c.below_target, "dual volume reached the bound on " +
                                                        write_polytope_json(p));
                            (q == 1 ? found_q1 : found_q2) += 1;
                        } catch (const Error&) {
                            continue;
                        }
                    }
                }
            }
        }
        require(found_q1 + found_q2 >= 10,
                "fewer than 10 minimal five-vertex instances found (" +
                    std::to_string(found_q1) + " + " + std::to_string(found_q2) + ")");
        require(found_q1 >= 1 && found_q2 >= 1, "need instances at both q = 1 and q = 2");
    });
}

inline std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(check_sequence_anchors(opt));
    out.push_back(check_partition_identities(opt));
    out.push_back(check_weight_vector(opt));
    out.push_back(check_dual_volume_family(opt));
    out.push_back(check_primal_family_certificates(opt));
    out.push_back(check_ps_necessity(opt));
    out.push_back(check_candidate_minima(opt));
    out.push_back(check_normal_form_equivalence(opt));
    out.push_back(check_product_identity(opt));
    out.push_back(check_growth_constant(opt));
    out.push_back(check_shape_sweep(opt));
    out.push_back(check_two_simplex(opt));
    return out;
}

}  // namespace lcfano
