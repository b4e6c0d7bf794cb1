// sylvester.hpp
// The doubling sequence u_1 = q, u_{k+1} = u_k (u_k + 1), its exact partition
// identities, the dual-volume bound 2 u_d^2 / q^(d+1), and a certified
// two-sided enclosure of the growth constant
//     K = exp( log(q)/2 + sum_{i>=1} log(1 + 1/u_i) / 2^(i+1) ),
// which satisfies u_n < K^(2^n) < u_n + 1 for all n >= 1. The enclosure is
// computed with directed rounding and verified by exact rational squaring, so
// a true/false answer is a proof and anything else throws.
#pragma once

#include <mpfr.h>

#include <map>
#include <mutex>
#include <vector>

#include "lcfano/errors.hpp"
#include "lcfano/rational.hpp"

namespace lcfano {

// u_1, ..., u_n for the given q, memoized per q.
inline std::vector<Int> u_list(long q, std::size_t n) {
    if (q < 1) throw PreconditionFailed("u_list: q must be >= 1");
    if (n < 1) throw PreconditionFailed("u_list: n must be >= 1");
    if (n == 0) return {};
    static std::map<long, std::vector<Int>> table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& seq = table[q];
    if (seq.empty()) seq.emplace_back(q);
    while (seq.size() < n) {
        const Int& last = seq.back();
        seq.push_back(last * (last + 1));
    }
    return std::vector<Int>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n));
}

inline Int u(std::size_t n, long q) {
    if (n < 1) throw PreconditionFailed("u: index must be >= 1");
    return u_list(q, n).back();
}

// Exact check of the two partition identities at index p:
//   sum_{i=1}^{p-1} q/(1+u_i) + q/u_p = 1
//   prod_{i=1}^{p-1} 1/(1+u_i)       = q/u_p
inline bool verify_identities(std::size_t p, long q) {
    if (p < 2) throw PreconditionFailed("verify_identities: p must be >= 2");
    const std::vector<Int> us = u_list(q, p);
    Rat sum = 0;
    Rat prod = 1;
    for (std::size_t i = 0; i + 1 < p; ++i) {
        sum += make_rat(q, us[i] + 1);
        prod *= make_rat(1, us[i] + 1);
    }
    sum += make_rat(q, us[p - 1]);
    return sum == 1 && prod == make_rat(q, us[p - 1]);
}

// 2 u_d^2 / q^(d+1), the sharp upper bound for the dual volume in dimension d.
// The one exceptional pair (d, q) = (2, 1), where the true optimum is 9, is
// handled by callers that need it.
inline Rat volume_bound(std::size_t d, long q) {
    if (d < 2) throw PreconditionFailed("volume_bound: d must be >= 2");
    const Int ud = u(d, q);
    return make_rat(2 * ud * ud, int_pow(Int(q), static_cast<unsigned long>(d + 1)));
}

struct ApproxConstant {
    long q = 0;
    Rat lower;  // certified K > lower, with lower^2 > q
    Rat upper;  // certified K < upper, with upper < q
    int terms_used = 0;
};

namespace detail {

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

inline Rat rat_from_mpfr(const mpfr_t f) {
    if (mpfr_zero_p(f)) return Rat(0);
    if (!mpfr_number_p(f)) throw Error("enclosure endpoint is not finite");
    Int mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), f);
    Rat r(mant);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

// Bits needed so one rounding step stays below tol; >= 1.
inline mpfr_prec_t bits_for_tolerance(const Rat& tol) {
    const std::size_t num_bits = mpz_sizeinbase(tol.get_num_mpz_t(), 2);
    const std::size_t den_bits = mpz_sizeinbase(tol.get_den_mpz_t(), 2);
    if (num_bits >= den_bits) return 1;
    return static_cast<mpfr_prec_t>(den_bits - num_bits + 1);
}

}  // namespace detail

// Encloses K between exact rationals at most tol apart. Truncation error is
// controlled by the exact tail bound sum_{i>p} c_i/2^(i+1) <= 1/(2^(p+1) u_(p+1))
// and rounding error by directed-rounding MPFR at increasing precision. The
// returned bounds additionally certify sqrt(q) < K < q (checked exactly).
inline ApproxConstant approx_constant(long q, const Rat& tol, int max_terms = 40) {
    if (q < 2) throw PreconditionFailed("approx_constant: q must be >= 2");
    if (tol <= 0) throw PreconditionFailed("approx_constant: tolerance must be positive");

    // Smallest series length whose tail bound is below tol / (8q).
    const Rat tail_goal = tol / (8 * q);
    int terms = 0;
    Rat tail_bound;
    for (;;) {
        ++terms;
        if (terms > max_terms)
            throw IndecisiveEnclosure("approx_constant: series cap reached before tail goal");
        const Int next_u = u(static_cast<std::size_t>(terms + 1), q);
        tail_bound = make_rat(1, int_pow(Int(2), static_cast<unsigned long>(terms + 1)) * next_u);
        if (tail_bound <= tail_goal) break;
    }
    const std::vector<Int> us = u_list(q, static_cast<std::size_t>(terms));

    mpfr_prec_t prec = detail::bits_for_tolerance(tol) + 64;
    for (int round = 0; round < 24; ++round, prec *= 2) {
        detail::MpfrValue lo(prec), hi(prec), t(prec), c(prec);
        // Leading term log(q) / 2.
        mpfr_set_si(t.v, q, MPFR_RNDN);  // exact: q fits well below prec bits
        mpfr_log(lo.v, t.v, MPFR_RNDD);
        mpfr_log(hi.v, t.v, MPFR_RNDU);
        mpfr_div_2ui(lo.v, lo.v, 1, MPFR_RNDD);
        mpfr_div_2ui(hi.v, hi.v, 1, MPFR_RNDU);
        // Series terms log(1 + 1/u_i) / 2^(i+1); division by a power of two
        // is exact, so only set/log/add round.
        for (int i = 1; i <= terms; ++i) {
            const Rat ratio = make_rat(us[static_cast<std::size_t>(i - 1)] + 1,
                                       us[static_cast<std::size_t>(i - 1)]);
            mpfr_set_q(t.v, ratio.get_mpq_t(), MPFR_RNDD);
            mpfr_log(c.v, t.v, MPFR_RNDD);
            mpfr_div_2ui(c.v, c.v, static_cast<unsigned long>(i + 1), MPFR_RNDD);
            mpfr_add(lo.v, lo.v, c.v, MPFR_RNDD);
            mpfr_set_q(t.v, ratio.get_mpq_t(), MPFR_RNDU);
            mpfr_log(c.v, t.v, MPFR_RNDU);
            mpfr_div_2ui(c.v, c.v, static_cast<unsigned long>(i + 1), MPFR_RNDU);
            mpfr_add(hi.v, hi.v, c.v, MPFR_RNDU);
        }
        // Uncomputed tail sits between 0 and tail_bound.
        mpfr_set_q(t.v, tail_bound.get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi.v, hi.v, t.v, MPFR_RNDU);

        mpfr_exp(lo.v, lo.v, MPFR_RNDD);
        mpfr_exp(hi.v, hi.v, MPFR_RNDU);

        ApproxConstant out;
        out.q = q;
        out.lower = detail::rat_from_mpfr(lo.v);
        out.upper = detail::rat_from_mpfr(hi.v);
        out.terms_used = terms;
        if (out.lower > 0 && out.lower <= out.upper && out.upper - out.lower <= tol &&
            out.lower * out.lower > q && out.upper < q)
            return out;
    }
    throw IndecisiveEnclosure("approx_constant: failed to reach tolerance");
}

// Certifies u_n < K^(2^n) < u_n + 1 for n = 1..n_max by squaring the exact
// rational enclosure of K. Returns false only on a certified violation;
// throws IndecisiveEnclosure if the enclosure straddles a boundary.
inline bool verify_sandwich(long q, std::size_t n_max) {
    if (q < 2) throw PreconditionFailed("verify_sandwich: q must be >= 2");
    if (n_max < 1) throw PreconditionFailed("verify_sandwich: n_max must be >= 1");
    std::size_t qbits = mpz_sizeinbase(Int(q).get_mpz_t(), 2);
    unsigned long goal_bits =
        (static_cast<unsigned long>(1) << n_max) * static_cast<unsigned long>(qbits + 2) + 64;
    const Rat tol = make_rat(1, int_pow(Int(2), goal_bits));
    const ApproxConstant k = approx_constant(q, tol);
    const std::vector<Int> us = u_list(q, n_max);
    Rat lo = k.lower;
    Rat hi = k.upper;
    for (std::size_t n = 1; n <= n_max; ++n) {
        lo *= lo;
        hi *= hi;
        const Int& un = us[n - 1];
        if (hi <= un || lo >= un + 1) return false;
        if (!(lo > un && hi < un + 1))
            throw IndecisiveEnclosure("verify_sandwich: enclosure straddles an integer bound");
    }
    return true;
}

}  // namespace lcfano
