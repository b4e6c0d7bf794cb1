// optimizer.hpp
// The candidate family y(l) on which the product objectives are minimized
// over X(d, q), exact minimization over the family with closed-form
// cross-checks, strict-chain verification, and an independent brute-force
// grid oracle over the whole feasible set.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

#include "lcfano/barycentric.hpp"
#include "lcfano/errors.hpp"
#include "lcfano/rational.hpp"
#include "lcfano/sylvester.hpp"

namespace lcfano {

enum class Target {
    first_d,   // product of the d largest coordinates
    all_d1,    // product of all d + 1 coordinates
};

inline std::string target_label(Target t) {
    return t == Target::first_d ? "d" : "d1";
}

struct CandidateTuple {
    std::size_t d = 0;
    long q = 0;
    std::size_t l = 0;
    RatVec x;        // weakly decreasing, sums to 1
    Rat f_first_d;   // prod of x_1..x_d
    Rat f_all;       // prod of x_1..x_(d+1)
};

// y(l) = (q/(1+u_1), ..., q/(1+u_(l-1)), then d+2-l copies of
// q / ((d+2-l) u_l)). Lies in X(d, q) for every l in 1..d+1.
inline CandidateTuple y_candidate(std::size_t d, long q, std::size_t l) {
    if (d < 2) throw PreconditionFailed("y_candidate: d must be >= 2");
    if (q < 1) throw PreconditionFailed("y_candidate: q must be >= 1");
    if (l < 1 || l > d + 1)
        throw IndexOutOfRange("y_candidate: l must be in 1..d+1, got " + std::to_string(l));
    const std::vector<Int> us = u_list(q, l);
    CandidateTuple c;
    c.d = d;
    c.q = q;
    c.l = l;
    for (std::size_t i = 0; i + 1 < l; ++i) c.x.push_back(make_rat(q, us[i] + 1));
    const std::size_t copies = d + 2 - l;
    const Rat tail = make_rat(q, Int(copies) * us[l - 1]);
    for (std::size_t i = 0; i < copies; ++i) c.x.push_back(tail);
    c.f_first_d = 1;
    for (std::size_t i = 0; i < d; ++i) c.f_first_d *= c.x[i];
    c.f_all = c.f_first_d * c.x[d];
    if (!in_X(c.x, d, q)) throw Error("y_candidate: tuple left the feasible set");
    return c;
}

struct MinimizationResult {
    Target target = Target::first_d;
    std::size_t optimal_l = 0;
    Rat optimal_value;
    std::vector<CandidateTuple> table;
    bool exception_flag = false;  // the one pair (d, q) = (2, 1), first_d
    std::vector<std::string> notes;
    std::vector<RatVec> equality_tuples;  // all argmin tuples when tied
};

// Minimizes the chosen product over the candidate table (l = 1..d for the
// first-d objective, l = 1..d+1 for the full product). Ties go to the
// smallest l and are recorded. The result is cross-checked against the
// closed forms q^(d+1) / (2 u_d^2) and q^(d+2) / u_(d+1)^2, with the single
// exceptional value 1/9 at (d, q) = (2, 1) for the first-d objective.
inline MinimizationResult minimize_candidates(std::size_t d, long q, Target target) {
    if (d < 2) throw PreconditionFailed("minimize_candidates: d must be >= 2");
    if (q < 1) throw PreconditionFailed("minimize_candidates: q must be >= 1");
    MinimizationResult res;
    res.target = target;
    const std::size_t l_max = (target == Target::first_d) ? d : d + 1;
    for (std::size_t l = 1; l <= l_max; ++l) res.table.push_back(y_candidate(d, q, l));
    auto value = [&](const CandidateTuple& c) -> const Rat& {
        return target == Target::first_d ? c.f_first_d : c.f_all;
    };
    res.optimal_l = 1;
    res.optimal_value = value(res.table[0]);
    for (const auto& c : res.table) {
        if (value(c) < res.optimal_value) {
            res.optimal_value = value(c);
            res.optimal_l = c.l;
        }
    }
    for (const auto& c : res.table)
        if (value(c) == res.optimal_value) res.equality_tuples.push_back(c.x);
    if (res.equality_tuples.size() > 1) {
        std::string ls;
        for (const auto& c : res.table)
            if (value(c) == res.optimal_value) ls += (ls.empty() ? "" : ", ") + std::to_string(c.l);
        res.notes.push_back("minimum attained at several l: " + ls +
                            "; reporting the smallest");
    }
    res.exception_flag = (target == Target::first_d && d == 2 && q == 1);
    Rat closed;
    if (res.exception_flag) {
        closed = make_rat(1, 9);
        res.notes.push_back("exceptional pair (2, 1): optimum 1/9 below the closed form 1/8");
    } else if (target == Target::first_d) {
        const Int ud = u(d, q);
        closed = make_rat(int_pow(Int(q), static_cast<unsigned long>(d + 1)), 2 * ud * ud);
    } else {
        const Int un = u(d + 1, q);
        closed = make_rat(int_pow(Int(q), static_cast<unsigned long>(d + 2)), un * un);
    }
    if (res.optimal_value != closed)
        throw Error("minimize_candidates: optimum disagrees with the closed form");
    return res;
}

// Both candidate chains are strictly decreasing in l, so the last candidate
// is the strict minimizer: f_all over l = 1..d+1 and f_first_d over
// l = 1..d. The one tie, (d, q) = (3, 1) where y(2) and y(3) share the
// first-d product, restricts that pair to the full-product chain.
inline bool verify_strict_chains(std::size_t d, long q) {
    if (d < 3) throw PreconditionFailed("verify_strict_chains: d must be >= 3");
    if (q < 1) throw PreconditionFailed("verify_strict_chains: q must be >= 1");
    std::vector<CandidateTuple> table;
    for (std::size_t l = 1; l <= d + 1; ++l) table.push_back(y_candidate(d, q, l));
    for (std::size_t l = 1; l <= d; ++l)
        if (!(table[l - 1].f_all > table[l].f_all)) return false;
    if (d == 3 && q == 1) return true;
    for (std::size_t l = 1; l + 1 <= d; ++l)
        if (!(table[l - 1].f_first_d > table[l].f_first_d)) return false;
    return true;
}

struct GridResult {
    Rat min_value;
    double min_float = 0.0;
    RatVec argmin;
    unsigned long long feasible_count = 0;
};

namespace detail {

struct GridShard {
    bool found = false;
    Rat best;
    RatVec arg;
    unsigned long long feasible = 0;
};

// Scans weakly decreasing integer compositions (k_1, ..., k_(d+1)) of n with
// k_1 fixed per shard, filters by membership in X(d, q), and tracks the
// exact minimum of the chosen product.
inline void grid_shard(std::size_t d, long q, Target target, long n, long k1_lo, long k1_hi,
                       GridShard& out) {
    std::vector<long> k(d + 1);
    auto consider = [&]() {
        RatVec x(d + 1);
        for (std::size_t i = 0; i <= d; ++i) x[i] = make_rat(k[i], n);
        if (!in_X(x, d, q)) return;
        ++out.feasible;
        Rat value = 1;
        const std::size_t upto = (target == Target::first_d) ? d : d + 1;
        for (std::size_t i = 0; i < upto; ++i) value *= x[i];
        if (!out.found || value < out.best ||
            (value == out.best &&
             std::lexicographical_compare(x.begin(), x.end(), out.arg.begin(), out.arg.end()))) {
            out.found = true;
            out.best = value;
            out.arg = x;
        }
    };
    auto rec = [&](auto&& self, std::size_t pos, long remaining, long cap) -> void {
        if (pos == d) {
            if (remaining <= cap) {
                k[pos] = remaining;
                consider();
            }
            return;
        }
        const long least = (remaining + static_cast<long>(d - pos)) / static_cast<long>(d - pos + 1);
        for (long v = std::min(cap, remaining); v >= least && v >= 0; --v) {
            k[pos] = v;
            self(self, pos + 1, remaining - v, v);
        }
    };
    for (long k1 = k1_hi; k1 >= k1_lo; --k1) {
        k[0] = k1;
        rec(rec, 1, n - k1, k1);
    }
}

}  // namespace detail

// Brute-force oracle: minimizes the chosen product over all grid points of
// X(d, q) with coordinates in (1/step) steps. Independent of the candidate
// family; used to confirm the family minima to grid accuracy.
inline GridResult grid_oracle(std::size_t d, long q, Target target, const Rat& step,
                              unsigned jobs = 1) {
    if (d < 2 || d > 3) throw PreconditionFailed("grid_oracle: d must be 2 or 3");
    if (q < 1) throw PreconditionFailed("grid_oracle: q must be >= 1");
    if (step <= 0) throw PreconditionFailed("grid_oracle: step must be positive");
    const Rat inv = 1 / step;
    if (rat_den(inv) != 1 || rat_num(inv) < static_cast<long>(d + 1))
        throw GridTooCoarse("grid_oracle: step must be 1/n with n >= d + 1");
    if (!rat_num(inv).fits_slong_p())
        throw PreconditionFailed("grid_oracle: step is too fine");
    const long n = rat_num(inv).get_si();

    // k_1 ranges over ceil(n / (d+1)) .. n; shard that range.
    const long k1_lo = (n + static_cast<long>(d)) / static_cast<long>(d + 1);
    const long k1_hi = n;
    const unsigned shards = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(k1_hi - k1_lo + 1)));
    std::vector<detail::GridShard> results(shards);
    if (shards == 1) {
        detail::grid_shard(d, q, target, n, k1_lo, k1_hi, results[0]);
    } else {
        std::vector<std::thread> pool;
        const long span = k1_hi - k1_lo + 1;
        for (unsigned s = 0; s < shards; ++s) {
            const long lo = k1_lo + span * static_cast<long>(s) / static_cast<long>(shards);
            const long hi = k1_lo + span * static_cast<long>(s + 1) / static_cast<long>(shards) - 1;
            pool.emplace_back(detail::grid_shard, d, q, target, n, lo, hi, std::ref(results[s]));
        }
        for (auto& t : pool) t.join();
    }

    GridResult out;
    bool found = false;
    for (const auto& r : results) {
        out.feasible_count += r.feasible;
        if (!r.found) continue;
        if (!found || r.best < out.min_value ||
            (r.best == out.min_value &&
             std::lexicographical_compare(r.arg.begin(), r.arg.end(), out.argmin.begin(),
                                          out.argmin.end()))) {
            found = true;
            out.min_value = r.best;
            out.argmin = r.arg;
        }
    }
    if (!found)
        throw GridTooCoarse("grid_oracle: no feasible grid point at step 1/" + std::to_string(n));
    out.min_float = out.min_value.get_d();
    return out;
}

}  // namespace lcfano
