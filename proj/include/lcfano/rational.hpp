// rational.hpp
// Exact integer and rational scalars on top of GMP, plus the canonical
// string forms used throughout the library ("p" for integers, "p/q"
// otherwise, always in lowest terms).
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lcfano/errors.hpp"

namespace lcfano {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw PreconditionFailed("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Smallest integer strictly greater than r.
inline Int int_above(const Rat& r) { return rat_floor(r) + 1; }

// Largest integer strictly less than r.
inline Int int_below(const Rat& r) { return rat_ceil(r) - 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
    // mpq_class prints "num/den" and omits "/den" when den == 1.
    return v.get_str();
}

inline Int int_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("bad integer literal: " + s);
    return v;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den <= 0) throw ParseError("bad rational literal: " + s);
    return make_rat(num, den);
}

inline RatVec to_rat_vec(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

inline RatMat to_rat_mat(const std::vector<IntVec>& m) {
    RatMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_rat_vec(row));
    return r;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace lcfano
