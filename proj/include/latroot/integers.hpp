#pragma once

// Arbitrary-precision integer scalars and vectors. Everything in this
// library computes over exact integers; there is no floating point.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latroot {

using Int = mpz_class;
using IntVec = std::vector<Int>;

inline std::string to_string(const Int& x) { return x.get_str(); }

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

// quotient of floor division (sign of remainder follows the divisor)
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a/b when b divides a exactly
inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string format_vector(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    out += ")";
    return out;
}

}  // namespace latroot
