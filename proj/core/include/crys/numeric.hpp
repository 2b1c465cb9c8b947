#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crys {

// Arbitrary-precision integers and rationals. All arithmetic in the library
// is exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Floor division (round toward negative infinity).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

// Canonical representative of q modulo 1, in [0,1).
inline Rat frac(const Rat& q) {
    Rat r = q - Rat(floor(q));
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    Int a;
    if (mpz_set_str(a.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_int: bad integer '" + s + "'");
    return a;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace crys
