#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "crys/numeric.hpp"

namespace crys {

/// Element of the prime field F_p with a runtime modulus.
///
/// The zero value with p == 0 acts as a "universal zero" so that
/// default-constructed entries of generic containers combine with any
/// modulus; every nonzero element carries its p.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    static Fp zero(std::uint64_t prime) { return Fp(0, prime); }
    static Fp one(std::uint64_t prime) { return Fp(1, prime); }

    bool is_zero() const { return v == 0; }

    friend std::uint64_t joint_modulus(const Fp& a, const Fp& b) {
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        if (a.p != b.p) throw std::invalid_argument("Fp: modulus mismatch");
        return a.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = joint_modulus(a, b);
        if (p == 0) return Fp();
        return Fp((a.v + b.v) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = joint_modulus(a, b);
        if (p == 0) return Fp();
        return Fp((a.v + p - b.v % p) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = joint_modulus(a, b);
        if (p == 0) return Fp();
        return Fp(static_cast<std::uint64_t>(
                      (static_cast<unsigned __int128>(a.v) * b.v) % p),
                  p);
    }
    Fp operator-() const { return p == 0 ? Fp() : Fp((p - v) % p, p); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v == 0 && b.v == 0) return true;
        return a.v == b.v && joint_modulus(a, b) != 0;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp pow(std::uint64_t e) const {
        Fp r(1, p), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp::inv: zero");
        return pow(p - 2);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
};

inline std::string to_string(const Fp& a) { return std::to_string(a.v); }

inline Fp to_fp(const Int& a, std::uint64_t p) {
    Int r = mod(a, Int(static_cast<unsigned long>(p)));
    return Fp(r.get_ui(), p);
}

}  // namespace crys
