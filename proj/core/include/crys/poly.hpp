#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crys/fp.hpp"
#include "crys/numeric.hpp"

namespace crys {

template <class K>
struct field_ops {
    static K inv(const K& a) { return a.inv(); }
    static bool is_zero(const K& a) { return a.is_zero(); }
};

template <>
struct field_ops<Rat> {
    static Rat inv(const Rat& a) {
        if (a == 0) throw std::domain_error("field_ops<Rat>::inv: zero");
        return Rat(1) / a;
    }
    static bool is_zero(const Rat& a) { return a == 0; }
};

/// Dense univariate polynomial over a field K, normalized with no trailing
/// zero coefficients. coeffs[i] is the coefficient of x^i; the zero
/// polynomial has an empty coefficient vector.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }

    // x^k with unit coefficient u.
    static Poly monomial(const K& u, std::size_t k) {
        std::vector<K> c(k + 1);
        c[k] = u;
        return Poly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const K& leading() const {
        if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly divmod: division by zero");
        Poly r = a;
        if (a.degree() < b.degree()) return {Poly(), r};
        std::vector<K> q(a.degree() - b.degree() + 1);
        K lead_inv = field_ops<K>::inv(b.leading());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = r.degree() - b.degree();
            K f = r.leading() * lead_inv;
            q[shift] = f;
            r -= Poly::monomial(f, shift) * b;
        }
        return {Poly(std::move(q)), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        K u = field_ops<K>::inv(leading());
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = c_[i] * u;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K term = c_[i];
            K acc{};
            for (std::size_t t = 0; t < i; ++t) acc += term;  // i * c_[i]
            r[i - 1] = acc;
        }
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

  private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && field_ops<K>::is_zero(c_.back())) c_.pop_back();
    }
};

// Named alias for the hidden-friend divmod, callable without ADL context.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b);
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> one = unit_one(a, b);
    // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = one, s1{};
    Poly<K> t0{}, t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        t0 = std::move(t1);
        s1 = std::move(s2);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, Poly<K>(), Poly<K>()};
    K u = field_ops<K>::inv(r0.leading());
    Poly<K> uu = Poly<K>::constant(u);
    return {r0 * uu, s0 * uu, t0 * uu};
}

// The constant 1 compatible with whichever of a, b carries field context.
template <class K>
Poly<K> unit_one(const Poly<K>&, const Poly<K>&) {
    return Poly<K>::constant(K(1));
}
inline Poly<Fp> unit_one(const Poly<Fp>& a, const Poly<Fp>& b) {
    std::uint64_t p = 0;
    for (const auto& c : a.coeffs())
        if (c.p) p = c.p;
    for (const auto& c : b.coeffs())
        if (c.p) p = c.p;
    if (p == 0) throw std::invalid_argument("unit_one: no modulus context");
    return Poly<Fp>::constant(Fp(1, p));
}

using FpPoly = Poly<Fp>;
using RatPoly = Poly<Rat>;

std::string to_string(const FpPoly& f);
FpPoly parse_fp_poly(const std::string& s, std::uint64_t p);

inline std::uint64_t modulus_of(const FpPoly& f) {
    for (const auto& c : f.coeffs())
        if (c.p) return c.p;
    return 0;
}

}  // namespace crys
