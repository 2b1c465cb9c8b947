#include "crys/poly_factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace crys {

std::string to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (long i = f.degree(); i >= 0; --i) {
        auto c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c.v);
        } else {
            if (c.v != 1) s += std::to_string(c.v) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

FpPoly parse_fp_poly(const std::string& s, std::uint64_t p) {
    if (s == "0") return FpPoly();
    std::vector<Fp> coeffs;
    auto set_coeff = [&](std::size_t deg, std::uint64_t c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Fp(0, p));
        coeffs[deg] = coeffs[deg] + Fp(c, p);
    };
    std::size_t i = 0;
    while (i < s.size()) {
        std::uint64_t c = 1;
        bool saw_digit = false;
        std::size_t j = i;
        std::uint64_t num = 0;
        while (j < s.size() && isdigit(s[j])) {
            num = num * 10 + (s[j] - '0');
            saw_digit = true;
            ++j;
        }
        if (saw_digit) c = num;
        if (j < s.size() && s[j] == '*') ++j;
        std::size_t deg = 0;
        if (j < s.size() && s[j] == 'x') {
            ++j;
            deg = 1;
            if (j < s.size() && s[j] == '^') {
                ++j;
                std::size_t e = 0;
                while (j < s.size() && isdigit(s[j])) e = e * 10 + (s[j++] - '0');
                deg = e;
            }
        }
        set_coeff(deg, c);
        if (j < s.size()) {
            if (s[j] != '+') throw std::invalid_argument("parse_fp_poly: bad syntax '" + s + "'");
            ++j;
        }
        i = j;
    }
    return FpPoly(std::move(coeffs));
}

FpPoly powmod(FpPoly g, Int k, const FpPoly& f) {
    std::uint64_t p = modulus_of(f);
    FpPoly r = FpPoly::constant(Fp(1, p));
    g = g % f;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * g) % f;
        k >>= 1;
        if (k > 0) g = (g * g) % f;
    }
    return r;
}

FpPoly powmod_x(const FpPoly& f, const Int& k) {
    std::uint64_t p = modulus_of(f);
    return powmod(FpPoly::monomial(Fp(1, p), 1), k, f);
}

FpPoly squarefree_part(const FpPoly& f_in) {
    std::uint64_t p = modulus_of(f_in);
    FpPoly f = f_in.monic();
    if (f.degree() <= 1) return f;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = g_1(x)^p over F_p; take the p-th root and recurse.
        std::vector<Fp> root;
        for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.degree()); ++i)
            root.push_back(f.coeff(i * p));
        return squarefree_part(FpPoly(std::move(root)));
    }
    FpPoly g = gcd(f, d);
    FpPoly sf = f / g;
    if (g.degree() == 0) return sf;
    // Factors of f lost in sf (multiplicity divisible by p) live in g.
    FpPoly rest = squarefree_part(g);
    FpPoly common = gcd(sf, rest);
    return (sf * (rest / common)).monic();
}

namespace {

// Distinct-degree split of a squarefree monic polynomial: list of
// (product-of-irreducibles-of-degree-d, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(const FpPoly& f_in) {
    std::uint64_t p = modulus_of(f_in);
    FpPoly f = f_in;
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly x = FpPoly::monomial(Fp(1, p), 1);
    FpPoly h = x;
    unsigned d = 0;
    while (f.degree() > 0) {
        ++d;
        if (static_cast<long>(2 * d) > f.degree()) {
            out.emplace_back(f, static_cast<unsigned>(f.degree()));
            break;
        }
        h = powmod(h, Int(static_cast<unsigned long>(p)), f);
        FpPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting; fixed seed keeps the whole
// factorization deterministic for a given input.
void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
    std::uint64_t p = modulus_of(f);
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f.monic());
        return;
    }
    std::size_t n = static_cast<std::size_t>(f.degree());
    for (;;) {
        std::vector<Fp> rc(n);
        for (auto& c : rc) c = Fp(rng() % p, p);
        FpPoly r(std::move(rc));
        if (r.degree() < 1) continue;
        FpPoly g = gcd(f, r);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
        FpPoly h;
        if (p == 2) {
            // trace map sum r^(2^i), i < d, over the 2^d-element field
            FpPoly t = r % f, acc = t;
            for (unsigned i = 1; i < d; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            h = acc;
        } else {
            Int e = (pow(Int(static_cast<unsigned long>(p)), d) - 1) / 2;
            h = powmod(r, e, f) - FpPoly::constant(Fp(1, p));
        }
        g = gcd(f, h);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    FpPoly sf = squarefree_part(f);
    if (sf.degree() != f.degree()) return false;
    auto dd = distinct_degree(f.monic());
    return dd.size() == 1 && dd[0].second == static_cast<unsigned>(f.degree());
}

std::vector<PolyFactor> factor_poly(const FpPoly& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("factor_poly: zero polynomial");
    FpPoly f = f_in.monic();
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(0x5f3759df);
    FpPoly sf = squarefree_part(f);
    std::vector<FpPoly> irreducibles;
    for (auto& [prod, d] : distinct_degree(sf)) equal_degree(prod, d, rng, irreducibles);
    std::sort(irreducibles.begin(), irreducibles.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (long i = a.degree(); i >= 0; --i) {
            auto ca = a.coeff(static_cast<std::size_t>(i)).v;
            auto cb = b.coeff(static_cast<std::size_t>(i)).v;
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    for (const auto& g : irreducibles) {
        unsigned mult = 0;
        FpPoly rem = f;
        for (;;) {
            auto [q, r] = divmod(rem, g);
            if (!r.is_zero()) break;
            rem = q;
            ++mult;
        }
        out.push_back({g, mult});
    }
    return out;
}

bool is_primary(const FpPoly& f) {
    if (f.degree() <= 0) return false;
    return is_irreducible(squarefree_part(f));
}

}  // namespace crys
