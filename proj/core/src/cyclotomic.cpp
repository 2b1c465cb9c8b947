#include "crys/cyclotomic.hpp"

#include <stdexcept>

#include "crys/ratlinalg.hpp"

namespace crys {

std::size_t phi_prime_power(std::uint64_t p, unsigned level) {
    if (level == 0) return 1;
    std::size_t r = p - 1;
    for (unsigned i = 1; i < level; ++i) r *= p;
    return r;
}

namespace {

std::size_t pow_sz(std::uint64_t p, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= p;
    return r;
}

void check_prime(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("cyclotomic: p must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("cyclotomic: p must be prime");
}

}  // namespace

CycloBasis cyclo_basis(std::uint64_t p, unsigned level) {
    check_prime(p);
    CycloBasis b;
    b.p = p;
    b.level = level;
    if (level == 0) {
        b.exponents = {0};
        return b;
    }
    // B_1 = 1, xi_1, ..., xi_1^(p-2); thereafter block k of B_i is
    // xi_i^k * B_{i-1}, so exponents interleave as N = k + p * N'.
    std::vector<std::size_t> prev(p - 1);
    for (std::size_t e = 0; e + 1 < p; ++e) prev[e] = e;
    for (unsigned i = 2; i <= level; ++i) {
        std::vector<std::size_t> cur;
        cur.reserve(prev.size() * p);
        for (std::uint64_t k = 0; k < p; ++k)
            for (std::size_t n : prev) cur.push_back(k + p * n);
        prev = std::move(cur);
    }
    b.exponents = std::move(prev);
    return b;
}

std::string CycloBasis::monomial_name(std::size_t j) const {
    std::size_t n = exponents.at(j);
    if (n == 0) return "1";
    std::string s;
    // digit d_0 is the xi_level exponent, d_1 the xi_{level-1} exponent, ...
    unsigned lev = level;
    std::size_t rem = n;
    while (rem > 0 && lev >= 1) {
        std::size_t d = rem % p;
        rem /= p;
        if (d > 0) {
            if (!s.empty()) s += "*";
            s += "xi" + std::to_string(lev);
            if (d > 1) s += "^" + std::to_string(d);
        }
        --lev;
    }
    return s;
}

namespace {

// Reduce power-basis coefficients of xi^0..xi^(bound-1), bound <= 2*p^i,
// into the range [0, phi) using xi^(p^i) = 1 and the p^i-th cyclotomic
// polynomial xi^((p-1)p^(i-1)) = -(1 + xi^(p^(i-1)) + ... + xi^((p-2)p^(i-1))).
void reduce_powers(std::vector<Rat>& pw, std::uint64_t p, unsigned level) {
    std::size_t order = pow_sz(p, level);
    std::size_t phi = phi_prime_power(p, level);
    std::size_t step = order / p;  // p^(i-1)
    if (pw.size() > order) {
        for (std::size_t e = order; e < pw.size(); ++e) pw[e % order] += pw[e];
        pw.resize(order);
    }
    for (std::size_t e = pw.size(); e-- > phi;) {
        if (pw[e] == 0) continue;
        Rat c = pw[e];
        pw[e] = 0;
        std::size_t r = e - phi;  // < p^(i-1)
        for (std::uint64_t k = 0; k + 1 < p; ++k) pw[r + k * step] -= c;
    }
    pw.resize(phi);
}

std::vector<Rat> to_power_coords(const CycloElement& x, const CycloBasis& b) {
    std::vector<Rat> pw(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) pw[b.exponents[j]] = x.coords()[j];
    return pw;
}

CycloElement from_power_coords(std::uint64_t p, unsigned level, std::vector<Rat> pw) {
    reduce_powers(pw, p, level);
    CycloBasis b = cyclo_basis(p, level);
    std::vector<Rat> coords(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) coords[j] = pw[b.exponents[j]];
    return CycloElement(p, level, std::move(coords));
}

}  // namespace

CycloElement::CycloElement(std::uint64_t p, unsigned level, std::vector<Rat> coords)
    : p_(p), level_(level), coords_(std::move(coords)) {
    check_prime(p);
    if (coords_.size() != phi_prime_power(p, level))
        throw std::invalid_argument("CycloElement: coordinate length mismatch");
}

CycloElement CycloElement::zero(std::uint64_t p, unsigned level) {
    return CycloElement(p, level, std::vector<Rat>(phi_prime_power(p, level)));
}

CycloElement CycloElement::one(std::uint64_t p, unsigned level) {
    std::vector<Rat> c(phi_prime_power(p, level));
    c[0] = 1;
    return CycloElement(p, level, std::move(c));
}

CycloElement CycloElement::root_power(std::uint64_t p, unsigned level, long e) {
    std::size_t order = pow_sz(p, level);
    long r = e % static_cast<long>(order);
    if (r < 0) r += order;
    std::vector<Rat> pw(static_cast<std::size_t>(r) + 1);
    pw.back() = 1;
    return from_power_coords(p, level, std::move(pw));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_integral() const {
    for (const auto& c : coords_)
        if (!is_integer(c)) return false;
    return true;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    if (a.p_ != b.p_ || a.level_ != b.level_)
        throw std::invalid_argument("CycloElement: level mismatch");
    std::vector<Rat> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return CycloElement(a.p_, a.level_, std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    return a + (-b);
}

CycloElement CycloElement::operator-() const {
    std::vector<Rat> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return CycloElement(p_, level_, std::move(c));
}

CycloElement operator*(const Rat& c, const CycloElement& a) {
    std::vector<Rat> r(a.coords_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.coords_[i];
    return CycloElement(a.p_, a.level_, std::move(r));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    if (a.p_ != b.p_ || a.level_ != b.level_)
        throw std::invalid_argument("CycloElement: level mismatch");
    CycloBasis basis = cyclo_basis(a.p_, a.level_);
    std::vector<Rat> pa = to_power_coords(a, basis), pb = to_power_coords(b, basis);
    std::vector<Rat> prod(2 * basis.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i] == 0) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) {
            if (pb[j] == 0) continue;
            prod[i + j] += pa[i] * pb[j];
        }
    }
    return from_power_coords(a.p_, a.level_, std::move(prod));
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.p_ == b.p_ && a.level_ == b.level_ && a.coords_ == b.coords_;
}

CycloElement CycloElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElement r = CycloElement::one(p_, level_), base = *this;
    auto u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) r = r * base;
        base = base * base;
        u >>= 1;
    }
    return r;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElement::inverse: not invertible");
    // Extended Euclid in Q[x] against the p^level-th cyclotomic polynomial
    // 1 + x^(p^(l-1)) + ... + x^((p-1)p^(l-1)) (x - 1 at level 0).
    CycloBasis basis = cyclo_basis(p_, level_);
    std::vector<Rat> pw = to_power_coords(*this, basis);
    RatPoly f{std::vector<Rat>(pw.begin(), pw.end())};
    std::vector<Rat> cyc;
    if (level_ == 0) {
        cyc = {Rat(-1), Rat(1)};
    } else {
        std::size_t step = pow_sz(p_, level_ - 1);
        cyc.assign((p_ - 1) * step + 1, Rat(0));
        for (std::uint64_t k = 0; k < p_; ++k) cyc[k * step] = 1;
    }
    RatPoly phi_poly{std::move(cyc)};
    auto [g, s, t] = ext_gcd(f, phi_poly);
    if (g.degree() != 0)
        throw std::domain_error("CycloElement::inverse: gcd with cyclotomic polynomial not 1");
    // s * f = 1 mod phi, so s(xi) is the inverse.
    std::vector<Rat> inv_pw(s.coeffs().begin(), s.coeffs().end());
    inv_pw.resize(std::max(inv_pw.size(), basis.size()));
    return from_power_coords(p_, level_, std::move(inv_pw));
}

IntMat xi_matrix(std::uint64_t p, unsigned level) {
    check_prime(p);
    if (level == 0) return IntMat::identity(1);
    CycloElement xi = CycloElement::root_power(p, level, 1);
    return to_integer(mult_matrix(xi));
}

RatMat mult_matrix(const CycloElement& x) {
    CycloBasis basis = cyclo_basis(x.p(), x.level());
    std::size_t n = basis.size();
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        CycloElement bj = CycloElement::root_power(x.p(), x.level(),
                                                   static_cast<long>(basis.exponents[j]));
        CycloElement col = x * bj;
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coords()[i];
    }
    return m;
}

RatMat column_embed(const CycloElement& x, unsigned target_level) {
    if (x.level() > target_level)
        throw std::invalid_argument("column_embed: element level exceeds target level");
    std::size_t rows = phi_prime_power(x.p(), x.level());
    std::size_t cols = phi_prime_power(x.p(), target_level);
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m(i, cols - 1) = x.coords()[i];
    return m;
}

IntMat column_embed_int(const CycloElement& x, unsigned target_level) {
    return to_integer(column_embed(x, target_level));
}

CycloElement alpha_element(std::uint64_t p, unsigned s) {
    if (s < 1 || s > p) throw std::invalid_argument("alpha_element: need 1 <= s <= p");
    CycloElement acc = CycloElement::zero(p, 1);
    for (unsigned t = 0; t + s < p; ++t)
        acc = acc + CycloElement::root_power(p, 1, t);
    return acc;
}

CycloElement beta_element(std::uint64_t p, unsigned s) {
    if (s < 1 || s > p) throw std::invalid_argument("beta_element: need 1 <= s <= p");
    CycloElement acc = CycloElement::zero(p, 1);
    for (unsigned t = 0; t < s; ++t)
        acc = acc + CycloElement::root_power(p, 1, t);
    return acc;
}

}  // namespace crys
