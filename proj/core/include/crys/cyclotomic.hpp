#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crys/matrix.hpp"
#include "crys/numeric.hpp"

namespace crys {

/// phi(p^i) = p^(i-1) * (p-1); phi(p^0) = 1.
std::size_t phi_prime_power(std::uint64_t p, unsigned level);

/// Ordered basis of K[xi_i] where xi_i is a primitive p^i-th root of unity:
/// B_1 = {1, xi_1, ..., xi_1^(p-2)} and B_i = B_{i-1}, xi_i B_{i-1}, ...,
/// xi_i^(p-1) B_{i-1} in that order. Each basis monomial is recorded by its
/// exponent as a power of xi_i.
struct CycloBasis {
    std::uint64_t p = 0;
    unsigned level = 0;
    // exponents[j] = N with B[j] = xi_level^N; a bijection onto [0, phi).
    std::vector<std::size_t> exponents;

    std::size_t size() const { return exponents.size(); }
    /// Human-readable monomial tag, e.g. "xi2^2*xi1" (exponents in the
    /// tower xi_1, ..., xi_level).
    std::string monomial_name(std::size_t j) const;
};

CycloBasis cyclo_basis(std::uint64_t p, unsigned level);

/// Element of Q(xi_{p^level}) stored by rational coordinates over the
/// ordered basis B_level.
class CycloElement {
  public:
    CycloElement() = default;
    CycloElement(std::uint64_t p, unsigned level, std::vector<Rat> coords);

    static CycloElement zero(std::uint64_t p, unsigned level);
    static CycloElement one(std::uint64_t p, unsigned level);
    /// xi_level^e (e may exceed p^level; reduced).
    static CycloElement root_power(std::uint64_t p, unsigned level, long e);

    std::uint64_t p() const { return p_; }
    unsigned level() const { return level_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_integral() const;

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement operator-() const;
    friend CycloElement operator*(const Rat& c, const CycloElement& a);
    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

    CycloElement inverse() const;
    CycloElement pow(long e) const;

  private:
    std::uint64_t p_ = 0;
    unsigned level_ = 0;
    std::vector<Rat> coords_;
};

/// Matrix of multiplication by xi_i on B_i, over the integers.
/// xi_matrix(p, 0) is the 1x1 identity.
IntMat xi_matrix(std::uint64_t p, unsigned level);

/// Matrix of multiplication by x on B_level, over the rationals.
RatMat mult_matrix(const CycloElement& x);

/// The phi(p^i) x phi(p^j) matrix whose columns are all zero except the
/// last, which holds the coordinates of x (an element at level i) in B_i.
/// Requires i <= j.
RatMat column_embed(const CycloElement& x, unsigned target_level);

/// Integer version of column_embed for integral x.
IntMat column_embed_int(const CycloElement& x, unsigned target_level);

/// alpha_s = (eps^(p-s) - 1)/(eps - 1) = 1 + eps + ... + eps^(p-s-1), an
/// integral element of Q(eps), eps a primitive p-th root. alpha_p = 0.
CycloElement alpha_element(std::uint64_t p, unsigned s);

/// beta_s = (eps^s - 1)/(eps - 1) = 1 + eps + ... + eps^(s-1).
CycloElement beta_element(std::uint64_t p, unsigned s);

}  // namespace crys
