#pragma once

#include <cstdint>
#include <vector>

#include "crys/poly.hpp"

namespace crys {

/// x^k mod f.
FpPoly powmod_x(const FpPoly& f, const Int& k);

/// g^k mod f.
FpPoly powmod(FpPoly g, Int k, const FpPoly& f);

/// Largest squarefree divisor with the same set of irreducible factors.
FpPoly squarefree_part(const FpPoly& f);

bool is_irreducible(const FpPoly& f);

struct PolyFactor {
    FpPoly factor;  // monic irreducible
    unsigned multiplicity;
};

/// Full factorization into monic irreducibles (distinct-degree plus
/// Cantor-Zassenhaus equal-degree splitting; the internal randomness is
/// seeded deterministically).
std::vector<PolyFactor> factor_poly(const FpPoly& f);

/// True if f is a power of a single irreducible polynomial.
bool is_primary(const FpPoly& f);

}  // namespace crys
