#pragma once

#include <vector>

#include "crys/certificates.hpp"
#include "crys/fp_algebra.hpp"
#include "crys/reps.hpp"

namespace crys {

/// Saturated Z-basis of {X : X image(g) = image(g) X for all generators g},
/// computed as iterated saturated kernels of the Sylvester systems. For
/// tensor-product bundles of coprime cyclic factors the centralizer
/// factorizes as the Kronecker product of the per-factor centralizers, and
/// is assembled that way. Every returned matrix is re-verified to commute
/// with every generator image.
std::vector<IntMat> centralizer_basis(const Representation& rep);

/// The mod-p endomorphism algebra: structure constants of the saturated
/// centralizer lattice reduced mod p (the reduction keeps full rank by
/// saturation, which is verified).
struct EndoAlgebra {
    std::vector<IntMat> z_basis;
    std::uint64_t p = 0;
    FpAlgebra algebra;
    FpVec identity_coords;

    /// The algebra element sum c_i B_i as an integer matrix with entries
    /// reduced into [0, p).
    IntMat realize(const FpVec& coords) const;
};

EndoAlgebra endo_algebra_mod_p(const Representation& rep, std::uint64_t p);

/// Locality of the mod-p endomorphism algebra; negative verdicts carry an
/// explicit idempotent realized as an integer matrix.
Certificate is_local_mod_p(const EndoAlgebra& alg);

/// Indecomposability certificate:
///  - single-prime-power, bi-elementary and A_4 bundles: locality of the
///    mod-p endomorphism algebra (sufficient over Z_p, hence over Z_(p)
///    and Z);
///  - tensor-product bundles over composite cyclic groups: per-factor
///    locality certificates at each factor's own prime, combined through
///    the degree-divisibility argument, which needs gcd(m, |G|) = 1
///    (refused otherwise);
///  - glued cyclic bundles also report the parameter-matrix route: the
///    invariant factors of A mod p, with locality equivalent to a single
///    primary factor.
Certificate certify_indecomposable(const Representation& rep, std::uint64_t p);

}  // namespace crys
