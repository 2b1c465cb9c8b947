#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crys/cohomology.hpp"

namespace crys {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// A uniformly sampled valid cocycle value for the generator of a cyclic
/// group: solves the norm-membership condition through the Smith form, so
/// extension always succeeds.
CosetVector random_cocycle_value(const Representation& rep, std::mt19937_64& rng);

/// Random small integral representation of the cyclic group of order p^n:
/// a conjugated direct sum of the irreducible level blocks with total
/// degree at most max_degree.
Representation random_cyclic_representation(std::uint64_t p, unsigned n,
                                            std::size_t max_degree, std::mt19937_64& rng);

/// Agreement of the coboundary decision with the torsion-element search on
/// randomized cocycles over random modules for C_4 and C_9.
std::vector<SuiteResult> coboundary_agreement_suite(std::uint64_t seed, unsigned count);

/// The structural identity battery: multiplication-matrix power identity,
/// column-embedding identities, the alpha/beta relations, the intertwiner
/// power formula for the glued cyclic family, and the norm-membership and
/// condensed-coordinate identities of the C_p x C_p cocycle.
std::vector<SuiteResult> identity_suite(std::uint64_t seed);

}  // namespace crys
