#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crys/fp.hpp"
#include "crys/groups.hpp"
#include "crys/matrix.hpp"
#include "crys/numeric.hpp"

namespace crys {

enum class CertKind { TorsionFree, Indecomposable, CocycleValid, Decomposable, Split };

std::string to_string(CertKind k);

/// An explicit finite-order element (g, x) of the extension group, the
/// witness payload for a failed torsionfreeness check.
struct TorsionWitness {
    GroupElement g;
    std::uint64_t order = 0;
    std::vector<Rat> translation;
};

/// Per-subgroup record of the coboundary decision for the restriction of a
/// cocycle to one prime-order cyclic subgroup.
struct SubgroupCheck {
    GroupElement generator;
    std::uint64_t prime = 0;
    bool restriction_is_coboundary = false;
    // z with f(h) = (h-1) z in M-hat; present on positive verdicts
    std::optional<std::vector<Rat>> coboundary_witness;
    // elementary divisor at which integer solvability failed
    std::optional<Int> obstruction_divisor;
    bool oracle_ran = false;
    bool oracle_found_torsion = false;
};

/// Machine-checkable verdict bundle. Every positive verdict carries enough
/// data to re-verify by direct multiplication or substitution.
struct Certificate {
    CertKind kind = CertKind::CocycleValid;
    bool verdict = false;
    bool checked_against_oracle = false;
    std::uint64_t prime = 0;  // the p a mod-p certificate was computed at

    std::vector<SubgroupCheck> subgroup_checks;
    std::optional<TorsionWitness> torsion_witness;

    // endomorphism-algebra payloads
    std::optional<IntMat> idempotent_witness;   // integral lift, entries in [0,p)
    std::optional<unsigned> radical_dim;
    std::optional<unsigned> residue_field_degree;
    std::vector<std::string> invariant_factors;  // parameter-matrix route
    std::vector<Certificate> sub_certificates;   // per-tensor-factor route

    std::vector<std::string> notes;
};

}  // namespace crys
