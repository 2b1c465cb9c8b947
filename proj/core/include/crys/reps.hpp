#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crys/cyclotomic.hpp"
#include "crys/groups.hpp"
#include "crys/matrix.hpp"

namespace crys {

enum class RingMarker { Z, ZLocal, ZAdic };

std::string to_string(RingMarker r);
RingMarker parse_ring_marker(const std::string& s);

enum class RepFamily {
    CyclicPrimePower,  // glued extension over H_{p^n}, degree m*p^n
    CompositeCyclic,   // tensor product over a composite cyclic group
    BiElementary,      // C_p x C_p family, degree (3p-2)n + p^2
    Alt4,              // A_4 family, degree 12n
    Custom,
};

/// Construction metadata carried by a Representation; the certificate
/// layer keys some decisions (tensor factorization, parameter matrices)
/// off this.
struct RepProvenance {
    RepFamily family = RepFamily::Custom;
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned m = 1;
    std::optional<IntMat> parameter_matrix;  // the A of the glued cyclic family
    std::vector<CyclicFactor> factors;
    bool coprime_ok = true;  // gcd(m, |G|) == 1 where applicable
    // tensor factors of a composite representation, one per cyclic factor
    std::vector<std::shared_ptr<const struct Representation>> tensor_factors;
};

/// Integral matrix representation of a holonomy group, stored by generator
/// images. Immutable after construction.
struct Representation {
    HolonomyGroup group;
    std::size_t degree = 0;
    RingMarker ring = RingMarker::Z;
    std::vector<std::pair<std::string, IntMat>> gen_images;
    RepProvenance prov;

    const IntMat& image_of_generator(const std::string& name) const;
    /// Image of an arbitrary element (product of generator image powers
    /// along the element's canonical word).
    IntMat image(const GroupElement& e) const;
};

struct RepReport {
    bool relations_ok = false;
    bool faithful = false;
    bool unit_determinants = false;
    std::string detail;
    bool all_ok() const { return relations_ok && faithful && unit_determinants; }
};

/// Degree-m*p^n glued representation of the cyclic group of order p^n
/// (n >= 2): block triangular with diagonal E_m (x) delta_0 + E_m (x)
/// delta_1 and E_m (x) delta_2 + ... + E_m (x) delta_n, coupled by the
/// intertwining matrix built from the column embeddings of 1. For n = 2 the
/// parameter matrix degenerates to the scalar 1 and m must be 1; for n > 2
/// it defaults to the lower Jordan block J_m (m > 1) or the scalar 1 (m = 1).
Representation cyclic_prime_power_rep(std::uint64_t p, unsigned n, unsigned m,
                                      std::optional<IntMat> a_param = std::nullopt);

/// Tensor product of the per-factor cyclic representations: the first
/// factor carries the multiplicity parameter m, the others m = 1. Theorem-
/// style factor constraints (n_1 >= 3, n_i >= 2) are enforced.
Representation composite_cyclic_rep(const std::vector<CyclicFactor>& factors, unsigned m);

/// The C_p x C_p family (p odd): n = 0 gives the degree-p^2 block
/// representation; n >= 1 glues a degree-(3p-2)n layer on top, total
/// degree (3p-2)n + p^2.
Representation bi_elementary_rep(std::uint64_t p, unsigned n,
                                 RingMarker ring = RingMarker::Z);

/// The A_4 family of degree 12n built from the four unimodular irreducible
/// blocks and the degree-11 glued block.
Representation alt4_rep(unsigned n);

/// Two-block glued representation a -> [[xi_i, <alpha>], [0, xi_j]] of the
/// cyclic group of order p^n, for alpha integral of level i (0 <= i < j <= n).
Representation glued_pair_rep(std::uint64_t p, unsigned n, unsigned level_i,
                              unsigned level_j, const CycloElement& alpha);

/// Direct sum of the irreducible cyclic blocks delta_{i} for i in levels.
Representation cyclic_block_sum_rep(std::uint64_t p, unsigned n,
                                    const std::vector<unsigned>& levels);

/// Relations, faithfulness (pairwise distinct images), and unit
/// determinants, each checked by exact matrix arithmetic.
RepReport verify_representation(const Representation& rep);

/// Restriction to the cyclic subgroup generated by h (h != 1): a cyclic
/// group of order ord(h) whose factor generators map to powers of the
/// image of h.
Representation restrict_to_cyclic(const Representation& rep, const GroupElement& h);

/// Similarity of A mod p and B mod p over F_p, decided by invariant
/// factor lists of x*E - A.
bool params_equivalent_mod_p(const IntMat& a, const IntMat& b, std::uint64_t p);

/// Block layout helpers for the C_p x C_p family: the condensed coordinate
/// view splits the p^2 base coordinates into p+1 slots of width p-1 plus a
/// final width-1 slot.
struct CondensedLayout {
    std::uint64_t p;
    std::size_t slot_offset(unsigned s) const;  // 1-based slot, 1..p+2
    std::size_t slot_width(unsigned s) const;
};

/// The p+2 irreducible C_p x C_p blocks (trivial, the three gamma's, and
/// rho_i for i = 2..p-1) as generator-image pairs, in the order used by the
/// degree-p^2 construction's tau: rho_{p-1}, ..., rho_2, gamma_3, gamma_2,
/// gamma_1, and finally gamma_0.
std::vector<std::pair<IntMat, IntMat>> bi_elementary_irreducibles(std::uint64_t p);

}  // namespace crys
