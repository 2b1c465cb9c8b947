#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crys/certificates.hpp"
#include "crys/reps.hpp"

namespace crys {

/// Element of M-hat = (F M)+ / M+ for the full lattice M = Z^d: a rational
/// vector with every entry canonicalized to [0,1).
class CosetVector {
  public:
    CosetVector() = default;
    explicit CosetVector(std::vector<Rat> v);
    static CosetVector zero(std::size_t dim);

    std::size_t dim() const { return coords_.size(); }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    /// lcm of coordinate denominators.
    Int denominator() const;

    friend CosetVector operator+(const CosetVector& a, const CosetVector& b);
    friend CosetVector operator-(const CosetVector& a, const CosetVector& b);
    friend bool operator==(const CosetVector& a, const CosetVector& b) {
        return a.coords_ == b.coords_;
    }

  private:
    std::vector<Rat> coords_;
};

/// Reduction of a rational vector modulo the integer lattice.
CosetVector reduce_mod_lattice(const std::vector<Rat>& v);

/// Image of a coset vector under an integer matrix, reduced mod 1.
CosetVector act(const IntMat& m, const CosetVector& v);

struct CocycleError : std::runtime_error {
    explicit CocycleError(const std::string& what, std::vector<Rat> residue = {})
        : std::runtime_error(what), residue(std::move(residue)) {}
    std::vector<Rat> residue;
};

/// A 1-cocycle f: G -> M-hat, stored as a complete validated table indexed
/// by element order in the holonomy group, together with the generator
/// values it was built from.
struct Cocycle {
    std::shared_ptr<const Representation> rep;
    std::vector<CosetVector> table;
    std::vector<std::pair<std::string, CosetVector>> gen_values;

    const CosetVector& value(const GroupElement& e) const {
        return table.at(rep->group.index_of(e));
    }
    std::size_t dim() const { return rep->degree; }
};

/// Builds the full table from one value per generator by the cocycle law
/// along canonical words, then checks the law on all |G|^2 pairs and the
/// generator norm conditions; throws CocycleError with the offending
/// residue if inconsistent.
Cocycle extend_cocycle(std::shared_ptr<const Representation> rep,
                       std::vector<std::pair<std::string, CosetVector>> gen_values);

/// The distinguished cocycle of each family:
///  - cyclic / composite: f(g) = (t_1/p_1^{n_1} + ... + t_s/p_s^{n_s}) v
///    with v the first basis vector;
///  - C_p x C_p: f(a), f(b) place the coordinates of (eps-1)^{-1} in the
///    condensed slots;
///  - A_4: f(a) has 1/2 in the two coordinates after the first n+3,
///    f(b) = (1/3) e_1.
Cocycle standard_cocycle(std::shared_ptr<const Representation> rep);

/// The coboundary g -> (g - 1) z for a fixed coset vector z.
Cocycle coboundary_cocycle(std::shared_ptr<const Representation> rep, const CosetVector& z);

/// Pointwise sum (also a cocycle; revalidated).
Cocycle add_cocycles(const Cocycle& f, const Cocycle& g);

/// Decides whether f restricted to the cyclic subgroup <h> is a coboundary:
/// with v a lift of f(h) and N the norm matrix of h, the class of N v in
/// M^h / N M vanishes iff N x = N v has an integer solution. Exact via the
/// Smith normal form; positive verdicts carry z with f(h) = (h-1) z.
SubgroupCheck is_coboundary_on_cyclic(const Cocycle& f, const GroupElement& h);

/// Independent torsion oracle: searches for an integer translate m with
/// N (v + m) = 0; a solution yields the explicit order-q element (h, v+m).
std::optional<TorsionWitness> torsion_element_search(const Cocycle& f, const GroupElement& h);

/// Torsionfreeness of Crys(G; M; f): the restriction to every prime-order
/// subgroup must not be a coboundary. With run_oracle set, the torsion
/// search is run on every prime-order element and agreement recorded.
Certificate certify_torsionfree(const Cocycle& f, bool run_oracle = true);

/// |H^1(<h>, M-hat)| = [M^h : N M], computed via saturated fixed lattice
/// and elementary divisors.
Int h1_order_cyclic(const Representation& rep, const GroupElement& h);

/// Validity certificate for a cocycle table (law on all pairs).
Certificate certify_cocycle_valid(const Cocycle& f);

/// Norm matrix E + image(h) + ... + image(h)^(ord-1).
IntMat norm_matrix(const Representation& rep, const GroupElement& h);

}  // namespace crys
