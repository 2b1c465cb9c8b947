#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crys/cohomology.hpp"
#include "crys/endo.hpp"
#include "crys/reps.hpp"

namespace crys {

/// Element (g, x) of the extension group: a holonomy part and an exact
/// rational translation with x in the coset T(g).
struct CrysElement {
    GroupElement g;
    std::vector<Rat> x;
    friend bool operator==(const CrysElement&, const CrysElement&) = default;
};

/// The group Crys(G; M; T): a faithful integral representation, the
/// distinguished validated 1-cocycle, and the attached certificates.
/// Multiplication follows (g, x)(g', x') = (gg', g x' + x).
class CrysGroup {
  public:
    CrysGroup(std::shared_ptr<const Representation> rep, Cocycle cocycle);

    const Representation& rep() const { return *rep_; }
    std::shared_ptr<const Representation> rep_ptr() const { return rep_; }
    const Cocycle& cocycle() const { return cocycle_; }
    std::size_t dimension() const { return rep_->degree; }

    /// True when some prime-order restriction of the cocycle is not a
    /// coboundary (so the extension cannot split).
    bool nonsplit_witnessed() const { return nonsplit_witnessed_; }

    CrysElement identity() const;
    /// The canonical element (g, lift of T(g)).
    CrysElement standard_element(const GroupElement& g) const;
    /// Any element (g, x) with x congruent to T(g) mod the lattice.
    CrysElement element(const GroupElement& g, std::vector<Rat> x) const;
    CrysElement multiply(const CrysElement& a, const CrysElement& b) const;
    CrysElement inverse(const CrysElement& a) const;
    /// Finite order of the element, or nullopt for infinite order.
    std::optional<std::uint64_t> order(const CrysElement& a) const;

    std::string format(const CrysElement& e) const;

    std::vector<Certificate>& certificates() { return certs_; }
    const std::vector<Certificate>& certificates() const { return certs_; }

  private:
    std::shared_ptr<const Representation> rep_;
    Cocycle cocycle_;
    bool nonsplit_witnessed_ = false;
    std::vector<Certificate> certs_;
};

/// Family parameter bundles for the three constructions.
struct Theorem1Spec {
    std::vector<CyclicFactor> factors;
    unsigned m = 1;
};
struct Theorem2Spec {
    std::uint64_t p = 3;
    unsigned n = 0;
    RingMarker ring = RingMarker::Z;
};
struct Theorem3Spec {
    unsigned n = 1;
};
using FamilySpec = std::variant<Theorem1Spec, Theorem2Spec, Theorem3Spec>;

/// Wires the family's representation builder to its distinguished cocycle.
CrysGroup build_crys(const FamilySpec& spec);

}  // namespace crys
