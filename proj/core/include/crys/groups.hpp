#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crys/numeric.hpp"

namespace crys {

enum class GroupFamily { Cyclic, BiElementary, Alt4 };

/// Group element in family-specific normal form:
///  - Cyclic: exponent per prime-power factor;
///  - BiElementary (C_p x C_p): pair (i, j) mod p;
///  - Alt4: permutation of {0,1,2,3} (images).
struct GroupElement {
    std::vector<std::uint32_t> data;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct CyclicFactor {
    std::uint64_t p;
    unsigned n;
    std::uint64_t order() const;
};

/// One of the three finite holonomy families: cyclic with given prime-power
/// factors, C_p x C_p, or A_4 realized as even permutations with
/// a = (12)(34), b = (123). Products follow the left-action convention
/// ((gh) acts as g after h), so representations satisfy
/// image(gh) = image(g) * image(h).
class HolonomyGroup {
  public:
    static HolonomyGroup cyclic(std::vector<CyclicFactor> factors);
    /// Enforces the constraints n_1 >= 3 and n_i >= 2 (i >= 2) used by the
    /// torsionfree composite construction; throws otherwise.
    static HolonomyGroup cyclic_constrained(std::vector<CyclicFactor> factors);
    static HolonomyGroup bi_elementary(std::uint64_t p);
    static HolonomyGroup alt4();

    GroupFamily family() const { return family_; }
    std::uint64_t order() const { return order_; }
    const std::vector<CyclicFactor>& factors() const { return factors_; }
    std::uint64_t p() const { return factors_.at(0).p; }

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, long e) const;
    std::uint64_t element_order(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const { return a == identity(); }

    /// Named generators. Cyclic: a1..as plus "a" = a1*...*as; bi-elementary
    /// and Alt4: "a", "b".
    std::vector<std::pair<std::string, GroupElement>> generators() const;
    GroupElement generator(const std::string& name) const;

    /// Defining relators as words over generator names; each must evaluate
    /// to the identity.
    std::vector<std::vector<std::pair<std::string, long>>> relators() const;

    std::size_t size() const { return elements_.size(); }
    const GroupElement& at(std::size_t idx) const { return elements_.at(idx); }
    std::size_t index_of(const GroupElement& e) const;
    const std::vector<GroupElement>& elements() const { return elements_; }

    /// Canonical word over named generators whose product is e.
    std::vector<std::pair<std::string, long>> word_of(const GroupElement& e) const;

    /// All elements of prime order, each with its order.
    std::vector<std::pair<GroupElement, std::uint64_t>> prime_order_elements() const;

    /// One generator per distinct prime-order cyclic subgroup.
    std::vector<GroupElement> prime_order_subgroup_reps() const;

    std::string format(const GroupElement& e) const;
    GroupElement parse(const std::string& s) const;

    friend bool operator==(const HolonomyGroup& a, const HolonomyGroup& b) {
        return a.family_ == b.family_ && a.factors_ == b.factors_;
    }

  private:
    GroupFamily family_;
    std::vector<CyclicFactor> factors_;  // Cyclic: all; BiElementary: {p,1}x2
    std::uint64_t order_ = 0;
    std::vector<GroupElement> elements_;

    void enumerate();
};

inline bool operator==(const CyclicFactor& a, const CyclicFactor& b) {
    return a.p == b.p && a.n == b.n;
}

GroupElement evaluate_word(const HolonomyGroup& g,
                           const std::vector<std::pair<std::string, long>>& word);

bool is_prime(std::uint64_t p);

}  // namespace crys
