#include "crys/crys_group.hpp"

#include <stdexcept>

namespace crys {

CrysGroup::CrysGroup(std::shared_ptr<const Representation> rep, Cocycle cocycle)
    : rep_(std::move(rep)), cocycle_(std::move(cocycle)) {
    if (cocycle_.rep.get() != rep_.get())
        throw std::invalid_argument("CrysGroup: cocycle bound to a different representation");
    for (const auto& h : rep_->group.prime_order_subgroup_reps()) {
        if (!is_coboundary_on_cyclic(cocycle_, h).restriction_is_coboundary) {
            nonsplit_witnessed_ = true;
            break;
        }
    }
}

CrysElement CrysGroup::identity() const {
    return {rep_->group.identity(), std::vector<Rat>(dimension())};
}

CrysElement CrysGroup::standard_element(const GroupElement& g) const {
    return {g, cocycle_.value(g).coords()};
}

CrysElement CrysGroup::element(const GroupElement& g, std::vector<Rat> x) const {
    if (x.size() != dimension()) throw std::invalid_argument("element: dimension mismatch");
    std::vector<Rat> diff(x.size());
    const auto& t = cocycle_.value(g).coords();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (frac(x[i]) != t[i])
            throw std::invalid_argument("element: translation not in the coset T(g)");
    return {g, std::move(x)};
}

CrysElement CrysGroup::multiply(const CrysElement& a, const CrysElement& b) const {
    IntMat ga = rep_->image(a.g);
    std::vector<Rat> x(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        Rat acc = a.x[i];
        for (std::size_t j = 0; j < dimension(); ++j)
            if (ga(i, j) != 0) acc += Rat(ga(i, j)) * b.x[j];
        x[i] = acc;
    }
    return {rep_->group.multiply(a.g, b.g), std::move(x)};
}

CrysElement CrysGroup::inverse(const CrysElement& a) const {
    GroupElement ginv = rep_->group.inverse(a.g);
    IntMat m = rep_->image(ginv);
    std::vector<Rat> x(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        Rat acc;
        for (std::size_t j = 0; j < dimension(); ++j)
            if (m(i, j) != 0) acc += Rat(m(i, j)) * a.x[j];
        x[i] = -acc;
    }
    return {ginv, std::move(x)};
}

std::optional<std::uint64_t> CrysGroup::order(const CrysElement& a) const {
    std::uint64_t k = rep_->group.element_order(a.g);
    // a^k = (1, t); the element has order k iff t = 0, else infinite
    // (nonzero translations are torsionfree).
    CrysElement power = identity();
    for (std::uint64_t i = 0; i < k; ++i) power = multiply(power, a);
    if (!rep_->group.is_identity(power.g))
        throw std::logic_error("order: group part failed to close");
    for (const auto& c : power.x)
        if (c != 0) return std::nullopt;
    return k;
}

std::string CrysGroup::format(const CrysElement& e) const {
    std::string s = "(" + rep_->group.format(e.g) + ", [";
    for (std::size_t i = 0; i < e.x.size(); ++i) {
        if (i) s += ", ";
        s += to_string(e.x[i]);
    }
    return s + "])";
}

CrysGroup build_crys(const FamilySpec& spec) {
    std::shared_ptr<const Representation> rep;
    if (const auto* t1 = std::get_if<Theorem1Spec>(&spec)) {
        rep = std::make_shared<Representation>(composite_cyclic_rep(t1->factors, t1->m));
    } else if (const auto* t2 = std::get_if<Theorem2Spec>(&spec)) {
        rep = std::make_shared<Representation>(bi_elementary_rep(t2->p, t2->n, t2->ring));
    } else {
        const auto& t3 = std::get<Theorem3Spec>(spec);
        rep = std::make_shared<Representation>(alt4_rep(t3.n));
    }
    Cocycle f = standard_cocycle(rep);
    return CrysGroup(std::move(rep), std::move(f));
}

}  // namespace crys
