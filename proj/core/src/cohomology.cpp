#include "crys/cohomology.hpp"

#include <algorithm>

#include "crys/cyclotomic.hpp"
#include "crys/ratlinalg.hpp"
#include "crys/snf.hpp"

namespace crys {

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::TorsionFree: return "torsionfree";
        case CertKind::Indecomposable: return "indecomposable";
        case CertKind::CocycleValid: return "cocycle-valid";
        case CertKind::Decomposable: return "decomposable";
        case CertKind::Split: return "split";
    }
    throw std::logic_error("unreachable");
}

CosetVector::CosetVector(std::vector<Rat> v) : coords_(std::move(v)) {
    for (auto& c : coords_) c = frac(c);
}

CosetVector CosetVector::zero(std::size_t dim) {
    return CosetVector(std::vector<Rat>(dim));
}

bool CosetVector::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

Int CosetVector::denominator() const {
    Int l = 1;
    for (const auto& c : coords_) l = lcm(l, c.get_den());
    return l;
}

CosetVector operator+(const CosetVector& a, const CosetVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("CosetVector: dimension mismatch");
    std::vector<Rat> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coords_[i] + b.coords_[i];
    return CosetVector(std::move(r));
}

CosetVector operator-(const CosetVector& a, const CosetVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("CosetVector: dimension mismatch");
    std::vector<Rat> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coords_[i] - b.coords_[i];
    return CosetVector(std::move(r));
}

CosetVector reduce_mod_lattice(const std::vector<Rat>& v) { return CosetVector(v); }

CosetVector act(const IntMat& m, const CosetVector& v) {
    std::vector<Rat> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat acc;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) acc += Rat(m(i, j)) * v.coords()[j];
        out[i] = acc;
    }
    return CosetVector(std::move(out));
}

IntMat norm_matrix(const Representation& rep, const GroupElement& h) {
    std::uint64_t q = rep.group.element_order(h);
    IntMat himg = rep.image(h);
    IntMat acc = IntMat::identity(rep.degree);
    IntMat power = IntMat::identity(rep.degree);
    for (std::uint64_t j = 1; j < q; ++j) {
        power = power * himg;
        acc = acc + power;
    }
    return acc;
}

namespace {

std::string format_residue(const std::vector<Rat>& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ", ";
        s += to_string(r[i]);
    }
    return s + ")";
}

// Exhaustive check of the cocycle law f(gh) = g f(h) + f(g). Uses a
// common-denominator integer representation with an int64 fast path so the
// large-degree bundles stay cheap.
void check_all_pairs(const Cocycle& f) {
    const auto& g = f.rep->group;
    std::size_t d = f.dim();
    Int den = 1;
    for (const auto& v : f.table) den = lcm(den, v.denominator());

    // integer numerators u_g with f(g) = u_g / den
    std::vector<std::vector<Int>> nums(g.size(), std::vector<Int>(d));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rat& c = f.table[i].coords()[j];
            nums[i][j] = c.get_num() * (den / c.get_den());
        }

    // multiplication table for the inner loop
    std::vector<std::vector<std::size_t>> mult(g.size(), std::vector<std::size_t>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            mult[i][j] = g.index_of(g.multiply(g.at(i), g.at(j)));

    for (std::size_t i = 0; i < g.size(); ++i) {
        IntMat img = f.rep->image(g.at(i));
        bool small =
            max_abs(img) * den * Int(static_cast<unsigned long>(d + 1)) < (Int(1) << 60);
        std::vector<long> img64;
        std::vector<std::vector<long>> nums64;
        long den64 = 0;
        if (small) {
            den64 = static_cast<long>(den.get_si());
            img64.resize(d * d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) img64[r * d + c] = img(r, c).get_si();
            nums64.assign(g.size(), std::vector<long>(d));
            for (std::size_t k = 0; k < g.size(); ++k)
                for (std::size_t c = 0; c < d; ++c) nums64[k][c] = nums[k][c].get_si();
        }
        for (std::size_t j = 0; j < g.size(); ++j) {
            bool bad = false;
            if (small) {
                const auto& uh = nums64[j];
                const auto& ug = nums64[i];
                const auto& ugh = nums64[mult[i][j]];
                for (std::size_t r = 0; r < d && !bad; ++r) {
                    long acc = 0;
                    const long* row = img64.data() + r * d;
                    for (std::size_t c = 0; c < d; ++c)
                        if (row[c] != 0) acc += row[c] * uh[c];
                    long rem = (acc + ug[r] - ugh[r]) % den64;
                    if (rem != 0) bad = true;
                }
            } else {
                const auto& uh = nums[j];
                const auto& ug = nums[i];
                const auto& ugh = nums[mult[i][j]];
                for (std::size_t r = 0; r < d && !bad; ++r) {
                    Int acc = 0;
                    for (std::size_t c = 0; c < d; ++c)
                        if (img(r, c) != 0) acc += img(r, c) * uh[c];
                    if (mod(acc + ug[r] - ugh[r], den) != 0) bad = true;
                }
            }
            if (bad)
                throw CocycleError("not a cocycle: law fails at pair (" + g.format(g.at(i)) +
                                   ", " + g.format(g.at(j)) + ")");
        }
    }
}

}  // namespace

Cocycle extend_cocycle(std::shared_ptr<const Representation> rep,
                       std::vector<std::pair<std::string, CosetVector>> gen_values) {
    const auto& g = rep->group;
    for (const auto& [name, v] : gen_values) {
        rep->image_of_generator(name);  // validates the name
        if (v.dim() != rep->degree)
            throw std::invalid_argument("extend_cocycle: value dimension mismatch");
    }

    // Norm condition per generator: (g^{k-1} + ... + 1) f(g) integral for
    // g of order k.
    for (const auto& [name, v] : gen_values) {
        GroupElement e = g.generator(name);
        IntMat n = norm_matrix(*rep, e);
        CosetVector residue = act(n, v);
        if (!residue.is_zero())
            throw CocycleError("not a cocycle: norm relation violated at generator " + name +
                                   ", residue " + format_residue(residue.coords()),
                               residue.coords());
    }

    Cocycle f;
    f.rep = std::move(rep);
    f.gen_values = std::move(gen_values);
    auto value_of_gen = [&f](const std::string& name) -> const CosetVector& {
        for (const auto& [n, v] : f.gen_values)
            if (n == name) return v;
        throw std::invalid_argument("extend_cocycle: missing value for generator " + name);
    };
    f.table.assign(g.size(), CosetVector::zero(f.rep->degree));
    for (std::size_t i = 0; i < g.size(); ++i) {
        // f accumulated along the canonical word: f(w s) = w f(s) + f(w)
        CosetVector acc = CosetVector::zero(f.rep->degree);
        IntMat w = IntMat::identity(f.rep->degree);
        for (const auto& [name, exp] : g.word_of(g.at(i))) {
            const IntMat& img = f.rep->image_of_generator(name);
            const CosetVector& fv = value_of_gen(name);
            for (long t = 0; t < exp; ++t) {
                acc = acc + act(w, fv);
                w = w * img;
            }
        }
        f.table[i] = acc;
    }

    check_all_pairs(f);
    return f;
}

Cocycle standard_cocycle(std::shared_ptr<const Representation> rep) {
    const auto& g = rep->group;
    std::size_t d = rep->degree;
    std::vector<std::pair<std::string, CosetVector>> gen_values;

    switch (rep->prov.family) {
        case RepFamily::CyclicPrimePower:
        case RepFamily::CompositeCyclic: {
            for (std::size_t i = 0; i < g.factors().size(); ++i) {
                std::vector<Rat> v(d);
                v[0] = Rat(Int(1), Int(static_cast<unsigned long>(g.factors()[i].order())));
                gen_values.emplace_back(g.generators()[i].first, CosetVector(std::move(v)));
            }
            break;
        }
        case RepFamily::BiElementary: {
            std::uint64_t p = rep->prov.p;
            CycloElement eps = CycloElement::root_power(p, 1, 1);
            CycloElement alpha = (eps - CycloElement::one(p, 1)).inverse();
            CondensedLayout layout{p};
            std::vector<Rat> va(d), vb(d);
            // f(a): <alpha> in the condensed slot p+1; f(b): <alpha> in
            // slots 1..p. The gamma_0 coordinate and the layer coordinates
            // (n >= 1) stay zero.
            for (std::size_t r = 0; r + 1 < p; ++r) {
                va[layout.slot_offset(p + 1) + r] = alpha.coords()[r];
                for (unsigned s = 1; s <= p; ++s)
                    vb[layout.slot_offset(s) + r] = alpha.coords()[r];
            }
            gen_values.emplace_back("a", CosetVector(std::move(va)));
            gen_values.emplace_back("b", CosetVector(std::move(vb)));
            break;
        }
        case RepFamily::Alt4: {
            unsigned n = rep->prov.n;
            std::vector<Rat> va(d), vb(d);
            va[n + 3] = Rat(1, 2);
            va[n + 4] = Rat(1, 2);
            vb[0] = Rat(1, 3);
            gen_values.emplace_back("a", CosetVector(std::move(va)));
            gen_values.emplace_back("b", CosetVector(std::move(vb)));
            break;
        }
        case RepFamily::Custom:
            throw std::invalid_argument(
                "standard_cocycle: no distinguished cocycle for this bundle");
    }
    return extend_cocycle(rep, std::move(gen_values));
}

Cocycle coboundary_cocycle(std::shared_ptr<const Representation> rep, const CosetVector& z) {
    std::vector<std::pair<std::string, CosetVector>> gen_values;
    for (const auto& [name, img] : rep->gen_images)
        gen_values.emplace_back(name, act(img, z) - z);
    return extend_cocycle(rep, std::move(gen_values));
}

Cocycle add_cocycles(const Cocycle& f, const Cocycle& g) {
    std::vector<std::pair<std::string, CosetVector>> gen_values;
    for (std::size_t i = 0; i < f.gen_values.size(); ++i)
        gen_values.emplace_back(f.gen_values[i].first,
                                f.gen_values[i].second + g.gen_values[i].second);
    return extend_cocycle(f.rep, std::move(gen_values));
}

namespace {

std::vector<Int> integral_or_throw(const std::vector<Rat>& v, const char* what) {
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::logic_error(std::string(what) + ": non-integral");
        out[i] = v[i].get_num();
    }
    return out;
}

std::vector<Int> norm_applied(const IntMat& n, const std::vector<Rat>& v, const char* what) {
    std::vector<Rat> nv(n.rows());
    for (std::size_t i = 0; i < n.rows(); ++i) {
        Rat acc;
        for (std::size_t j = 0; j < n.cols(); ++j)
            if (n(i, j) != 0) acc += Rat(n(i, j)) * v[j];
        nv[i] = acc;
    }
    return integral_or_throw(nv, what);
}

}  // namespace

SubgroupCheck is_coboundary_on_cyclic(const Cocycle& f, const GroupElement& h) {
    const auto& g = f.rep->group;
    if (g.is_identity(h))
        throw std::invalid_argument("is_coboundary_on_cyclic: h must be nontrivial");
    SubgroupCheck check;
    check.generator = h;
    check.prime = g.element_order(h);

    IntMat n = norm_matrix(*f.rep, h);
    const std::vector<Rat>& v = f.value(h).coords();
    std::vector<Int> u = norm_applied(n, v, "is_coboundary_on_cyclic: norm of lift");

    auto x = solve_linear_integer(n, u);
    if (x) {
        check.restriction_is_coboundary = true;
        // z with (h - 1) z = f(h) in M-hat: solve (image(h) - E) w = v - x
        IntMat hm = f.rep->image(h);
        RatMat a(hm.rows(), hm.cols());
        for (std::size_t i = 0; i < hm.rows(); ++i)
            for (std::size_t j = 0; j < hm.cols(); ++j)
                a(i, j) = Rat(hm(i, j)) - (i == j ? Rat(1) : Rat(0));
        std::vector<Rat> rhs(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = v[i] - Rat((*x)[i]);
        auto w = solve_rational(a, rhs);
        if (!w) throw std::logic_error("is_coboundary_on_cyclic: inconsistent solve");
        CosetVector z{*w};
        CosetVector back = act(hm, z) - z;  // re-verify by substitution
        if (!(back == f.value(h)))
            throw std::logic_error("is_coboundary_on_cyclic: witness failed substitution");
        check.coboundary_witness = z.coords();
    } else {
        check.restriction_is_coboundary = false;
        // record the elementary divisor at which solvability fails
        auto s = snf(n);
        std::vector<Int> c = s.u * u;
        for (std::size_t i = 0; i < n.rows(); ++i) {
            Int di = (i < std::min(n.rows(), n.cols())) ? s.d(i, i) : Int(0);
            if (di != 0 ? !divides(di, c[i]) : c[i] != 0) {
                check.obstruction_divisor = di;
                break;
            }
        }
    }
    return check;
}

std::optional<TorsionWitness> torsion_element_search(const Cocycle& f, const GroupElement& h) {
    const auto& g = f.rep->group;
    std::uint64_t q = g.element_order(h);
    if (!is_prime(q))
        throw std::invalid_argument("torsion_element_search: h must have prime order");

    IntMat n = norm_matrix(*f.rep, h);
    const std::vector<Rat>& v = f.value(h).coords();
    std::vector<Int> u = norm_applied(n, v, "torsion_element_search: norm of lift");
    std::vector<Int> neg_u(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) neg_u[i] = -u[i];

    auto m = solve_linear_integer(n, neg_u);
    if (!m) return std::nullopt;

    TorsionWitness w;
    w.g = h;
    w.order = q;
    w.translation.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w.translation[i] = v[i] + Rat((*m)[i]);
    // verify: N (v + m) = 0, i.e. (h, v+m)^q = (1, 0)
    for (std::size_t i = 0; i < n.rows(); ++i) {
        Rat acc;
        for (std::size_t j = 0; j < n.cols(); ++j)
            if (n(i, j) != 0) acc += Rat(n(i, j)) * w.translation[j];
        if (acc != 0) throw std::logic_error("torsion_element_search: witness failed powering");
    }
    return w;
}

Certificate certify_torsionfree(const Cocycle& f, bool run_oracle) {
    Certificate cert;
    cert.kind = CertKind::TorsionFree;
    cert.verdict = true;

    const auto& g = f.rep->group;
    for (const auto& h : g.prime_order_subgroup_reps()) {
        SubgroupCheck check = is_coboundary_on_cyclic(f, h);
        if (check.restriction_is_coboundary) cert.verdict = false;
        cert.subgroup_checks.push_back(std::move(check));
    }

    if (!cert.verdict) {
        // attach an explicit torsion element from a failed subgroup
        for (const auto& check : cert.subgroup_checks) {
            if (!check.restriction_is_coboundary) continue;
            auto w = torsion_element_search(f, check.generator);
            if (!w)
                throw std::logic_error(
                    "certify_torsionfree: coboundary verdict without torsion witness");
            cert.torsion_witness = *w;
            break;
        }
    }

    if (run_oracle) {
        cert.checked_against_oracle = true;
        for (auto& check : cert.subgroup_checks) {
            check.oracle_ran = true;
            check.oracle_found_torsion = torsion_element_search(f, check.generator).has_value();
            if (check.oracle_found_torsion != check.restriction_is_coboundary)
                throw std::logic_error("certify_torsionfree: oracle disagrees with norm test");
        }
        // cross-check every prime-order element, not just representatives
        for (const auto& [h, q] : g.prime_order_elements()) {
            bool torsion = torsion_element_search(f, h).has_value();
            bool cob = is_coboundary_on_cyclic(f, h).restriction_is_coboundary;
            if (torsion != cob)
                throw std::logic_error("certify_torsionfree: oracle disagrees on an element");
            if (torsion && cert.verdict)
                throw std::logic_error("certify_torsionfree: verdict contradicts oracle");
        }
    }
    return cert;
}

Int h1_order_cyclic(const Representation& rep, const GroupElement& h) {
    IntMat hm = rep.image(h);
    IntMat hm_minus_e = hm - IntMat::identity(rep.degree);
    auto fixed = kernel_saturated(hm_minus_e);
    std::size_t r = fixed.size();
    if (r == 0) return 1;

    IntMat n = norm_matrix(rep, h);
    // coordinates of the norm-image columns in the fixed-lattice basis;
    // integral because the fixed lattice is saturated
    RatMat basis(rep.degree, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < rep.degree; ++i) basis(i, j) = Rat(fixed[j][i]);
    IntMat coords(r, rep.degree);
    for (std::size_t col = 0; col < rep.degree; ++col) {
        std::vector<Rat> rhs(rep.degree);
        for (std::size_t i = 0; i < rep.degree; ++i) rhs[i] = Rat(n(i, col));
        auto sol = solve_rational(basis, rhs);
        if (!sol) throw std::logic_error("h1_order_cyclic: norm image outside fixed space");
        for (std::size_t i = 0; i < r; ++i) {
            if (!is_integer((*sol)[i]))
                throw std::logic_error("h1_order_cyclic: non-integral coordinates");
            coords(i, col) = (*sol)[i].get_num();
        }
    }
    auto s = snf(coords);
    if (s.rank() < r) throw std::logic_error("h1_order_cyclic: norm lattice not full rank");
    Int idx = 1;
    for (std::size_t i = 0; i < r; ++i) idx *= abs(s.d(i, i));
    return idx;
}

Certificate certify_cocycle_valid(const Cocycle& f) {
    Certificate cert;
    cert.kind = CertKind::CocycleValid;
    try {
        check_all_pairs(f);
        cert.verdict = true;
        cert.notes.push_back("cocycle law verified on all pairs");
    } catch (const CocycleError& e) {
        cert.verdict = false;
        cert.notes.push_back(e.what());
    }
    return cert;
}

}  // namespace crys
