#include "crys/suites.hpp"

#include "crys/cyclotomic.hpp"
#include "crys/ratlinalg.hpp"
#include "crys/snf.hpp"

namespace crys {

CosetVector random_cocycle_value(const Representation& rep, std::mt19937_64& rng) {
    const auto& g = rep.group;
    if (g.family() != GroupFamily::Cyclic || g.factors().size() != 1)
        throw std::invalid_argument("random_cocycle_value: single-factor cyclic only");
    std::uint64_t k = g.order();
    IntMat n = norm_matrix(rep, g.generator("a"));
    auto s = snf(n);
    std::size_t rank = s.rank();
    // v = V y with d_i y_i integral: y_i = c_i / d_i below the rank,
    // y_i = c_i / k above it
    std::vector<Rat> y(rep.degree);
    for (std::size_t i = 0; i < rep.degree; ++i) {
        Int den = i < rank ? abs(s.d(i, i)) : Int(static_cast<unsigned long>(k));
        if (den == 0) den = 1;
        unsigned long c = rng() % den.get_ui();
        y[i] = make_rat(Int(c), den);
    }
    std::vector<Rat> v(rep.degree);
    for (std::size_t i = 0; i < rep.degree; ++i) {
        Rat acc;
        for (std::size_t j = 0; j < rep.degree; ++j)
            if (s.v(i, j) != 0) acc += Rat(s.v(i, j)) * y[j];
        v[i] = acc;
    }
    return CosetVector(std::move(v));
}

Representation random_cyclic_representation(std::uint64_t p, unsigned n,
                                            std::size_t max_degree, std::mt19937_64& rng) {
    // choose levels until the degree budget is filled
    std::vector<unsigned> levels;
    std::size_t degree = 0;
    for (int attempts = 0; attempts < 64; ++attempts) {
        unsigned lev = static_cast<unsigned>(rng() % (n + 1));
        std::size_t w = phi_prime_power(p, lev);
        if (degree + w > max_degree) {
            if (degree > 0) break;
            continue;
        }
        levels.push_back(lev);
        degree += w;
    }
    if (levels.empty()) levels.push_back(0);
    Representation rep = cyclic_block_sum_rep(p, n, levels);

    // conjugate by a random unimodular matrix built from elementary ops
    std::size_t d = rep.degree;
    IntMat u = IntMat::identity(d);
    for (int s = 0; s < 2 * static_cast<int>(d); ++s) {
        std::size_t i = rng() % d, j = rng() % d;
        if (i == j) continue;
        IntMat e = IntMat::identity(d);
        e(i, j) = static_cast<long>(rng() % 3) - 1;
        u = u * e;
    }
    auto uinv = inverse(to_rational(u));
    IntMat img = to_integer(*uinv * to_rational(rep.image_of_generator("a")) * to_rational(u));
    Representation out;
    out.group = rep.group;
    out.degree = d;
    out.gen_images = {{"a", img}};
    out.prov.family = RepFamily::Custom;
    out.prov.p = p;
    out.prov.n = n;
    return out;
}

std::vector<SuiteResult> coboundary_agreement_suite(std::uint64_t seed, unsigned count) {
    std::vector<SuiteResult> results;
    std::mt19937_64 rng(seed);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}}) {
        unsigned agreements = 0, trials = 0, coboundaries = 0;
        while (trials < count) {
            auto rep = std::make_shared<Representation>(
                random_cyclic_representation(p, n, 8, rng));
            CosetVector v = random_cocycle_value(*rep, rng);
            Cocycle f = extend_cocycle(rep, {{"a", v}});
            bool ok = true;
            for (const auto& [h, q] : rep->group.prime_order_elements()) {
                bool cob = is_coboundary_on_cyclic(f, h).restriction_is_coboundary;
                bool torsion = torsion_element_search(f, h).has_value();
                if (cob != torsion) ok = false;
                if (cob) ++coboundaries;
            }
            if (ok) ++agreements;
            ++trials;
        }
        SuiteResult r;
        r.name = "coboundary-torsion agreement, order " + std::to_string(p) + "^" +
                 std::to_string(n);
        r.passed = agreements == trials;
        r.detail = std::to_string(agreements) + "/" + std::to_string(trials) +
                   " agree (split restrictions seen: " + std::to_string(coboundaries) + ")";
        results.push_back(std::move(r));
    }
    return results;
}

namespace {

SuiteResult named(bool ok, const std::string& name, const std::string& detail = "") {
    return SuiteResult{name, ok, detail};
}

}  // namespace

std::vector<SuiteResult> identity_suite(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    std::mt19937_64 rng(seed);

    {
        bool ok = true;
        for (std::uint64_t p : {2ULL, 3ULL})
            for (unsigned i = 2; i <= 3; ++i)
                ok = ok && xi_matrix(p, i).pow(static_cast<unsigned long>(p)) ==
                               kron(IntMat::identity(p), xi_matrix(p, i - 1));
        out.push_back(named(ok, "multiplication-matrix power identity"));
    }

    {
        bool ok = true;
        std::uniform_int_distribution<long> dist(-4, 4);
        for (std::uint64_t p : {2ULL, 3ULL}) {
            for (unsigned i = 0; i <= 2 && ok; ++i) {
                for (unsigned j = i + 1; j <= 3 && ok; ++j) {
                    std::vector<Rat> c(phi_prime_power(p, i));
                    for (auto& x : c) x = dist(rng);
                    CycloElement alpha(p, i, std::move(c));
                    RatMat emb = column_embed(alpha, j);
                    CycloElement xi = CycloElement::root_power(p, i, 1);
                    ok = ok && mult_matrix(xi) * emb == column_embed(xi * alpha, j);
                    if (j < 2) continue;
                    std::size_t w = phi_prime_power(p, j - 1);
                    RatMat xj = to_rational(xi_matrix(p, j));
                    for (std::uint64_t k = 0; k < p && ok; ++k) {
                        RatMat shifted = emb * xj.pow(static_cast<unsigned long>(k));
                        for (std::uint64_t s = 1; s <= p && ok; ++s) {
                            RatMat blk = shifted.block(0, (s - 1) * w, emb.rows(), w);
                            ok = (s == p - k) ? blk == column_embed(alpha, j - 1)
                                              : blk.is_zero();
                        }
                    }
                }
            }
        }
        out.push_back(named(ok, "column-embedding identities on random elements"));
    }

    {
        bool ok = true;
        for (std::uint64_t p : {3ULL, 5ULL}) {
            CycloElement eps = CycloElement::root_power(p, 1, 1);
            for (unsigned s = 1; s <= p && ok; ++s)
                ok = (eps.pow(s) * alpha_element(p, s) + beta_element(p, s)).is_zero();
        }
        out.push_back(named(ok, "eps^s alpha_s + beta_s = 0"));
    }

    {
        bool ok = true;
        for (std::uint64_t p : {2ULL, 3ULL})
            for (unsigned n = 2; n <= 3 && ok; ++n)
                for (unsigned m = 1; m <= 3 && ok; ++m) {
                    if (n == 2 && m != 1) continue;
                    auto rep = cyclic_prime_power_rep(p, n, m);
                    IntMat g = rep.image_of_generator("a");
                    std::size_t d1 = m * p, d2 = rep.degree - d1;
                    IntMat gp = g.pow(static_cast<unsigned long>(p));
                    IntMat delta1 = g.block(0, 0, d1, d1);
                    IntMat delta2 = g.block(d1, d1, d2, d2);
                    IntMat u = g.block(0, d1, d1, d2);
                    IntMat acc(d1, d2);
                    for (std::uint64_t t = 0; t < p; ++t)
                        acc = acc + delta1.pow(static_cast<unsigned long>(p - 1 - t)) * u *
                                        delta2.pow(static_cast<unsigned long>(t));
                    ok = gp.block(0, d1, d1, d2) == acc;
                }
        out.push_back(named(ok, "intertwiner power formula for the glued cyclic family"));
    }

    {
        // norm-membership conditions of the C_p x C_p cocycle values
        bool ok = true;
        for (std::uint64_t p : {3ULL, 5ULL}) {
            auto rep = std::make_shared<Representation>(bi_elementary_rep(p, 0));
            Cocycle f = standard_cocycle(rep);
            const auto& g = rep->group;
            auto a = g.generator("a"), b = g.generator("b");
            IntMat na = norm_matrix(*rep, a), nb = norm_matrix(*rep, b);
            ok = ok && act(na, f.value(a)).is_zero();
            ok = ok && act(nb, f.value(b)).is_zero();
            // (a - 1) f(b) = (b - 1) f(a) in M-hat
            IntMat ia = rep->image(a), ib = rep->image(b);
            CosetVector lhs = act(ia, f.value(b)) - f.value(b);
            CosetVector rhs = act(ib, f.value(a)) - f.value(a);
            ok = ok && lhs == rhs;
        }
        out.push_back(named(ok, "norm membership of the square-family cocycle values"));
    }

    {
        // condensed coordinates: slot s of f(a^s b) is <eps^s alpha>, and
        // slot p+1 of f(a) is <alpha>
        bool ok = true;
        for (std::uint64_t p : {3ULL, 5ULL}) {
            auto rep = std::make_shared<Representation>(bi_elementary_rep(p, 0));
            Cocycle f = standard_cocycle(rep);
            const auto& g = rep->group;
            CondensedLayout layout{p};
            CycloElement eps = CycloElement::root_power(p, 1, 1);
            CycloElement alpha = (eps - CycloElement::one(p, 1)).inverse();
            for (unsigned s = 1; s <= p && ok; ++s) {
                GroupElement asb = g.multiply(g.power(g.generator("a"), s), g.generator("b"));
                const auto& val = f.value(asb).coords();
                CycloElement want = eps.pow(s) * alpha;
                for (std::size_t r = 0; r + 1 < p && ok; ++r)
                    ok = val[layout.slot_offset(s) + r] == frac(want.coords()[r]);
            }
            const auto& va = f.value(g.generator("a")).coords();
            for (std::size_t r = 0; r + 1 < p && ok; ++r)
                ok = va[layout.slot_offset(static_cast<unsigned>(p + 1)) + r] ==
                     frac(alpha.coords()[r]);
        }
        out.push_back(named(ok, "condensed coordinates of the square-family cocycle"));
    }

    return out;
}

}  // namespace crys
