#include <doctest.h>

#include <random>

#include "crys/ratlinalg.hpp"
#include "crys/reps.hpp"
#include "crys/snf.hpp"

using namespace crys;

namespace {

IntMat make(std::size_t r, std::size_t c, std::initializer_list<long> v) {
    IntMat m(r, c);
    auto it = v.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("cyclic glued representation, smallest case p=2 n=2") {
    auto rep = cyclic_prime_power_rep(2, 2, 1);
    CHECK(rep.degree == 4);
    IntMat expect = make(4, 4, {1, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0});
    CHECK(rep.image_of_generator("a") == expect);
    CHECK(rep.image_of_generator("a").pow(4) == IntMat::identity(4));
    CHECK(verify_representation(rep).all_ok());
}

TEST_CASE("cyclic glued representation degrees") {
    CHECK(cyclic_prime_power_rep(2, 3, 1).degree == 8);
    CHECK(cyclic_prime_power_rep(3, 3, 2).degree == 54);
    CHECK_THROWS_AS(cyclic_prime_power_rep(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_prime_power_rep(2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_prime_power_rep(2, 3, 0), std::invalid_argument);
}

TEST_CASE("all shipped cyclic bundles verify") {
    for (std::uint64_t p : {2ULL, 3ULL}) {
        for (unsigned n = 2; n <= 3; ++n) {
            for (unsigned m = 1; m <= 3; ++m) {
                if (n == 2 && m != 1) continue;
                auto rep = cyclic_prime_power_rep(p, n, m);
                CHECK(rep.degree == m * HolonomyGroup::cyclic({{p, n}}).order());
                auto report = verify_representation(rep);
                CHECK(report.relations_ok);
                CHECK(report.faithful);
                CHECK(report.unit_determinants);
            }
        }
    }
}

TEST_CASE("lemma-2 style block power identity for the intertwiner") {
    // The top-right block of image(a^p) equals
    // sum_t Delta_1(a)^{p-1-t} U(a) Delta_2(a)^t.
    for (std::uint64_t p : {2ULL, 3ULL}) {
        for (unsigned n = 2; n <= 3; ++n) {
            for (unsigned m = 1; m <= 3; ++m) {
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
                CHECK(gp.block(0, d1, d1, d2) == acc);
            }
        }
    }
}

TEST_CASE("composite tensor representation") {
    auto rep = composite_cyclic_rep({{2, 3}, {3, 2}}, 1);
    CHECK(rep.degree == 72);
    CHECK(rep.prov.coprime_ok);

    // single factor coincides with the plain builder
    auto single = composite_cyclic_rep({{2, 3}}, 1);
    auto plain = cyclic_prime_power_rep(2, 3, 1);
    CHECK(single.image_of_generator("a") == plain.image_of_generator("a"));

    auto rep2 = composite_cyclic_rep({{2, 3}}, 2);
    CHECK_FALSE(rep2.prov.coprime_ok);

    auto m5 = composite_cyclic_rep({{2, 3}, {3, 2}}, 5);
    CHECK(m5.degree == 360);
    CHECK(m5.prov.coprime_ok);

    CHECK_THROWS_AS(composite_cyclic_rep({{2, 2}, {3, 2}}, 1), std::invalid_argument);
}

TEST_CASE("composite representation verifies (m = 1)") {
    auto rep = composite_cyclic_rep({{2, 3}, {3, 2}}, 1);
    auto report = verify_representation(rep);
    CHECK(report.relations_ok);
    CHECK(report.faithful);
    CHECK(report.unit_determinants);
    // the distinguished generator has image of full order
    IntMat a = rep.image(rep.group.generator("a"));
    CHECK(a.pow(72) == IntMat::identity(72));
    CHECK_FALSE(a.pow(36) == IntMat::identity(72));
}

TEST_CASE("bi-elementary family: degrees, faithfulness, p=2 rejected") {
    CHECK(bi_elementary_rep(3, 0).degree == 9);
    CHECK(bi_elementary_rep(3, 1).degree == 16);
    CHECK(bi_elementary_rep(3, 2).degree == 23);
    CHECK(bi_elementary_rep(3, 3).degree == 30);
    CHECK(bi_elementary_rep(5, 1).degree == 38);
    CHECK_THROWS_WITH_AS(
        bi_elementary_rep(2, 0),
        "bi_elementary_rep: requires an odd prime p (p > 2); the p = 2 case is excluded",
        std::invalid_argument);

    for (std::uint64_t p : {3ULL, 5ULL}) {
        for (unsigned n = 0; n <= 2; ++n) {
            auto rep = bi_elementary_rep(p, n);
            auto report = verify_representation(rep);
            CHECK(report.relations_ok);
            CHECK(report.faithful);
            CHECK(report.unit_determinants);
        }
    }
}

TEST_CASE("bi-elementary restriction to the a-subgroup shows the beta pattern") {
    std::uint64_t p = 3;
    auto rep = bi_elementary_rep(p, 0);
    auto a = rep.group.generator("a");
    auto sub = restrict_to_cyclic(rep, a);
    CHECK(sub.degree == rep.degree);
    CHECK(sub.group.order() == 3);

    for (unsigned s = 1; s <= p; ++s) {
        IntMat img = rep.image(rep.group.power(a, s));
        // diagonal chunks: eps^s on the first p slots, identity after;
        // last column of each of the first p chunks carries <beta_s>
        IntMat eps_s = xi_matrix(p, 1).pow(s);
        auto beta = beta_element(p, s);
        for (unsigned chunk = 1; chunk <= p + 1; ++chunk) {
            std::size_t off = (chunk - 1) * (p - 1);
            IntMat diag = img.block(off, off, p - 1, p - 1);
            if (chunk <= p)
                CHECK(diag == eps_s);
            else
                CHECK(diag == IntMat::identity(p - 1));
            for (std::size_t r = 0; r < p - 1; ++r) {
                Int expected = chunk <= p ? beta.coords()[r].get_num() : Int(0);
                CHECK(img(off + r, p * p - 1) == expected);
            }
        }
    }

    // restriction of the composite representation at a factor generator
    auto comp = composite_cyclic_rep({{2, 3}, {3, 2}}, 1);
    auto a2 = comp.group.generator("a2");
    auto sub2 = restrict_to_cyclic(comp, a2);
    CHECK(sub2.group.order() == 9);
    CHECK(sub2.degree == 72);
    CHECK(sub2.image_of_generator("a") == comp.image(a2));
}

TEST_CASE("alt4 family") {
    auto rep = alt4_rep(1);
    CHECK(rep.degree == 12);
    auto report = verify_representation(rep);
    CHECK(report.relations_ok);
    CHECK(report.faithful);
    CHECK(report.unit_determinants);

    for (unsigned n = 2; n <= 4; ++n) {
        auto r = alt4_rep(n);
        CHECK(r.degree == 12 * n);
        auto rr = verify_representation(r);
        CHECK(rr.relations_ok);
        CHECK(rr.faithful);
        CHECK(rr.unit_determinants);
    }
    CHECK_THROWS_AS(alt4_rep(0), std::invalid_argument);
}

TEST_CASE("alt4 intertwiner layout for n = 2") {
    auto rep = alt4_rep(2);
    IntMat a = rep.image_of_generator("a");
    // U sits at rows 0..1, cols 2..23: as a 2x2 grid of 11-entry rows,
    // [[alpha, beta], [0, alpha]]
    IntMat u = a.block(0, 2, 2, 22);
    IntMat alpha = u.block(0, 0, 1, 11), beta = u.block(0, 11, 1, 11);
    IntMat expect_alpha = make(1, 11, {0, 0, 0, 0, 2, 0, 1, -1, 0, 0, 0});
    IntMat expect_beta = make(1, 11, {0, -2, 0, 0, 0, 0, 0, 1, -1, -1, 0});
    CHECK(alpha == expect_alpha);
    CHECK(beta == expect_beta);
    CHECK(u.block(1, 0, 1, 11).is_zero());
    CHECK(u.block(1, 11, 1, 11) == expect_alpha);
    // U(b) = 0
    IntMat b = rep.image_of_generator("b");
    CHECK(b.block(0, 2, 2, 22).is_zero());
}

TEST_CASE("trivial representation of a cyclic group is unfaithful") {
    auto rep = cyclic_block_sum_rep(2, 3, {0});
    auto report = verify_representation(rep);
    CHECK(report.relations_ok);
    CHECK_FALSE(report.faithful);
}

TEST_CASE("parameter similarity mod p") {
    IntMat j2 = jordan_lower(2, 1);
    CHECK(params_equivalent_mod_p(j2, j2, 3));

    IntMat c = make(2, 2, {1, 1, 0, 1});
    auto cinv = inverse(to_rational(c));
    IntMat conj = to_integer(*cinv * to_rational(j2) * to_rational(c));
    CHECK(params_equivalent_mod_p(j2, conj, 3));

    CHECK_FALSE(params_equivalent_mod_p(j2, IntMat::identity(2), 3));
}

TEST_CASE("character vectors of the p+2 irreducible blocks are distinct") {
    for (std::uint64_t p : {3ULL, 5ULL}) {
        auto blocks = bi_elementary_irreducibles(p);
        auto g = HolonomyGroup::bi_elementary(p);
        std::vector<std::vector<Int>> traces;
        for (const auto& [ia, ib] : blocks) {
            std::vector<Int> tr;
            for (const auto& e : g.elements()) {
                IntMat img = ia.pow(e.data[0]) * ib.pow(e.data[1]);
                Int t = 0;
                for (std::size_t i = 0; i < img.rows(); ++i) t += img(i, i);
                tr.push_back(t);
            }
            traces.push_back(std::move(tr));
        }
        CHECK(traces.size() == p + 2);
        for (std::size_t i = 0; i < traces.size(); ++i)
            for (std::size_t j = i + 1; j < traces.size(); ++j)
                CHECK(traces[i] != traces[j]);
    }
}

TEST_CASE("glued pair representation is a representation") {
    auto alpha = CycloElement::one(3, 0);
    auto rep = glued_pair_rep(3, 2, 0, 1, alpha);
    CHECK(rep.degree == 3);
    IntMat a = rep.image_of_generator("a");
    CHECK(a.pow(9) == IntMat::identity(3));
    auto report = verify_representation(rep);
    CHECK(report.relations_ok);
}
