#include <doctest.h>

#include <random>

#include "crys/cyclotomic.hpp"
#include "crys/ratlinalg.hpp"

using namespace crys;

namespace {

CycloElement random_integral(std::mt19937_64& rng, std::uint64_t p, unsigned level) {
    std::uniform_int_distribution<long> dist(-4, 4);
    std::vector<Rat> c(phi_prime_power(p, level));
    for (auto& x : c) x = dist(rng);
    return CycloElement(p, level, std::move(c));
}

}  // namespace

TEST_CASE("basis shapes and order") {
    auto b31 = cyclo_basis(3, 1);
    REQUIRE(b31.size() == 2);
    CHECK(b31.monomial_name(0) == "1");
    CHECK(b31.monomial_name(1) == "xi1");

    auto b21 = cyclo_basis(2, 1);
    REQUIRE(b21.size() == 1);
    CHECK(b21.monomial_name(0) == "1");

    auto b22 = cyclo_basis(2, 2);
    REQUIRE(b22.size() == 2);
    CHECK(b22.monomial_name(1) == "xi2");

    // recursion: B_2 for p = 3 is 1, xi1, xi2, xi2*xi1, xi2^2, xi2^2*xi1
    auto b32 = cyclo_basis(3, 2);
    REQUIRE(b32.size() == 6);
    CHECK(b32.monomial_name(2) == "xi2");
    CHECK(b32.monomial_name(3) == "xi2*xi1");
    CHECK(b32.monomial_name(5) == "xi2^2*xi1");
}

TEST_CASE("xi matrices") {
    IntMat x31 = xi_matrix(3, 1);
    IntMat expect31(2, 2);
    expect31(0, 0) = 0;
    expect31(0, 1) = -1;
    expect31(1, 0) = 1;
    expect31(1, 1) = -1;
    CHECK(x31 == expect31);

    IntMat x21 = xi_matrix(2, 1);
    CHECK(x21.rows() == 1);
    CHECK(x21(0, 0) == -1);

    IntMat x22 = xi_matrix(2, 2);
    IntMat expect22(2, 2);
    expect22(0, 1) = -1;
    expect22(1, 0) = 1;
    CHECK(x22 == expect22);

    CHECK(xi_matrix(5, 0) == IntMat::identity(1));
}

TEST_CASE("power identity xi_i^p = E_p kron xi_{i-1}") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        for (unsigned i = 2; i <= 3; ++i) {
            IntMat lhs = xi_matrix(p, i).pow(static_cast<unsigned long>(p));
            IntMat rhs = kron(IntMat::identity(p), xi_matrix(p, i - 1));
            CHECK(lhs == rhs);
        }
        // full order
        IntMat x = xi_matrix(p, 2);
        CHECK(x.pow(static_cast<unsigned long>(p * p)) == IntMat::identity(x.rows()));
    }
}

TEST_CASE("mult_matrix examples and ring homomorphism") {
    CHECK(mult_matrix(CycloElement::one(3, 1)) == RatMat::identity(2, Rat(1)));

    // 1 + eps at p = 3
    CycloElement e = CycloElement::root_power(3, 1, 1);
    CycloElement x = CycloElement::one(3, 1) + e;
    RatMat m = mult_matrix(x);
    RatMat expect(2, 2);
    expect(0, 0) = 1;
    expect(0, 1) = -1;
    expect(1, 0) = 1;
    expect(1, 1) = 0;
    CHECK(m == expect);

    CHECK(to_rational(xi_matrix(3, 1)) == mult_matrix(CycloElement::root_power(3, 1, 1)));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        std::uint64_t p = (t % 2) ? 3 : 2;
        unsigned level = 1 + (t % 3);
        auto a = random_integral(rng, p, level);
        auto b = random_integral(rng, p, level);
        CHECK(mult_matrix(a * b) == mult_matrix(a) * mult_matrix(b));
        CHECK(mult_matrix(a + b) == mult_matrix(a) + mult_matrix(b));
    }
}

TEST_CASE("inversion") {
    auto one = CycloElement::one(3, 1);
    CHECK(one.inverse() == one);

    // (eps - 1)^{-1} has coordinates (-2/3, -1/3) at p = 3
    auto eps = CycloElement::root_power(3, 1, 1);
    auto alpha = (eps - one).inverse();
    CHECK(alpha.coords()[0] == Rat(-2, 3));
    CHECK(alpha.coords()[1] == Rat(-1, 3));
    // p * alpha is integral
    CHECK((Rat(3) * alpha).is_integral());

    auto eps_inv = eps.inverse();
    CHECK(eps_inv.coords()[0] == Rat(-1));
    CHECK(eps_inv.coords()[1] == Rat(-1));

    CHECK_THROWS_AS(CycloElement::zero(3, 1).inverse(), std::domain_error);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        auto x = random_integral(rng, 3, 2);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == CycloElement::one(3, 2));
    }
}

TEST_CASE("column embeddings") {
    // <1>^0_2 for p = 2 is the 1x2 row (0 1)
    IntMat e = column_embed_int(CycloElement::one(2, 0), 2);
    CHECK(e.rows() == 1);
    CHECK(e.cols() == 2);
    CHECK(e(0, 0) == 0);
    CHECK(e(0, 1) == 1);

    CHECK(column_embed_int(CycloElement::zero(3, 1), 2).is_zero());

    // <xi_1>^1_2 for p = 3: 2x6, last column (0,1)^T
    IntMat g = column_embed_int(CycloElement::root_power(3, 1, 1), 2);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 6);
    CHECK(g(0, 5) == 0);
    CHECK(g(1, 5) == 1);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(g(0, j) == 0);
        CHECK(g(1, j) == 0);
    }

    CHECK_THROWS(column_embed(CycloElement::one(3, 2), 1));
}

TEST_CASE("embedding identities") {
    std::mt19937_64 rng(31);
    for (std::uint64_t p : {2ULL, 3ULL}) {
        for (unsigned i = 0; i <= 2; ++i) {
            for (unsigned j = i + 1; j <= 3; ++j) {
                auto alpha = random_integral(rng, p, i);
                RatMat emb = column_embed(alpha, j);

                // xi_i * <alpha> = <xi_i alpha>
                CycloElement xi_i = CycloElement::root_power(p, i, 1);
                CHECK(mult_matrix(xi_i) * emb == column_embed(xi_i * alpha, j));

                // The block-column identities decompose B_j into p copies
                // of B_{j-1}, which needs j >= 2.
                if (j < 2) continue;

                // block column structure: p blocks of width phi(p^{j-1}),
                // all zero except the last, which is <alpha> at level j-1
                std::size_t w = phi_prime_power(p, j - 1);
                for (std::uint64_t k = 0; k + 1 < p; ++k)
                    CHECK(emb.block(0, k * w, emb.rows(), w).is_zero());
                CHECK(emb.block(0, (p - 1) * w, emb.rows(), w) == column_embed(alpha, j - 1));

                // right multiplication by xi_j^k moves the column into
                // block p - k
                RatMat xj = to_rational(xi_matrix(p, j));
                for (std::uint64_t k = 0; k < p; ++k) {
                    RatMat shifted = emb * xj.pow(static_cast<unsigned long>(k));
                    for (std::uint64_t s = 1; s <= p; ++s) {
                        RatMat blk = shifted.block(0, (s - 1) * w, emb.rows(), w);
                        if (s == p - k)
                            CHECK(blk == column_embed(alpha, j - 1));
                        else
                            CHECK(blk.is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("alpha and beta identities") {
    for (std::uint64_t p : {3ULL, 5ULL}) {
        auto eps = CycloElement::root_power(p, 1, 1);
        for (unsigned s = 1; s <= p; ++s) {
            auto alpha_s = alpha_element(p, s);
            auto beta_s = beta_element(p, s);
            CHECK(alpha_s.is_integral());
            // eps^s * alpha_s + beta_s = 0
            CHECK((eps.pow(s) * alpha_s + beta_s).is_zero());
            // consistency with the quotient definitions
            auto em1 = eps - CycloElement::one(p, 1);
            CHECK(em1 * alpha_s == eps.pow(static_cast<long>(p - s)) - CycloElement::one(p, 1));
        }
        CHECK(alpha_element(p, static_cast<unsigned>(p)).is_zero());
    }
}
