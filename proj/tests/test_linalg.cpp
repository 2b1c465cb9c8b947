#include <doctest.h>

#include <random>

#include "crys/ratlinalg.hpp"
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

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

bool divisor_chain_ok(const SnfResult<Int>& s) {
    for (std::size_t i = 0; i + 1 < std::min(s.d.rows(), s.d.cols()); ++i) {
        const Int& a = s.d(i, i);
        const Int& b = s.d(i + 1, i + 1);
        if (a == 0 && b != 0) return false;
        if (a != 0 && !divides(a, b)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("kron basics") {
    IntMat b = make(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(kron(IntMat::identity(1), b) == b);

    IntMat a = make(2, 3, {0, 1, 2, 3, 4, 5});
    IntMat c = make(3, 2, {1, 0, 0, 1, 1, 1});
    CHECK(kron(a, c).rows() == 6);
    CHECK(kron(a, c).cols() == 6);

    // mixed product rule on composable shapes
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        IntMat m1 = random_matrix(rng, 2, 3, -4, 4), m2 = random_matrix(rng, 3, 2, -4, 4);
        IntMat m3 = random_matrix(rng, 2, 2, -4, 4), m4 = random_matrix(rng, 2, 3, -4, 4);
        CHECK(kron(m1, m3) * kron(m2, m4) == kron(m1 * m2, m3 * m4));
    }

    // associativity
    IntMat x = make(1, 2, {1, -1});
    CHECK(kron(a, kron(c, x)) == kron(kron(a, c), x));
}

TEST_CASE("snf identity and worked 2x2") {
    auto s = snf(IntMat::identity(3));
    CHECK(s.d == IntMat::identity(3));
    CHECK(s.u == IntMat::identity(3));
    CHECK(s.v == IntMat::identity(3));
    CHECK(s.nontrivial_divisors.empty());

    IntMat a = make(2, 2, {2, 4, 6, 8});
    auto s2 = snf(a);
    CHECK(s2.d(0, 0) == 2);
    CHECK(s2.d(1, 1) == 4);
    CHECK(s2.u * a * s2.v == s2.d);
    CHECK(abs(det(s2.u)) == 1);
    CHECK(abs(det(s2.v)) == 1);
}

TEST_CASE("snf randomized transform and chain invariants") {
    std::mt19937_64 rng(20240528);
    for (int t = 0; t < 220; ++t) {
        IntMat a = random_matrix(rng, 4, 6, -9, 9);
        auto s = snf(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
        CHECK(divisor_chain_ok(s));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
    }
}

TEST_CASE("snf determinism") {
    IntMat a = make(3, 3, {4, -2, 6, 8, 0, -4, 2, 2, 2});
    auto s1 = snf(a), s2 = snf(a);
    CHECK(s1.u == s2.u);
    CHECK(s1.v == s2.v);
    CHECK(s1.d == s2.d);
}

TEST_CASE("solve_linear_integer examples") {
    IntMat id = IntMat::identity(4);
    std::vector<Int> b{3, -1, 0, 7};
    auto x = solve_linear_integer(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    IntMat two = make(1, 1, {2});
    CHECK_FALSE(solve_linear_integer(two, {Int(3)}).has_value());

    IntMat ones(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
    auto sol = solve_linear_integer(ones, {Int(1), Int(1), Int(1)});
    REQUIRE(sol.has_value());
    CHECK(ones * *sol == std::vector<Int>{1, 1, 1});
}

TEST_CASE("solve_linear_integer against brute force") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 2 + (t % 2);
        IntMat a = random_matrix(rng, n, n, -3, 3);
        std::vector<Int> b(n);
        for (auto& e : b) e = dist(rng);
        auto got = solve_linear_integer(a, b);
        if (got) {
            CHECK(a * *got == b);
        } else {
            // no solution in a generous box either
            long bound = 12;
            bool found = false;
            std::vector<long> x(n, -bound);
            for (;;) {
                std::vector<Int> xi(x.begin(), x.end());
                if (a * xi == b) {
                    found = true;
                    break;
                }
                std::size_t i = 0;
                while (i < n && ++x[i] > bound) x[i++] = -bound;
                if (i == n) break;
            }
            CHECK_FALSE(found);
        }
    }
}

TEST_CASE("kernel_saturated") {
    IntMat a1 = make(1, 2, {1, 1});
    auto k1 = kernel_saturated(a1);
    REQUIRE(k1.size() == 1);
    CHECK((k1[0] == std::vector<Int>{1, -1} || k1[0] == std::vector<Int>{-1, 1}));

    IntMat a2 = make(1, 2, {2, 2});
    auto k2 = kernel_saturated(a2);
    REQUIRE(k2.size() == 1);
    CHECK((k2[0] == std::vector<Int>{1, -1} || k2[0] == std::vector<Int>{-1, 1}));

    IntMat z(2, 2);
    auto k3 = kernel_saturated(z);
    CHECK(k3.size() == 2);

    // saturation on random inputs: kernel vectors with content 1 after gcd
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        IntMat a = random_matrix(rng, 2, 4, -5, 5);
        for (const auto& v : kernel_saturated(a)) {
            CHECK(a * v == std::vector<Int>(2));
        }
    }
}

TEST_CASE("poly_invariant_factors") {
    auto id2 = reduce_mod_p(IntMat::identity(2), 3);
    auto f1 = poly_invariant_factors(id2);
    REQUIRE(f1.size() == 2);
    // x - 1 = x + 2 over F_3
    CHECK(to_string(f1[0]) == "x+2");
    CHECK(to_string(f1[1]) == "x+2");

    IntMat j2 = jordan_lower(2, 1);
    auto f2 = poly_invariant_factors(reduce_mod_p(j2, 3));
    REQUIRE(f2.size() == 1);
    // (x-1)^2 = x^2 + x + 1 over F_3
    CHECK(to_string(f2[0]) == "x^2+x+1");

    IntMat d12(2, 2);
    d12(0, 0) = 1;
    d12(1, 1) = 2;
    auto f3 = poly_invariant_factors(reduce_mod_p(d12, 3));
    REQUIRE(f3.size() == 1);
    // (x-1)(x-2) = x^2 + 2 over F_3
    CHECK(to_string(f3[0]) == "x^2+2");
}

TEST_CASE("poly_invariant_factors is a similarity invariant") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-2, 2);
    for (int t = 0; t < 40; ++t) {
        IntMat a = random_matrix(rng, 3, 3, -2, 2);
        // random unimodular conjugator: product of elementary operations
        IntMat c = IntMat::identity(3);
        for (int s = 0; s < 6; ++s) {
            std::size_t i = rng() % 3, j = rng() % 3;
            if (i == j) continue;
            IntMat e = IntMat::identity(3);
            e(i, j) = dist(rng);
            c = c * e;
        }
        auto cinv = inverse(to_rational(c));
        REQUIRE(cinv.has_value());
        IntMat conj = to_integer(*cinv * to_rational(a) * to_rational(c));
        CHECK(poly_invariant_factors(reduce_mod_p(a, 5)) ==
              poly_invariant_factors(reduce_mod_p(conj, 5)));
    }
}

TEST_CASE("snf over F_3[x]: jordan block characteristic matrix") {
    // x*E - J_2(1) over F_3[x] has the single nontrivial divisor (x-1)^2.
    IntMat j2 = jordan_lower(2, 1);
    auto divs = poly_invariant_factors(reduce_mod_p(j2, 3));
    REQUIRE(divs.size() == 1);
    CHECK(divs[0].degree() == 2);
    // (x-1)^2 evaluates to 0 at 1
    CHECK(divs[0].eval(Fp(1, 3)).is_zero());
}

TEST_CASE("rational rank and inverse") {
    RatMat a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 2;
    a(1, 1) = 4;
    CHECK(rank(a) == 1);
    CHECK_FALSE(inverse(a).has_value());

    RatMat b(2, 2);
    b(0, 0) = 1;
    b(0, 1) = 1;
    b(1, 0) = 0;
    b(1, 1) = 1;
    auto binv = inverse(b);
    REQUIRE(binv.has_value());
    CHECK(*binv * b == RatMat::identity(2, Rat(1)));
}

TEST_CASE("bareiss determinant") {
    CHECK(det(IntMat::identity(5)) == 1);
    IntMat a = make(3, 3, {2, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(det(a) == 1);
    IntMat sw = make(2, 2, {0, 1, 1, 0});
    CHECK(det(sw) == -1);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        IntMat m = random_matrix(rng, 4, 4, -6, 6);
        // det via SNF magnitude: product of diagonal entries up to sign
        auto s = snf(m);
        Int prod = 1;
        for (std::size_t i = 0; i < 4; ++i) prod *= s.d(i, i);
        CHECK(abs(det(m)) == abs(prod));
    }
}
