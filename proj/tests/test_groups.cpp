#include <doctest.h>

#include "crys/groups.hpp"

using namespace crys;

TEST_CASE("cyclic group construction and orders") {
    auto c8 = HolonomyGroup::cyclic({{2, 3}});
    CHECK(c8.order() == 8);

    auto g = HolonomyGroup::cyclic({{2, 3}, {3, 2}});
    CHECK(g.order() == 72);

    CHECK_THROWS_WITH_AS(HolonomyGroup::cyclic_constrained({{2, 2}}),
                         "constraint violated: n_1 >= 3 required", std::invalid_argument);
    CHECK_THROWS_AS(HolonomyGroup::cyclic_constrained({{2, 3}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(HolonomyGroup::cyclic({{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(HolonomyGroup::cyclic({{2, 1}, {2, 2}}), std::invalid_argument);
    CHECK_NOTHROW(HolonomyGroup::cyclic({{2, 2}}));  // unconstrained builder
}

TEST_CASE("prime order elements") {
    auto c8 = HolonomyGroup::cyclic({{2, 3}});
    auto po = c8.prime_order_elements();
    REQUIRE(po.size() == 1);
    CHECK(po[0].second == 2);
    CHECK(po[0].first == c8.power(c8.generator("a"), 4));

    auto c33 = HolonomyGroup::bi_elementary(3);
    CHECK(c33.prime_order_elements().size() == 8);

    auto a4 = HolonomyGroup::alt4();
    std::size_t order2 = 0, order3 = 0;
    for (const auto& [e, q] : a4.prime_order_elements()) {
        if (q == 2) ++order2;
        if (q == 3) ++order3;
    }
    CHECK(order2 == 3);
    CHECK(order3 == 8);
    CHECK(a4.prime_order_elements().size() == 11);

    // one representative per distinct prime-order subgroup:
    // 3 subgroups of order 2, 4 of order 3
    CHECK(a4.prime_order_subgroup_reps().size() == 7);
}

TEST_CASE("word evaluation") {
    auto a4 = HolonomyGroup::alt4();
    CHECK(evaluate_word(a4, {}) == a4.identity());
    CHECK(evaluate_word(a4, {{"a", 1}, {"b", 1}, {"a", 1}, {"b", 1}, {"a", 1}, {"b", 1}}) ==
          a4.identity());
    auto ab = evaluate_word(a4, {{"a", 1}, {"b", 1}});
    CHECK(a4.element_order(ab) == 3);
    CHECK_THROWS_AS(evaluate_word(a4, {{"c", 1}}), std::invalid_argument);

    auto g = HolonomyGroup::cyclic({{2, 3}, {3, 2}});
    auto w = evaluate_word(g, {{"a1", 5}, {"a2", 4}});
    CHECK(w.data[0] == 5);
    CHECK(w.data[1] == 4);
    // the distinguished generator a = a1*a2 has full order
    CHECK(g.element_order(g.generator("a")) == 72);
}

TEST_CASE("element order divides group order, all shipped groups") {
    for (const auto& g :
         {HolonomyGroup::cyclic({{2, 3}}), HolonomyGroup::cyclic({{2, 3}, {3, 2}}),
          HolonomyGroup::bi_elementary(3), HolonomyGroup::bi_elementary(5),
          HolonomyGroup::alt4()}) {
        for (const auto& e : g.elements()) {
            CHECK(g.is_identity(g.power(e, static_cast<long>(g.order()))));
            CHECK(g.order() % g.element_order(e) == 0);
        }
        // indices consistent
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.index_of(g.at(i)) == i);
        // words reproduce elements
        for (const auto& e : g.elements()) CHECK(evaluate_word(g, g.word_of(e)) == e);
    }
}

TEST_CASE("a4 presentation and permutation model") {
    auto a4 = HolonomyGroup::alt4();
    auto a = a4.generator("a"), b = a4.generator("b");
    CHECK(a4.element_order(a) == 2);
    CHECK(a4.element_order(b) == 3);
    CHECK(a4.element_order(a4.multiply(a, b)) == 3);
    CHECK(a4.size() == 12);
    CHECK(a4.format(a) == "(1 2)(3 4)");
    CHECK(a4.format(b) == "(1 2 3)");
    CHECK(a4.parse("(1 2)(3 4)") == a);
    CHECK(a4.parse("(1 2 3)") == b);
}

TEST_CASE("element text forms") {
    auto g = HolonomyGroup::bi_elementary(3);
    auto e = g.multiply(g.power(g.generator("a"), 2), g.generator("b"));
    CHECK(g.format(e) == "a^2*b");
    CHECK(g.parse("a^2*b") == e);
    CHECK(g.parse("1") == g.identity());

    auto c = HolonomyGroup::cyclic({{2, 3}, {3, 2}});
    auto x = evaluate_word(c, {{"a1", 3}, {"a2", 2}});
    CHECK(c.format(x) == "a1^3*a2^2");
    CHECK(c.parse("a1^3*a2^2") == x);
}
