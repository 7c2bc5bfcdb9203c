#include <doctest.h>

#include "helpers.hpp"

using namespace embfilt;
using namespace testutil;

TEST_CASE("valuate_monomial dot products") {
    CHECK(valuate_monomial(W({2, 3}), {4, 4}) == 20);
    CHECK(valuate_monomial(W({1, 0, 0}), {0, 0, 0}) == 0);
    CHECK(valuate_monomial(W({4, 3}), {6, 2}) == 30);
    CHECK_THROWS_AS(valuate_monomial(W({1, 2}), {1, 2, 3}), error);
}

TEST_CASE("valuate_polynomial takes the minimum over the support") {
    Polynomial p = P("x^6*y^2 + y^8");
    CHECK(*valuate_polynomial(W({2, 3}), p) == 18);
    CHECK(*valuate_polynomial(W({4, 3}), p) == 24);
    CHECK(!valuate_polynomial(W({1, 1}), Polynomial(2)).has_value());
    CHECK_THROWS_AS(valuate_polynomial(W({1, 1, 1}), p), error);
}

TEST_CASE("value_tuple") {
    CHECK(value_tuple(sys2({2, 3}, {4, 3}), P("x^6*y^2 + y^8")) == ValueTuple{18, 24});
    CHECK(value_tuple(sys1({1, 1}), P("x^2 + y^3")) == ValueTuple{2});
    CHECK(value_tuple(ValuationSystem(2, {W({1, 0}), W({0, 1})}), P("vars: x,y\n1")) ==
          ValueTuple{0, 0});
    CHECK_THROWS_AS(value_tuple(sys1({1, 1}), Polynomial(2)), error);
}

TEST_CASE("weight vector validation") {
    CHECK_THROWS_AS(W({0, 0}), error);
    CHECK_THROWS_AS(W({1, -1}), error);
    CHECK(W({2, 4}).primitive().entries() == std::vector<Int>{1, 2});
    CHECK(W({3, 2}).is_primitive());
    CHECK_FALSE(W({2, 4}).is_primitive());
    CHECK(W({1, 1}).all_positive());
    CHECK_FALSE(W({1, 0}).all_positive());
}

TEST_CASE("polynomial arithmetic and normalization") {
    Polynomial cancel = P("2*x - 2*x");
    CHECK(cancel.is_zero());
    Polynomial p = P("x^2 + y^3");
    CHECK(p.term_count() == 2);
    CHECK(p.vanishes_at_origin());
    CHECK_FALSE(P("vars: x,y\nx + 1").vanishes_at_origin());
    CHECK((p - p).is_zero());
    CHECK((p * Polynomial::monomial({1, 0})).terms().count({3, 0}) == 1);
}

TEST_CASE("valuation is multiplicative and subadditive on random pairs") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = random_poly(rng, 2, 4, 5, false);
        Polynomial q = random_poly(rng, 2, 4, 5, false);
        WeightVector w = random_weights(rng, 2, 0, 4);

        Int vp = *valuate_polynomial(w, p);
        Int vq = *valuate_polynomial(w, q);
        CHECK(*valuate_polynomial(w, p * q) == vp + vq);

        auto vsum = valuate_polynomial(w, p + q);
        if (vsum) CHECK(*vsum >= std::min(vp, vq));

        // value tuples ignore nonzero constant scaling
        ValuationSystem sys(2, {w});
        CHECK(value_tuple(sys, p) == value_tuple(sys, p.scaled(Rational(7, 3))));
    }
}
