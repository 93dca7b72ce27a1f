#include <doctest.h>

#include "germlab/matrixops.hpp"
#include "germlab/parser.hpp"

#include "test_util.hpp"

using namespace germlab;
using testutil::P;

TEST_SUITE_BEGIN("polyring");

TEST_CASE("parse basics") {
    auto r = testutil::ring_xyz();
    CHECK(P(r, "x^3+y^3+z^4").nterms() == 3);
    CHECK(P(r, "0").is_zero());
    CHECK(P(r, "0").terms().empty());

    // expansion oracle: repeated multiplication
    Poly lhs = P(r, "(x+y)^2-x^2-2*x*y");
    Poly xy = P(r, "x+y");
    Poly oracle = xy * xy - P(r, "x^2") - P(r, "2*x*y");
    CHECK(lhs == oracle);
    CHECK(lhs == P(r, "y^2"));

    CHECK(P(r, "-x+1/2").to_string() == "-x+1/2");
    CHECK(P(r, "2/4*x").to_string() == "1/2*x");
}

TEST_CASE("parse errors") {
    auto r = testutil::ring_xy();
    CHECK_THROWS_AS(P(r, "2x"), InputError);         // implicit multiplication
    CHECK_THROWS_AS(P(r, "x y"), InputError);        // implicit multiplication
    CHECK_THROWS_AS(P(r, "x*(y"), InputError);       // unbalanced paren
    CHECK_THROWS_AS(P(r, "w+1"), InputError);        // unknown variable
    CHECK_THROWS_AS(P(r, "x^99999999"), InputError); // exponent overflow
    CHECK_THROWS_AS(P(r, "x/2"), InputError);        // '/' only inside literals
    CHECK_THROWS_AS(P(r, ""), InputError);
}

TEST_CASE("arithmetic") {
    auto r = testutil::ring_xy();
    CHECK(P(r, "x+y") + P(r, "x-y") == P(r, "2*x"));
    CHECK((P(r, "x+y") * P(r, "0")).is_zero());
    CHECK(P(r, "x+3*y^2") * P(r, "x-3*y^2") == P(r, "x^2-9*y^4"));
    CHECK(P(r, "x").pow(0) == P(r, "1"));
}

TEST_CASE("ring axioms on random inputs") {
    auto r = testutil::ring_xyz();
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = testutil::random_poly(r, rng);
        Poly b = testutil::random_poly(r, rng);
        Poly c = testutil::random_poly(r, rng);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical form closure") {
    auto r = testutil::ring_xyz();
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        Poly a = testutil::random_poly(r, rng);
        Poly b = testutil::random_poly(r, rng);
        Poly p = a * b + a - b;
        // renormalizing the term list reproduces the polynomial exactly
        std::vector<Term> copy = p.terms();
        CHECK(Poly::from_terms(r, std::move(copy)) == p);
        for (size_t t = 0; t + 1 < p.terms().size(); ++t)
            CHECK(r->order().compare(p.terms()[t].m, p.terms()[t + 1].m) > 0);
        for (const auto& t : p.terms())
            CHECK(t.c != 0);
    }
}

TEST_CASE("parser round-trip") {
    auto r = testutil::ring_xyz();
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        Poly p = testutil::random_poly(r, rng, 7, 5);
        CHECK(parse_poly(p.to_string(), r) == p);
    }
    // rational coefficients round-trip too
    Poly q = P(r, "1/3*x^2-7/2*y+z-5");
    CHECK(parse_poly(q.to_string(), r) == q);
}

TEST_CASE("derivatives") {
    auto r = testutil::ring_xyz();
    CHECK(P(r, "x^3+y^3+z^4").derivative(2) == P(r, "4*z^3"));
    CHECK(P(r, "5").derivative(0).is_zero());
    CHECK(P(r, "x^2*y^3").derivative(1) == P(r, "3*x^2*y^2"));
}

TEST_CASE("Leibniz rule on random pairs") {
    auto r = testutil::ring_xy();
    Rng rng(10);
    for (int i = 0; i < 150; ++i) {
        Poly a = testutil::random_poly(r, rng);
        Poly b = testutil::random_poly(r, rng);
        Poly lhs = (a * b).derivative(0);
        Poly rhs = a * b.derivative(0) + b * a.derivative(0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("jacobian matrices") {
    auto r = testutil::ring_xy();
    auto J = jacobian_matrix({P(r, "x"), P(r, "y^3+x*y")}, {0, 1});
    CHECK(J[0][0] == P(r, "1"));
    CHECK(J[0][1].is_zero());
    CHECK(J[1][0] == P(r, "y"));
    CHECK(J[1][1] == P(r, "3*y^2+x"));

    auto r3 = testutil::ring_xyz();
    auto J3 = jacobian_matrix({P(r3, "x+y-z"), P(r3, "2*x-y-z"), P(r3, "x^3+y^3+z^4")}, {0, 1, 2});
    CHECK(J3[0][0] == P(r3, "1"));
    CHECK(J3[1][1] == P(r3, "-1"));
    CHECK(J3[2][2] == P(r3, "4*z^3"));
    CHECK(determinant(J3) == P(r3, "-6*x^2-3*y^2-12*z^3"));

    auto Jlin = jacobian_matrix({P(r3, "2*x-5*z")}, {0, 1, 2});
    CHECK(Jlin[0][0] == P(r3, "2"));
    CHECK(Jlin[0][1].is_zero());
    CHECK(Jlin[0][2] == P(r3, "-5"));
}

TEST_CASE("minors") {
    auto r = testutil::ring_xy();
    PolyMatrix id = {{P(r, "1"), P(r, "0")}, {P(r, "0"), P(r, "1")}};
    auto m1 = minors_ideal(id, 2);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == P(r, "1"));

    // cusp-map minors: rows (f1, f2, delta) differentiated
    PolyMatrix m = {{P(r, "1"), P(r, "0")},
                    {P(r, "y"), P(r, "3*y^2+x")},
                    {P(r, "1"), P(r, "6*y")}};
    auto m2 = minors_ideal(m, 2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0] == P(r, "3*y^2+x"));
    CHECK(m2[1] == P(r, "6*y-0"));
    CHECK(m2[2] == P(r, "6*y^2-(3*y^2+x)"));
    CHECK_THROWS_AS(minors_ideal(m, 3), InputError);
}

TEST_CASE("specialization") {
    auto r = PolyRing::create({"x", "y", "z", "t"}, MonomialOrder::degrevlex());
    Poly fam = P(r, "x^6+y^6+z^3+t*x^4*z");
    int t = *r->index_of("t");
    CHECK(fam.specialize({{t, Rat(0)}}) == P(r, "x^6+y^6+z^3"));
    CHECK(fam.specialize({{t, Rat(1)}}) == P(r, "x^6+y^6+z^3+x^4*z"));
    CHECK(P(r, "x+t").specialize({{t, make_rat(-1, 2)}}) == P(r, "x-1/2"));
}

TEST_CASE("order laws") {
    auto local_ring = testutil::ring_xy(MonomialOrder::negdegrevlex());
    CHECK(P(local_ring, "1+x").leading_mono().is_one());
    auto global_ring = testutil::ring_xy();
    CHECK(P(global_ring, "1+x").leading_mono() == P(global_ring, "x").leading_mono());

    // weighted order: leading term of x+y^2 under weights (3,1) is x
    auto w = testutil::ring_xy(MonomialOrder::weighted_global({3, 1}));
    CHECK(P(w, "x+y^2").leading_term().m == P(w, "x").leading_mono());
}

TEST_CASE("weighted homogeneity probe") {
    auto r = testutil::ring_xy();
    long w[] = {2, 1};
    CHECK(is_weighted_homogeneous(P(r, "y^3+x*y"), std::span<const long>(w, 2), 3));
    CHECK(!is_weighted_homogeneous(P(r, "y^3+x"), std::span<const long>(w, 2), 3));
}

TEST_SUITE_END();
