#include <doctest.h>

#include "germlab/invariants.hpp"

#include "problems.hpp"
#include "test_util.hpp"

using namespace germlab;
using testutil::P;

namespace {
constexpr std::uint64_t kSeed = 20240101;
constexpr int kTrials = 3;
}

TEST_SUITE_BEGIN("invariants");

TEST_CASE("singular locus ideals") {
    auto ex1 = problems::brieskorn_surface();
    auto S = singular_locus_ideal(ex1);
    REQUIRE(S.gens.size() == 2);
    CHECK(S.gens[0] == P(ex1.ring, "x^3+y^3+z^4"));
    CHECK(S.gens[1] == P(ex1.ring, "-6*x^2-3*y^2-12*z^3"));

    auto cusp = problems::cusp_map();
    auto Sc = singular_locus_ideal(cusp);
    REQUIRE(Sc.gens.size() == 1);
    CHECK(Sc.gens[0] == P(cusp.ring, "3*y^2+x"));

    // immersion: delta is the unit 1, S is empty
    auto r = problems::local_ring({"x", "y"});
    GermProblem id{r, {}, {P(r, "x"), P(r, "y")}, {}, {}, {}};
    auto Si = singular_locus_ideal(id);
    REQUIRE(Si.gens.size() == 1);
    CHECK(Si.gens[0] == P(r, "1"));

    // degenerate: f = (x, x) has identically vanishing Jacobian
    GermProblem degen{r, {}, {P(r, "x"), P(r, "x")}, {}, {}, {}};
    CHECK_THROWS_AS(singular_locus_ideal(degen), DegenerateError);
}

TEST_CASE("milnor numbers of complete intersections") {
    auto r = problems::local_ring({"x", "y", "z"});
    CHECK(milnor_icis(IdealBasis::make(r, {P(r, "x^2+y^2+z^2")}), kSeed, kTrials) == 1);
    CHECK(milnor_icis(IdealBasis::make(r, {P(r, "x^3+y^3+z^4")}), kSeed, kTrials) == 12);
    CHECK(milnor_icis(IdealBasis::make(r, {P(r, "x")}), kSeed, kTrials) == 0);
    CHECK(milnor_icis(IdealBasis::make(r, {}), kSeed, kTrials) == 0);

    // the singular locus of the Brieskorn projection problem, through the
    // generic-combination chain
    auto ex1 = problems::brieskorn_surface();
    CHECK(milnor_icis(singular_locus_ideal(ex1), kSeed, kTrials) == 19);

    // non-isolated: V(x*y) in three variables
    CHECK_THROWS_AS(milnor_icis(IdealBasis::make(r, {P(r, "x*y")}), kSeed, kTrials), DegenerateError);
}

TEST_CASE("degree of the map") {
    CHECK(degree_m(problems::brieskorn_surface()) == 3);
    CHECK(degree_m(problems::cone_projection()) == 2);
    auto r = problems::local_ring({"x", "y"});
    GermProblem id{r, {}, {P(r, "x"), P(r, "y")}, {}, {}, {}};
    CHECK(degree_m(id) == 1);
}

TEST_CASE("cusp counts") {
    CHECK(cusp_count(problems::cusp_map()) == 1);
    CHECK(cusp_count(problems::cone_projection()) == 0);
    CHECK(cusp_count(problems::brieskorn_surface()) == 8);
}

TEST_CASE("discriminant equations") {
    auto fold = problems::fold_map();
    Poly gf = discriminant_equation(fold);
    CHECK(gf == parse_poly("v", gf.ring()));
    CHECK(mu_plane_curve(gf) == 0);

    auto cusp = problems::cusp_map();
    Poly gc = discriminant_equation(cusp);
    CHECK(gc == parse_poly("4*u^3+27*v^2", gc.ring()));
    CHECK(mu_plane_curve(gc) == 2);

    auto cone = problems::cone_projection();
    Poly gk = discriminant_equation(cone);
    CHECK(gk == parse_poly("u^2+v^2", gk.ring()));
    CHECK(mu_plane_curve(gk) == 1);

    auto ex1 = problems::brieskorn_surface();
    CHECK(mu_plane_curve(discriminant_equation(ex1)) == 35);
}

TEST_CASE("double fold counts") {
    CHECK(double_fold_count(35, 19, 8) == 0);
    CHECK(double_fold_count(49, 17, 12) == 4);
    CHECK(double_fold_count(2, 0, 1) == 0);
    CHECK_THROWS_AS(double_fold_count(3, 0, 1), DegenerateError); // parity
    CHECK_THROWS_AS(double_fold_count(2, 0, 2), DegenerateError); // negative
}

TEST_CASE("discriminant Milnor numbers") {
    CHECK(discriminant_milnor_number(35, 8, 0, 19) == 19);
    CHECK(discriminant_milnor_number(49, 12, 4, 17) == 21);
    CHECK(discriminant_milnor_number(0, 0, 0, 0) == 0);
}

TEST_CASE("preimage curves") {
    auto fold = problems::fold_map();
    CHECK(preimage_curve_milnor(fold, discriminant_equation(fold), kSeed, kTrials) == 0);

    auto cusp = problems::cusp_map();
    CHECK(preimage_curve_milnor(cusp, discriminant_equation(cusp), kSeed, kTrials) == 3);

    auto ex1 = problems::brieskorn_surface();
    CHECK(preimage_curve_milnor(ex1, discriminant_equation(ex1), kSeed, kTrials) == 69);
}

TEST_CASE("germ multiplicities") {
    auto ruv = problems::local_ring({"u", "v"});
    CHECK(germ_multiplicity(IdealBasis::make(ruv, {P(ruv, "u^3-v^2")}), 1, kSeed, kTrials) == 2);
    CHECK(germ_multiplicity(IdealBasis::make(ruv, {P(ruv, "u*v")}), 1, kSeed, kTrials) == 2);
    auto r3 = problems::local_ring({"x", "y", "z"});
    CHECK(germ_multiplicity(IdealBasis::make(r3, {P(r3, "x^2+y^2+z^2")}), 2, kSeed, kTrials) == 2);
}

TEST_CASE("full analysis: classical plane maps") {
    auto fold = analyze(problems::fold_map(), kSeed, kTrials);
    CHECK(fold.c == 0);
    CHECK(fold.d == 0);
    CHECK(fold.mu_Delta == 0);
    CHECK(fold.m == 2);
    CHECK(fold.mu_X == 0);
    CHECK(fold.mu_S == 0);
    CHECK(fold.checks.all());

    auto cusp = analyze(problems::cusp_map(), kSeed, kTrials);
    CHECK(cusp.c == 1);
    CHECK(cusp.d == 0);
    CHECK(cusp.mu_Delta == 2);
    CHECK(cusp.m == 3);
    CHECK(cusp.mu_preimage == 3);
    CHECK(cusp.mu_disc == 0);
    CHECK(cusp.checks.all());

    // smooth reduction of the degree formula: c = mu(S) + m - 2 when X = C^2
    CHECK(fold.c == fold.mu_S + fold.m - 2);
    CHECK(cusp.c == cusp.mu_S + cusp.m - 2);
}

TEST_CASE("full analysis: cone projection") {
    auto rep = analyze(problems::cone_projection(), kSeed, kTrials);
    CHECK(rep.mu_X == 1);
    CHECK(rep.mu_S == 1);
    CHECK(rep.mu_Delta == 1);
    CHECK(rep.m == 2);
    CHECK(rep.c == 0);
    CHECK(rep.d == 0);
    CHECK(rep.mu_disc == 1);
    CHECK(rep.mu_preimage == 1);
    CHECK(rep.m0_X == 2);
    CHECK(rep.m0_S == 2);
    CHECK(rep.checks.all());
}

TEST_CASE("full analysis: Brieskorn surface projection") {
    auto rep = analyze(problems::brieskorn_surface(), kSeed, kTrials);
    CHECK(rep.mu_X == 12);
    CHECK(rep.mu_S == 19);
    CHECK(rep.mu_Delta == 35);
    CHECK(rep.m == 3);
    CHECK(rep.c == 8);
    CHECK(rep.d == 0);
    CHECK(rep.mu_disc == 19);
    CHECK(rep.mu_preimage == 69);
    CHECK(rep.checks.all());
    CHECK(rep.afinite);
}

TEST_CASE("submersion germ short-circuit") {
    auto r = problems::local_ring({"x", "y"});
    GermProblem id{r, {}, {P(r, "x"), P(r, "y")}, {}, {}, {}};
    auto rep = analyze(id, kSeed, kTrials);
    CHECK(rep.submersion);
    CHECK(rep.m == 1);
    CHECK(rep.c == 0);
    CHECK(rep.mu_Delta == 0);
    CHECK(rep.checks.all());
    REQUIRE(!rep.notes.empty());
}

TEST_CASE("invariance under linear coordinate changes") {
    // random source GL(2) and target GL(2) changes on the cusp map
    Rng rng(55);
    auto base = problems::cusp_map();
    long c0 = cusp_count(base);
    long m0 = degree_m(base);
    for (int trial = 0; trial < 3; ++trial) {
        long a, b, c, d;
        do {
            a = rng.int_in(-4, 4), b = rng.int_in(-4, 4);
            c = rng.int_in(-4, 4), d = rng.int_in(-4, 4);
        } while (a * d - b * c == 0);
        auto r = base.ring;
        std::vector<std::optional<Poly>> src = {
            P(r, "x").scaled(Rat(a)) + P(r, "y").scaled(Rat(b)),
            P(r, "x").scaled(Rat(c)) + P(r, "y").scaled(Rat(d))};
        long e, f2, g, h;
        do {
            e = rng.int_in(-4, 4), f2 = rng.int_in(-4, 4);
            g = rng.int_in(-4, 4), h = rng.int_in(-4, 4);
        } while (e * h - f2 * g == 0);
        Poly F1 = base.f[0].compose(r, src);
        Poly F2 = base.f[1].compose(r, src);
        GermProblem moved{r,
                          {},
                          {F1.scaled(Rat(e)) + F2.scaled(Rat(f2)), F1.scaled(Rat(g)) + F2.scaled(Rat(h))},
                          {},
                          {},
                          {}};
        CHECK(cusp_count(moved) == c0);
        CHECK(degree_m(moved) == m0);
    }
}

TEST_CASE("seed independence of reports") {
    auto a = analyze(problems::cusp_map(), 1111, kTrials);
    auto b = analyze(problems::cusp_map(), 987654321, kTrials);
    CHECK(a.mu_S == b.mu_S);
    CHECK(a.c == b.c);
    CHECK(a.mu_Delta == b.mu_Delta);
    CHECK(a.m0_S == b.m0_S);
    CHECK(a.discriminant == b.discriminant);

    auto c = analyze(problems::cone_projection(), 5, kTrials);
    auto d = analyze(problems::cone_projection(), 6, kTrials);
    CHECK(c.mu_X == d.mu_X);
    CHECK(c.m0_X == d.m0_X);
    CHECK(c.m0_preimage == d.m0_preimage);
}

TEST_SUITE_END();
