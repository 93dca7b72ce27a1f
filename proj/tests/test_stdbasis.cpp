#include <doctest.h>

#include "germlab/stdbasis.hpp"

#include "test_util.hpp"

using namespace germlab;
using testutil::P;

TEST_SUITE_BEGIN("stdbasis");

namespace {

IdealBasis ideal(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& g : gens)
        ps.push_back(P(r, g));
    return IdealBasis::make(r, std::move(ps));
}

bool leading_set_is(const StandardBasis& B, const RingPtr& r, const std::vector<std::string>& monos) {
    if (B.leading_ideal.size() != monos.size())
        return false;
    std::vector<Mono> expect;
    for (const auto& m : monos)
        expect.push_back(P(r, m).leading_mono());
    for (const auto& m : expect) {
        bool found = false;
        for (const auto& l : B.leading_ideal)
            found = found || l == m;
        if (!found)
            return false;
    }
    return true;
}

Poly spoly_of(const Poly& a, const Poly& b) {
    const Mono lcm = Mono::lcm(a.leading_mono(), b.leading_mono());
    Poly s = Poly::zero(a.ring())
                 .axpy(b.leading_coeff(), a.leading_mono().quotient_of(lcm), a)
                 .axpy(-a.leading_coeff(), b.leading_mono().quotient_of(lcm), b);
    return s;
}

} // namespace

TEST_CASE("global basis of a monomial-ish ideal") {
    auto r = testutil::ring_xy();
    auto B = standard_basis(ideal(r, {"x", "y"}), MonomialOrder::degrevlex());
    REQUIRE(B.basis.size() == 2);
    CHECK(leading_set_is(B, r, {"x", "y"}));
}

TEST_CASE("local unit factor: x-x^2 generates <x> locally") {
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    auto B = standard_basis(ideal(r, {"x-x^2"}), MonomialOrder::negdegrevlex());
    REQUIRE(B.leading_ideal.size() == 1);
    CHECK(B.leading_ideal[0] == P(r, "x").leading_mono());
}

TEST_CASE("completion adds x^4 for <y^2-x^3, xy> under the local order") {
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    auto B = standard_basis(ideal(r, {"y^2-x^3", "x*y"}), MonomialOrder::negdegrevlex());
    CHECK(leading_set_is(B, r, {"x*y", "y^2", "x^4"}));
}

TEST_CASE("the same ideal under global degrevlex") {
    auto r = testutil::ring_xy();
    auto B = standard_basis(ideal(r, {"y^2-x^3", "x*y"}), MonomialOrder::degrevlex());
    CHECK(leading_set_is(B, r, {"x^3", "x*y", "y^3"}));
}

TEST_CASE("normal forms") {
    auto r = testutil::ring_xy();
    auto B = standard_basis(ideal(r, {"x", "y"}), MonomialOrder::degrevlex());
    CHECK(normal_form(P(r, "x^2"), B).is_zero());
    CHECK(normal_form(P(r, "1"), B) == P(r, "1"));

    auto rl = testutil::ring_xy(MonomialOrder::negdegrevlex());
    auto Bl = standard_basis(ideal(rl, {"y^2-x^3", "x*y"}), MonomialOrder::negdegrevlex());
    CHECK(normal_form(P(rl, "x^3"), Bl) == P(rl, "x^3"));
}

TEST_CASE("buchberger criterion and membership on bundled ideals") {
    struct Case {
        RingPtr r;
        std::vector<std::string> gens;
        MonomialOrder ord;
    };
    std::vector<Case> cases = {
        {testutil::ring_xy(), {"y^2-x^3", "x*y"}, MonomialOrder::degrevlex()},
        {testutil::ring_xy(MonomialOrder::negdegrevlex()), {"y^2-x^3", "x*y"}, MonomialOrder::negdegrevlex()},
        {testutil::ring_xyz(MonomialOrder::negdegrevlex()),
         {"x^3+y^3+z^4", "-6*x^2-3*y^2-12*z^3"},
         MonomialOrder::negdegrevlex()},
    };
    for (auto& c : cases) {
        auto I = ideal(c.r, c.gens);
        auto B = standard_basis(I, c.ord);
        for (size_t i = 0; i < B.basis.size(); ++i)
            for (size_t j = i + 1; j < B.basis.size(); ++j)
                CHECK(weak_normal_form(spoly_of(B.basis[i], B.basis[j]), B).is_zero());
        for (const auto& g : I.gens)
            CHECK(weak_normal_form(g, B).is_zero());
    }
}

TEST_CASE("colength basics") {
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    CHECK(colength(ideal(r, {"x", "y"}), MonomialOrder::negdegrevlex()) == 1);
    CHECK(colength(ideal(r, {"x^2", "y^3"}), MonomialOrder::negdegrevlex()) == 6);

    auto r1 = PolyRing::create({"x"}, MonomialOrder::negdegrevlex());
    CHECK(colength(ideal(r1, {"x-x^2"}), MonomialOrder::negdegrevlex()) == 1);

    // a global count would see <x - x^2> with staircase {1, x}: the local
    // answer 1 is the discriminating test
    CHECK(colength(ideal(r, {"x*y"}), MonomialOrder::negdegrevlex()) == std::nullopt);
    CHECK(colength(ideal(r, {}), MonomialOrder::negdegrevlex()) == std::nullopt);
    CHECK(colength(ideal(r, {"1+x"}), MonomialOrder::negdegrevlex()) == 0);
}

TEST_CASE("colength via the untruncated weighted-local path agrees") {
    // weighted_local with unit weights is the same order computed by the
    // plain Mora path: cross-checks the truncation machinery.
    auto check_both = [](const RingPtr& r, const std::vector<std::string>& gens) {
        auto I = ideal(r, gens);
        auto fast = colength(I, MonomialOrder::negdegrevlex());
        std::vector<long> w(static_cast<size_t>(r->nvars()), 1);
        auto slow = colength(I, MonomialOrder::weighted_local(w));
        CHECK(fast == slow);
        return fast;
    };
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    CHECK(check_both(r, {"x^2", "y^3"}) == 6);
    CHECK(check_both(r, {"x-x^2"}) == std::nullopt);
    CHECK(check_both(r, {"3*y^2+x", "6*y", "3*y^2-x"}) == 1);
    auto r3 = testutil::ring_xyz(MonomialOrder::negdegrevlex());
    CHECK(check_both(r3, {"2*x", "2*y", "2*z"}) == 1);
    CHECK(check_both(r3, {"x^2+y^2+z^2", "x", "y"}) == 2);
    CHECK(check_both(r3, {"3*x^2", "3*y^2", "4*z^3"}) == 12); // mu of x^3+y^3+z^4
}

TEST_CASE("colength invariance under linear coordinate change") {
    Rng rng(11);
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    std::vector<std::vector<std::string>> ideals = {
        {"x^2", "y^3"},
        {"3*y^2+x", "6*y", "3*y^2-x"},
        {"x^3-y^2", "x*y"},
    };
    for (const auto& gens : ideals) {
        auto I = ideal(r, gens);
        auto base = colength(I, MonomialOrder::negdegrevlex());
        for (int trial = 0; trial < 4; ++trial) {
            long a, b, c, d;
            do {
                a = rng.int_in(-5, 5);
                b = rng.int_in(-5, 5);
                c = rng.int_in(-5, 5);
                d = rng.int_in(-5, 5);
            } while (a * d - b * c == 0);
            Poly nx = P(r, std::to_string(a) + "*x+" + "(" + std::to_string(b) + ")*y");
            Poly ny = P(r, std::to_string(c) + "*x+" + "(" + std::to_string(d) + ")*y");
            std::vector<std::optional<Poly>> subs = {nx, ny};
            std::vector<Poly> moved;
            for (const auto& g : I.gens)
                moved.push_back(g.compose(r, subs));
            CHECK(colength(IdealBasis::make(r, moved), MonomialOrder::negdegrevlex()) == base);
        }
    }
}

TEST_CASE("colength invariance under adding ideal elements") {
    Rng rng(12);
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    auto I = ideal(r, {"x^2-y^3", "x*y^2"});
    auto base = colength(I, MonomialOrder::negdegrevlex());
    for (int trial = 0; trial < 5; ++trial) {
        Poly combo = Poly::zero(r);
        for (const auto& g : I.gens) {
            Poly mult = testutil::random_poly(r, rng, 3, 2);
            combo = combo + mult * g;
        }
        auto gens = I.gens;
        gens.push_back(combo);
        CHECK(colength(IdealBasis::make(r, gens), MonomialOrder::negdegrevlex()) == base);
        auto scaled = I.gens;
        scaled[0] = scaled[0].scaled(make_rat(3, 7));
        CHECK(colength(IdealBasis::make(r, scaled), MonomialOrder::negdegrevlex()) == base);
    }
}

TEST_CASE("elimination: twisted cubic style") {
    auto r = PolyRing::create({"t", "u", "v"}, MonomialOrder::degrevlex());
    auto E = eliminate(ideal(r, {"u-t^2", "v-t^3"}), {"t"});
    REQUIRE(E.gens.size() == 1);
    CHECK(E.gens[0].primitive_part() == parse_poly("u^3-v^2", E.ring));
}

TEST_CASE("elimination: free variable gives the zero ideal") {
    auto r = PolyRing::create({"x", "u"}, MonomialOrder::degrevlex());
    auto E = eliminate(ideal(r, {"u-x"}), {"x"});
    CHECK(E.gens.empty());
}

TEST_CASE("elimination: cusp discriminant") {
    auto r = PolyRing::create({"x", "y", "u", "v"}, MonomialOrder::degrevlex());
    auto E = eliminate(ideal(r, {"x+3*y^2", "u-x", "v-(y^3+x*y)"}), {"x", "y"});
    REQUIRE(E.gens.size() == 1);
    CHECK(E.gens[0].primitive_part() == parse_poly("4*u^3+27*v^2", E.ring));
}

TEST_CASE("elimination soundness") {
    auto r = PolyRing::create({"x", "y", "u", "v"}, MonomialOrder::degrevlex());
    auto I = ideal(r, {"x+3*y^2", "u-x", "v-(y^3+x*y)"});
    auto E = eliminate(I, {"x", "y"});
    auto B = standard_basis(I, MonomialOrder::degrevlex());
    for (const auto& g : E.gens) {
        for (const auto& t : g.terms()) {
            (void)t; // kept variables only, by construction of the ring
        }
        // map back into the big ring and reduce
        std::vector<int> emb;
        for (const auto& name : E.ring->vars())
            emb.push_back(*r->index_of(name));
        CHECK(weak_normal_form(g.map_to(r, emb), B).is_zero());
    }
}

TEST_CASE("lifted division") {
    auto r = testutil::ring_xy(MonomialOrder::negdegrevlex());
    {
        auto I = ideal(r, {"2*y"});
        auto L = lifted_division(P(r, "y^2"), I, MonomialOrder::negdegrevlex());
        CHECK(L.remainder.is_zero());
        CHECK(L.cofactors[0] == P(r, "1/2*y"));
        CHECK(L.unit == P(r, "1"));
    }
    {
        // x = (1-x)^{-1} (x - x^2) locally: remainder 0 with a unit multiplier
        auto I = ideal(r, {"x-x^2"});
        auto L = lifted_division(P(r, "x"), I, MonomialOrder::negdegrevlex());
        CHECK(L.remainder.is_zero());
        CHECK(L.unit.coeff_at_origin() != 0);
        CHECK(L.unit * P(r, "x") == L.cofactors[0] * P(r, "x-x^2"));
    }
    {
        auto I = ideal(r, {"x"});
        auto L = lifted_division(P(r, "1+y"), I, MonomialOrder::negdegrevlex());
        CHECK(L.remainder == P(r, "1+y"));
    }
}

TEST_SUITE_END();
