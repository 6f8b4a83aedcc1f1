#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrs/expr.hpp"
#include "qrs/pairing.hpp"

using namespace qrs;

namespace {

// Independent two-step computation of <e^2, f^2> on rank one, spelling out
// the defining recursion by hand: peel one f, pair the matching coproduct leg
// against it, and finish with the generator base case.
Scalar oracle_e2_f2() {
    const Scalar r = Scalar::r(), s = Scalar::s();
    const Scalar base = (s - r).inv();       // <e, f>
    const Scalar q = r / s;                  // toral factor of <w e, f>
    // Delta(e^2) = e^2 (x) 1 + (1 + q^{-1}) w e (x) e + w^2 (x) e^2
    // pairing against f (x) f picks the middle term twice:
    //   (1 + q^{-1}) <w e, f> <e, f> with <w e, f> = q <e, f>
    return (Scalar(1) + q.inv()) * (q * base) * base;
}

}  // namespace

TEST_CASE("pairing base cases") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    CHECK(pr.pair(a1.gen(LK::E, 0, Parent::U), a1.gen(LK::F, 0, Parent::U)) ==
          Scalar::parse("1/(s-r)"));

    Algebra a2(CartanData::make("A2"));
    SkewPairing pr2(a2);
    CHECK(pr2.pair(a2.gen(LK::E, 0, Parent::U), a2.gen(LK::F, 1, Parent::U)).is_zero());
    CHECK(pr2.pair(a2.omega({1, 0}, Parent::U), a2.omega_prime({0, 1}, Parent::U)) ==
          Scalar::s());
    // toral against lowering letters vanishes
    CHECK(pr2.pair(a2.omega({1, 0}, Parent::U), a2.gen(LK::F, 0, Parent::U)).is_zero());
    CHECK_THROWS_AS(pr2.pair(a2.gen(LK::F, 0, Parent::U), a2.gen(LK::F, 0, Parent::U)),
                    IllegalLetter);
}

TEST_CASE("two-letter pairing against the hand-expanded recursion") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    const Element e2 = parse_element(a1, "e[1]*e[1]", Parent::U);
    const Element f2 = parse_element(a1, "f[1]*f[1]", Parent::U);
    CHECK(pr.pair(e2, f2) == oracle_e2_f2());
    CHECK(pr.pair(e2, f2) == Scalar::parse("(1+r*s^-1)/(s-r)^2"));
}

TEST_CASE("gram matrices at small weights") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    const GramData& g1 = pr.gram({1});
    CHECK(g1.gram.size() == 1);
    CHECK(g1.gram[0][0] == Scalar::parse("1/(s-r)"));
    const GramData& g2 = pr.gram({2});
    CHECK(g2.gram[0][0] == Scalar::parse("(1+r*s^-1)/(s-r)^2"));

    Algebra a2(CartanData::make("A2"));
    SkewPairing pr2(a2);
    const GramData& g = pr2.gram({1, 1});
    REQUIRE(g.gram.size() == 2);
    // plus words in lex order: e1e2, e2e1; minus words f1f2, f2f1
    CHECK(g.gram[0][0] == Scalar::parse("1/(s-r)^2"));
    CHECK(g.gram[0][1] == Scalar::parse("s/(s-r)^2"));
    CHECK(g.gram[1][0] == Scalar::parse("1/(r*(s-r)^2)"));
    CHECK(g.gram[1][1] == Scalar::parse("1/(s-r)^2"));
    CHECK(g.det == Scalar::parse("1/(r*(r-s)^3)"));
}

TEST_CASE("dual bases") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    CHECK(pr.dual_basis({1})[0] == parse_element(a1, "(s-r)*f[1]", Parent::U));
    CHECK(pr.dual_basis({2})[0] ==
          parse_element(a1, "((s-r)^2/(1+r*s^-1))*f[1]*f[1]", Parent::U));

    Algebra a2(CartanData::make("A2"));
    SkewPairing pr2(a2);
    const auto duals = pr2.dual_basis({1, 1});
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const Scalar v = pr2.pair(pr2.plus_element({1, 1}, r), duals[c]);
            CHECK(v == (r == c ? Scalar(1) : Scalar(0)));
        }
    }
}

TEST_CASE("pairing property report") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    Report rep = check_pairing(pr, 3, 2, 99, 50);
    for (const auto& e : rep.entries) {
        CAPTURE(e.id);
        CAPTURE(e.instance);
        CHECK(e.pass);
    }
    CHECK(rep.ok());
}

TEST_CASE("nondegeneracy across the shipped types") {
    for (const char* ty : {"A1", "A2", "B2"}) {
        Algebra alg(CartanData::make(ty));
        SkewPairing pr(alg);
        for (const auto& beta : alg.positive_weights_upto(3))
            CHECK(!pr.gram(beta).det.is_zero());
    }
}
