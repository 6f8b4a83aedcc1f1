#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrs/expr.hpp"
#include "qrs/hopf.hpp"
#include "qrs/verify.hpp"

using namespace qrs;

namespace {

Tensor outer2(const Algebra& alg, const std::string& a, const std::string& b,
              Parent pa = Parent::U, Parent pb = Parent::U) {
    return Tensor::outer({parse_element(alg, a, pa), parse_element(alg, b, pb)});
}

}  // namespace

TEST_CASE("generator tables of the coproducts") {
    Algebra a1(CartanData::make("A1"));
    const Element f = a1.gen(LK::F, 0, Parent::U);
    const Element e = a1.gen(LK::E, 0, Parent::U);

    CHECK(coproduct(a1, CoproductKind::Std, f) ==
          outer2(a1, "f[1]", "v[1]") + outer2(a1, "1", "f[1]"));
    CHECK(coproduct(a1, CoproductKind::Std, e) ==
          outer2(a1, "e[1]", "1") + outer2(a1, "w[1]", "e[1]"));
    CHECK(coproduct(a1, CoproductKind::Std, a1.omega({-1}, Parent::U)) ==
          outer2(a1, "w[1]^-1", "w[1]^-1"));
    CHECK(coproduct(a1, CoproductKind::Std, a1.multiply(f, f)) ==
          outer2(a1, "f[1]*f[1]", "v[1]^2") +
              outer2(a1, "(1+r*s^-1)*f[1]", "f[1]*v[1]") +
              outer2(a1, "1", "f[1]*f[1]"));

    const Element epp = a1.gen(LK::EPP, 0, Parent::B);
    CHECK(coproduct(a1, CoproductKind::Right, epp) ==
          outer2(a1, "(r-s)*1", "w[1]^-1*e[1]", Parent::B, Parent::U) +
              outer2(a1, "E[1]", "w[1]^-1", Parent::B, Parent::U));

    // the standard coproduct is undefined on the double-prime letters
    CHECK_THROWS_AS(coproduct(a1, CoproductKind::Std, epp), IllegalLetter);
    CHECK_THROWS_AS(coproduct(a1, CoproductKind::Right, e), IllegalLetter);
}

TEST_CASE("counit") {
    Algebra a2(CartanData::make("A2"));
    CHECK(counit(parse_element(a2, "w[1]*v[2]^-1", Parent::U)) == Scalar(1));
    CHECK(counit(parse_element(a2, "f[1]*e[1]", Parent::U)) == Scalar(0));
    CHECK(counit(parse_element(a2, "1 + f[1]", Parent::U)) == Scalar(1));
}

TEST_CASE("antipode tables and inverse") {
    Algebra a1(CartanData::make("A1"));
    const Element f = a1.gen(LK::F, 0, Parent::U);
    const Element e = a1.gen(LK::E, 0, Parent::U);
    CHECK(antipode(a1, f) == parse_element(a1, "-f[1]*v[1]^-1", Parent::U));
    CHECK(antipode(a1, e) == parse_element(a1, "-w[1]^-1*e[1]", Parent::U));
    CHECK(antipode(a1, f, AntipodeDir::SInv) ==
          a1.normal_form(parse_element(a1, "-v[1]^-1*f[1]", Parent::U)));
    CHECK(antipode(a1, antipode(a1, f, AntipodeDir::SInv)) == f);
    CHECK(antipode(a1, a1.unit(Parent::U)) == a1.unit(Parent::U));
}

TEST_CASE("the anti-isomorphism into B and the twisting automorphism") {
    Algebra a2(CartanData::make("A2"));
    CHECK(phi(a2, parse_element(a2, "e[1]", Parent::Bbar)) ==
          parse_element(a2, "(-1/(r-s))*E[1]", Parent::B));
    CHECK(phi(a2, parse_element(a2, "w[1]", Parent::Bbar)) ==
          parse_element(a2, "w[1]^-1", Parent::B));
    CHECK(phi(a2, parse_element(a2, "P[1]", Parent::Bbar)) ==
          parse_element(a2, "-(r-s)*f[1]", Parent::B));
    // anti-multiplicativity on a worked pair
    CHECK(phi(a2, parse_element(a2, "e[1]*e[2]", Parent::Bbar)) ==
          parse_element(a2, "(1/((r-s)*(r^2-s^2)))*E[2]*E[1]", Parent::B));

    Algebra a1(CartanData::make("A1"));
    CHECK(psi(a1, a1.gen(LK::E, 0, Parent::U)) ==
          parse_element(a1, "w[1]^-1*v[1]*e[1]", Parent::U));
    CHECK(psi(a1, a1.omega({1}, Parent::U)) == a1.omega({1}, Parent::U));
    // multiplicativity through a crossing
    Element x = a1.multiply(a1.gen(LK::F, 0, Parent::U), a1.gen(LK::E, 0, Parent::U));
    CHECK(psi(a1, x) == a1.multiply(psi(a1, a1.gen(LK::F, 0, Parent::U)),
                                    psi(a1, a1.gen(LK::E, 0, Parent::U))));
}

TEST_CASE("hopf suite passes on the smallest types") {
    Config cfg;
    cfg.type = "A1";
    Report rep = run_suite("hopf", cfg);
    for (const auto& e : rep.entries) {
        CAPTURE(e.id);
        CAPTURE(e.instance);
        CHECK(e.pass);
    }
    CHECK(rep.ok());
}
