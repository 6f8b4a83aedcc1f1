#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrs/expr.hpp"
#include "qrs/projector.hpp"

using namespace qrs;

TEST_CASE("projector grades on rank one") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    Canonical can(pr);
    Projector proj(can);
    const GradedElement G = proj.gamma(3);

    CHECK(G.grades.at({0}) == a1.unit(Parent::B));
    CHECK(G.grades.at({1}) == parse_element(a1, "-f[1]*E[1]", Parent::B));
    CHECK(G.grades.at({2}) ==
          parse_element(a1, "((r*s^-1)/(1+r*s^-1))*f[1]*f[1]*E[1]*E[1]", Parent::B));
}

TEST_CASE("closed-form series coefficients") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    Canonical can(pr);
    Projector proj(can);
    const GradedElement closed = proj.gamma_closed_rank1(3);
    CHECK(closed.grades.at({0}) == a1.unit(Parent::B));
    CHECK(closed.grades.at({1}) == parse_element(a1, "-f[1]*E[1]", Parent::B));
    // the n = 3 term carries -(q^3 / ((1+q)(1+q+q^2))) with q = r/s
    CHECK(closed.grades.at({3}) ==
          parse_element(a1,
                        "(-(r*s^-1)^3/((1+r*s^-1)*(1+r*s^-1+(r*s^-1)^2)))"
                        "*f[1]*f[1]*f[1]*E[1]*E[1]*E[1]",
                        Parent::B));

    // the general construction reproduces the series grade by grade
    const GradedElement G = proj.gamma(6);
    const GradedElement C6 = proj.gamma_closed_rank1(6);
    for (const auto& [w, e] : C6.grades) CHECK(G.grades.at(w) == e);

    Algebra a2(CartanData::make("A2"));
    SkewPairing pr2(a2);
    Canonical can2(pr2);
    Projector proj2(can2);
    CHECK_THROWS_AS(proj2.gamma_closed_rank1(2), WrongType);
}

TEST_CASE("projector laws on rank one") {
    Algebra a1(CartanData::make("A1"));
    SkewPairing pr(a1);
    Canonical can(pr);
    Projector proj(can);
    Report rep = proj.check_projector(4);
    for (const auto& e : rep.entries) {
        CAPTURE(e.id);
        CAPTURE(e.instance);
        CHECK(e.pass);
    }
}

TEST_CASE("projector laws on rank two") {
    Algebra a2(CartanData::make("A2"));
    SkewPairing pr(a2);
    Canonical can(pr);
    Projector proj(can);
    Report rep = proj.check_projector(2);
    for (const auto& e : rep.entries) {
        CAPTURE(e.id);
        CAPTURE(e.instance);
        CHECK(e.pass);
    }
}
