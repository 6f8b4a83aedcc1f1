#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrs/expr.hpp"
#include "qrs/modules.hpp"

using namespace qrs;

namespace {

struct Setup {
    Algebra alg;
    SkewPairing pr;
    Canonical can;
    Projector proj;
    explicit Setup(const std::string& ty)
        : alg(CartanData::make(ty)), pr(alg), can(pr), proj(can) {}
};

}  // namespace

TEST_CASE("generator actions on the highest vector") {
    Setup s("A1");
    VermaModule M(s.alg, {1}, 4);
    const ModuleVector top = M.highest_vector();

    // raising kills the top vector
    CHECK(M.act(s.alg.gen(LK::EPP, 0, Parent::B), top).is_zero());

    // toral eigenvalue at lambda = alpha
    ModuleVector wtop = M.act(s.alg.omega({1}, Parent::B), top);
    CHECK(wtop == top.scaled(Scalar::parse("r*s^-1")));

    // crossing: e'' f^m u = (m)_q f^{m-1} u
    const Element f = s.alg.gen(LK::F, 0, Parent::B);
    const Element epp = s.alg.gen(LK::EPP, 0, Parent::B);
    ModuleVector fm = top;
    for (int m = 1; m <= 3; ++m) {
        fm = M.act(f, fm);
        ModuleVector up = M.act(epp, fm);
        ModuleVector expect = M.basis_vector({m - 1}, 0)
                                  .scaled(q_number(m, Scalar::parse("r*s^-1")));
        CHECK(up == expect);
    }

    // depth guard
    ModuleVector deep = M.basis_vector({4}, 0);
    CHECK_THROWS_AS(M.act(f, deep), DepthExceeded);
}

TEST_CASE("weight bookkeeping of the letter actions") {
    Setup s("A2");
    VermaModule M(s.alg, {1, 1}, 3);
    const ModuleVector v = M.act(s.alg.gen(LK::F, 0, Parent::B), M.highest_vector());
    for (const auto& [k, c] : v.comps) CHECK(k.first == Weight{1, 0});
    const ModuleVector w = M.act(s.alg.gen(LK::EPP, 0, Parent::B), v);
    for (const auto& [k, c] : w.comps) CHECK(k.first == Weight{0, 0});
}

TEST_CASE("kernels of the raising operators") {
    Setup s1("A1");
    VermaModule M1(s1.alg, {2}, 4);
    for (const auto& beta : s1.alg.positive_weights_upto(3)) {
        const auto ker = M1.kernel_slice(beta);
        CHECK(ker.size() == (weight_height(beta) == 0 ? 1 : 0));
    }

    Setup s2("A2");
    VermaModule M2(s2.alg, {0, 1}, 3);
    for (const auto& beta : s2.alg.positive_weights_upto(2)) {
        const auto ker = M2.kernel_slice(beta);
        CHECK(ker.size() == (weight_height(beta) == 0 ? 1 : 0));
    }
}

TEST_CASE("projector action on module vectors") {
    Setup s("A1");
    const GradedElement G = s.proj.gamma(4);
    VermaModule M(s.alg, {1}, 4);
    CHECK(M.apply_graded(G, M.highest_vector()) == M.highest_vector());
    const Element f = s.alg.gen(LK::F, 0, Parent::B);
    ModuleVector fv = M.act(f, M.highest_vector());
    CHECK(M.apply_graded(G, fv).is_zero());
    ModuleVector ffv = M.act(f, fv);
    CHECK(M.apply_graded(G, ffv).is_zero());
    // depth beyond the graded cutoff is refused
    const GradedElement G1 = s.proj.gamma(1);
    CHECK_THROWS_AS(M.apply_graded(G1, ffv), DepthExceeded);
}

TEST_CASE("module reports across sampled highest weights") {
    for (const char* ty : {"A1", "A2"}) {
        Setup s(ty);
        const GradedElement G = s.proj.gamma(3);
        for (const auto& lam : sample_lambdas(s.alg.rank())) {
            VermaModule M(s.alg, lam, 3);
            Report rep = check_verma(M, G, 2, 31);
            for (const auto& e : rep.entries) {
                CAPTURE(e.id);
                CAPTURE(e.instance);
                CHECK(e.pass);
            }
        }
    }
}

TEST_CASE("direct sum complement construction") {
    Setup s("A1");
    const GradedElement G = s.proj.gamma(3);
    VermaModule M0(s.alg, {1}, 3);
    VermaModule M1(s.alg, {-3}, 3);
    CHECK(check_direct_sum(M0, M1, G, 2).ok());
    // coinciding highest weights exercise the complement choice
    VermaModule M2(s.alg, {1}, 3);
    CHECK(check_direct_sum(M0, M2, G, 2).ok());
}
