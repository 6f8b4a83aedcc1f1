#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "qrs/algebra.hpp"
#include "qrs/expr.hpp"
#include "qrs/rng.hpp"

using namespace qrs;

namespace {

// Independent oracle: count expressions of beta as a sum of positive roots.
// The weight-space dimensions of the free halves modulo the higher relations
// must match these counts.
long long partition_count(const std::vector<Weight>& roots, Weight beta, size_t from = 0) {
    if (!weight_nonneg(beta)) return 0;
    if (weight_height(beta) == 0) return 1;
    if (from == roots.size()) return 0;
    long long total = 0;
    Weight rest = beta;
    while (weight_nonneg(rest)) {
        total += partition_count(roots, rest, from + 1);
        rest = weight_sub(rest, roots[from]);
    }
    return total;
}

std::vector<Weight> positive_roots(const std::string& type) {
    if (type == "A1") return {{1}};
    if (type == "A2") return {{1, 0}, {0, 1}, {1, 1}};
    if (type == "B2") return {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    if (type == "G2") return {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    throw WrongType(type);
}

// Independent oracle: normalize e''(i)^n f(j)^m using only the two-term
// crossing rule, on plain symbol strings.
std::map<std::pair<int, int>, Scalar> brute_cross(const Algebra& alg, int n, int m,
                                                  int i, int j) {
    const Scalar kap = alg.cartan().kappa_gen(j, i);
    struct Term {
        Scalar c;
        std::string w;  // 'E' and 'F' letters
    };
    std::vector<Term> todo = {{Scalar(1), std::string(n, 'E') + std::string(m, 'F')}};
    std::map<std::pair<int, int>, Scalar> out;
    while (!todo.empty()) {
        Term t = std::move(todo.back());
        todo.pop_back();
        const size_t pos = t.w.find("EF");
        if (pos == std::string::npos) {
            const int fs = static_cast<int>(std::count(t.w.begin(), t.w.end(), 'F'));
            const int es = static_cast<int>(t.w.size()) - fs;
            auto key = std::make_pair(fs, es);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, t.c);
            else
                it->second += t.c;
            continue;
        }
        std::string swapped = t.w;
        swapped[pos] = 'F';
        swapped[pos + 1] = 'E';
        todo.push_back({t.c * kap, swapped});
        if (i == j) {
            std::string dropped = t.w.substr(0, pos) + t.w.substr(pos + 2);
            todo.push_back({t.c, dropped});
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

std::map<std::pair<int, int>, Scalar> coefficient_map(const Element& x, int i, int j) {
    std::map<std::pair<int, int>, Scalar> out;
    for (const auto& [m, c] : x.terms()) {
        REQUIRE(m.toral_trivial());
        for (const auto& l : m.pre) REQUIRE(l.i == j);
        for (const auto& l : m.post) REQUIRE(l.i == i);
        out[{static_cast<int>(m.pre.size()), static_cast<int>(m.post.size())}] = c;
    }
    return out;
}

}  // namespace

TEST_CASE("crossing relations on rank one") {
    Algebra alg(CartanData::make("A1"));
    const Element e = alg.gen(LK::E, 0, Parent::U);
    const Element f = alg.gen(LK::F, 0, Parent::U);
    const Element epp = alg.gen(LK::EPP, 0, Parent::B);
    const Element fb = alg.gen(LK::F, 0, Parent::B);

    CHECK(alg.multiply(epp, fb) ==
          parse_element(alg, "(r*s^-1)*f[1]*E[1] + 1", Parent::B));
    CHECK(alg.multiply(e, f) - alg.multiply(f, e) ==
          parse_element(alg, "(w[1]-v[1])/(r-s)", Parent::U));
    CHECK(alg.multiply(alg.multiply(epp, epp), fb) ==
          parse_element(alg, "(r*s^-1)^2*f[1]*E[1]*E[1] + (1+r*s^-1)*E[1]", Parent::B));
    CHECK(alg.multiply(epp, alg.multiply(fb, fb)) ==
          parse_element(alg, "(r*s^-1)^2*f[1]*f[1]*E[1] + (1+r*s^-1)*f[1]", Parent::B));

    // toral conjugation
    const Element w = alg.omega({1}, Parent::U);
    const Element winv = alg.omega({-1}, Parent::U);
    CHECK(alg.multiply(alg.multiply(w, f), winv) ==
          parse_element(alg, "(r^-1*s)*f[1]", Parent::U));
    CHECK(alg.multiply(w, winv) == alg.unit(Parent::U));
}

TEST_CASE("the primed letters of the mirror algebra") {
    Algebra alg(CartanData::make("A1"));
    const Element fp = alg.gen(LK::FP, 0, Parent::Bbar);
    const Element e = alg.gen(LK::E, 0, Parent::Bbar);
    CHECK(alg.multiply(fp, e) ==
          parse_element(alg, "(r*s^-1)*e[1]*P[1] + 1", Parent::Bbar));
}

TEST_CASE("higher relation elements and their normal forms") {
    Algebra a2(CartanData::make("A2"));
    const Element s = a2.serre_element(0, 1, LK::F);
    CHECK(s == parse_element(
                   a2, "f[2]*f[1]*f[1] - (1+r*s^-1)*s*(f[1]*f[2]*f[1]) + r*s*(f[1]*f[1]*f[2])",
                   Parent::U));
    for (const char* t : {"A2", "B2", "G2"}) {
        Algebra alg(CartanData::make(t));
        for (int i = 0; i < alg.rank(); ++i) {
            for (int j = 0; j < alg.rank(); ++j) {
                if (i == j) continue;
                for (LK k : {LK::F, LK::EPP, LK::E, LK::FP})
                    CHECK(alg.normal_form(alg.serre_element(i, j, k)).is_zero());
            }
        }
    }
    Algebra a1(CartanData::make("A1"));
    CHECK_THROWS_AS(a1.serre_element(0, 0, LK::F), BadIndex);
}

TEST_CASE("commutation closed form against the symbol-string oracle") {
    for (const char* t : {"A1", "A2"}) {
        Algebra alg(CartanData::make(t));
        for (int n = 0; n <= 3; ++n) {
            for (int m = 0; m <= 3; ++m) {
                for (int i = 0; i < alg.rank(); ++i) {
                    for (int j = 0; j < alg.rank(); ++j) {
                        auto oracle = brute_cross(alg, n, m, i, j);
                        Element closed = alg.commutation_closed_form(n, m, i, j);
                        CHECK(coefficient_map(closed, i, j) == oracle);
                        std::vector<Atom> word;
                        for (int k = 0; k < n; ++k) word.push_back({LK::EPP, i, 1});
                        for (int k = 0; k < m; ++k) word.push_back({LK::F, j, 1});
                        Element nf = alg.normal_form(Scalar(1), word, Parent::B);
                        CHECK(coefficient_map(nf, i, j) == oracle);
                    }
                }
            }
        }
    }
}

TEST_CASE("weight space bases against the partition-count oracle") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
        Algebra alg(CartanData::make(t));
        const auto roots = positive_roots(t);
        for (const auto& beta : alg.positive_weights_upto(t == std::string("G2") ? 4 : 5)) {
            const long long expect = partition_count(roots, beta);
            CHECK(alg.weight_dim(LK::E, beta) == expect);
            CHECK(alg.weight_dim(LK::F, beta) == expect);
            CHECK(alg.weight_dim(LK::EPP, beta) == expect);
        }
    }
    // pinned examples
    Algebra a1(CartanData::make("A1"));
    CHECK(a1.weight_basis(LK::E, {2}) == std::vector<Word>{{0, 0}});
    Algebra a2(CartanData::make("A2"));
    CHECK(a2.weight_basis(LK::E, {1, 1}) == std::vector<Word>{{0, 1}, {1, 0}});
    CHECK(a2.weight_dim(LK::E, {2, 1}) == 2);
    CHECK_THROWS_AS(Algebra(CartanData::make("A1"), 3).weight_basis(LK::E, {4}),
                    HeightExceeded);
}

TEST_CASE("weights of elements") {
    Algebra a2(CartanData::make("A2"));
    Element x = a2.multiply(a2.gen(LK::F, 0, Parent::Env), a2.gen(LK::EPP, 1, Parent::Env));
    CHECK(x.weight() == Weight{-1, 1});
    CHECK(a2.omega_prime({-1, 0}, Parent::U).weight() == Weight{0, 0});
    Element mixed = a2.gen(LK::F, 0, Parent::U) + a2.gen(LK::E, 0, Parent::U);
    CHECK(!mixed.weight().has_value());
}

TEST_CASE("toral conjugation scales basis vectors") {
    Algebra a2(CartanData::make("A2"));
    for (const auto& beta : a2.positive_weights_upto(3)) {
        for (const auto& word : a2.weight_basis(LK::E, beta)) {
            Element x = a2.word_element(LK::E, word, Parent::U);
            for (int i = 0; i < 2; ++i) {
                const Weight mu = weight_alpha(2, i);
                Element lhs = a2.multiply(a2.omega(mu, Parent::U), x,
                                          a2.omega({-mu[0], -mu[1]}, Parent::U));
                CHECK(lhs == x.scaled(a2.cartan().kappa(beta, mu)));
            }
        }
    }
}

TEST_CASE("rewriting is associative and idempotent on random words") {
    Rng rng(23);
    int done = 0;
    for (const char* t : {"A1", "A2"}) {
        Algebra alg(CartanData::make(t));
        for (int trial = 0; trial < 250; ++trial) {
            const auto rand_elem = [&](int len) {
                std::vector<Atom> atoms;
                for (int k = 0; k < len; ++k) {
                    const int which = static_cast<int>(rng.below(4));
                    const int i = static_cast<int>(rng.below(alg.rank()));
                    if (which == 0)
                        atoms.push_back({LK::E, i, 1});
                    else if (which == 1)
                        atoms.push_back({LK::F, i, 1});
                    else
                        atoms.push_back({which == 2 ? LK::W : LK::WP, i, rng.range(-1, 1)});
                }
                return alg.normal_form(Scalar(1), atoms, Parent::U);
            };
            Element a = rand_elem(2), b = rand_elem(2), c = rand_elem(2);
            Element lhs = alg.multiply(alg.multiply(a, b), c);
            Element rhs = alg.multiply(a, alg.multiply(b, c));
            CHECK(lhs == rhs);
            CHECK(alg.normal_form(lhs) == lhs);
            ++done;
        }
    }
    CHECK(done == 500);
}

TEST_CASE("letter legality") {
    Algebra alg(CartanData::make("A1"));
    CHECK_THROWS_AS(alg.gen(LK::EPP, 0, Parent::U), IllegalLetter);
    CHECK_THROWS_AS(alg.gen(LK::F, 0, Parent::Bbar), IllegalLetter);
    CHECK_THROWS_AS(alg.gen(LK::E, 0, Parent::B), IllegalLetter);
    Element b = alg.gen(LK::EPP, 0, Parent::B);
    Element bbar = alg.gen(LK::FP, 0, Parent::Bbar);
    CHECK_THROWS_AS(alg.multiply(b, bbar), IncompatibleParents);
    // mixed raising letters live in the enveloping letter set
    Element u = alg.gen(LK::E, 0, Parent::U);
    Element mixed = alg.multiply(u, b);
    CHECK(mixed.parent() == Parent::Env);
    CHECK(mixed.terms().size() == 1);
}

TEST_CASE("triangular shape of the mixed algebra") {
    // products of a lowering word and a raising word concatenate with no
    // cross terms, so the graded pieces multiply out freely
    Algebra a2(CartanData::make("A2"));
    for (const auto& beta : a2.positive_weights_upto(2)) {
        for (const auto& gamma : a2.positive_weights_upto(2)) {
            const auto fb = a2.weight_basis(LK::F, beta);
            const auto eb = a2.weight_basis(LK::EPP, gamma);
            for (const auto& fw : fb) {
                for (const auto& ew : eb) {
                    Element prod = a2.multiply(a2.word_element(LK::F, fw, Parent::B),
                                               a2.word_element(LK::EPP, ew, Parent::B));
                    CHECK(prod.terms().size() == 1);
                }
            }
        }
    }
}
