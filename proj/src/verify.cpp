#include "qrs/verify.hpp"

#include <functional>

#include "qrs/modules.hpp"
#include "qrs/rng.hpp"

namespace qrs {

namespace {

// A defining relation written as a vanishing sum of scalar-weighted products
// of generators; shared between the normal-form checks and the coproduct
// homomorphism checks.
struct RelationInstance {
    std::string id;
    std::string instance;
    std::vector<std::pair<Scalar, std::vector<Element>>> terms;
};

std::string ij(int i, int j) {
    return "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
}

std::vector<RelationInstance> defining_relations(const Algebra& alg, Parent p) {
    const auto& cd = alg.cartan();
    const int rank = cd.rank;
    std::vector<RelationInstance> out;

    const auto W = [&](int i, long long e) {
        return alg.normal_form(Scalar(1), {{LK::W, i, e}}, p);
    };
    const auto WP = [&](int i, long long e) {
        return alg.normal_form(Scalar(1), {{LK::WP, i, e}}, p);
    };
    const auto G = [&](LK k, int i) { return alg.gen(k, i, p); };
    const Element one = alg.unit(p);

    // invertibility and commutativity of the toral letters
    for (int i = 0; i < rank; ++i) {
        out.push_back({"relation.toral_inverse", "w i=" + std::to_string(i + 1),
                       {{Scalar(1), {W(i, 1), W(i, -1)}}, {Scalar(-1), {one}}}});
        out.push_back({"relation.toral_inverse", "v i=" + std::to_string(i + 1),
                       {{Scalar(1), {WP(i, 1), WP(i, -1)}}, {Scalar(-1), {one}}}});
        for (int j = 0; j < rank; ++j) {
            out.push_back({"relation.toral_commute", ij(i, j),
                           {{Scalar(1), {W(i, 1), WP(j, 1)}},
                            {Scalar(-1), {WP(j, 1), W(i, 1)}}}});
        }
    }

    const bool has_e = letter_legal(p, LK::E);
    const bool has_epp = letter_legal(p, LK::EPP);
    const bool has_f = letter_legal(p, LK::F);
    const bool has_fp = letter_legal(p, LK::FP);

    // toral conjugation of the four letter kinds
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            if (has_e) {
                out.push_back({"relation.conj_w_e", ij(i, j),
                               {{Scalar(1), {W(i, 1), G(LK::E, j)}},
                                {-cd.kappa_gen(j, i), {G(LK::E, j), W(i, 1)}}}});
                out.push_back({"relation.conj_v_e", ij(i, j),
                               {{Scalar(1), {WP(i, 1), G(LK::E, j)}},
                                {-cd.kappa_gen(i, j).inv(), {G(LK::E, j), WP(i, 1)}}}});
            }
            if (has_epp) {
                out.push_back({"relation.conj_w_epp", ij(i, j),
                               {{Scalar(1), {W(i, 1), G(LK::EPP, j)}},
                                {-cd.kappa_gen(j, i), {G(LK::EPP, j), W(i, 1)}}}});
                out.push_back({"relation.conj_v_epp", ij(i, j),
                               {{Scalar(1), {WP(i, 1), G(LK::EPP, j)}},
                                {-cd.kappa_gen(i, j).inv(), {G(LK::EPP, j), WP(i, 1)}}}});
            }
            if (has_f) {
                out.push_back({"relation.conj_w_f", ij(i, j),
                               {{Scalar(1), {W(i, 1), G(LK::F, j)}},
                                {-cd.kappa_gen(j, i).inv(), {G(LK::F, j), W(i, 1)}}}});
                out.push_back({"relation.conj_v_f", ij(i, j),
                               {{Scalar(1), {WP(i, 1), G(LK::F, j)}},
                                {-cd.kappa_gen(i, j), {G(LK::F, j), WP(i, 1)}}}});
            }
            if (has_fp) {
                out.push_back({"relation.conj_w_fp", ij(i, j),
                               {{Scalar(1), {W(i, 1), G(LK::FP, j)}},
                                {-cd.kappa_gen(j, i).inv(), {G(LK::FP, j), W(i, 1)}}}});
                out.push_back({"relation.conj_v_fp", ij(i, j),
                               {{Scalar(1), {WP(i, 1), G(LK::FP, j)}},
                                {-cd.kappa_gen(i, j), {G(LK::FP, j), WP(i, 1)}}}});
            }
        }
    }

    // cross relations between raising and lowering letters
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            if (has_e && has_f) {
                RelationInstance r{"relation.ef_commutator", ij(i, j), {}};
                r.terms.push_back({Scalar(1), {G(LK::E, i), G(LK::F, j)}});
                r.terms.push_back({Scalar(-1), {G(LK::F, j), G(LK::E, i)}});
                if (i == j) {
                    const Scalar c = cd.ri_minus_si(i).inv();
                    r.terms.push_back({-c, {W(i, 1)}});
                    r.terms.push_back({c, {WP(i, 1)}});
                }
                out.push_back(std::move(r));
            }
            if (has_epp && has_f) {
                RelationInstance r{"relation.epp_f", ij(i, j), {}};
                r.terms.push_back({Scalar(1), {G(LK::EPP, i), G(LK::F, j)}});
                r.terms.push_back({-cd.kappa_gen(j, i), {G(LK::F, j), G(LK::EPP, i)}});
                if (i == j) r.terms.push_back({Scalar(-1), {one}});
                out.push_back(std::move(r));
            }
            if (has_fp && has_e) {
                RelationInstance r{"relation.fp_e", ij(i, j), {}};
                r.terms.push_back({Scalar(1), {G(LK::FP, i), G(LK::E, j)}});
                r.terms.push_back({-cd.kappa_gen(i, j), {G(LK::E, j), G(LK::FP, i)}});
                if (i == j) r.terms.push_back({Scalar(-1), {one}});
                out.push_back(std::move(r));
            }
        }
    }

    // higher-order relations
    const auto serre = [&](LK kind, const char* id) {
        const bool reversed = family_of(kind) == SerreFamily::Fam210;
        for (int i = 0; i < rank; ++i) {
            for (int j = 0; j < rank; ++j) {
                if (i == j) continue;
                const int bound = 1 - cd.a[i][j];
                RelationInstance r{id, ij(i, j), {}};
                for (int k = 0; k <= bound; ++k) {
                    Scalar c = q_binomial(bound, k, cd.q_i(i)) *
                               serre_coefficient(cd, i, j, k);
                    if (k % 2) c = -c;
                    std::vector<Element> factors;
                    const int left = reversed ? bound - k : k;
                    for (int t = 0; t < left; ++t) factors.push_back(G(kind, i));
                    factors.push_back(G(kind, j));
                    for (int t = 0; t < bound - left; ++t) factors.push_back(G(kind, i));
                    r.terms.push_back({std::move(c), std::move(factors)});
                }
                out.push_back(std::move(r));
            }
        }
    };
    if (has_f) serre(LK::F, "relation.serre_f");
    if (has_epp) serre(LK::EPP, "relation.serre_epp");
    if (has_e) serre(LK::E, "relation.serre_e");
    if (has_fp) serre(LK::FP, "relation.serre_fp");

    return out;
}

Element relation_value(const Algebra& alg, Parent p, const RelationInstance& r) {
    Element acc = alg.zero(p);
    for (const auto& [c, factors] : r.terms) {
        Element prod = alg.unit(p);
        for (const auto& f : factors) prod = alg.multiply(prod, f);
        acc = acc + prod.scaled(c);
    }
    return acc;
}

std::string clip(std::string s) {
    if (s.size() > 200) s = s.substr(0, 200) + "...";
    return s;
}

Element random_word_element(const Algebra& alg, Parent p, Rng& rng, int max_letters) {
    std::vector<LK> kinds;
    for (LK k : {LK::E, LK::EPP, LK::F, LK::FP})
        if (letter_legal(p, k)) kinds.push_back(k);
    std::vector<Atom> atoms;
    const int len = static_cast<int>(rng.below(max_letters + 1));
    for (int t = 0; t < len; ++t) {
        atoms.push_back({kinds[rng.below(kinds.size())],
                         static_cast<int>(rng.below(alg.rank())), 1});
    }
    for (int i = 0; i < alg.rank(); ++i) {
        const long long e = rng.range(-1, 1);
        if (e != 0) atoms.push_back({rng.below(2) ? LK::W : LK::WP, i, e});
    }
    return alg.normal_form(Scalar(1), atoms, p);
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

Report suite_relations(const Config& cfg) {
    Report rep;
    rep.suite = "relations";
    Algebra alg(CartanData::make(cfg.type));
    for (Parent p : {Parent::U, Parent::B, Parent::Bbar}) {
        for (const auto& r : defining_relations(alg, p)) {
            Element v = relation_value(alg, p, r);
            rep.add(r.id, parent_name(p) + " " + r.instance, v.is_zero(), clip(v.str()));
        }
    }
    // closed commutation form against the rewriting engine
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            for (int i = 0; i < alg.rank(); ++i) {
                for (int j = 0; j < alg.rank(); ++j) {
                    std::vector<Atom> word;
                    for (int t = 0; t < n; ++t) word.push_back({LK::EPP, i, 1});
                    for (int t = 0; t < m; ++t) word.push_back({LK::F, j, 1});
                    Element nf = alg.normal_form(Scalar(1), word, Parent::B);
                    Element closed = alg.commutation_closed_form(n, m, i, j);
                    Element d = nf - closed;
                    rep.add("commutation.closed_vs_nf",
                            "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                                ij(i, j),
                            d.is_zero(), clip(d.str()));
                }
            }
        }
    }
    return rep;
}

Report suite_hopf(const Config& cfg) {
    Report rep;
    rep.suite = "hopf";
    Algebra alg(CartanData::make(cfg.type));
    const int rank = alg.rank();

    const auto hom_check = [&](Parent src, CoproductKind kind, const char* tag) {
        const auto targets = coproduct_targets(kind);
        for (const auto& r : defining_relations(alg, src)) {
            Tensor acc(2, {targets.first, targets.second}, rank);
            for (const auto& [c, factors] : r.terms) {
                Tensor prod = Tensor::unit(alg, {targets.first, targets.second});
                for (const auto& f : factors)
                    prod = prod.mul(alg, coproduct(alg, kind, f));
                acc = acc + prod.scaled(c);
            }
            rep.add(std::string("hopf.hom_") + tag, r.id + " " + r.instance,
                    acc.is_zero(), clip(acc.str()));
        }
    };
    hom_check(Parent::U, CoproductKind::Std, "std");
    hom_check(Parent::B, CoproductKind::Right, "right");
    hom_check(Parent::Bbar, CoproductKind::Left, "left");
    hom_check(Parent::U, CoproductKind::Bottom, "bottom");

    // counit respects every defining relation of U
    for (const auto& r : defining_relations(alg, Parent::U)) {
        Scalar acc(0);
        for (const auto& [c, factors] : r.terms) {
            Scalar prod(1);
            for (const auto& f : factors) prod *= counit(f);
            acc += c * prod;
        }
        rep.add("hopf.counit", r.id + " " + r.instance, acc.is_zero(), acc.str());
    }

    // coassociativity and the antipode laws on generators and random elements
    Rng rng(cfg.seed);
    std::vector<std::pair<std::string, Element>> samples;
    for (int i = 0; i < rank; ++i) {
        samples.push_back({"e" + std::to_string(i + 1), alg.gen(LK::E, i, Parent::U)});
        samples.push_back({"f" + std::to_string(i + 1), alg.gen(LK::F, i, Parent::U)});
        samples.push_back({"w" + std::to_string(i + 1),
                           alg.omega(weight_alpha(rank, i), Parent::U)});
        samples.push_back({"v" + std::to_string(i + 1),
                           alg.omega_prime(weight_alpha(rank, i), Parent::U)});
    }
    for (int t = 0; t < 50; ++t)
        samples.push_back({"random#" + std::to_string(t),
                           random_word_element(alg, Parent::U, rng, 3)});

    for (const auto& [name, x] : samples) {
        Tensor d = coproduct(alg, CoproductKind::Std, x);
        Tensor left = coproduct_on_leg(alg, d, 0);
        Tensor right = coproduct_on_leg(alg, d, 1);
        Tensor diff = left - right;
        rep.add("hopf.coassociative", "x=" + name, diff.is_zero(), clip(diff.str()));

        const Scalar eps = counit(x);
        Element want = alg.unit(Parent::U).scaled(eps);
        Element lhs(Parent::U, rank), rhs(Parent::U, rank);
        for (const auto& [key, c] : d.terms()) {
            Element a(Parent::U, rank), b(Parent::U, rank);
            a.add(key[0], Scalar(1));
            b.add(key[1], Scalar(1));
            lhs = lhs + alg.multiply(antipode(alg, a), b).scaled(c);
            rhs = rhs + alg.multiply(a, antipode(alg, b)).scaled(c);
        }
        rep.add("hopf.antipode_axiom_left", "x=" + name, lhs == want,
                clip((lhs - want).str()));
        rep.add("hopf.antipode_axiom_right", "x=" + name, rhs == want,
                clip((rhs - want).str()));

        Element round = antipode(alg, antipode(alg, x, AntipodeDir::SInv));
        rep.add("hopf.antipode_inverse", "x=" + name, round == x,
                clip((round - x).str()));
    }

    // the map into the opposite Kashiwara algebra reverses products
    for (int t = 0; t < 20; ++t) {
        Element x = random_word_element(alg, Parent::Bbar, rng, 2);
        Element y = random_word_element(alg, Parent::Bbar, rng, 2);
        Element lhs = phi(alg, alg.multiply(x, y));
        Element rhs = alg.multiply(phi(alg, y), phi(alg, x));
        rep.add("hopf.phi_antimultiplicative", "trial#" + std::to_string(t), lhs == rhs,
                clip((lhs - rhs).str()));
    }
    return rep;
}

Report suite_pairing(const Config& cfg) {
    Algebra alg(CartanData::make(cfg.type));
    SkewPairing pr(alg);
    return check_pairing(pr, cfg.height, 2, static_cast<unsigned>(cfg.seed), 200);
}

Report suite_lemma51(const Config& cfg) {
    Algebra alg(CartanData::make(cfg.type));
    SkewPairing pr(alg);
    Canonical can(pr);
    Report rep = can.check_lemma_identities(std::max(0, cfg.height - 1));
    rep.merge(can.check_basis_independence(std::min(cfg.height, 3),
                                           static_cast<unsigned>(cfg.seed)));
    return rep;
}

Report suite_prop51(const Config& cfg) {
    Algebra alg(CartanData::make(cfg.type));
    SkewPairing pr(alg);
    Canonical can(pr);
    Report rep = can.check_intertwining(std::max(0, cfg.height - 1));
    rep.merge(can.check_inverse(cfg.height));
    return rep;
}

Report suite_casimir(const Config& cfg) {
    Algebra alg(CartanData::make(cfg.type));
    SkewPairing pr(alg);
    Canonical can(pr);
    return can.check_casimir(cfg.height);
}

Report suite_thm61(const Config& cfg) {
    Algebra alg(CartanData::make(cfg.type));
    SkewPairing pr(alg);
    Canonical can(pr);
    Projector proj(can);
    return proj.check_projector(cfg.height);
}

Report suite_categoryO(const Config& cfg) {
    Report rep;
    rep.suite = "categoryO";
    Algebra alg(CartanData::make(cfg.type));
    SkewPairing pr(alg);
    Canonical can(pr);
    Projector proj(can);
    const GradedElement gamma = proj.gamma(cfg.depth);

    std::vector<Weight> lambdas;
    if (cfg.lambda) {
        if (static_cast<int>(cfg.lambda->size()) != alg.rank())
            throw ConfigError("lambda has wrong rank");
        lambdas.push_back(*cfg.lambda);
    } else {
        lambdas = sample_lambdas(alg.rank());
    }
    for (const auto& lam : lambdas) {
        VermaModule M(alg, lam, cfg.depth);
        rep.merge(check_verma(M, gamma, cfg.depth - 1,
                              static_cast<unsigned>(cfg.seed)));
    }
    if (lambdas.size() >= 2) {
        VermaModule M0(alg, lambdas[0], cfg.depth);
        VermaModule M1(alg, lambdas[1], cfg.depth);
        rep.merge(check_direct_sum(M0, M1, gamma, cfg.depth - 1));
        rep.merge(check_direct_sum(M0, M0, gamma, cfg.depth - 1));
    }
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"relations", "hopf",    "pairing", "lemma51",
            "prop51",    "casimir", "thm61",   "categoryO"};
}

Report run_suite(const std::string& name, const Config& cfg) {
    if (name == "relations") return suite_relations(cfg);
    if (name == "hopf") return suite_hopf(cfg);
    if (name == "pairing") return suite_pairing(cfg);
    if (name == "lemma51") return suite_lemma51(cfg);
    if (name == "prop51") return suite_prop51(cfg);
    if (name == "casimir") return suite_casimir(cfg);
    if (name == "thm61") return suite_thm61(cfg);
    if (name == "categoryO") return suite_categoryO(cfg);
    if (name == "all") {
        Report rep;
        rep.suite = "all";
        for (const auto& s : suite_names()) rep.merge(run_suite(s, cfg));
        return rep;
    }
    throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace qrs
