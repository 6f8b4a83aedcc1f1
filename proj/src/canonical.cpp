#include "qrs/canonical.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qrs/rng.hpp"

namespace qrs {

Tensor graded_total(const GradedTensor& g) {
    Tensor acc;
    for (const auto& [w, t] : g.grades) acc = acc + t;
    return acc;
}

GradedTensor graded_mul(const Algebra& alg, const GradedTensor& a, const GradedTensor& b,
                        int L) {
    GradedTensor out;
    out.cutoff = L;
    for (const auto& [wa, ta] : a.grades) {
        for (const auto& [wb, tb] : b.grades) {
            const Weight w = weight_add(wa, wb);
            if (weight_height(w) > L) continue;
            Tensor prod = ta.mul(alg, tb);
            auto it = out.grades.find(w);
            if (it == out.grades.end())
                out.grades.emplace(w, std::move(prod));
            else
                it->second = it->second + prod;
        }
    }
    return out;
}

Tensor Canonical::canonical_tensor(const Weight& beta) const {
    const GramData& g = pr_.gram(beta);
    const auto duals = pr_.dual_basis(beta);
    Tensor out(2, {Parent::U, Parent::U}, alg_.rank());
    for (size_t r = 0; r < g.plus_basis.size(); ++r) {
        out = out + Tensor::outer({pr_.plus_element(beta, static_cast<int>(r)), duals[r]});
    }
    return out;
}

Tensor Canonical::c_prime(const Weight& beta) const {
    return canonical_tensor(beta).map_leg(alg_, 1, Parent::U, [&](const Monomial& m) {
        Element e(Parent::U, alg_.rank());
        e.add(m, Scalar(1));
        return antipode(alg_, e, AntipodeDir::SInv);
    });
}

Tensor Canonical::c_phi(const Weight& beta) const {
    return canonical_tensor(beta).map_leg(alg_, 0, Parent::B, [&](const Monomial& m) {
        Element e(Parent::Bbar, alg_.rank());
        e.add(m, Scalar(1));
        return phi(alg_, e);
    });
}

GradedTensor Canonical::c_element(int L) const {
    GradedTensor out;
    out.cutoff = L;
    for (const auto& beta : alg_.positive_weights_upto(L)) {
        // right leg: k_beta^{-1} S^{-1}(y) = omega'_beta S^{-1}(y)
        Tensor t = c_prime(beta).map_leg(alg_, 1, Parent::B, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return alg_.multiply(alg_.omega_prime(beta, Parent::U), e)
                .with_parent(Parent::B);
        });
        out.grades.emplace(beta, std::move(t));
    }
    return out;
}

GradedTensor Canonical::c_inverse(int L) const {
    GradedTensor out;
    out.cutoff = L;
    for (const auto& beta : alg_.positive_weights_upto(L)) {
        const Scalar pref =
            Scalar::rs_monomial(-alg_.cartan().euler(beta, beta),
                                alg_.cartan().euler(beta, beta));
        Tensor t = canonical_tensor(beta);
        t = t.map_leg(alg_, 0, Parent::U, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return alg_.multiply(alg_.omega(beta, Parent::U),
                                 antipode(alg_, e, AntipodeDir::SInv));
        });
        t = t.map_leg(alg_, 1, Parent::B, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return alg_.multiply(alg_.omega_prime(beta, Parent::U),
                                 antipode(alg_, e, AntipodeDir::SInv))
                .with_parent(Parent::B);
        });
        out.grades.emplace(beta, t.scaled(pref));
    }
    return out;
}

GradedTensor Canonical::c_tilde(int L) const {
    GradedTensor out;
    out.cutoff = L;
    for (const auto& beta : alg_.positive_weights_upto(L)) {
        const long long bb = alg_.cartan().euler(beta, beta);
        const Scalar pref = Scalar::rs_monomial(bb, -bb);
        Tensor t = canonical_tensor(beta);
        t = t.map_leg(alg_, 0, Parent::U, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return antipode(alg_, e, AntipodeDir::S);
        });
        t = t.map_leg(alg_, 1, Parent::U, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return alg_.multiply(alg_.k_beta(beta, Parent::U), e);
        });
        out.grades.emplace(beta, t.scaled(pref));
    }
    return out;
}

GradedTensor Canonical::c_tilde_inverse(int L) const {
    GradedTensor out;
    out.cutoff = L;
    for (const auto& beta : alg_.positive_weights_upto(L)) {
        const long long bb = alg_.cartan().euler(beta, beta);
        const Scalar pref = Scalar::rs_monomial(bb, -bb);
        Tensor t = canonical_tensor(beta);
        t = t.map_leg(alg_, 0, Parent::U, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return alg_.multiply(alg_.omega(weight_sub(weight_zero(alg_.rank()), beta),
                                            Parent::U),
                                 e);
        });
        t = t.map_leg(alg_, 1, Parent::U, [&](const Monomial& m) {
            Element e(Parent::U, alg_.rank());
            e.add(m, Scalar(1));
            return alg_.multiply(alg_.k_beta(beta, Parent::U), e);
        });
        out.grades.emplace(beta, t.scaled(pref));
    }
    return out;
}

GradedElement Canonical::casimir(int L) const {
    GradedElement out;
    out.cutoff = L;
    for (const auto& beta : alg_.positive_weights_upto(L)) {
        const GramData& g = pr_.gram(beta);
        const auto duals = pr_.dual_basis(beta);
        Element omega(Parent::U, alg_.rank());
        for (size_t r = 0; r < g.plus_basis.size(); ++r) {
            omega = omega + alg_.multiply(antipode(alg_, duals[r]),
                                          pr_.plus_element(beta, static_cast<int>(r)));
        }
        out.grades.emplace(beta, std::move(omega));
    }
    return out;
}

// ---------------------------------------------------------------------------
// identity checks
// ---------------------------------------------------------------------------

namespace {

Tensor left_mul(const Algebra& alg, const Element& a, const Element& b, const Tensor& t) {
    return Tensor::outer({a, b}).mul(alg, t);
}

Tensor right_mul(const Algebra& alg, const Tensor& t, const Element& a, const Element& b) {
    return t.mul(alg, Tensor::outer({a, b}));
}

std::string tensor_witness(const Tensor& t) {
    std::string s = t.str();
    if (s.size() > 200) s = s.substr(0, 200) + "...";
    return s;
}

}  // namespace

Report Canonical::check_lemma_identities(int max_height) const {
    Report rep;
    rep.suite = "lemma51";
    const int rank = alg_.rank();

    for (const auto& beta : alg_.positive_weights_upto(max_height)) {
        const std::string bstr = "beta=" + weight_str(beta);
        for (int i = 0; i < rank; ++i) {
            const Weight bi = weight_add(beta, weight_alpha(rank, i));
            const std::string inst = bstr + " i=" + std::to_string(i + 1);
            const Element u1 = alg_.unit(Parent::U);
            const Element ub = alg_.unit(Parent::B);
            const Element ei = alg_.gen(LK::E, i, Parent::U);
            const Element fi = alg_.gen(LK::F, i, Parent::U);
            const Element eppi = alg_.gen(LK::EPP, i, Parent::B);
            const Element wi_inv = alg_.omega(weight_sub(weight_zero(rank),
                                                         weight_alpha(rank, i)),
                                              Parent::U);
            const Element wpi = alg_.omega_prime(weight_alpha(rank, i), Parent::U);

            // raising commutator against (1 (x) k^{-1}) C'
            {
                const Element k_bi_inv =
                    alg_.omega_prime(bi, Parent::U);  // inverse of k_{beta+alpha_i}
                const Element k_b_inv = alg_.omega_prime(beta, Parent::U);
                Tensor M = left_mul(alg_, u1, k_bi_inv, c_prime(bi));
                Tensor A = Tensor::outer({wi_inv, eppi});
                Tensor lhs = A.mul(alg_, M) - M.mul(alg_, A);
                Tensor rhs = right_mul(alg_, left_mul(alg_, u1, k_b_inv, c_prime(beta)),
                                       alg_.multiply(wi_inv, ei)
                                           .scaled(alg_.cartan().ri_minus_si(i)),
                                       u1);
                Tensor diff = lhs - rhs;
                rep.add("cprime.epp_commutator", inst, diff.is_zero(),
                        tensor_witness(diff));
            }

            // lowering commutator against C'' (1 (x) k)
            {
                const Element k_bi = alg_.k_beta(bi, Parent::U);
                const Element k_b = alg_.k_beta(beta, Parent::U);
                Tensor M = right_mul(alg_, c_phi(bi), alg_.unit(Parent::B), k_bi);
                Tensor A = Tensor::outer({fi.with_parent(Parent::B), wpi});
                Tensor lhs = A.mul(alg_, M) - M.mul(alg_, A);
                Tensor rhs = -left_mul(alg_, ub, fi,
                                       right_mul(alg_, c_phi(beta), alg_.unit(Parent::B),
                                                 k_b));
                Tensor diff = lhs - rhs;
                rep.add("cphi.f_commutator", inst, diff.is_zero(), tensor_witness(diff));
            }

            // e commutator against C
            {
                Tensor C_bi = canonical_tensor(bi);
                Tensor C_b = canonical_tensor(beta);
                Tensor A = Tensor::outer({u1, ei});
                Tensor lhs = A.mul(alg_, C_bi) - C_bi.mul(alg_, A);
                Tensor rhs = right_mul(alg_, C_b, ei, wpi) -
                             left_mul(alg_, ei, alg_.omega(weight_alpha(rank, i), Parent::U),
                                      C_b);
                Tensor diff = lhs - rhs;
                rep.add("c.e_commutator", inst, diff.is_zero(), tensor_witness(diff));
            }

            // f commutator against C
            {
                Tensor C_bi = canonical_tensor(bi);
                Tensor C_b = canonical_tensor(beta);
                Tensor A = Tensor::outer({fi, u1});
                Tensor lhs = A.mul(alg_, C_bi) - C_bi.mul(alg_, A);
                Tensor rhs = right_mul(alg_, C_b, alg_.omega(weight_alpha(rank, i), Parent::U),
                                       fi) -
                             left_mul(alg_, wpi, fi, C_b);
                Tensor diff = lhs - rhs;
                rep.add("c.f_commutator", inst, diff.is_zero(), tensor_witness(diff));
            }
        }

        // the two telescoping sums
        {
            Tensor acc;
            std::function<void(int, Weight&)> rec = [&](int pos, Weight& gamma) {
                if (pos == rank) {
                    const Weight delta = weight_sub(beta, gamma);
                    Tensor SC = canonical_tensor(delta).map_leg(
                        alg_, 0, Parent::U, [&](const Monomial& m) {
                            Element e(Parent::U, alg_.rank());
                            e.add(m, Scalar(1));
                            return antipode(alg_, e);
                        });
                    SC = left_mul(alg_, alg_.omega(delta, Parent::U), alg_.unit(Parent::U),
                                  SC);
                    acc = acc + canonical_tensor(gamma).mul(alg_, SC);
                    return;
                }
                for (int v = 0; v <= beta[pos]; ++v) {
                    gamma[pos] = v;
                    rec(pos + 1, gamma);
                }
                gamma[pos] = 0;
            };
            Weight gamma(rank, 0);
            rec(0, gamma);
            Tensor expect;
            if (weight_height(beta) == 0)
                expect = Tensor::unit(alg_, {Parent::U, Parent::U});
            Tensor diff = acc - expect;
            rep.add("c.telescope_right", bstr, diff.is_zero(), tensor_witness(diff));
        }
        {
            Tensor acc;
            std::function<void(int, Weight&)> rec = [&](int pos, Weight& gamma) {
                if (pos == rank) {
                    const Weight delta = weight_sub(beta, gamma);
                    Tensor SC = canonical_tensor(gamma).map_leg(
                        alg_, 0, Parent::U, [&](const Monomial& m) {
                            Element e(Parent::U, alg_.rank());
                            e.add(m, Scalar(1));
                            return antipode(alg_, e);
                        });
                    SC = left_mul(alg_, alg_.omega(gamma, Parent::U), alg_.unit(Parent::U),
                                  SC);
                    acc = acc + SC.mul(alg_, canonical_tensor(delta));
                    return;
                }
                for (int v = 0; v <= beta[pos]; ++v) {
                    gamma[pos] = v;
                    rec(pos + 1, gamma);
                }
                gamma[pos] = 0;
            };
            Weight gamma(rank, 0);
            rec(0, gamma);
            Tensor expect;
            if (weight_height(beta) == 0)
                expect = Tensor::unit(alg_, {Parent::U, Parent::U});
            Tensor diff = acc - expect;
            rep.add("c.telescope_left", bstr, diff.is_zero(), tensor_witness(diff));
        }
    }
    return rep;
}

Report Canonical::check_intertwining(int max_height) const {
    Report rep;
    rep.suite = "prop51";
    const int rank = alg_.rank();
    const int L = max_height + 1;
    const GradedTensor C = c_element(L);
    const Tensor Ctot = graded_total(C);

    for (int i = 0; i < rank; ++i) {
        const std::string inst = "i=" + std::to_string(i + 1);
        const Element u1 = alg_.unit(Parent::U);
        const Element ub = alg_.unit(Parent::B);
        const Element ei = alg_.gen(LK::E, i, Parent::U);
        const Element fib = alg_.gen(LK::F, i, Parent::B);
        const Element eppi = alg_.gen(LK::EPP, i, Parent::B);
        const Element wi_inv =
            alg_.omega(weight_sub(weight_zero(rank), weight_alpha(rank, i)), Parent::U);
        const Element wpi_b = alg_.omega_prime(weight_alpha(rank, i), Parent::B);

        // raising intertwiner for the canonical sum
        {
            Tensor A = Tensor::outer({wi_inv, eppi});
            Tensor B = Tensor::outer(
                {alg_.multiply(wi_inv, ei).scaled(alg_.cartan().ri_minus_si(i)), ub});
            Tensor D = A.mul(alg_, Ctot) - Ctot.mul(alg_, A) - Ctot.mul(alg_, B);
            auto parts = D.split_by_leg_weight(0);
            for (const auto& w : alg_.positive_weights_upto(max_height)) {
                auto it = parts.find(w);
                const bool zero = it == parts.end() || it->second.is_zero();
                rep.add("csum.epp_intertwine", inst + " grade=" + weight_str(w), zero,
                        zero ? "" : tensor_witness(it->second));
            }
        }

        // lowering intertwiner for (phi (x) S) of the canonical sum
        {
            Tensor T(2, {Parent::B, Parent::B}, rank);
            for (const auto& [w, t] : C.grades) {
                Tensor mapped = t.map_leg(alg_, 0, Parent::B, [&](const Monomial& m) {
                    Element e(Parent::Bbar, alg_.rank());
                    e.add(m, Scalar(1));
                    return phi(alg_, e);
                });
                mapped = mapped.map_leg(alg_, 1, Parent::B, [&](const Monomial& m) {
                    Element e(Parent::U, alg_.rank());
                    e.add(m, Scalar(1));
                    return antipode(alg_, e).with_parent(Parent::B);
                });
                T = T + mapped;
            }
            Tensor A = Tensor::outer({fib, wpi_b});
            Tensor B = Tensor::outer({ub, fib});
            Tensor D = A.mul(alg_, T) + B.mul(alg_, T) - T.mul(alg_, A);
            auto parts = D.split_by_leg_weight(0);
            // grades shifted down by alpha_i appear alongside the positive ones
            std::set<Weight> expected;
            for (const auto& b : alg_.positive_weights_upto(max_height + 1)) {
                if (weight_height(b) <= max_height) expected.insert(b);
                Weight g = weight_sub(b, weight_alpha(rank, i));
                if (weight_height(g) <= max_height) expected.insert(g);
            }
            for (const auto& w : expected) {
                auto it = parts.find(w);
                const bool zero = it == parts.end() || it->second.is_zero();
                rep.add("csum.f_intertwine", inst + " grade=" + weight_str(w), zero,
                        zero ? "" : tensor_witness(it->second));
            }
        }
    }
    return rep;
}

Report Canonical::check_inverse(int L) const {
    Report rep;
    rep.suite = "cinverse";
    const GradedTensor C = c_element(L);
    const GradedTensor Ci = c_inverse(L);
    const Tensor unit2 = Tensor::unit(alg_, {Parent::U, Parent::B});

    const auto check_product = [&](const GradedTensor& a, const GradedTensor& b,
                                   const std::string& id, const Tensor& expect0) {
        GradedTensor prod = graded_mul(alg_, a, b, L);
        for (const auto& [w, t] : prod.grades) {
            const Tensor expect = weight_height(w) == 0 ? expect0 : Tensor();
            Tensor diff = t - expect;
            rep.add(id, "grade=" + weight_str(w), diff.is_zero(), tensor_witness(diff));
        }
    };
    check_product(Ci, C, "csum.inverse_left", unit2);
    check_product(C, Ci, "csum.inverse_right", unit2);

    const GradedTensor T = c_tilde(L);
    const GradedTensor Ti = c_tilde_inverse(L);
    const Tensor unitU = Tensor::unit(alg_, {Parent::U, Parent::U});
    check_product(Ti, T, "ctilde.inverse_left", unitU);
    check_product(T, Ti, "ctilde.inverse_right", unitU);
    return rep;
}

Report Canonical::check_casimir(int L) const {
    Report rep;
    rep.suite = "casimir";
    const int rank = alg_.rank();
    const GradedElement Om = casimir(L);
    Element Omega(Parent::U, rank);
    for (const auto& [w, e] : Om.grades) Omega = Omega + e;

    std::vector<std::pair<std::string, Element>> gens;
    for (int i = 0; i < rank; ++i) {
        gens.push_back({"e" + std::to_string(i + 1), alg_.gen(LK::E, i, Parent::U)});
        gens.push_back({"f" + std::to_string(i + 1), alg_.gen(LK::F, i, Parent::U)});
        gens.push_back({"w" + std::to_string(i + 1),
                        alg_.omega(weight_alpha(rank, i), Parent::U)});
        gens.push_back(
            {"w" + std::to_string(i + 1) + "^-1",
             alg_.omega(weight_sub(weight_zero(rank), weight_alpha(rank, i)), Parent::U)});
        gens.push_back({"v" + std::to_string(i + 1),
                        alg_.omega_prime(weight_alpha(rank, i), Parent::U)});
        gens.push_back(
            {"v" + std::to_string(i + 1) + "^-1",
             alg_.omega_prime(weight_sub(weight_zero(rank), weight_alpha(rank, i)),
                              Parent::U)});
    }
    for (const auto& [name, u] : gens) {
        Element D = alg_.multiply(psi(alg_, u), Omega) - alg_.multiply(Omega, u);
        // group by raising-side weight; grades below the cutoff must vanish
        bool pass = true;
        std::string wit;
        for (const auto& [m, c] : D.terms()) {
            Weight w(rank, 0);
            for (const auto& l : m.post) w[l.i] += 1;
            if (weight_height(w) <= L - 1) {
                pass = false;
                Element bad(Parent::U, rank);
                bad.add(m, c);
                wit = bad.str();
                break;
            }
        }
        rep.add("casimir.intertwine", "u=" + name + " grades<=" + std::to_string(L - 1),
                pass, wit);
    }
    return rep;
}

Report Canonical::check_basis_independence(int max_height, unsigned seed) const {
    Report rep;
    rep.suite = "canonical_basis_independence";
    Rng rng(seed);
    for (const auto& beta : alg_.positive_weights_upto(max_height)) {
        if (weight_height(beta) == 0) continue;
        const Tensor reference = canonical_tensor(beta);
        const GramData& g = pr_.gram(beta);
        const int n = static_cast<int>(g.plus_basis.size());
        for (int trial = 0; trial < 3; ++trial) {
            // random invertible change of the plus basis: a permutation plus a
            // random unipotent shear keeps things exact and cheap
            std::vector<int> perm(n);
            for (int t = 0; t < n; ++t) perm[t] = t;
            for (int t = n - 1; t > 0; --t)
                std::swap(perm[t], perm[rng.below(t + 1)]);
            std::vector<Element> xs, basis_elems;
            for (int t = 0; t < n; ++t)
                basis_elems.push_back(pr_.plus_element(beta, perm[t]));
            if (n > 1) {
                const Scalar c(rng.range(1, 3));
                basis_elems[0] = basis_elems[0] + basis_elems[1].scaled(c);
            }
            // duals from the permuted basis's own gram matrix
            SMat gm(n, SVec(n, Scalar(0)));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    gm[r][c] = pr_.pair(basis_elems[r],
                                        pr_.minus_element(beta, c));
            SMat inv = invert(gm);
            Tensor rebuilt(2, {Parent::U, Parent::U}, alg_.rank());
            for (int r = 0; r < n; ++r) {
                Element dual(Parent::U, alg_.rank());
                for (int c = 0; c < n; ++c)
                    dual = dual + pr_.minus_element(beta, c).scaled(inv[c][r]);
                rebuilt = rebuilt + Tensor::outer({basis_elems[r], dual});
            }
            Tensor diff = rebuilt - reference;
            rep.add("canonical.basis_independent",
                    "beta=" + weight_str(beta) + " trial=" + std::to_string(trial),
                    diff.is_zero(), tensor_witness(diff));
        }
    }
    return rep;
}

}  // namespace qrs
