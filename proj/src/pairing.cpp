#include "qrs/pairing.hpp"

#include "qrs/hopf.hpp"
#include "qrs/rng.hpp"

namespace qrs {

namespace {

bool is_upper_mono(const Monomial& m) {
    if (!m.pre.empty()) return false;
    for (long long e : m.wp)
        if (e != 0) return false;
    for (const auto& l : m.post)
        if (l.k != LK::E) return false;
    return true;
}

bool is_lower_mono(const Monomial& m) {
    if (!m.post.empty()) return false;
    for (long long e : m.w)
        if (e != 0) return false;
    for (const auto& l : m.pre)
        if (l.k != LK::F) return false;
    return true;
}

long long euler_ll(const CartanData& cd, const std::vector<long long>& mu,
                   const std::vector<long long>& nu) {
    long long acc = 0;
    for (int i = 0; i < cd.rank; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < cd.rank; ++j) {
            if (nu[j] == 0) continue;
            acc += mu[i] * nu[j] * cd.euler(i, j);
        }
    }
    return acc;
}

}  // namespace

Scalar SkewPairing::toral_pair(const std::vector<long long>& a,
                               const std::vector<long long>& b) const {
    // <w_a, v_b> = r^{<b,a>} s^{-<a,b>}
    const auto& cd = alg_.cartan();
    return Scalar::rs_monomial(euler_ll(cd, b, a), -euler_ll(cd, a, b));
}

Scalar SkewPairing::pair_single_f(const Monomial& x, int j) const {
    if (x.post.size() != 1) return Scalar(0);
    const int k = x.post[0].i;
    if (k != j) return Scalar(0);
    const auto& cd = alg_.cartan();
    Scalar base = (cd.s_i(k) - cd.r_i(k)).inv();
    std::vector<long long> aj(cd.rank, 0);
    aj[j] = 1;
    return base * Scalar::rs_monomial(euler_ll(cd, aj, x.w), -euler_ll(cd, x.w, aj));
}

Scalar SkewPairing::pair_single_e(int k, const Monomial& y) const {
    if (y.pre.size() != 1) return Scalar(0);
    const int j = y.pre[0].i;
    if (k != j) return Scalar(0);
    const auto& cd = alg_.cartan();
    return (cd.s_i(k) - cd.r_i(k)).inv();
}

Scalar SkewPairing::pair_mono(const Monomial& x, const Monomial& y,
                              SplitPolicy policy) const {
    const size_t n = x.post.size(), m = y.pre.size();
    if (n == 0 && m == 0) return toral_pair(x.w, y.wp);
    if (n == 0 || m == 0) return Scalar(0);

    const bool split_y =
        policy == SplitPolicy::PreferY ? (m >= n) : (m > n);

    if (split_y) {
        // peel the first lowering letter off y
        const int j = y.pre[0].i;
        Monomial rest = y;
        rest.pre.erase(rest.pre.begin());
        Element xe(Parent::U, alg_.rank());
        xe.add(x, Scalar(1));
        Tensor dx = coproduct(alg_, CoproductKind::Std, xe);
        Scalar acc(0);
        for (const auto& [key, c] : dx.terms()) {
            Scalar left = pair_single_f(key[0], j);
            if (left.is_zero()) continue;
            acc += c * left * pair_mono(key[1], rest, policy);
        }
        return acc;
    }

    // peel the last raising letter off x
    const int k = x.post.back().i;
    Monomial head = x;
    head.post.pop_back();
    Element ye(Parent::U, alg_.rank());
    ye.add(y, Scalar(1));
    Tensor dy = coproduct(alg_, CoproductKind::Std, ye);
    Scalar acc(0);
    for (const auto& [key, c] : dy.terms()) {
        Scalar left = pair_single_e(k, key[0]);
        if (left.is_zero()) continue;
        acc += c * left * pair_mono(head, key[1], policy);
    }
    return acc;
}

Scalar SkewPairing::pair(const Element& x, const Element& y, SplitPolicy policy) const {
    for (const auto& [m, c] : x.terms())
        if (!is_upper_mono(m)) throw IllegalLetter("pairing: left argument not in U>=");
    for (const auto& [m, c] : y.terms())
        if (!is_lower_mono(m)) throw IllegalLetter("pairing: right argument not in U<=");
    Scalar acc(0);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) acc += cx * cy * pair_mono(mx, my, policy);
    return acc;
}

Element SkewPairing::plus_element(const Weight& beta, int r) const {
    return alg_.word_element(LK::E, gram(beta).plus_basis[r], Parent::U);
}

Element SkewPairing::minus_element(const Weight& beta, int c) const {
    return alg_.word_element(LK::F, gram(beta).minus_basis[c], Parent::U);
}

const GramData& SkewPairing::gram(const Weight& beta) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(beta);
        if (it != cache_.end()) return it->second;
    }
    GramData g;
    g.beta = beta;
    g.plus_basis = alg_.weight_basis(LK::E, beta);
    g.minus_basis = alg_.weight_basis(LK::F, beta);
    const int n = static_cast<int>(g.plus_basis.size());
    if (g.minus_basis.size() != g.plus_basis.size())
        throw Error("weight space dimensions disagree at " + weight_str(beta));
    g.gram.assign(n, SVec(n, Scalar(0)));
    for (int r = 0; r < n; ++r) {
        Element xr = alg_.word_element(LK::E, g.plus_basis[r], Parent::U);
        for (int c = 0; c < n; ++c) {
            Element yc = alg_.word_element(LK::F, g.minus_basis[c], Parent::U);
            g.gram[r][c] = pair(xr, yc);
        }
    }
    g.det = det_bareiss(g.gram);
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = cache_.emplace(beta, std::move(g));
    return it->second;
}

const SMat& SkewPairing::gram_inverse(const Weight& beta) const {
    const GramData& g0 = gram(beta);
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (g0.inverse) return *g0.inverse;
    }
    if (g0.det.is_zero()) throw SingularGram("gram at " + weight_str(beta));
    SMat inv = invert(g0.gram);
    std::lock_guard<std::mutex> lk(mu_);
    GramData& g = cache_.at(beta);
    if (!g.inverse) g.inverse = std::move(inv);
    return *g.inverse;
}

std::vector<Element> SkewPairing::dual_basis(const Weight& beta) const {
    const GramData& g = gram(beta);
    const SMat& inv = gram_inverse(beta);
    const int n = static_cast<int>(g.minus_basis.size());
    std::vector<Element> out;
    for (int r = 0; r < n; ++r) {
        Element y(Parent::U, alg_.rank());
        for (int c = 0; c < n; ++c) {
            Element w = alg_.word_element(LK::F, g.minus_basis[c], Parent::U);
            y = y + w.scaled(inv[c][r]);
        }
        out.push_back(std::move(y));
    }
    return out;
}

// ---------------------------------------------------------------------------
// property checks
// ---------------------------------------------------------------------------

namespace {

Element random_upper(const Algebra& alg, Rng& rng, int max_len) {
    const int len = static_cast<int>(rng.below(max_len + 1));
    std::vector<Atom> atoms;
    for (int t = 0; t < alg.rank(); ++t) {
        long long e = rng.range(-1, 1);
        if (e != 0) atoms.push_back({LK::W, t, e});
    }
    for (int t = 0; t < len; ++t)
        atoms.push_back({LK::E, static_cast<int>(rng.below(alg.rank())), 1});
    return alg.normal_form(Scalar(1), atoms, Parent::U);
}

Element random_lower(const Algebra& alg, Rng& rng, int max_len) {
    const int len = static_cast<int>(rng.below(max_len + 1));
    std::vector<Atom> atoms;
    for (int t = 0; t < len; ++t)
        atoms.push_back({LK::F, static_cast<int>(rng.below(alg.rank())), 1});
    for (int t = 0; t < alg.rank(); ++t) {
        long long e = rng.range(-1, 1);
        if (e != 0) atoms.push_back({LK::WP, t, e});
    }
    return alg.normal_form(Scalar(1), atoms, Parent::U);
}

}  // namespace

Report check_pairing(const SkewPairing& pr, int max_height, int exchange_height,
                     unsigned seed, int random_pairs) {
    const Algebra& alg = pr.algebra();
    const auto& cd = alg.cartan();
    Report rep;
    rep.suite = "pairing";

    const auto weights = alg.positive_weights_upto(max_height);

    // nondegeneracy of every weight-space restriction
    for (const auto& beta : weights) {
        if (weight_height(beta) == 0) continue;
        const GramData& g = pr.gram(beta);
        rep.add("pairing.nondegenerate",
                "beta=" + weight_str(beta) + " dim=" + std::to_string(g.plus_basis.size()),
                !g.det.is_zero(), "det = 0");
    }

    // antipode invariance on all basis pairs
    for (const auto& beta : weights) {
        const GramData& g = pr.gram(beta);
        for (size_t r = 0; r < g.plus_basis.size(); ++r) {
            Element x = pr.plus_element(beta, static_cast<int>(r));
            Element sx = antipode(alg, x);
            for (size_t c = 0; c < g.minus_basis.size(); ++c) {
                Element y = pr.minus_element(beta, static_cast<int>(c));
                Scalar lhs = pr.pair(sx, antipode(alg, y));
                Scalar rhs = g.gram[r][c];
                rep.add("pairing.antipode_invariance",
                        "beta=" + weight_str(beta) + " r=" + std::to_string(r) +
                            " c=" + std::to_string(c),
                        lhs == rhs, (lhs - rhs).str());
            }
        }
    }

    // toral twisting on all basis pairs, toral factors over the simple roots
    for (const auto& beta : weights) {
        const GramData& g = pr.gram(beta);
        for (size_t r = 0; r < g.plus_basis.size(); ++r) {
            for (size_t c = 0; c < g.minus_basis.size(); ++c) {
                for (int a = 0; a < cd.rank; ++a) {
                    for (int b = 0; b < cd.rank; ++b) {
                        const Weight nu = weight_alpha(cd.rank, a);
                        const Weight mu = weight_alpha(cd.rank, b);
                        Element x = alg.multiply(pr.plus_element(beta, static_cast<int>(r)),
                                                 alg.omega(nu, Parent::U));
                        Element y =
                            alg.multiply(pr.minus_element(beta, static_cast<int>(c)),
                                         alg.omega_prime(mu, Parent::U));
                        Scalar lhs = pr.pair(x, y);
                        Scalar rhs = cd.kappa(mu, nu) * g.gram[r][c];
                        rep.add("pairing.toral_twist",
                                "beta=" + weight_str(beta) + " r=" + std::to_string(r) +
                                    " c=" + std::to_string(c) + " nu=a" +
                                    std::to_string(a + 1) + " mu=a" + std::to_string(b + 1),
                                lhs == rhs, (lhs - rhs).str());
                    }
                }
            }
        }
    }

    // distinct weights pair to zero
    for (const auto& beta : weights) {
        for (const auto& gamma : weights) {
            if (beta == gamma) continue;
            const auto plus = alg.weight_basis(LK::E, beta);
            const auto minus = alg.weight_basis(LK::F, gamma);
            bool allzero = true;
            std::string wit;
            for (const auto& pw : plus) {
                for (const auto& mw : minus) {
                    Scalar v = pr.pair(alg.word_element(LK::E, pw, Parent::U),
                                       alg.word_element(LK::F, mw, Parent::U));
                    if (!v.is_zero()) {
                        allzero = false;
                        wit = v.str();
                    }
                }
            }
            rep.add("pairing.weight_orthogonality",
                    "plus=" + weight_str(beta) + " minus=" + weight_str(gamma), allzero,
                    wit);
        }
    }

    // product exchange in both directions at generator level
    {
        std::vector<Element> xs, ys;
        std::vector<std::string> xn, yn;
        for (int i = 0; i < cd.rank; ++i) {
            xs.push_back(alg.gen(LK::E, i, Parent::U));
            xn.push_back("e" + std::to_string(i + 1));
            ys.push_back(alg.gen(LK::F, i, Parent::U));
            yn.push_back("f" + std::to_string(i + 1));
        }
        if (exchange_height >= 2) {
            for (int i = 0; i < cd.rank; ++i) {
                for (int j = 0; j < cd.rank; ++j) {
                    xs.push_back(alg.multiply(alg.gen(LK::E, i, Parent::U),
                                              alg.gen(LK::E, j, Parent::U)));
                    xn.push_back("e" + std::to_string(i + 1) + "e" + std::to_string(j + 1));
                    ys.push_back(alg.multiply(alg.gen(LK::F, i, Parent::U),
                                              alg.gen(LK::F, j, Parent::U)));
                    yn.push_back("f" + std::to_string(i + 1) + "f" + std::to_string(j + 1));
                }
            }
        }
        for (size_t xi = 0; xi < xs.size(); ++xi) {
            for (size_t yi = 0; yi < ys.size(); ++yi) {
                const Element& x = xs[xi];
                const Element& y = ys[yi];
                Tensor d2x = coproduct_on_leg(alg, coproduct(alg, CoproductKind::Std, x), 0);
                Tensor d2y = coproduct_on_leg(alg, coproduct(alg, CoproductKind::Std, y), 0);
                Element lhs1 = alg.multiply(y, x);
                Element lhs2 = alg.multiply(x, y);
                Element rhs1(Parent::U, alg.rank());
                Element rhs2(Parent::U, alg.rank());
                for (const auto& [kx, cx] : d2x.terms()) {
                    for (const auto& [ky, cy] : d2y.terms()) {
                        Element x0(Parent::U, alg.rank()), x1(Parent::U, alg.rank()),
                            x2(Parent::U, alg.rank());
                        x0.add(kx[0], Scalar(1));
                        x1.add(kx[1], Scalar(1));
                        x2.add(kx[2], Scalar(1));
                        Element y0(Parent::U, alg.rank()), y1(Parent::U, alg.rank()),
                            y2(Parent::U, alg.rank());
                        y0.add(ky[0], Scalar(1));
                        y1.add(ky[1], Scalar(1));
                        y2.add(ky[2], Scalar(1));
                        Element x1y1 = alg.multiply(x1, y1);
                        Scalar c = cx * cy;
                        {
                            Scalar p1 = pr.pair(x0, antipode(alg, y0));
                            if (!p1.is_zero()) {
                                Scalar p2 = pr.pair(x2, y2);
                                if (!p2.is_zero()) rhs1 = rhs1 + x1y1.scaled(c * p1 * p2);
                            }
                        }
                        {
                            Scalar p1 = pr.pair(x0, y0);
                            if (!p1.is_zero()) {
                                Scalar p2 = pr.pair(x2, antipode(alg, y2));
                                if (!p2.is_zero()) rhs2 = rhs2 + x1y1.scaled(c * p1 * p2);
                            }
                        }
                    }
                }
                rep.add("pairing.exchange_yx", "x=" + xn[xi] + " y=" + yn[yi],
                        lhs1 == rhs1, (lhs1 - rhs1).str());
                rep.add("pairing.exchange_xy", "x=" + xn[xi] + " y=" + yn[yi],
                        lhs2 == rhs2, (lhs2 - rhs2).str());
            }
        }
    }

    // the two expansion orders agree on random pairs
    {
        Rng rng(seed);
        int agree = 0;
        std::string wit;
        for (int t = 0; t < random_pairs; ++t) {
            Element x = random_upper(alg, rng, 3);
            Element y = random_lower(alg, rng, 3);
            Scalar a = pr.pair(x, y, SplitPolicy::PreferY);
            Scalar b = pr.pair(x, y, SplitPolicy::PreferX);
            if (a == b) {
                ++agree;
            } else if (wit.empty()) {
                wit = "x=" + x.str() + " y=" + y.str() + " diff=" + (a - b).str();
            }
        }
        rep.add("pairing.split_order_independent",
                std::to_string(agree) + "/" + std::to_string(random_pairs) + " pairs",
                agree == random_pairs, wit);
    }

    return rep;
}

}  // namespace qrs
