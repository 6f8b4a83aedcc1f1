#include "qrs/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace qrs {

namespace testing {
namespace {
std::atomic<int> g_delta27_sign{1};
}
int delta27_sign() { return g_delta27_sign.load(); }
void set_delta27_sign(int sign) { g_delta27_sign.store(sign >= 0 ? 1 : -1); }
}  // namespace testing

SerreFamily family_of(LK k) {
    switch (k) {
        case LK::F:
        case LK::EPP: return SerreFamily::Fam29;
        case LK::E:
        case LK::FP: return SerreFamily::Fam210;
        default: throw IllegalLetter("toral letter has no serre family");
    }
}

std::vector<Word> words_of_weight(const Weight& beta) {
    Word seed;
    for (size_t i = 0; i < beta.size(); ++i)
        for (int k = 0; k < beta[i]; ++k) seed.push_back(static_cast<uint8_t>(i));
    std::vector<Word> out;
    out.push_back(seed);
    while (std::next_permutation(seed.begin(), seed.end())) out.push_back(seed);
    return out;
}

Algebra::Algebra(CartanData cd, int height_cap)
    : cd_(std::move(cd)), height_cap_(height_cap) {}

int Algebra::class_of(LK k, Parent p) const {
    if (k == LK::W || k == LK::WP) return 1;
    if (p == Parent::Bbar) return k == LK::E ? 0 : 2;
    return k == LK::F ? 0 : 2;
}

std::vector<Algebra::SwapTerm> Algebra::swap_rule(const Atom& a, const Atom& b,
                                                  Parent p) const {
    (void)p;
    std::vector<SwapTerm> out;
    const auto swapped = [&](Scalar c) {
        out.push_back({std::move(c), {b, a}});
    };
    const bool a_tor = a.k == LK::W || a.k == LK::WP;
    const bool b_tor = b.k == LK::W || b.k == LK::WP;

    if (a_tor && !b_tor) {
        // toral crossing a lowering letter (f, f') to its left
        if (b.k == LK::F || b.k == LK::FP) {
            if (a.k == LK::W)
                swapped(cd_.kappa_gen(b.i, a.i).pow(-a.exp));
            else
                swapped(cd_.kappa_gen(a.i, b.i).pow(a.exp));
            return out;
        }
        // toral crossing an e letter to its left (Bbar ordering)
        if (a.k == LK::W)
            swapped(cd_.kappa_gen(b.i, a.i).pow(a.exp));
        else
            swapped(cd_.kappa_gen(a.i, b.i).pow(-a.exp));
        return out;
    }
    if (!a_tor && b_tor) {
        if (a.k == LK::E || a.k == LK::EPP) {
            // e-kind letter crossing a toral to its right
            if (b.k == LK::W)
                swapped(cd_.kappa_gen(a.i, b.i).pow(-b.exp));
            else
                swapped(cd_.kappa_gen(b.i, a.i).pow(b.exp));
            return out;
        }
        // f' crossing a toral to its right (Bbar ordering)
        if (b.k == LK::W)
            swapped(cd_.kappa_gen(a.i, b.i).pow(b.exp));
        else
            swapped(cd_.kappa_gen(b.i, a.i).pow(-b.exp));
        return out;
    }

    if (a.k == LK::E && b.k == LK::F) {
        out.push_back({Scalar(1), {b, a}});
        if (a.i == b.i) {
            const Scalar inv = cd_.ri_minus_si(a.i).inv();
            out.push_back({inv, {Atom{LK::W, a.i, 1}}});
            out.push_back({-inv, {Atom{LK::WP, a.i, 1}}});
        }
        return out;
    }
    if (a.k == LK::EPP && b.k == LK::F) {
        out.push_back({cd_.kappa_gen(b.i, a.i), {b, a}});
        if (a.i == b.i) out.push_back({Scalar(testing::delta27_sign()), {}});
        return out;
    }
    if (a.k == LK::FP && b.k == LK::E) {
        out.push_back({cd_.kappa_gen(a.i, b.i), {b, a}});
        if (a.i == b.i) out.push_back({Scalar(1), {}});
        return out;
    }
    throw IllegalLetter("no rewrite rule for adjacent pair");
}

namespace {

// split a raising-side word into maximal same-kind runs
std::vector<std::pair<LK, Word>> split_runs(const std::vector<PLetter>& word) {
    std::vector<std::pair<LK, Word>> runs;
    for (const auto& l : word) {
        if (runs.empty() || runs.back().first != l.k) runs.push_back({l.k, {}});
        runs.back().second.push_back(l.i);
    }
    return runs;
}

}  // namespace

std::vector<std::pair<Scalar, Word>> Algebra::reduce_word(LK kind,
                                                          const Word& word) const {
    if (word.size() <= 1) return {{Scalar(1), word}};
    Weight beta(rank(), 0);
    for (uint8_t i : word) beta[i] += 1;
    const WeightWords& ww = weight_words(family_of(kind), beta);
    const int idx = ww.index.at(word);
    if (ww.is_basis[idx]) return {{Scalar(1), word}};
    std::vector<std::pair<Scalar, Word>> out;
    for (const auto& [col, coef] : ww.rows.at(idx)) {
        out.push_back({-coef, ww.words[col]});
    }
    return out;
}

Element Algebra::collect_straight(const std::vector<Atom>& word, Parent p) const {
    std::vector<PLetter> pre, post;
    std::vector<long long> w(rank(), 0), wp(rank(), 0);
    for (const auto& a : word) {
        const int cls = class_of(a.k, p);
        if (cls == 0)
            pre.push_back({a.k, static_cast<uint8_t>(a.i)});
        else if (cls == 2)
            post.push_back({a.k, static_cast<uint8_t>(a.i)});
        else
            (a.k == LK::W ? w : wp)[a.i] += a.exp;
    }

    // serre-reduce both sides; the pre word is a single-kind run, the post
    // word may contain several runs in the enveloping letter set
    std::vector<std::pair<Scalar, std::vector<PLetter>>> lefts = {{Scalar(1), {}}};
    if (!pre.empty()) {
        Word lw;
        for (const auto& l : pre) lw.push_back(l.i);
        lefts.clear();
        for (auto& [c, rw] : reduce_word(pre[0].k, lw)) {
            std::vector<PLetter> pl;
            for (uint8_t i : rw) pl.push_back({pre[0].k, i});
            lefts.push_back({c, std::move(pl)});
        }
    }
    std::vector<std::pair<Scalar, std::vector<PLetter>>> rights = {{Scalar(1), {}}};
    for (auto& [kind, run] : split_runs(post)) {
        auto reduced = reduce_word(kind, run);
        std::vector<std::pair<Scalar, std::vector<PLetter>>> next;
        for (const auto& [c0, pl0] : rights) {
            for (const auto& [c1, rw] : reduced) {
                auto pl = pl0;
                for (uint8_t i : rw) pl.push_back({kind, i});
                next.push_back({c0 * c1, std::move(pl)});
            }
        }
        rights = std::move(next);
    }

    Element out(p, rank());
    for (const auto& [cl, lword] : lefts) {
        for (const auto& [cr, rword] : rights) {
            Monomial m;
            m.pre = lword;
            m.w = w;
            m.wp = wp;
            m.post = rword;
            out.add(m, cl * cr);
        }
    }
    return out;
}

Element Algebra::nf_word(const std::vector<Atom>& word, Parent p) const {
    int inv = -1;
    for (size_t k = 0; k + 1 < word.size(); ++k) {
        if (class_of(word[k].k, p) > class_of(word[k + 1].k, p)) {
            inv = static_cast<int>(k);
            break;
        }
    }
    if (inv < 0) return collect_straight(word, p);

    std::vector<long long> key;
    key.reserve(word.size() * 3 + 2);
    key.push_back(static_cast<long long>(p));
    key.push_back(testing::delta27_sign());
    for (const auto& a : word) {
        key.push_back(static_cast<long long>(a.k));
        key.push_back(a.i);
        key.push_back(a.k == LK::W || a.k == LK::WP ? a.exp : 1);
    }
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = nf_cache_.find(key);
        if (it != nf_cache_.end()) return it->second;
    }

    Element acc(p, rank());
    for (const auto& st : swap_rule(word[inv], word[inv + 1], p)) {
        std::vector<Atom> next(word.begin(), word.begin() + inv);
        for (const auto& a : st.repl) next.push_back(a);
        next.insert(next.end(), word.begin() + inv + 2, word.end());
        acc = acc + nf_word(next, p).scaled(st.c);
    }
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = nf_cache_.emplace(std::move(key), std::move(acc));
    return it->second;
}

Element Algebra::normal_form(const Scalar& coef, const std::vector<Atom>& word,
                             Parent p) const {
    for (const auto& a : word)
        if (!letter_legal(p, a.k))
            throw IllegalLetter("letter not in " + parent_name(p));
    if (coef.is_zero()) return Element(p, rank());

    std::vector<Atom> w0;
    for (const auto& a : word) {
        if ((a.k == LK::W || a.k == LK::WP) && a.exp == 0) continue;
        w0.push_back(a);
    }
    return nf_word(w0, p).scaled(coef);
}

namespace {

std::vector<Atom> atoms_of(const Monomial& m) {
    std::vector<Atom> out;
    for (const auto& l : m.pre) out.push_back({l.k, l.i, 1});
    for (size_t i = 0; i < m.w.size(); ++i)
        if (m.w[i] != 0) out.push_back({LK::W, static_cast<int>(i), m.w[i]});
    for (size_t i = 0; i < m.wp.size(); ++i)
        if (m.wp[i] != 0) out.push_back({LK::WP, static_cast<int>(i), m.wp[i]});
    for (const auto& l : m.post) out.push_back({l.k, l.i, 1});
    return out;
}

bool toral_only(const Element& e) {
    for (const auto& [m, c] : e.terms())
        if (!m.is_toral()) return false;
    return true;
}

}  // namespace

Element Algebra::normal_form(const Element& x) const {
    Element out(x.parent(), rank());
    for (const auto& [m, c] : x.terms()) out = out + normal_form(c, atoms_of(m), x.parent());
    return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
    Parent p;
    if (toral_only(a) && !toral_only(b))
        p = b.parent();
    else if (toral_only(b) && !toral_only(a))
        p = a.parent();
    else
        p = parent_join(a.parent(), b.parent());
    Element out(p, rank());
    for (const auto& [ma, ca] : a.terms()) {
        std::vector<Atom> base = atoms_of(ma);
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Atom> word = base;
            for (const auto& at : atoms_of(mb)) word.push_back(at);
            out = out + normal_form(ca * cb, word, p);
        }
    }
    return out;
}

Element Algebra::multiply(const Element& a, const Element& b, const Element& c) const {
    return multiply(multiply(a, b), c);
}

Element Algebra::gen(LK k, int i, Parent p) const {
    if (i < 0 || i >= rank()) throw BadIndex("generator index");
    return normal_form(Scalar(1), {Atom{k, i, 1}}, p);
}

Element Algebra::toral(const std::vector<long long>& w, const std::vector<long long>& wp,
                       Parent p) const {
    Element e(p, rank());
    Monomial m = Monomial::unit(rank());
    m.w = w;
    m.wp = wp;
    e.add(m, Scalar(1));
    return e;
}

Element Algebra::omega(const Weight& mu, Parent p) const {
    std::vector<long long> w(mu.begin(), mu.end());
    return toral(w, std::vector<long long>(rank(), 0), p);
}

Element Algebra::omega_prime(const Weight& mu, Parent p) const {
    std::vector<long long> wp(mu.begin(), mu.end());
    return toral(std::vector<long long>(rank(), 0), wp, p);
}

Element Algebra::k_beta(const Weight& beta, Parent p) const {
    std::vector<long long> wp;
    for (int c : beta) wp.push_back(-c);
    return toral(std::vector<long long>(rank(), 0), wp, p);
}

Element Algebra::word_element(LK k, const Word& word, Parent p) const {
    Element e(p, rank());
    Monomial m = Monomial::unit(rank());
    std::vector<PLetter> pl;
    for (uint8_t i : word) pl.push_back({k, i});
    if (class_of(k, p) == 0)
        m.pre = std::move(pl);
    else
        m.post = std::move(pl);
    e.add(m, Scalar(1));
    return e;
}

Element Algebra::serre_element(int i, int j, LK kind) const {
    if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank())
        throw BadIndex("serre element needs distinct indices");
    const int bound = 1 - cd_.a[i][j];
    const Scalar qi = cd_.q_i(i);
    Parent p;
    switch (kind) {
        case LK::F:
        case LK::E: p = Parent::U; break;
        case LK::EPP: p = Parent::B; break;
        case LK::FP: p = Parent::Bbar; break;
        default: throw IllegalLetter("serre element of toral letter");
    }
    const bool reversed = family_of(kind) == SerreFamily::Fam210;
    Element out(p, rank());
    for (int k = 0; k <= bound; ++k) {
        Scalar c = q_binomial(bound, k, qi) * serre_coefficient(cd_, i, j, k);
        if (k % 2) c = -c;
        Word word;
        const int left = reversed ? bound - k : k;
        for (int t = 0; t < left; ++t) word.push_back(static_cast<uint8_t>(i));
        word.push_back(static_cast<uint8_t>(j));
        for (int t = 0; t < bound - left; ++t) word.push_back(static_cast<uint8_t>(i));
        out = out + word_element(kind, word, p).scaled(c);
    }
    return out;
}

Element Algebra::commutation_closed_form(int n, int m, int i, int j) const {
    if (n < 0 || m < 0) throw BadIndex("negative exponent");
    Element out(Parent::B, rank());
    const auto monomial = [&](int fs, int es) {
        Monomial mm = Monomial::unit(rank());
        for (int t = 0; t < fs; ++t) mm.pre.push_back({LK::F, static_cast<uint8_t>(j)});
        for (int t = 0; t < es; ++t) mm.post.push_back({LK::EPP, static_cast<uint8_t>(i)});
        return mm;
    };
    if (i != j) {
        out.add(monomial(m, n), cd_.kappa_gen(j, i).pow(static_cast<long long>(n) * m));
        return out;
    }
    const Scalar q = cd_.q_i(i);
    const int top = std::min(n, m);
    for (int nu = 0; nu <= top; ++nu) {
        Scalar c = q.pow(static_cast<long long>(n - nu) * (m - nu));
        c *= q_binomial(n, nu, q);
        c *= q_factorial(m, q) / q_factorial(m - nu, q);
        out.add(monomial(m - nu, n - nu), c);
    }
    return out;
}

const WeightWords& Algebra::weight_words(SerreFamily fam, const Weight& beta) const {
    if (weight_height(beta) > height_cap_)
        throw HeightExceeded(weight_str(beta) + " above cap " +
                             std::to_string(height_cap_));
    const std::pair<int, Weight> key{static_cast<int>(fam), beta};
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }

    auto ww = std::make_shared<WeightWords>();
    ww->words = words_of_weight(beta);
    for (size_t t = 0; t < ww->words.size(); ++t) ww->index[ww->words[t]] = static_cast<int>(t);

    // span of the serre ideal's weight component: every word * relation * word
    SMat rows;
    const int ncols = static_cast<int>(ww->words.size());
    for (int i = 0; i < rank(); ++i) {
        for (int j = 0; j < rank(); ++j) {
            if (i == j) continue;
            const int bound = 1 - cd_.a[i][j];
            Weight rel(rank(), 0);
            rel[i] = bound;
            rel[j] += 1;
            Weight rem = weight_sub(beta, rel);
            if (!weight_nonneg(rem)) continue;

            std::vector<std::pair<Scalar, Word>> relTerms;
            const Scalar qi = cd_.q_i(i);
            for (int k = 0; k <= bound; ++k) {
                Scalar c = q_binomial(bound, k, qi) * serre_coefficient(cd_, i, j, k);
                if (k % 2) c = -c;
                Word word;
                const int left = fam == SerreFamily::Fam210 ? bound - k : k;
                for (int t = 0; t < left; ++t) word.push_back(static_cast<uint8_t>(i));
                word.push_back(static_cast<uint8_t>(j));
                for (int t = 0; t < bound - left; ++t)
                    word.push_back(static_cast<uint8_t>(i));
                relTerms.push_back({std::move(c), std::move(word)});
            }

            // all splits rem = gamma + delta
            std::function<void(int, Weight&)> enum_gamma = [&](int pos, Weight& gamma) {
                if (pos == rank()) {
                    const Weight delta = weight_sub(rem, gamma);
                    for (const Word& m1 : words_of_weight(gamma)) {
                        for (const Word& m2 : words_of_weight(delta)) {
                            SVec row(ncols, Scalar(0));
                            for (const auto& [c, wrd] : relTerms) {
                                Word full = m1;
                                full.insert(full.end(), wrd.begin(), wrd.end());
                                full.insert(full.end(), m2.begin(), m2.end());
                                row[ww->index.at(full)] += c;
                            }
                            rows.push_back(std::move(row));
                        }
                    }
                    return;
                }
                for (int v = 0; v <= rem[pos]; ++v) {
                    gamma[pos] = v;
                    enum_gamma(pos + 1, gamma);
                }
                gamma[pos] = 0;
            };
            Weight gamma(rank(), 0);
            enum_gamma(0, gamma);
        }
    }

    std::vector<int> pivots = rref_inplace(rows);
    ww->is_basis.assign(ncols, true);
    for (size_t rix = 0; rix < pivots.size(); ++rix) {
        const int p = pivots[rix];
        ww->is_basis[p] = false;
        std::map<int, Scalar> entries;
        for (int c = 0; c < ncols; ++c) {
            if (c == p || rows[rix][c].is_zero()) continue;
            entries.emplace(c, rows[rix][c]);
        }
        ww->rows.emplace(p, std::move(entries));
    }
    for (int c = 0; c < ncols; ++c)
        if (ww->is_basis[c]) ww->basis.push_back(ww->words[c]);

    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = cache_.emplace(key, std::move(ww));
    return *it->second;
}

std::vector<Word> Algebra::weight_basis(LK kind, const Weight& beta) const {
    if (!weight_nonneg(beta)) throw BadIndex("weight not in Q+");
    return weight_words(family_of(kind), beta).basis;
}

long long Algebra::weight_dim(LK kind, const Weight& beta) const {
    return static_cast<long long>(weight_basis(kind, beta).size());
}

std::vector<Weight> Algebra::positive_weights_upto(int h) const {
    std::vector<Weight> out;
    std::function<void(int, int, Weight&)> rec = [&](int pos, int left, Weight& w) {
        if (pos == rank()) {
            out.push_back(w);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            w[pos] = v;
            rec(pos + 1, left - v, w);
        }
        w[pos] = 0;
    };
    // graded: heights ascending, lex within a height
    std::vector<Weight> all;
    Weight w(rank(), 0);
    for (int ht = 0; ht <= h; ++ht) {
        std::vector<Weight> level;
        std::function<void(int, int, Weight&)> rec2 = [&](int pos, int left, Weight& ww) {
            if (pos == rank() - 1) {
                ww[pos] = left;
                level.push_back(ww);
                return;
            }
            for (int v = left; v >= 0; --v) {
                ww[pos] = v;
                rec2(pos + 1, left - v, ww);
            }
            ww[pos] = 0;
        };
        if (rank() == 0) continue;
        rec2(0, ht, w);
        std::sort(level.begin(), level.end());
        for (auto& x : level) all.push_back(x);
    }
    return all;
}

}  // namespace qrs
