#include "qrs/hopf.hpp"

namespace qrs {

Parent coproduct_source(CoproductKind k) {
    switch (k) {
        case CoproductKind::Std: return Parent::U;
        case CoproductKind::Right: return Parent::B;
        case CoproductKind::Left: return Parent::Bbar;
        case CoproductKind::Bottom: return Parent::U;
    }
    return Parent::U;
}

std::pair<Parent, Parent> coproduct_targets(CoproductKind k) {
    switch (k) {
        case CoproductKind::Std: return {Parent::U, Parent::U};
        case CoproductKind::Right: return {Parent::B, Parent::U};
        case CoproductKind::Left: return {Parent::U, Parent::Bbar};
        case CoproductKind::Bottom: return {Parent::Bbar, Parent::B};
    }
    return {Parent::U, Parent::U};
}

namespace {

std::vector<Atom> monomial_atoms(const Monomial& m) {
    std::vector<Atom> out;
    for (const auto& l : m.pre) out.push_back({l.k, l.i, 1});
    for (size_t i = 0; i < m.w.size(); ++i)
        if (m.w[i] != 0) out.push_back({LK::W, static_cast<int>(i), m.w[i]});
    for (size_t i = 0; i < m.wp.size(); ++i)
        if (m.wp[i] != 0) out.push_back({LK::WP, static_cast<int>(i), m.wp[i]});
    for (const auto& l : m.post) out.push_back({l.k, l.i, 1});
    return out;
}

Tensor letter_coproduct(const Algebra& alg, CoproductKind kind, const Atom& a) {
    const auto [pl, pr] = coproduct_targets(kind);
    const int i = a.i;
    const auto leg = [&](Parent p, std::vector<Atom> atoms) {
        return alg.normal_form(Scalar(1), atoms, p);
    };
    const auto pair2 = [&](const Element& x, const Element& y) {
        return Tensor::outer({x, y});
    };
    if (a.k == LK::W || a.k == LK::WP) {
        Element t = leg(pl, {a});
        Element t2 = leg(pr, {a});
        return pair2(t, t2);
    }
    const Scalar rs = alg.cartan().ri_minus_si(i);
    switch (kind) {
        case CoproductKind::Std:
            if (a.k == LK::E)
                return pair2(leg(pl, {a}), alg.unit(pr)) +
                       pair2(leg(pl, {{LK::W, i, 1}}), leg(pr, {a}));
            if (a.k == LK::F)
                return pair2(leg(pl, {a}), leg(pr, {{LK::WP, i, 1}})) +
                       pair2(alg.unit(pl), leg(pr, {a}));
            break;
        case CoproductKind::Right:
            if (a.k == LK::EPP)
                return pair2(alg.unit(pl), leg(pr, {{LK::W, i, -1}, {LK::E, i, 1}}))
                           .scaled(rs) +
                       pair2(leg(pl, {a}), leg(pr, {{LK::W, i, -1}}));
            if (a.k == LK::F)
                return pair2(leg(pl, {a}), leg(pr, {{LK::WP, i, 1}})) +
                       pair2(alg.unit(pl), leg(pr, {a}));
            break;
        case CoproductKind::Left:
            if (a.k == LK::E)
                return pair2(leg(pl, {a}), alg.unit(pr)) +
                       pair2(leg(pl, {{LK::W, i, 1}}), leg(pr, {a}));
            if (a.k == LK::FP)
                return pair2(leg(pl, {{LK::WP, i, -1}, {LK::F, i, 1}}), alg.unit(pr))
                           .scaled(rs) +
                       pair2(leg(pl, {{LK::WP, i, -1}}), leg(pr, {a}));
            break;
        case CoproductKind::Bottom:
            if (a.k == LK::E)
                return pair2(leg(pl, {{LK::W, i, 1}}),
                             leg(pr, {{LK::W, i, 1}, {LK::EPP, i, 1}}))
                           .scaled(rs.inv()) +
                       pair2(leg(pl, {a}), alg.unit(pr));
            if (a.k == LK::F)
                return pair2(alg.unit(pl), leg(pr, {a})) +
                       pair2(leg(pl, {{LK::WP, i, 1}, {LK::FP, i, 1}}),
                             leg(pr, {{LK::WP, i, 1}}))
                           .scaled(rs.inv());
            break;
    }
    throw IllegalLetter("coproduct variant undefined on this letter");
}

}  // namespace

Tensor coproduct(const Algebra& alg, CoproductKind kind, const Element& x) {
    const auto [pl, pr] = coproduct_targets(kind);
    const Parent src = coproduct_source(kind);
    Tensor out(2, {pl, pr}, alg.rank());
    for (const auto& [m, c] : x.terms()) {
        Tensor acc = Tensor::unit(alg, {pl, pr});
        for (const auto& a : monomial_atoms(m)) {
            if (!letter_legal(src, a.k))
                throw IllegalLetter("letter not in coproduct source " + parent_name(src));
            acc = acc.mul(alg, letter_coproduct(alg, kind, a));
        }
        out = out + acc.scaled(c);
    }
    return out;
}

Tensor coproduct_on_leg(const Algebra& alg, const Tensor& t, int leg) {
    std::vector<Parent> ps;
    for (int l = 0; l < t.arity(); ++l) {
        if (l == leg) {
            ps.push_back(Parent::U);
            ps.push_back(Parent::U);
        } else {
            ps.push_back(t.parents()[l]);
        }
    }
    Tensor out(t.arity() + 1, ps, t.rank());
    for (const auto& [key, c] : t.terms()) {
        Element x(t.parents()[leg], t.rank());
        x.add(key[leg], Scalar(1));
        Tensor dx = coproduct(alg, CoproductKind::Std, x);
        for (const auto& [dkey, dc] : dx.terms()) {
            Tensor::Key k2;
            for (int l = 0; l < t.arity(); ++l) {
                if (l == leg) {
                    k2.push_back(dkey[0]);
                    k2.push_back(dkey[1]);
                } else {
                    k2.push_back(key[l]);
                }
            }
            out.add(k2, c * dc);
        }
    }
    return out;
}

Scalar counit(const Element& x) {
    Scalar out(0);
    for (const auto& [m, c] : x.terms()) {
        if (!m.pre.empty() || !m.post.empty()) {
            for (const auto& l : m.pre)
                if (l.k == LK::EPP || l.k == LK::FP)
                    throw IllegalLetter("counit undefined on this letter");
            for (const auto& l : m.post)
                if (l.k == LK::EPP || l.k == LK::FP)
                    throw IllegalLetter("counit undefined on this letter");
            continue;  // augmentation ideal
        }
        out += c;
    }
    return out;
}

namespace {

// anti- or homomorphic extension of a letter table
template <typename Fn>
Element map_letterwise(const Algebra& alg, const Element& x, Parent target, bool anti,
                       Fn&& image) {
    Element out(target, alg.rank());
    for (const auto& [m, c] : x.terms()) {
        std::vector<Atom> atoms = monomial_atoms(m);
        Element acc = alg.unit(target);
        if (anti) {
            for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
                acc = alg.multiply(acc, image(*it));
        } else {
            for (const auto& a : atoms) acc = alg.multiply(acc, image(a));
        }
        out = out + acc.scaled(c);
    }
    return out;
}

}  // namespace

Element antipode(const Algebra& alg, const Element& x, AntipodeDir dir) {
    const auto image = [&](const Atom& a) -> Element {
        switch (a.k) {
            case LK::W: return alg.normal_form(Scalar(1), {{LK::W, a.i, -a.exp}}, Parent::U);
            case LK::WP:
                return alg.normal_form(Scalar(1), {{LK::WP, a.i, -a.exp}}, Parent::U);
            case LK::E:
                if (dir == AntipodeDir::S)
                    return alg.normal_form(Scalar(-1), {{LK::W, a.i, -1}, {LK::E, a.i, 1}},
                                           Parent::U);
                return alg.normal_form(Scalar(-1), {{LK::E, a.i, 1}, {LK::W, a.i, -1}},
                                       Parent::U);
            case LK::F:
                if (dir == AntipodeDir::S)
                    return alg.normal_form(Scalar(-1), {{LK::F, a.i, 1}, {LK::WP, a.i, -1}},
                                           Parent::U);
                return alg.normal_form(Scalar(-1), {{LK::WP, a.i, -1}, {LK::F, a.i, 1}},
                                       Parent::U);
            default: throw IllegalLetter("antipode undefined on this letter");
        }
    };
    return map_letterwise(alg, x, Parent::U, true, image);
}

Element phi(const Algebra& alg, const Element& x) {
    const auto image = [&](const Atom& a) -> Element {
        const Scalar rs = a.k == LK::E || a.k == LK::FP
                              ? alg.cartan().ri_minus_si(a.i)
                              : Scalar(1);
        switch (a.k) {
            case LK::W: return alg.normal_form(Scalar(1), {{LK::W, a.i, -a.exp}}, Parent::B);
            case LK::WP:
                return alg.normal_form(Scalar(1), {{LK::WP, a.i, -a.exp}}, Parent::B);
            case LK::E:
                return alg.normal_form(-rs.inv(), {{LK::EPP, a.i, 1}}, Parent::B);
            case LK::FP: return alg.normal_form(-rs, {{LK::F, a.i, 1}}, Parent::B);
            default: throw IllegalLetter("phi undefined on this letter");
        }
    };
    return map_letterwise(alg, x, Parent::B, true, image);
}

Element psi(const Algebra& alg, const Element& x) {
    const auto image = [&](const Atom& a) -> Element {
        switch (a.k) {
            case LK::W:
            case LK::WP: return alg.normal_form(Scalar(1), {a}, Parent::U);
            case LK::E:
                return alg.normal_form(
                    Scalar(1), {{LK::W, a.i, -1}, {LK::WP, a.i, 1}, {LK::E, a.i, 1}},
                    Parent::U);
            case LK::F:
                return alg.normal_form(
                    Scalar(1), {{LK::F, a.i, 1}, {LK::W, a.i, 1}, {LK::WP, a.i, -1}},
                    Parent::U);
            default: throw IllegalLetter("psi undefined on this letter");
        }
    };
    return map_letterwise(alg, x, Parent::U, false, image);
}

}  // namespace qrs
