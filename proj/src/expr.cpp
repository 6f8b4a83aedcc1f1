#include "qrs/expr.hpp"

#include <cctype>

namespace qrs {

namespace {

struct ElemParser {
    const Algebra& alg;
    const std::string& t;
    Parent p;
    size_t pos = 0;

    ElemParser(const Algebra& a, const std::string& text, Parent parent)
        : alg(a), t(text), p(parent) {}

    void skip() {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < t.size() && t[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    long long integer() {
        skip();
        bool neg = false;
        if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) neg = t[pos++] == '-';
        if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
            throw SyntaxError("expected integer", pos);
        long long v = 0;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            v = v * 10 + (t[pos++] - '0');
        return neg ? -v : v;
    }

    // an element whose single term is a unit monomial is a plain scalar
    std::optional<Scalar> as_scalar(const Element& e) {
        if (e.is_zero()) return Scalar(0);
        if (e.terms().size() != 1) return std::nullopt;
        const auto& [m, c] = *e.terms().begin();
        if (m.pre.empty() && m.post.empty() && m.toral_trivial()) return c;
        return std::nullopt;
    }

    Element pow(const Element& base, long long k, size_t at) {
        if (auto c = as_scalar(base)) return alg.unit(p).scaled(c->pow(k));
        if (k < 0) {
            // only invertible single toral monomials may carry negative powers
            if (base.terms().size() == 1) {
                const auto& [m, c] = *base.terms().begin();
                if (m.pre.empty() && m.post.empty() && c.is_one()) {
                    std::vector<long long> w(m.w), wp(m.wp);
                    for (auto& x : w) x *= k;
                    for (auto& x : wp) x *= k;
                    return alg.toral(w, wp, p);
                }
            }
            throw SyntaxError("negative power of a non-invertible element", at);
        }
        Element acc = alg.unit(p);
        for (long long i = 0; i < k; ++i) acc = alg.multiply(acc, base);
        return acc;
    }

    Element expr() {
        Element acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (peek('-')) {
                ++pos;
                acc = acc - term();
            } else
                return acc;
        }
    }

    bool atom_ahead() {
        skip();
        if (pos >= t.size()) return false;
        const char c = t[pos];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::string("eEfPwvrs").find(c) != std::string::npos;
    }

    Element term() {
        Element acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = alg.multiply(acc, factor());
            } else if (eat('/')) {
                const size_t at = pos;
                Element rhs = factor();
                auto c = as_scalar(rhs);
                if (!c) throw SyntaxError("division by a non-scalar", at);
                if (c->is_zero()) throw DivisionByZero();
                acc = acc.scaled(c->inv());
            } else if (atom_ahead()) {
                acc = alg.multiply(acc, factor());
            } else {
                return acc;
            }
        }
    }

    Element factor() {
        skip();
        if (eat('-')) return -factor();
        const size_t at = pos;
        Element base = atom();
        if (eat('^')) return pow(base, integer(), at);
        return base;
    }

    Element atom() {
        skip();
        if (pos >= t.size()) throw SyntaxError("unexpected end of input", pos);
        const char c = t[pos];
        if (c == '(') {
            ++pos;
            Element inner = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos);
            return inner;
        }
        if (c == 'r') {
            ++pos;
            return alg.unit(p).scaled(Scalar::r());
        }
        if (c == 's') {
            ++pos;
            return alg.unit(p).scaled(Scalar::s());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                ++pos;
            return alg.unit(p).scaled(Scalar(mpz_class(t.substr(start, pos - start))));
        }
        LK k;
        switch (c) {
            case 'e': k = LK::E; break;
            case 'E': k = LK::EPP; break;
            case 'f': k = LK::F; break;
            case 'P': k = LK::FP; break;
            case 'w': k = LK::W; break;
            case 'v': k = LK::WP; break;
            default: throw SyntaxError("unexpected character", pos);
        }
        ++pos;
        if (!eat('[')) throw SyntaxError("expected '['", pos);
        const size_t at = pos;
        long long i = integer();
        if (!eat(']')) throw SyntaxError("expected ']'", pos);
        if (i < 1 || i > alg.rank()) throw BadIndex("index " + std::to_string(i));
        if (!letter_legal(p, k))
            throw IllegalLetter(std::string(1, c) + " not legal in " + parent_name(p));
        (void)at;
        if (k == LK::W || k == LK::WP)
            return alg.normal_form(Scalar(1), {{k, static_cast<int>(i - 1), 1}}, p);
        return alg.gen(k, static_cast<int>(i - 1), p);
    }
};

Parent infer_parent(const std::string& text) {
    bool has_e = false, has_epp = false, has_f = false, has_fp = false;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i + 1] != '[') continue;
        switch (text[i]) {
            case 'e': has_e = true; break;
            case 'E': has_epp = true; break;
            case 'f': has_f = true; break;
            case 'P': has_fp = true; break;
            default: break;
        }
    }
    if (has_fp) {
        if (has_f || has_epp) throw IncompatibleParents();
        return Parent::Bbar;
    }
    if (has_epp) return has_e ? Parent::Env : Parent::B;
    return Parent::U;
}

}  // namespace

Element parse_element(const Algebra& alg, const std::string& text,
                      std::optional<Parent> parent) {
    const Parent p = parent ? *parent : infer_parent(text);
    ElemParser ps(alg, text, p);
    Element out = ps.expr();
    ps.skip();
    if (ps.pos != text.size()) throw SyntaxError("trailing input", ps.pos);
    return out;
}

}  // namespace qrs
