#include "qrs/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace qrs {

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

void Poly::add_term(const Exp2& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0} &&
           terms_.begin()->second == 1;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term({ea.er + eb.er, ea.es + eb.es}, ca * cb);
    return out;
}

Poly Poly::pow(long long n) const {
    Poly out(1);
    Poly base = *this;
    for (; n > 0; n >>= 1) {
        if (n & 1) out = out * base;
        if (n > 1) base = base * base;
    }
    return out;
}

long long Poly::min_er() const {
    long long m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.er < m) m = e.er;
        first = false;
    }
    return m;
}

long long Poly::min_es() const {
    long long m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.es < m) m = e.es;
        first = false;
    }
    return m;
}

Poly Poly::shifted(long long er, long long es) const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exp2{e.er + er, e.es + es}, c);
    return out;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class Poly::leading_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

mpq_class Poly::eval(const mpq_class& rv, const mpq_class& sv) const {
    // Horner is overkill for the sparse desk-scale polynomials here.
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t(c);
        mpz_class num = rv.get_num(), den = rv.get_den();
        if (e.er < 0) throw Error("eval of Laurent exponent");
        if (e.es < 0) throw Error("eval of Laurent exponent");
        mpz_class rn, rd, sn, sd;
        mpz_pow_ui(rn.get_mpz_t(), rv.get_num().get_mpz_t(), static_cast<unsigned long>(e.er));
        mpz_pow_ui(rd.get_mpz_t(), rv.get_den().get_mpz_t(), static_cast<unsigned long>(e.er));
        mpz_pow_ui(sn.get_mpz_t(), sv.get_num().get_mpz_t(), static_cast<unsigned long>(e.es));
        mpz_pow_ui(sd.get_mpz_t(), sv.get_den().get_mpz_t(), static_cast<unsigned long>(e.es));
        t *= mpq_class(rn, rd);
        t *= mpq_class(sn, sd);
        acc += t;
    }
    acc.canonicalize();
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool has_vars = e.er != 0 || e.es != 0;
        bool printed = false;
        if (a != 1 || !has_vars) {
            os << a.get_str();
            printed = true;
        }
        if (e.er != 0) {
            if (printed) os << "*";
            os << "r";
            if (e.er != 1) os << "^" << e.er;
            printed = true;
        }
        if (e.es != 0) {
            if (printed) os << "*";
            os << "s";
            if (e.es != 1) os << "^" << e.es;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery: recursive dense representations
//   UPoly: Z[r], dense by degree
//   SPoly: (Z[r])[s], dense by s-degree
// ---------------------------------------------------------------------------

namespace {

using UPoly = std::vector<mpz_class>;   // Z[r]
using SPoly = std::vector<UPoly>;       // coefficients of s^k

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uzero(const UPoly& p) { return p.empty(); }
int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    utrim(out);
    return out;
}

UPoly uneg(const UPoly& a) {
    UPoly out = a;
    for (auto& c : out) c = -c;
    return out;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (uzero(a) || uzero(b)) return {};
    UPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    utrim(out);
    return out;
}

UPoly uscale(const UPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    UPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

mpz_class ucontent(const UPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly udivexact_int(const UPoly& a, const mpz_class& c) {
    UPoly out = a;
    for (auto& x : out) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        x = q;
    }
    return out;
}

// exact division in Z[r]; empty optional if not divisible
std::optional<UPoly> udiv(const UPoly& a0, const UPoly& b) {
    if (uzero(b)) return std::nullopt;
    UPoly a = a0;
    if (uzero(a)) return UPoly{};
    if (udeg(a) < udeg(b)) return std::nullopt;
    UPoly q(a.size() - b.size() + 1, mpz_class(0));
    while (!uzero(a) && udeg(a) >= udeg(b)) {
        mpz_class c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (rem != 0) return std::nullopt;
        const int sh = udeg(a) - udeg(b);
        q[sh] = c;
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
        utrim(a);
    }
    if (!uzero(a)) return std::nullopt;
    utrim(q);
    return q;
}

// pseudo-remainder of a by b in Z[r]
UPoly uprem(UPoly a, const UPoly& b) {
    const int db = udeg(b);
    while (!uzero(a) && udeg(a) >= db) {
        const mpz_class la = a.back();
        const int sh = udeg(a) - db;
        // a = lc(b)*a - lc(a)*x^sh*b
        a = uscale(a, b.back());
        for (int i = 0; i <= db; ++i) a[sh + i] -= la * b[i];
        utrim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    if (uzero(a)) std::swap(a, b);
    if (uzero(b)) {
        if (uzero(a)) return a;
        mpz_class c = ucontent(a);
        if (a.back() < 0) c = -c;
        return udivexact_int(a, c);  // primitive, lc > 0
    }
    mpz_class ca = ucontent(a), cb = ucontent(b);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = udivexact_int(a, ca);
    b = udivexact_int(b, cb);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!uzero(b)) {
        UPoly r = uprem(a, b);
        if (!uzero(r)) r = udivexact_int(r, ucontent(r));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.back() < 0) a = uneg(a);
    return uscale(a, cg);
}

void strim(SPoly& p) {
    while (!p.empty() && uzero(p.back())) p.pop_back();
}

bool szero(const SPoly& p) { return p.empty(); }
int sdeg(const SPoly& p) { return static_cast<int>(p.size()) - 1; }

SPoly smul_u(const SPoly& a, const UPoly& c) {
    if (uzero(c)) return {};
    SPoly out = a;
    for (auto& x : out) x = umul(x, c);
    strim(out);
    return out;
}

SPoly ssub(const SPoly& a, const SPoly& b) {
    SPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        UPoly t = i < a.size() ? a[i] : UPoly{};
        if (i < b.size()) t = uadd(t, uneg(b[i]));
        out[i] = std::move(t);
    }
    strim(out);
    return out;
}

UPoly scontent(const SPoly& a) {
    UPoly g;
    for (const auto& c : a) g = ugcd(g, c);
    return g;
}

std::optional<SPoly> sdivexact_u(const SPoly& a, const UPoly& c) {
    SPoly out = a;
    for (auto& x : out) {
        auto q = udiv(x, c);
        if (!q) return std::nullopt;
        x = std::move(*q);
    }
    return out;
}

// exact division in (Z[r])[s]
std::optional<SPoly> sdiv(const SPoly& a0, const SPoly& b) {
    if (szero(b)) return std::nullopt;
    SPoly a = a0;
    if (szero(a)) return SPoly{};
    if (sdeg(a) < sdeg(b)) return std::nullopt;
    SPoly q(a.size() - b.size() + 1);
    while (!szero(a) && sdeg(a) >= sdeg(b)) {
        auto c = udiv(a.back(), b.back());
        if (!c) return std::nullopt;
        const int sh = sdeg(a) - sdeg(b);
        q[sh] = *c;
        for (size_t i = 0; i < b.size(); ++i) {
            a[sh + i] = uadd(a[sh + i], uneg(umul(*c, b[i])));
        }
        strim(a);
    }
    if (!szero(a)) return std::nullopt;
    strim(q);
    return q;
}

SPoly sprem(SPoly a, const SPoly& b) {
    const int db = sdeg(b);
    while (!szero(a) && sdeg(a) >= db) {
        const UPoly la = a.back();
        const int sh = sdeg(a) - db;
        a = smul_u(a, b.back());
        for (int i = 0; i <= db; ++i) a[sh + i] = uadd(a[sh + i], uneg(umul(la, b[i])));
        strim(a);
    }
    return a;
}

SPoly sgcd(SPoly a, SPoly b) {
    if (szero(a)) std::swap(a, b);
    if (szero(b)) return a;
    UPoly ca = scontent(a), cb = scontent(b);
    UPoly cg = ugcd(ca, cb);
    a = *sdivexact_u(a, ca);
    b = *sdivexact_u(b, cb);
    if (sdeg(a) < sdeg(b)) std::swap(a, b);
    while (!szero(b)) {
        SPoly r = sprem(a, b);
        if (!szero(r)) r = *sdivexact_u(r, scontent(r));
        a = std::move(b);
        b = std::move(r);
    }
    return smul_u(a, cg);
}

SPoly to_spoly(const Poly& p) {
    SPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e.er < 0 || e.es < 0) throw Error("gcd of Laurent polynomial");
        if (static_cast<size_t>(e.es) >= out.size()) out.resize(e.es + 1);
        UPoly& u = out[e.es];
        if (static_cast<size_t>(e.er) >= u.size()) u.resize(e.er + 1, mpz_class(0));
        u[e.er] = c;
    }
    strim(out);
    for (auto& u : out) utrim(u);
    return out;
}

Poly from_spoly(const SPoly& p) {
    Poly out;
    for (size_t es = 0; es < p.size(); ++es)
        for (size_t er = 0; er < p[es].size(); ++er)
            if (p[es][er] != 0)
                out.add_term({static_cast<long long>(er), static_cast<long long>(es)},
                             p[es][er]);
    return out;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        Poly g = a.is_zero() ? b : a;
        mpz_class c = g.content();
        Poly out;
        for (const auto& [e, k] : g.terms()) out.add_term(e, k / c);
        if (out.leading_coeff() < 0) out = -out;
        return out;
    }
    SPoly g = sgcd(to_spoly(a), to_spoly(b));
    Poly out = from_spoly(g);
    mpz_class c = out.content();
    if (c != 1) {
        Poly t;
        for (const auto& [e, k] : out.terms()) t.add_term(e, k / c);
        out = t;
    }
    if (out.leading_coeff() < 0) out = -out;
    return out;
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly();
    auto q = sdiv(to_spoly(a), to_spoly(b));
    if (!q) return std::nullopt;
    return from_spoly(*q);
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

Scalar Scalar::rs_monomial(long long a, long long b) {
    Poly num = Poly::monomial(1, a > 0 ? a : 0, b > 0 ? b : 0);
    Poly den = Poly::monomial(1, a < 0 ? -a : 0, b < 0 ? -b : 0);
    return Scalar(std::move(num), std::move(den));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    // clear the common Laurent unit
    const long long sr = std::min(num_.min_er(), den_.min_er());
    const long long ss = std::min(num_.min_es(), den_.min_es());
    if (sr != 0 || ss != 0) {
        num_ = num_.shifted(-sr, -ss);
        den_ = den_.shifted(-sr, -ss);
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *poly_divide_exact(num_, g);
        den_ = *poly_divide_exact(den_, g);
    }
    mpz_class cn = num_.content(), cd = den_.content(), cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg != 1) {
        Poly n2, d2;
        for (const auto& [e, c] : num_.terms()) n2.add_term(e, c / cg);
        for (const auto& [e, c] : den_.terms()) d2.add_term(e, c / cg);
        num_ = n2;
        den_ = d2;
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    Scalar out(1);
    Scalar base = *this;
    for (; n > 0; n >>= 1) {
        if (n & 1) out = out * base;
        if (n > 1) base = base * base;
    }
    return out;
}

mpq_class Scalar::substitute(const mpq_class& rv, const mpq_class& sv) const {
    mpq_class d = den_.eval(rv, sv);
    if (d == 0) throw PoleAtPoint();
    mpq_class n = num_.eval(rv, sv);
    mpq_class out = n / d;
    out.canonicalize();
    return out;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

struct ScalarParser {
    const std::string& t;
    size_t p = 0;

    explicit ScalarParser(const std::string& text) : t(text) {}

    void skip() {
        while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
    }
    bool peek(char c) {
        skip();
        return p < t.size() && t[p] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++p;
            return true;
        }
        return false;
    }

    long long integer() {
        skip();
        bool neg = false;
        if (p < t.size() && (t[p] == '-' || t[p] == '+')) neg = t[p++] == '-';
        if (p >= t.size() || !std::isdigit(static_cast<unsigned char>(t[p])))
            throw SyntaxError("expected integer", p);
        long long v = 0;
        while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) {
            v = v * 10 + (t[p] - '0');
            ++p;
        }
        return neg ? -v : v;
    }

    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            if (eat('*'))
                acc *= unary();
            else if (eat('/'))
                acc /= unary();
            else
                return acc;
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (eat('^')) {
            return base.pow(integer());
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (p >= t.size()) throw SyntaxError("unexpected end of input", p);
        const char c = t[p];
        if (c == '(') {
            ++p;
            Scalar inner = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", p);
            return inner;
        }
        if (c == 'r') {
            ++p;
            return Scalar::r();
        }
        if (c == 's') {
            ++p;
            return Scalar::s();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = p;
            while (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) ++p;
            return Scalar(mpz_class(t.substr(start, p - start)));
        }
        throw SyntaxError("unexpected character", p);
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    ScalarParser ps(text);
    Scalar out = ps.expr();
    ps.skip();
    if (ps.p != text.size()) throw SyntaxError("trailing input", ps.p);
    return out;
}

}  // namespace qrs
