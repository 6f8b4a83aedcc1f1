#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qrs/errors.hpp"

namespace qrs {

/// Exponent pair for a monomial r^er * s^es.
struct Exp2 {
    long long er = 0;
    long long es = 0;
    friend bool operator==(const Exp2&, const Exp2&) = default;
};

/// Graded lexicographic order with r > s; the term order used everywhere
/// (leading terms, printing, sign normalization).
struct Exp2Less {
    bool operator()(const Exp2& a, const Exp2& b) const {
        const long long da = a.er + a.es, db = b.er + b.es;
        if (da != db) return da < db;
        if (a.er != b.er) return a.er < b.er;
        return a.es < b.es;
    }
};

/// Sparse integer Laurent polynomial in the two parameters r, s.
/// Invariant: no stored coefficient is zero, so equality is map equality.
class Poly {
public:
    using Terms = std::map<Exp2, mpz_class, Exp2Less>;

    Poly() = default;
    explicit Poly(long long c) { add_term({0, 0}, mpz_class(static_cast<long>(c))); }
    explicit Poly(const mpz_class& c) { add_term({0, 0}, c); }

    static Poly monomial(const mpz_class& c, long long er, long long es) {
        Poly p;
        p.add_term({er, es}, c);
        return p;
    }
    static Poly var_r() { return monomial(1, 1, 0); }
    static Poly var_s() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const Terms& terms() const { return terms_; }

    void add_term(const Exp2& e, const mpz_class& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly pow(long long n) const;  // n >= 0

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    long long min_er() const;
    long long min_es() const;
    /// Multiply by the monomial r^er * s^es.
    Poly shifted(long long er, long long es) const;

    /// gcd of all integer coefficients, non-negative.
    mpz_class content() const;
    /// Coefficient of the graded-lex leading term (0 for the zero polynomial).
    mpz_class leading_coeff() const;

    mpq_class eval(const mpq_class& rv, const mpq_class& sv) const;

    std::string str() const;

private:
    Terms terms_;
};

/// gcd in Z[r,s] via primitive polynomial remainder sequences with s as the
/// main variable.  Inputs must have non-negative exponents.  The result is
/// primitive with positive graded-lex leading coefficient.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact division in Z[r,s]; nullopt if b does not divide a.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

/// An element of the coefficient field Q(r,s), kept as a reduced fraction of
/// integer polynomials:
///   - numerator and denominator have non-negative exponents and no common
///     monomial or polynomial factor,
///   - gcd of the two integer contents is 1,
///   - the denominator's graded-lex leading coefficient is positive.
/// Two Scalars are equal iff their term maps are identical.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long long c) : num_(c), den_(1) {}  // NOLINT: implicit by design
    Scalar(const mpz_class& c) : num_(c), den_(1) {}
    Scalar(const mpq_class& q) : num_(q.get_num()), den_(q.get_den()) {}
    Scalar(Poly num, Poly den);

    static Scalar r() { return Scalar(Poly::var_r(), Poly(1)); }
    static Scalar s() { return Scalar(Poly::var_s(), Poly(1)); }
    /// r^a * s^b with arbitrary integer exponents.
    static Scalar rs_monomial(long long a, long long b);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero
    Scalar inv() const;
    Scalar pow(long long n) const;  // any integer

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact evaluation at a rational point; PoleAtPoint if the denominator
    /// vanishes there.
    mpq_class substitute(const mpq_class& rv, const mpq_class& sv) const;

    std::string str() const;
    static Scalar parse(const std::string& text);  // SyntaxError

private:
    void normalize();

    Poly num_, den_;
};

inline Scalar operator*(long long c, const Scalar& x) { return Scalar(c) * x; }

}  // namespace qrs
