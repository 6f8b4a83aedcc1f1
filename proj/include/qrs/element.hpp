#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrs/cartan.hpp"
#include "qrs/scalar.hpp"

namespace qrs {

/// Parent algebra of an element.  Env is the enveloping letter set in which
/// both raising kinds (e and e'') coexist without any relation between them;
/// it arises from products mixing U and B elements.
enum class Parent : uint8_t { U, B, Bbar, Env };

std::string parent_name(Parent p);

/// Generator letter kinds.  W/WP are the invertible toral generators and are
/// stored as exponent vectors inside monomials, not as word letters.
enum class LK : uint8_t { F, FP, E, EPP, W, WP };

/// One letter of a word (exp is used by toral letters only).
struct Atom {
    LK k;
    int i;
    long long exp = 1;
};

struct PLetter {
    LK k;
    uint8_t i;
    friend bool operator==(const PLetter&, const PLetter&) = default;
    friend auto operator<=>(const PLetter&, const PLetter&) = default;
};

/// A normal-form monomial: a lowering-side word, a toral part, and a
/// raising-side word.  For U and B the left word holds f-letters and the
/// right word e/e''-letters; for Bbar the left word holds e-letters and the
/// right word f'-letters.
struct Monomial {
    std::vector<PLetter> pre;
    std::vector<long long> w, wp;  // exponents of omega_i and omega'_i
    std::vector<PLetter> post;

    static Monomial unit(int rank) {
        Monomial m;
        m.w.assign(rank, 0);
        m.wp.assign(rank, 0);
        return m;
    }

    bool is_toral() const { return pre.empty() && post.empty(); }
    bool toral_trivial() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Weight of a word letter: -alpha_i for lowering kinds, +alpha_i for raising.
int letter_weight_sign(LK k);

/// A finite linear combination of normal-form monomials over Q(r,s).
/// Invariant: no zero coefficients are stored.
class Element {
public:
    Element() = default;
    Element(Parent p, int rank) : parent_(p), rank_(rank) {}

    static Element zero(Parent p, int rank) { return Element(p, rank); }
    static Element unit(Parent p, int rank) {
        Element e(p, rank);
        e.add(Monomial::unit(rank), Scalar(1));
        return e;
    }

    Parent parent() const { return parent_; }
    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    void add(const Monomial& m, const Scalar& c);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }

    /// Common weight of all monomials, or nullopt when inhomogeneous.
    std::optional<Weight> weight() const;
    static Weight monomial_weight(const Monomial& m, int rank);

    /// Split into weight-homogeneous components.
    std::map<Weight, Element> weight_components() const;

    /// Reinterpret with another parent tag (letters must stay legal; checked
    /// by the algebra operations, not here).
    Element with_parent(Parent p) const;

    std::string str() const;

private:
    Parent parent_ = Parent::U;
    int rank_ = 0;
    std::map<Monomial, Scalar> terms_;
};

bool letter_legal(Parent p, LK k);
Parent parent_join(Parent a, Parent b);  // IncompatibleParents

}  // namespace qrs
