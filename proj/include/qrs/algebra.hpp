#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qrs/cartan.hpp"
#include "qrs/element.hpp"
#include "qrs/linalg.hpp"

namespace qrs {

/// Index word on the simple roots (a pure product of same-kind letters).
using Word = std::vector<uint8_t>;

/// The two higher-order relation families: Fam29 governs the e''/f letters,
/// Fam210 the e/f' letters.
enum class SerreFamily : uint8_t { Fam29, Fam210 };

SerreFamily family_of(LK k);

/// Cached data for one weight space of a free letter kind modulo its Serre
/// ideal: the lexicographic word list, the reduced row echelon form of the
/// ideal's weight component, and the selected (non-pivot) basis words.
struct WeightWords {
    std::vector<Word> words;               // all words of this weight, lex order
    std::map<Word, int> index;             // word -> position
    std::vector<bool> is_basis;            // non-pivot flags
    std::vector<Word> basis;               // basis words in lex order
    // pivot word index -> full rref row (support on non-pivot columns)
    std::map<int, std::map<int, Scalar>> rows;
};

namespace testing {
/// Sign of the scalar term produced when an e'' letter crosses a matching f
/// letter.  +1 is the defining value; tests flip it to check that the
/// verification suites actually notice.
int delta27_sign();
void set_delta27_sign(int sign);
}  // namespace testing

/// Rewriting context for a fixed Cartan datum: normal forms, products,
/// weight-space bases and the commutation closed form.  Immutable apart from
/// internal compute-once caches.
class Algebra {
public:
    explicit Algebra(CartanData cd, int height_cap = 24);

    const CartanData& cartan() const { return cd_; }
    int rank() const { return cd_.rank; }
    int height_cap() const { return height_cap_; }

    // -- element construction -------------------------------------------------
    Element unit(Parent p) const { return Element::unit(p, rank()); }
    Element zero(Parent p) const { return Element::zero(p, rank()); }
    Element gen(LK k, int i, Parent p) const;
    Element toral(const std::vector<long long>& w, const std::vector<long long>& wp,
                  Parent p) const;
    Element omega(const Weight& mu, Parent p) const;        // w_mu
    Element omega_prime(const Weight& mu, Parent p) const;  // v_mu
    Element k_beta(const Weight& beta, Parent p) const;     // v_beta^{-1}
    Element word_element(LK k, const Word& word, Parent p) const;

    // -- normal form and products ---------------------------------------------
    Element normal_form(const Scalar& coef, const std::vector<Atom>& word,
                        Parent p) const;
    Element normal_form(const Element& x) const;
    Element multiply(const Element& a, const Element& b) const;
    Element multiply(const Element& a, const Element& b, const Element& c) const;

    /// Defining relation instances as elements that must normalize to zero.
    /// kind selects the letter family of the higher-order relation.
    Element serre_element(int i, int j, LK kind) const;

    /// Closed form for e_i''^n f_j^m, divided powers cleared.
    Element commutation_closed_form(int n, int m, int i, int j) const;

    // -- weight spaces ----------------------------------------------------------
    const WeightWords& weight_words(SerreFamily fam, const Weight& beta) const;
    /// Ordered basis words of the weight space for the given letter kind.
    std::vector<Word> weight_basis(LK kind, const Weight& beta) const;
    long long weight_dim(LK kind, const Weight& beta) const;

    /// All beta in Q+ with 0 <= height <= h, graded lex order.
    std::vector<Weight> positive_weights_upto(int h) const;

private:
    struct SwapTerm {
        Scalar c;
        std::vector<Atom> repl;
    };
    std::vector<SwapTerm> swap_rule(const Atom& a, const Atom& b, Parent p) const;
    int class_of(LK k, Parent p) const;
    std::vector<std::pair<Scalar, Word>> reduce_word(LK kind, const Word& word) const;
    Element nf_word(const std::vector<Atom>& word, Parent p) const;
    Element collect_straight(const std::vector<Atom>& word, Parent p) const;

    CartanData cd_;
    int height_cap_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, Weight>, std::shared_ptr<const WeightWords>> cache_;
    // rewrites recur heavily on identical subwords; cache them whole
    mutable std::map<std::vector<long long>, Element> nf_cache_;
};

/// Enumerate all words with the given letter multiset, lexicographically.
std::vector<Word> words_of_weight(const Weight& beta);

}  // namespace qrs
