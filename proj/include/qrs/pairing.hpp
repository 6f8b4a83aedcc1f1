#pragma once

#include <optional>

#include "qrs/report.hpp"
#include "qrs/tensor.hpp"

namespace qrs {

/// Which argument the pairing recursion peels first on ties/longer words.
/// PreferY is the shipped policy; PreferX exists so tests can confirm the two
/// expansion axioms agree.
enum class SplitPolicy : uint8_t { PreferY, PreferX };

/// Gram data of one weight space: the selected bases on both sides and the
/// pairing matrix between them.
struct GramData {
    Weight beta;
    std::vector<Word> plus_basis;   // e-words
    std::vector<Word> minus_basis;  // f-words
    SMat gram;                      // gram[r][c] = <x_r, y_c>
    Scalar det;                     // fraction-free determinant
    std::optional<SMat> inverse;    // filled on demand
};

/// The bilinear form between the non-negative and non-positive halves,
/// computed by structural recursion on its defining axioms, plus the derived
/// Gram matrices and dual bases.
class SkewPairing {
public:
    explicit SkewPairing(const Algebra& alg) : alg_(alg) {}

    const Algebra& algebra() const { return alg_; }

    /// <x, y> for x in the e/omega half, y in the f/omega' half.
    Scalar pair(const Element& x, const Element& y,
                SplitPolicy policy = SplitPolicy::PreferY) const;

    const GramData& gram(const Weight& beta) const;
    const SMat& gram_inverse(const Weight& beta) const;  // SingularGram

    Element plus_element(const Weight& beta, int r) const;   // basis vector of the e-side
    Element minus_element(const Weight& beta, int c) const;  // basis vector of the f-side
    /// Dual basis on the f-side: <x_r, y_c> = delta_rc.
    std::vector<Element> dual_basis(const Weight& beta) const;

private:
    Scalar pair_mono(const Monomial& x, const Monomial& y, SplitPolicy policy) const;
    Scalar pair_single_f(const Monomial& x, int j) const;
    Scalar pair_single_e(int k, const Monomial& y) const;
    Scalar toral_pair(const std::vector<long long>& a,
                      const std::vector<long long>& b) const;

    const Algebra& alg_;
    mutable std::mutex mu_;
    mutable std::map<Weight, GramData> cache_;
};

/// Checks of the pairing laws: antipode invariance, toral twisting, weight
/// orthogonality, and the two product-exchange formulas at generator level.
Report check_pairing(const SkewPairing& pr, int max_height, int exchange_height,
                     unsigned seed, int random_pairs);

}  // namespace qrs
