#pragma once

#include "qrs/hopf.hpp"
#include "qrs/pairing.hpp"

namespace qrs {

/// Sum of all grades as one finite tensor.
Tensor graded_total(const GradedTensor& g);

/// Grade-wise product, keeping construction grades of height <= L.
GradedTensor graded_mul(const Algebra& alg, const GradedTensor& a, const GradedTensor& b,
                        int L);

/// Canonical tensors built from dual bases under the skew pairing, the
/// completed sum over all grades, its inverse, and the quantum Casimir.
class Canonical {
public:
    explicit Canonical(const SkewPairing& pr) : pr_(pr), alg_(pr.algebra()) {}

    const Algebra& algebra() const { return alg_; }
    const SkewPairing& pairing() const { return pr_; }

    /// C_beta = sum_r x_r (x) y_r with <x_r, y_c> = delta.
    Tensor canonical_tensor(const Weight& beta) const;
    /// (1 (x) S^{-1}) C_beta.
    Tensor c_prime(const Weight& beta) const;
    /// (phi (x) 1) C_beta.
    Tensor c_phi(const Weight& beta) const;

    /// Grades of the completed canonical sum: x_r (x) k_beta^{-1} S^{-1}(y_r),
    /// an element of U+ tensored against the lowering half of B.
    GradedTensor c_element(int L) const;
    /// Grades of its two-sided inverse.
    GradedTensor c_inverse(int L) const;

    /// Twisted helpers used by the invertibility argument.
    GradedTensor c_tilde(int L) const;
    GradedTensor c_tilde_inverse(int L) const;

    /// Casimir grades: Omega_beta = sum_r S(y_r) x_r.
    GradedElement casimir(int L) const;

    // -- identity checks -------------------------------------------------------
    /// Per-grade commutators of the canonical tensors and the two telescoping
    /// sums; every instance with height(beta) <= max_height (the commutators
    /// consume C up to max_height + 1).
    Report check_lemma_identities(int max_height) const;
    /// The two completed intertwining laws, grades of height <= max_height.
    Report check_intertwining(int max_height) const;
    /// Inverse telescoping for the canonical sum and the twisted helpers.
    Report check_inverse(int L) const;
    /// Casimir commutation against all generators, grades <= L-1.
    Report check_casimir(int L) const;
    /// The canonical tensor does not depend on the chosen basis.
    Report check_basis_independence(int max_height, unsigned seed) const;

private:
    const SkewPairing& pr_;
    const Algebra& alg_;
};

}  // namespace qrs
