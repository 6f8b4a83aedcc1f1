#pragma once

#include "qrs/canonical.hpp"

namespace qrs {

/// The extremal projector of the Kashiwara algebra: grades built from the
/// canonical sum as k_beta^{-1} S^{-1}(y_r) phi(x_r), plus the rank-one
/// closed-form series and the projector law checks.
class Projector {
public:
    explicit Projector(const Canonical& can) : can_(can), alg_(can.algebra()) {}

    /// Grade beta lives in B and carries no toral letters after normalization.
    GradedElement gamma(int L) const;

    /// Closed-form series for the rank-one type A algebra; WrongType otherwise.
    GradedElement gamma_closed_rank1(int L) const;

    /// Annihilation on both sides, idempotence, partition of unity, letter
    /// membership, and (rank one) closed-form agreement.
    Report check_projector(int L) const;

private:
    const Canonical& can_;
    const Algebra& alg_;
};

}  // namespace qrs
