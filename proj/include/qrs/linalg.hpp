#pragma once

#include <vector>

#include "qrs/scalar.hpp"

namespace qrs {

using SVec = std::vector<Scalar>;
using SMat = std::vector<SVec>;

/// Reduced row echelon form in place; returns the pivot column of each kept
/// row (rows end up ordered by pivot column, zero rows removed).
std::vector<int> rref_inplace(SMat& m);

/// Fraction-free determinant: rows are cleared to polynomial form and
/// eliminated with the two-step division scheme, so intermediate entries stay
/// reduced.
Scalar det_bareiss(const SMat& a);

/// Inverse via cofactors over the fraction-free determinant (desk-scale
/// matrices only).  Throws SingularGram when the determinant vanishes.
SMat invert(const SMat& a);

/// Basis of the right kernel {x : a x = 0}.
std::vector<SVec> nullspace(const SMat& a, int cols);

int rank_of(SMat m);

SMat identity_mat(int n);

}  // namespace qrs
