#pragma once

#include "qrs/tensor.hpp"

namespace qrs {

/// The four coproducts.  Std is defined on U, Right on B, Left on Bbar and
/// Bottom on U; sources and targets follow the generator tables.
enum class CoproductKind : uint8_t { Std, Right, Left, Bottom };

Parent coproduct_source(CoproductKind k);
std::pair<Parent, Parent> coproduct_targets(CoproductKind k);

/// Multiplicative extension of the generator table; IllegalLetter when x
/// contains a letter outside the variant's source algebra.
Tensor coproduct(const Algebra& alg, CoproductKind kind, const Element& x);

/// Apply the standard coproduct to one leg of a 2-tensor, producing a
/// 3-tensor ((Delta (x) 1) or (1 (x) Delta)).
Tensor coproduct_on_leg(const Algebra& alg, const Tensor& t, int leg);

/// Counit on U (and its toral sub-parents): algebra map killing e and f.
Scalar counit(const Element& x);

enum class AntipodeDir : uint8_t { S, SInv };

/// Antipode of U and its inverse (anti-homomorphisms).
Element antipode(const Algebra& alg, const Element& x, AntipodeDir dir = AntipodeDir::S);

/// The anti-isomorphism from Bbar (or its e-letter subalgebra) to B.
Element phi(const Algebra& alg, const Element& x);

/// The toral-twisting algebra automorphism of U used by the Casimir
/// commutation law.
Element psi(const Algebra& alg, const Element& x);

}  // namespace qrs
