#pragma once

#include <optional>

#include "qrs/algebra.hpp"

namespace qrs {

/// Parse the element DSL: letters e[i], E[i] (the double-prime raising
/// generator), f[i], P[i] (the primed lowering generator), w[i], v[i] (the two
/// toral families), integer powers with ^, products by * or juxtaposition,
/// + and -, parentheses, and scalar subexpressions in the scalar syntax.
///
/// When no parent is forced the smallest letter set containing the expression
/// is chosen.  Round trip: parse(x.str()) == x.
Element parse_element(const Algebra& alg, const std::string& text,
                      std::optional<Parent> parent = std::nullopt);

}  // namespace qrs
